"""Document ingestion and sentence preprocessing.

Raw documents go through markup stripping, sentence segmentation,
tokenization, stopword removal and Porter stemming, in that order.
"""

import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .exceptions import DataError, EmptyClusterError
from .porter import porter_stem

__all__ = [
    "RawDocument",
    "Sentence",
    "DocumentCluster",
    "PreprocessConfig",
    "load_wordlist",
    "default_stopwords",
    "default_abbreviations",
    "strip_markup",
    "segment_sentences",
    "tokenize",
    "remove_stopwords",
    "preprocess_document",
    "preprocess_cluster",
    "load_cluster",
    "load_corpus",
]

_TAG_RE = re.compile(r"<[^<>]*>")
_WS_RE = re.compile(r"\s+")
_TOKEN_RE = re.compile(r"[^\W_]+")
# terminator run, optional closing quotes/brackets, then whitespace or end
_BOUNDARY_RE = re.compile(r"[.!?]+[\"'”’)\]]*(?=\s|$)")
_LAST_TOKEN_RE = re.compile(r"\S*$")
_LEADING_PUNCT = "\"'([{“‘"


@dataclass(frozen=True)
class RawDocument:
    doc_id: str
    raw_text: str
    source_path: str = ""

    def __post_init__(self):
        if not self.doc_id:
            raise DataError("document id must be non-empty")
        if not self.raw_text.strip():
            raise DataError(f"document {self.doc_id!r} is empty")


@dataclass(frozen=True)
class Sentence:
    """One preprocessed sentence.

    ``index`` is the sentence's position among all segments of its
    document, counted before short sentences are dropped, so it always
    points back to the same span of the source text.
    """

    doc_id: str
    index: int
    original_text: str
    content_tokens: tuple
    word_count: int

    @property
    def ref(self):
        return (self.doc_id, self.index)


@dataclass(frozen=True)
class DocumentCluster:
    cluster_id: str
    documents: tuple
    sentences: tuple

    def __post_init__(self):
        known = set(self.documents)
        for s in self.sentences:
            if s.doc_id not in known:
                raise DataError(f"sentence {s.ref} belongs to no document of the cluster")
        refs = [s.ref for s in self.sentences]
        if refs != sorted(refs):
            raise DataError("cluster sentences must be ordered by (doc_id, index)")
        if len(set(refs)) != len(refs):
            raise DataError("duplicate sentence reference in cluster")

    def __len__(self):
        return len(self.sentences)

    def sentence_map(self):
        return {s.ref: s for s in self.sentences}


def load_wordlist(path):
    """Read a one-token-per-line file, skipping blanks and ``#`` comments."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            if word != word.lower() or any(c.isspace() for c in word):
                raise DataError(f"{path}:{lineno}: entries must be lowercase single tokens, got {word!r}")
            words.add(word)
    return frozenset(words)


def _packaged_wordlist(name):
    with resources.as_file(resources.files("tonesum") / "data" / name) as p:
        return load_wordlist(p)


_DEFAULTS = {}


def default_stopwords():
    if "stopwords" not in _DEFAULTS:
        _DEFAULTS["stopwords"] = _packaged_wordlist("stopwords.txt")
    return _DEFAULTS["stopwords"]


def default_abbreviations():
    if "abbreviations" not in _DEFAULTS:
        _DEFAULTS["abbreviations"] = _packaged_wordlist("abbreviations.txt")
    return _DEFAULTS["abbreviations"]


@dataclass(frozen=True)
class PreprocessConfig:
    stopwords: frozenset = field(default_factory=default_stopwords)
    duc_mode: bool = False
    min_sentence_tokens: int = 2
    abbreviations: frozenset = field(default_factory=default_abbreviations)
    text_tags: tuple = ("TEXT",)

    def __post_init__(self):
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))
        object.__setattr__(self, "abbreviations", frozenset(self.abbreviations))
        object.__setattr__(self, "text_tags", tuple(self.text_tags))
        for w in self.stopwords:
            if not w or w != w.lower() or any(c.isspace() for c in w):
                raise DataError(f"invalid stopword {w!r}")
        if self.min_sentence_tokens < 0:
            raise DataError("min_sentence_tokens must be >= 0")


def _remove_tags(text):
    # Removing one tag can expose another (``<a<b>>``), so iterate.
    while True:
        stripped = _TAG_RE.sub(" ", text)
        if stripped == text:
            return text
        text = stripped


def strip_markup(raw_text, duc_mode=False, text_tags=("TEXT",)):
    """Remove angle-bracket markup and collapse whitespace.

    With ``duc_mode`` only the contents of the body elements named in
    ``text_tags`` are kept; a document without such an element yields an
    empty string. An unmatched ``<`` is kept as literal text.

    >>> strip_markup("<DOC><HEAD>skip</HEAD><TEXT>keep me</TEXT></DOC>", duc_mode=True)
    'keep me'
    """
    if duc_mode:
        names = "|".join(re.escape(t) for t in text_tags)
        body_re = re.compile(rf"<({names})(?:\s[^<>]*)?>(.*?)</\1\s*>", re.IGNORECASE | re.DOTALL)
        raw_text = " ".join(m.group(2) for m in body_re.finditer(raw_text))
    return _WS_RE.sub(" ", _remove_tags(raw_text)).strip()


def _guarded(token, abbreviations):
    word = token.lstrip(_LEADING_PUNCT).lower()
    return word in abbreviations


def segment_sentences(text, abbreviations=None):
    """Split markup-free text into sentences.

    A sentence ends at ``.``, ``!`` or ``?`` (possibly repeated and followed
    by closing quotes or brackets) when whitespace or the end of text comes
    next. A lone period after a known abbreviation does not end a sentence.

    >>> segment_sentences("Dr. Smith spoke. He left.")
    ['Dr. Smith spoke.', 'He left.']
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    segments = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        terminators = m.group(0).rstrip("\"'”’)]")
        if terminators == ".":
            token = _LAST_TOKEN_RE.search(text, 0, m.start()).group(0)
            if _guarded(token, abbreviations):
                continue
        piece = text[start:m.end()].strip()
        if piece:
            segments.append(piece)
        start = m.end()
    tail = text[start:].strip()
    if tail:
        segments.append(tail)
    return segments


def tokenize(text):
    """Lowercase ``text`` and return its maximal letter/digit runs."""
    return _TOKEN_RE.findall(text.lower())


def remove_stopwords(tokens, stopwords):
    return [t for t in tokens if t not in stopwords]


def preprocess_document(doc, config):
    """Return the kept :class:`Sentence` objects of one document."""
    text = strip_markup(doc.raw_text, config.duc_mode, config.text_tags)
    out = []
    for index, segment in enumerate(segment_sentences(text, config.abbreviations)):
        content = remove_stopwords(tokenize(segment), config.stopwords)
        stems = tuple(porter_stem(t) for t in content)
        if len(stems) < config.min_sentence_tokens:
            continue
        out.append(Sentence(doc.doc_id, index, segment, stems, len(segment.split())))
    return out


def preprocess_cluster(docs, config=None, cluster_id="cluster", n_jobs=None):
    """Preprocess a list of documents into a :class:`DocumentCluster`.

    Documents may be processed on ``n_jobs`` threads; the result does not
    depend on it.
    """
    if config is None:
        config = PreprocessConfig()
    docs = list(docs)
    if not docs:
        raise EmptyClusterError(f"cluster {cluster_id!r} has no documents")
    ids = [d.doc_id for d in docs]
    if len(set(ids)) != len(ids):
        raise DataError(f"cluster {cluster_id!r} has duplicate document ids")

    if n_jobs and n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            per_doc = list(pool.map(lambda d: preprocess_document(d, config), docs))
    else:
        per_doc = [preprocess_document(d, config) for d in docs]

    sentences = sorted((s for group in per_doc for s in group), key=lambda s: s.ref)
    if not sentences:
        raise EmptyClusterError(f"cluster {cluster_id!r} has no usable sentences after preprocessing")
    return DocumentCluster(cluster_id, tuple(sorted(ids)), tuple(sentences))


def load_cluster(directory):
    """Load every regular file of ``directory`` as one document.

    The document id is the file name without its extension.
    """
    directory = Path(directory)
    docs = []
    for path in sorted(directory.iterdir()):
        if not path.is_file() or path.name.startswith("."):
            continue
        text = path.read_text(encoding="utf-8", errors="replace")
        docs.append(RawDocument(path.stem, text, os.fspath(path)))
    return docs


def load_corpus(corpus_dir):
    """Map cluster id (sub-directory name) to its documents, sorted by id."""
    corpus_dir = Path(corpus_dir)
    clusters = {}
    for sub in sorted(corpus_dir.iterdir()):
        if sub.is_dir() and not sub.name.startswith("."):
            clusters[sub.name] = load_cluster(sub)
    return clusters
