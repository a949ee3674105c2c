"""ROUGE-1 scoring of summaries against human references."""

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .corpus import tokenize
from .exceptions import DataError, MissingReferenceError
from .porter import porter_stem

__all__ = [
    "RougeScore",
    "ReferenceSummary",
    "rouge1",
    "evaluate_summary",
    "best_score",
    "mean_score",
    "load_references",
    "reference_paths",
]


@dataclass(frozen=True)
class RougeScore:
    recall: float
    precision: float
    f_score: float

    @classmethod
    def from_pr(cls, recall, precision):
        total = recall + precision
        f = 0.0 if total == 0 else 2.0 * recall * precision / total
        return cls(recall, precision, f)

    def as_tuple(self):
        return (self.recall, self.precision, self.f_score)


@dataclass(frozen=True)
class ReferenceSummary:
    cluster_id: str
    target_length: int
    tokens: tuple

    def __post_init__(self):
        if not self.tokens:
            raise DataError(f"reference for cluster {self.cluster_id!r} has no tokens")

    @classmethod
    def from_text(cls, cluster_id, target_length, text):
        return cls(cluster_id, target_length, tuple(tokenize(text)))


def rouge1(candidate_tokens, reference_tokens):
    """Clipped unigram overlap as recall, precision and F1.

    >>> rouge1("the cat sat".split(), "the cat ate".split()).recall
    0.6666666666666666
    """
    if not reference_tokens:
        raise DataError("reference summary is empty")
    cand = Counter(candidate_tokens)
    ref = Counter(reference_tokens)
    overlap = sum(min(c, ref[t]) for t, c in cand.items() if t in ref)
    recall = overlap / len(reference_tokens)
    precision = overlap / len(candidate_tokens) if candidate_tokens else 0.0
    return RougeScore.from_pr(recall, precision)


def evaluate_summary(summary_text, reference, stem=False):
    tokens = tokenize(summary_text)
    ref_tokens = list(reference.tokens)
    if stem:
        tokens = [porter_stem(t) for t in tokens]
        ref_tokens = [porter_stem(t) for t in ref_tokens]
    return rouge1(tokens, ref_tokens)


def best_score(summary_text, references, stem=False):
    """Score against each reference and keep the one with the highest F."""
    references = list(references)
    if not references:
        raise MissingReferenceError("no reference summaries given")
    scores = [evaluate_summary(summary_text, r, stem) for r in references]
    return max(scores, key=lambda s: s.f_score)


def mean_score(scores):
    scores = list(scores)
    if not scores:
        raise DataError("cannot average an empty list of scores")
    k = len(scores)
    return RougeScore(
        sum(s.recall for s in scores) / k,
        sum(s.precision for s in scores) / k,
        sum(s.f_score for s in scores) / k,
    )


def reference_paths(refs_dir, cluster_id, length):
    """Files holding the ``length``-word references of one cluster.

    The main reference is ``<refs_dir>/<cluster_id>/<length>.txt``; extra
    ones may be stored as ``<length>.<tag>.txt``.
    """
    folder = Path(refs_dir) / cluster_id
    paths = []
    if folder.is_dir():
        main = folder / f"{length}.txt"
        if main.is_file():
            paths.append(main)
        paths.extend(sorted(folder.glob(f"{length}.*.txt")))
    if not paths:
        raise MissingReferenceError(f"no {length}-word reference for cluster {cluster_id!r}")
    return paths


def load_references(refs_dir, cluster_id, length):
    return [
        ReferenceSummary.from_text(cluster_id, length, p.read_text(encoding="utf-8"))
        for p in reference_paths(refs_dir, cluster_id, length)
    ]
