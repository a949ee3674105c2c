"""Lexicon polarity scoring and the tone-bias candidate filter."""

import enum
from collections import defaultdict
from dataclasses import dataclass
from importlib import resources

from .exceptions import DataError, EmptyPoolError
from .porter import porter_stem
from .ranking import RankedList

__all__ = [
    "PolarityTag",
    "Bias",
    "PolarityLexicon",
    "PolarityProfile",
    "load_lexicon",
    "default_lexicon",
    "sentence_polarity",
    "tag_polarity",
    "apply_bias_filter",
    "polarity_profile",
    "tag_counts",
]


class PolarityTag(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


class Bias(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DataError(f"bias must be one of positive, negative, none; got {value!r}") from None


@dataclass(frozen=True)
class PolarityLexicon:
    """Stemmed term -> polarity in [-1, 1]."""

    entries: dict

    def __post_init__(self):
        for term, score in self.entries.items():
            if not -1.0 <= score <= 1.0:
                raise DataError(f"polarity of {term!r} outside [-1, 1]: {score}")

    @classmethod
    def from_words(cls, scores, stem=porter_stem):
        """Build from unstemmed words; words sharing a stem are averaged."""
        grouped = defaultdict(list)
        for word, score in scores.items():
            word = word.strip().lower()
            if not word or any(c.isspace() for c in word):
                raise DataError(f"lexicon terms must be single tokens, got {word!r}")
            grouped[stem(word)].append(float(score))
        return cls({t: sum(v) / len(v) for t, v in sorted(grouped.items())})

    def get(self, term, default=0.0):
        return self.entries.get(term, default)


@dataclass(frozen=True)
class PolarityProfile:
    positive_mass: float
    negative_mass: float

    @property
    def net(self):
        return self.positive_mass - self.negative_mass


def load_lexicon(path):
    """Read ``term<TAB>score`` lines (``#`` comments allowed)."""
    scores = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataError(f"{path}:{lineno}: expected term<TAB>score")
            try:
                score = float(parts[1])
            except ValueError:
                raise DataError(f"{path}:{lineno}: bad score {parts[1]!r}") from None
            word = parts[0].strip().lower()
            if word in scores:
                # the same surface word twice: average like stem collisions
                scores[word] = (scores[word] + score) / 2.0
            else:
                scores[word] = score
    return PolarityLexicon.from_words(scores)


_DEFAULT = []


def default_lexicon():
    if not _DEFAULT:
        with resources.as_file(resources.files("tonesum") / "data" / "lexicon.tsv") as p:
            _DEFAULT.append(load_lexicon(p))
    return _DEFAULT[0]


def sentence_polarity(sentence, lexicon):
    """Sum of lexicon scores over the sentence's content tokens.

    Accepts a :class:`~tonesum.corpus.Sentence` or a plain token list.
    """
    tokens = getattr(sentence, "content_tokens", sentence)
    return sum(lexicon.get(t) for t in tokens)


def tag_polarity(score, neutral_band=0.0):
    if score > neutral_band:
        return PolarityTag.POSITIVE
    if score < -neutral_band:
        return PolarityTag.NEGATIVE
    return PolarityTag.NEUTRAL


_DISCARD = {
    Bias.POSITIVE: PolarityTag.NEGATIVE,
    Bias.NEGATIVE: PolarityTag.POSITIVE,
}


def apply_bias_filter(ranked, cluster, lexicon, bias, n=None, neutral_band=0.0):
    """Drop sentences of the unwanted tone, then keep the top ``n``.

    Filtering happens on the full ranking before truncation so the pool is
    refilled with lower-ranked survivors.
    """
    bias = Bias.parse(bias)
    if bias is Bias.NONE:
        kept = list(ranked.entries)
    else:
        by_ref = cluster.sentence_map()
        unwanted = _DISCARD[bias]
        kept = [
            (ref, score)
            for ref, score in ranked.entries
            if tag_polarity(sentence_polarity(by_ref[ref], lexicon), neutral_band) is not unwanted
        ]
    if n is not None:
        kept = kept[:n]
    if not kept:
        raise EmptyPoolError(
            f"cluster {cluster.cluster_id!r}: no candidate left after {bias.value} bias filter"
        )
    return RankedList(tuple(kept))


def polarity_profile(sentences, lexicon):
    pos = neg = 0.0
    for s in sentences:
        score = sentence_polarity(s, lexicon)
        if score > 0:
            pos += score
        elif score < 0:
            neg -= score
    return PolarityProfile(pos, neg)


def tag_counts(sentences, lexicon, neutral_band=0.0):
    """``(n_positive, n_negative, n_neutral)`` over ``sentences``."""
    counts = {tag: 0 for tag in PolarityTag}
    for s in sentences:
        counts[tag_polarity(sentence_polarity(s, lexicon), neutral_band)] += 1
    return counts[PolarityTag.POSITIVE], counts[PolarityTag.NEGATIVE], counts[PolarityTag.NEUTRAL]
