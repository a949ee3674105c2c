"""TF-IDF sentence vectors, the frequent-word query, and cosine ranking."""

import math
from collections import Counter
from dataclasses import dataclass

from .exceptions import DataError, EmptyClusterError

__all__ = [
    "TermStats",
    "SentenceVector",
    "QueryVector",
    "RankedList",
    "compute_term_stats",
    "tfidf_vector",
    "sentence_vectors",
    "build_query_vector",
    "cosine_similarity",
    "rank_sentences",
]


@dataclass(frozen=True)
class TermStats:
    """Sentence count ``n_sentences`` and per-term sentence frequency."""

    n_sentences: int
    doc_freq: dict


@dataclass(frozen=True)
class SentenceVector:
    ref: tuple
    weights: dict


@dataclass(frozen=True)
class QueryVector:
    weights: dict

    @property
    def terms(self):
        return tuple(self.weights)

    def scaled(self, factor):
        return QueryVector({t: w * factor for t, w in self.weights.items()})


@dataclass(frozen=True)
class RankedList:
    """``(ref, similarity)`` pairs, best first, ties by ascending ref."""

    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def refs(self):
        return [ref for ref, _ in self.entries]

    def head(self, n):
        return RankedList(self.entries[:n])


# Scores equal to this many decimals count as tied, so that mathematically
# equal similarities (parallel vectors) do not get ordered by rounding noise.
TIE_DECIMALS = 12


def tie_key(score):
    return round(score, TIE_DECIMALS)


def _sort_key(entry):
    ref, score = entry
    return (-tie_key(score), ref)


def compute_term_stats(cluster):
    if not cluster.sentences:
        raise EmptyClusterError(f"cluster {cluster.cluster_id!r} is empty")
    df = Counter()
    for s in cluster.sentences:
        df.update(set(s.content_tokens))
    return TermStats(len(cluster.sentences), dict(sorted(df.items())))


def tfidf_vector(sentence, stats):
    """Weight each term by raw count times ``ln(N / df)``.

    Terms found in every sentence get weight zero and are left out.
    """
    n = stats.n_sentences
    weights = {}
    for term, tf in Counter(sentence.content_tokens).items():
        df = stats.doc_freq.get(term)
        if df is None:
            raise DataError(f"term {term!r} of sentence {sentence.ref} missing from term stats")
        if df == n:
            continue
        weights[term] = tf * math.log(n / df)
    return SentenceVector(sentence.ref, weights)


def sentence_vectors(cluster, stats):
    return {s.ref: tfidf_vector(s, stats) for s in cluster.sentences}


def build_query_vector(cluster, m=10):
    """Pseudo-query from the ``m`` most frequent terms of the cluster.

    Each term is weighted by its total count; equal counts are broken by
    the term in ascending order.
    """
    if m < 1:
        raise DataError("query size m must be >= 1")
    freq = Counter()
    for s in cluster.sentences:
        freq.update(s.content_tokens)
    if not freq:
        raise EmptyClusterError(f"cluster {cluster.cluster_id!r} has an empty vocabulary")
    top = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))[:m]
    return QueryVector({t: float(c) for t, c in top})


def _weights(v):
    return v if isinstance(v, dict) else v.weights


def cosine_similarity(u, v):
    """Cosine of two non-negative sparse vectors; 0 if either is all-zero."""
    u, v = _weights(u), _weights(v)
    if not u or not v:
        return 0.0
    small, large = (u, v) if len(u) <= len(v) else (v, u)
    dot = sum(w * large[t] for t, w in small.items() if t in large)
    if dot == 0.0:
        return 0.0
    nu = sum(w * w for w in u.values())
    nv = sum(w * w for w in v.values())
    # sqrt of the product keeps cos(u, u) at exactly 1.0
    denom = math.sqrt(nu * nv)
    if denom == 0.0 or math.isinf(denom):
        denom = math.sqrt(nu) * math.sqrt(nv)
    return min(1.0, dot / denom)


def rank_sentences(cluster, stats, query, n=None, vectors=None):
    """Score every sentence against ``query`` and keep the best ``n``.

    ``n=None`` keeps the full ranking.
    """
    if n is not None and n < 1:
        raise DataError("n must be >= 1")
    if vectors is None:
        vectors = sentence_vectors(cluster, stats)
    scored = [(s.ref, cosine_similarity(vectors[s.ref], query)) for s in cluster.sentences]
    scored.sort(key=_sort_key)
    if n is not None:
        scored = scored[:n]
    return RankedList(tuple(scored))
