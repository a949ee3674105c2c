"""Greedy Maximal Marginal Relevance selection under a word budget."""

from dataclasses import dataclass

from .exceptions import DataError
from .ranking import cosine_similarity, tie_key

__all__ = [
    "MmrConfig",
    "MmrStep",
    "SummarySelection",
    "mmr_score",
    "select_summary",
    "order_for_output",
]


@dataclass(frozen=True)
class MmrConfig:
    lambda_: float = 0.7
    budget_words: int = 400
    pool_size: int = 30

    def __post_init__(self):
        if not 0.0 <= self.lambda_ <= 1.0:
            raise DataError(f"lambda must lie in [0, 1], got {self.lambda_}")
        if self.budget_words < 1:
            raise DataError("budget_words must be >= 1")
        if self.pool_size < 1:
            raise DataError("pool_size must be >= 1")


@dataclass(frozen=True)
class MmrStep:
    ref: tuple
    sim1: float
    max_sim2: float
    score: float


@dataclass(frozen=True)
class SummarySelection:
    selected: tuple
    steps: tuple
    total_words: int


def mmr_score(candidate, query, selected, lambda_):
    """Return ``(score, sim1, max_sim2)`` for one candidate.

    ``sim1`` is the cosine with the query, ``max_sim2`` the largest cosine
    with an already selected sentence (0 when nothing is selected yet).
    """
    sim1 = cosine_similarity(candidate, query)
    max_sim2 = max((cosine_similarity(candidate, s) for s in selected), default=0.0)
    return lambda_ * sim1 - (1.0 - lambda_) * max_sim2, sim1, max_sim2


def select_summary(pool, vectors, query, config, word_counts):
    """Run the greedy MMR loop over the candidate ``pool``.

    At every step the unselected candidate with the highest MMR score is
    taken (ties: higher query similarity, then lower ref). Selection stops
    once the best remaining score is negative. A candidate that would push
    the summary past ``config.budget_words`` is dropped for good and the
    next-best one is considered instead. Scores are compared at
    ``TIE_DECIMALS`` precision, so a score that is zero up to rounding
    noise is still taken.
    """
    candidates = [ref for ref, _ in pool][: config.pool_size]
    selected = []
    selected_vecs = []
    steps = []
    total = 0
    open_refs = list(candidates)

    while open_refs:
        scored = []
        for ref in open_refs:
            score, sim1, sim2 = mmr_score(vectors[ref], query, selected_vecs, config.lambda_)
            scored.append((score, sim1, sim2, ref))
        scored.sort(key=lambda x: (-tie_key(x[0]), -tie_key(x[1]), x[3]))

        chosen = None
        for score, sim1, sim2, ref in scored:
            if tie_key(score) < 0:
                break
            if total + word_counts[ref] > config.budget_words:
                open_refs.remove(ref)
                continue
            # only rounding noise can make an accepted score negative
            chosen = MmrStep(ref, sim1, sim2, max(score, 0.0))
            break
        if chosen is None:
            break

        open_refs.remove(chosen.ref)
        selected.append(chosen.ref)
        selected_vecs.append(vectors[chosen.ref])
        steps.append(chosen)
        total += word_counts[chosen.ref]

    return SummarySelection(tuple(selected), tuple(steps), total)


def order_for_output(selection, cluster):
    """Selected sentences in document order (doc id, then position)."""
    by_ref = cluster.sentence_map()
    missing = [ref for ref in selection.selected if ref not in by_ref]
    if missing:
        raise DataError(f"selection refers to unknown sentences {missing}")
    return [by_ref[ref] for ref in sorted(selection.selected)]
