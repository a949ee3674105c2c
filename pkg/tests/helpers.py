"""Builders shared by the test modules."""

import random
from pathlib import Path

from tonesum.corpus import DocumentCluster, Sentence

DATA = Path(__file__).parent / "data"


def make_cluster(token_lists, cluster_id="c", doc_id="d", word_counts=None):
    """Cluster of one document whose sentences carry the given tokens."""
    sentences = tuple(
        Sentence(doc_id, i, " ".join(toks) or "x", tuple(toks),
                 word_counts[i] if word_counts else max(1, len(toks)))
        for i, toks in enumerate(token_lists)
    )
    return DocumentCluster(cluster_id, (doc_id,), sentences)


_POSITIVE = [
    "The team celebrated a great victory after the excellent final match.",
    "Officials praised the successful rescue and the brave volunteers.",
    "Residents were happy with the strong recovery of the local economy.",
    "The new hospital brought wonderful benefits to the region.",
    "Experts welcomed the peaceful agreement between the two parties.",
]
_NEGATIVE = [
    "The storm caused terrible damage and many victims lost their homes.",
    "A violent attack killed several people near the border.",
    "The failed bridge collapsed and injured dozens of workers.",
    "Critics blamed the government for the worst crisis in decades.",
    "The disease spread fear and anger across the poor villages.",
]
_NEUTRAL = [
    "The council met on Tuesday to review the regional budget report.",
    "The report lists the regional budget figures for the coming year.",
    "Members of the council discussed the budget and the report schedule.",
    "The regional office will publish the budget report next month.",
    "The budget committee report covers transport and school buildings.",
]


def write_tone_corpus(root, n_clusters=10, seed=7):
    """Synthetic corpus mixing neutral, positive and seeded negative text."""
    rng = random.Random(seed)
    root = Path(root)
    for c in range(n_clusters):
        folder = root / f"topic{c:02d}"
        folder.mkdir(parents=True)
        for d in range(3):
            sents = rng.sample(_NEUTRAL, 3) + rng.sample(_POSITIVE, 2) + rng.sample(_NEGATIVE, 2)
            rng.shuffle(sents)
            (folder / f"doc{d}.txt").write_text(" ".join(sents) + "\n", encoding="utf-8")
    return root


def random_pool(rng, size, vocab="abcdefgh", duplicate=False):
    """Random sparse pool: ``(ranked, vectors, query, word_counts)``.

    ``ranked`` is ordered by query cosine like a real ranking; with
    ``duplicate`` the last sentence is an exact copy of the first.
    """
    from tonesum.ranking import RankedList, cosine_similarity

    vectors = {}
    for i in range(size):
        terms = rng.sample(vocab, rng.randint(1, 4))
        vectors[("d", i)] = {t: round(rng.uniform(0.1, 3.0), 6) for t in terms}
    if duplicate and size >= 2:
        vectors[("d", size - 1)] = dict(vectors[("d", 0)])
    query = {t: float(rng.randint(1, 6)) for t in rng.sample(vocab, rng.randint(1, 5))}
    word_counts = {ref: rng.randint(3, 25) for ref in vectors}
    scored = sorted(((ref, cosine_similarity(v, query)) for ref, v in vectors.items()),
                    key=lambda e: (-round(e[1], 12), e[0]))
    return RankedList(tuple(scored)), vectors, query, word_counts


def dense(vectors, query, vocab="abcdefgh"):
    import numpy as np

    to_arr = lambda w: np.array([w.get(t, 0.0) for t in vocab])
    return {ref: to_arr(v) for ref, v in vectors.items()}, to_arr(query)
