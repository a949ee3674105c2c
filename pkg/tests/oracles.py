"""Independent reference implementations used only by the tests.

They work on dense numpy arrays over an explicit vocabulary and share no
code with the package.
"""

import math

import numpy as np


def dense_tfidf(token_lists):
    """Dense TF-IDF matrix (sentences x vocabulary) and the vocabulary."""
    vocab = sorted({t for toks in token_lists for t in toks})
    index = {t: i for i, t in enumerate(vocab)}
    n = len(token_lists)
    tf = np.zeros((n, len(vocab)))
    for j, toks in enumerate(token_lists):
        for t in toks:
            tf[j, index[t]] += 1
    df = (tf > 0).sum(axis=0)
    idf = np.array([math.log(n / d) for d in df])
    return tf * idf, vocab


def dense_cosine(u, v):
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def greedy_mmr(vectors, query, lam, budget, word_counts, order):
    """Step-by-step brute-force MMR.

    ``vectors`` maps id -> dense array, ``order`` is the pool order. Every
    step rescans the full remaining pool and recomputes every similarity.
    Returns a list of ``(id, sim1, max_sim2, score)``.
    """
    chosen = []
    banned = set()
    used = 0
    while True:
        table = []
        for i in order:
            if i in banned or any(i == c[0] for c in chosen):
                continue
            s1 = dense_cosine(vectors[i], query)
            s2 = 0.0
            for c in chosen:
                s2 = max(s2, dense_cosine(vectors[i], vectors[c[0]]))
            table.append((lam * s1 - (1 - lam) * s2, s1, s2, i))
        if not table:
            return chosen
        # highest score, then highest sim1, then smallest id; values equal
        # to 12 decimals are ties
        table.sort(key=lambda r: (-round(r[0], 12), -round(r[1], 12), r[3]))
        picked = None
        for score, s1, s2, i in table:
            if round(score, 12) < 0:
                return chosen
            if used + word_counts[i] > budget:
                banned.add(i)
                continue
            picked = (i, s1, s2, score)
            break
        if picked is None:
            return chosen
        chosen.append(picked)
        used += word_counts[picked[0]]
