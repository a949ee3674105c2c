"""One-cluster summarization pipeline: rank, bias-filter, select, order."""

from dataclasses import dataclass

from .mmr import MmrConfig, order_for_output, select_summary
from .ranking import build_query_vector, compute_term_stats, rank_sentences, sentence_vectors
from .tone import Bias, apply_bias_filter

__all__ = ["ClusterSummary", "summarize_cluster"]


@dataclass(frozen=True)
class ClusterSummary:
    cluster: object
    ranked: object
    pool: object
    selection: object
    sentences: tuple

    @property
    def cluster_id(self):
        return self.cluster.cluster_id

    @property
    def word_count(self):
        return sum(s.word_count for s in self.sentences)

    @property
    def text(self):
        return "\n".join(s.original_text for s in self.sentences)


def summarize_cluster(cluster, lexicon=None, bias=Bias.NONE, mmr_config=None,
                      query_terms=10, neutral_band=0.0):
    if mmr_config is None:
        mmr_config = MmrConfig()
    bias = Bias.parse(bias)
    stats = compute_term_stats(cluster)
    vectors = sentence_vectors(cluster, stats)
    query = build_query_vector(cluster, query_terms)
    ranked = rank_sentences(cluster, stats, query, vectors=vectors)
    if bias is Bias.NONE:
        pool = ranked.head(mmr_config.pool_size)
    else:
        pool = apply_bias_filter(ranked, cluster, lexicon, bias, mmr_config.pool_size, neutral_band)
    word_counts = {s.ref: s.word_count for s in cluster.sentences}
    selection = select_summary(pool, vectors, query, mmr_config, word_counts)
    return ClusterSummary(cluster, ranked, pool, selection,
                          tuple(order_for_output(selection, cluster)))
