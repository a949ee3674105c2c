"""Tone-biased extractive multi-document summarization with MMR."""

from .corpus import (
    DocumentCluster,
    PreprocessConfig,
    RawDocument,
    Sentence,
    load_corpus,
    preprocess_cluster,
    segment_sentences,
    strip_markup,
    tokenize,
)
from .estimators import MMRSummarizer, SentencePreprocessor
from .evaluation import ReferenceSummary, RougeScore, evaluate_summary, rouge1
from .mmr import MmrConfig, SummarySelection, mmr_score, select_summary
from .porter import porter_stem
from .ranking import build_query_vector, compute_term_stats, cosine_similarity, rank_sentences
from .tone import Bias, PolarityLexicon, PolarityTag, apply_bias_filter, load_lexicon

__version__ = "0.1.0"
