"""scikit-learn style front end.

Each sample is one document cluster, so ``predict`` maps a list of
clusters to a list of summaries and ``score`` averages ROUGE-1 F over
them. That is enough for ``GridSearchCV`` and ``clone`` to work, e.g. for
sweeping ``lambda_``.
"""

from collections.abc import Mapping
from os import PathLike

from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, TransformerMixin, clone
from sklearn.utils.validation import check_is_fitted

from .corpus import (
    DocumentCluster,
    PreprocessConfig,
    default_abbreviations,
    default_stopwords,
    load_wordlist,
    preprocess_cluster,
)
from .evaluation import ReferenceSummary, best_score, mean_score
from .exceptions import DataError
from .mmr import MmrConfig
from .pipeline import summarize_cluster
from .tone import Bias, PolarityLexicon, default_lexicon, load_lexicon
from .validation import (
    check_clusters,
    check_fraction,
    check_non_negative_int,
    check_positive_int,
)

__all__ = ["SentencePreprocessor", "MMRSummarizer"]


def _resolve_wordlist(value, default):
    if value is None:
        return default()
    if isinstance(value, (str, PathLike)):
        return load_wordlist(value)
    return frozenset(value)


class SentencePreprocessor(TransformerMixin, BaseEstimator):
    """Turn raw document clusters into :class:`DocumentCluster` objects.

    Parameters
    ----------
    stopwords, abbreviations : path, iterable of str or None
        Word lists; ``None`` uses the packaged defaults.
    duc_mode : bool
        Keep only the body elements named in ``text_tags``.
    min_sentence_tokens : int
        Sentences with fewer content tokens are dropped.
    n_jobs : int or None
        Threads used per cluster. Results do not depend on it.
    """

    def __init__(self, stopwords=None, abbreviations=None, duc_mode=False,
                 min_sentence_tokens=2, text_tags=("TEXT",), n_jobs=None):
        self.stopwords = stopwords
        self.abbreviations = abbreviations
        self.duc_mode = duc_mode
        self.min_sentence_tokens = min_sentence_tokens
        self.text_tags = text_tags
        self.n_jobs = n_jobs

    def fit(self, X=None, y=None):
        self.config_ = PreprocessConfig(
            stopwords=_resolve_wordlist(self.stopwords, default_stopwords),
            duc_mode=bool(self.duc_mode),
            min_sentence_tokens=check_non_negative_int(self.min_sentence_tokens, "min_sentence_tokens"),
            abbreviations=_resolve_wordlist(self.abbreviations, default_abbreviations),
            text_tags=tuple(self.text_tags),
        )
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        return [self._one(cid, payload) for cid, payload in check_clusters(X)]

    def _one(self, cluster_id, payload):
        if isinstance(payload, DocumentCluster):
            return payload
        return preprocess_cluster(payload, self.config_, cluster_id, self.n_jobs)


class MMRSummarizer(BaseEstimator):
    """Tone-biased extractive multi-document summarizer.

    Parameters
    ----------
    lambda_ : float, default=0.7
        Relevance/diversity trade-off in [0, 1]; 1 ranks on query
        similarity alone.
    budget_words : int, default=400
        Maximum summary length in words of original text.
    pool_size : int, default=30
        Number of top-ranked sentences handed to MMR.
    query_terms : int, default=10
        Size of the frequent-word pseudo-query.
    bias : {"none", "positive", "negative"}, default="none"
        Tone to keep. ``"positive"`` drops negative sentences before MMR.
    lexicon : PolarityLexicon, path or None
        Polarity lexicon; ``None`` loads the packaged seed lexicon.
    neutral_band : float, default=0.0
        Scores within ``[-neutral_band, neutral_band]`` count as neutral.
    preprocessor : SentencePreprocessor or None
        Applied to raw clusters; ``None`` uses the defaults.
    stem_rouge : bool, default=False
        Porter-stem both sides before ROUGE counting in :meth:`score`.
    n_jobs : int or None
        Clusters summarized in parallel (joblib). Output order and content
        do not depend on it.
    """

    def __init__(self, lambda_=0.7, budget_words=400, pool_size=30, query_terms=10,
                 bias="none", lexicon=None, neutral_band=0.0, preprocessor=None,
                 stem_rouge=False, n_jobs=None):
        self.lambda_ = lambda_
        self.budget_words = budget_words
        self.pool_size = pool_size
        self.query_terms = query_terms
        self.bias = bias
        self.lexicon = lexicon
        self.neutral_band = neutral_band
        self.preprocessor = preprocessor
        self.stem_rouge = stem_rouge
        self.n_jobs = n_jobs

    def fit(self, X=None, y=None):
        """Validate parameters and load resources. ``X`` is not used."""
        self.mmr_config_ = MmrConfig(
            lambda_=check_fraction(self.lambda_, "lambda_"),
            budget_words=check_positive_int(self.budget_words, "budget_words"),
            pool_size=check_positive_int(self.pool_size, "pool_size"),
        )
        self.query_terms_ = check_positive_int(self.query_terms, "query_terms")
        self.bias_ = Bias.parse(self.bias)
        if self.neutral_band < 0:
            raise DataError("neutral_band must be >= 0")
        if self.lexicon is None:
            self.lexicon_ = default_lexicon()
        elif isinstance(self.lexicon, PolarityLexicon):
            self.lexicon_ = self.lexicon
        else:
            self.lexicon_ = load_lexicon(self.lexicon)
        pre = self.preprocessor if self.preprocessor is not None else SentencePreprocessor()
        self.preprocessor_ = clone(pre).fit()
        return self

    def _summarize_one(self, cluster):
        return summarize_cluster(
            cluster,
            lexicon=self.lexicon_,
            bias=self.bias_,
            mmr_config=self.mmr_config_,
            query_terms=self.query_terms_,
            neutral_band=self.neutral_band,
        )

    def _run(self, cluster_id, payload):
        if not isinstance(payload, DocumentCluster):
            payload = self.preprocessor_._one(cluster_id, payload)
        return self._summarize_one(payload)

    def summarize(self, X):
        """Return one :class:`~tonesum.pipeline.ClusterSummary` per cluster."""
        check_is_fitted(self, "mmr_config_")
        items = check_clusters(X)
        if self.n_jobs and self.n_jobs != 1 and len(items) > 1:
            return Parallel(n_jobs=self.n_jobs)(delayed(self._run)(cid, p) for cid, p in items)
        return [self._run(cid, p) for cid, p in items]

    def predict(self, X):
        """Summary text per cluster, one sentence per line in document order."""
        return [s.text for s in self.summarize(X)]

    def fit_predict(self, X, y=None):
        return self.fit(X, y).predict(X)

    def rouge_scores(self, X, y):
        summaries = self.summarize(X)
        refs = _align_references(X, y, summaries, self.budget_words)
        return [best_score(s.text, r, self.stem_rouge) for s, r in zip(summaries, refs)]

    def score(self, X, y):
        """Mean ROUGE-1 F-score of the summaries of ``X`` against ``y``.

        ``y`` holds one reference per cluster: a text, a list of texts, or
        :class:`ReferenceSummary` objects (a mapping when ``X`` is one).
        """
        return mean_score(self.rouge_scores(X, y)).f_score


def _as_references(cluster_id, length, value):
    if isinstance(value, (str, ReferenceSummary)):
        value = [value]
    return [
        v if isinstance(v, ReferenceSummary) else ReferenceSummary.from_text(cluster_id, length, v)
        for v in value
    ]


def _align_references(X, y, summaries, length):
    if isinstance(y, Mapping):
        values = [y[s.cluster_id] for s in summaries]
    else:
        values = list(y)
        if len(values) != len(summaries):
            raise DataError(f"got {len(values)} references for {len(summaries)} clusters")
    return [_as_references(s.cluster_id, length, v) for s, v in zip(summaries, values)]
