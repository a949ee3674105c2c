"""Input validation helpers shared by the estimators and the CLI."""

import numbers
from collections.abc import Mapping

from .corpus import DocumentCluster, RawDocument
from .exceptions import ConfigError, DataError

__all__ = [
    "check_fraction",
    "check_positive_int",
    "check_non_negative_int",
    "check_documents",
    "check_clusters",
]


def check_fraction(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ConfigError(f"{name} must be a real number, got {value!r}")
    if not 0.0 <= value <= 1.0:
        raise ConfigError(f"{name} must lie in [0, 1], got {value}")
    return float(value)


def check_positive_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
        raise ConfigError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def check_non_negative_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 0:
        raise ConfigError(f"{name} must be a non-negative integer, got {value!r}")
    return int(value)


def check_documents(docs):
    """Coerce a sequence of strings or :class:`RawDocument` into documents.

    Plain strings receive ids ``d000``, ``d001``, ...
    """
    if isinstance(docs, (str, RawDocument)):
        docs = [docs]
    out = []
    for i, d in enumerate(docs):
        if isinstance(d, RawDocument):
            out.append(d)
        elif isinstance(d, str):
            out.append(RawDocument(f"d{i:03d}", d))
        else:
            raise DataError(f"cannot interpret {type(d).__name__} as a document")
    if not out:
        raise DataError("a cluster needs at least one document")
    return out


def check_clusters(X):
    """Normalize ``X`` into a list of ``(cluster_id, payload)`` pairs.

    ``X`` may be a mapping of cluster id to documents, a single
    :class:`DocumentCluster`, or a sequence whose items are clusters or
    document lists. The payload is either a :class:`DocumentCluster` or a
    list of :class:`RawDocument`.
    """
    if isinstance(X, DocumentCluster):
        return [(X.cluster_id, X)]
    if isinstance(X, Mapping):
        items = list(X.items())
    else:
        if isinstance(X, (str, RawDocument)):
            raise DataError("X must be a collection of clusters, not a single document")
        items = []
        for i, item in enumerate(X):
            cid = item.cluster_id if isinstance(item, DocumentCluster) else f"c{i:03d}"
            items.append((cid, item))
    if not items:
        raise DataError("no clusters given")
    out = []
    for cid, payload in items:
        if isinstance(payload, DocumentCluster):
            out.append((str(cid), payload))
        else:
            out.append((str(cid), check_documents(payload)))
    return out
