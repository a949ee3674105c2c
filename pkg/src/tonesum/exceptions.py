"""Exceptions raised by the summarization pipeline."""


class TonesumError(Exception):
    """Base class for all package errors."""


class DataError(TonesumError, ValueError):
    """Input data cannot be summarized or evaluated."""


class EmptyClusterError(DataError):
    """No usable sentence survives preprocessing."""


class EmptyPoolError(DataError):
    """The tone filter discarded every candidate sentence."""


class MissingReferenceError(DataError):
    """A cluster has no reference summary to evaluate against."""


class ConfigError(TonesumError, ValueError):
    """A configuration value is malformed or out of range."""
