"""Typed errors shared across the toolkit.

Detector math raises instead of returning sentinel values: a silent inf or
NaN would flow into AUC computation unnoticed, whereas typed errors are
counted and reported as skipped samples by the evaluation harness.
"""


class CodepplError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class InvalidInputError(CodepplError):
    """A precondition on user-supplied input was violated."""

    code = "invalid-input"


class DegenerateDenominatorError(CodepplError):
    """A rank-ratio detector hit a zero denominator (e.g. every rank is 1)."""

    code = "degenerate-denominator"


class DegenerateVarianceError(CodepplError):
    """Perturbed samples have zero spread, so normalization is undefined."""

    code = "degenerate-variance"


class ScorerUnavailableError(CodepplError):
    """The scoring backend could not be reached or failed. Retriable."""

    code = "scorer-unavailable"
    retriable = True


class ProtocolError(CodepplError):
    """A remote response violated the wire protocol; message names the field."""

    code = "protocol-error"


class PerturbationUnavailableError(CodepplError):
    """The fill backend for mask-and-fill perturbation failed."""

    code = "perturbation-unavailable"


class InsufficientSamplesError(CodepplError):
    """A sampling pool is too small; message names the pool and shortfall."""

    code = "insufficient-samples"


class SingleClassError(CodepplError):
    """ROC/AUC needs at least one positive and one negative label."""

    code = "single-class"
