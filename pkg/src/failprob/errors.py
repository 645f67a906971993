"""Semantic exception hierarchy.

Every error raised on purpose by this package derives from
:class:`FailProbError`, so callers can catch one base class.  Most errors
also derive from ``ValueError`` because they signal violated preconditions.
"""


class FailProbError(Exception):
    """Base class for all errors raised by failprob."""


class InvalidSample(FailProbError, ValueError):
    """Marginal sample is empty or contains non-finite values."""


class BadK(FailProbError, ValueError):
    """Number of upper order statistics outside the admissible range."""


class NonPositiveTail(FailProbError, ValueError):
    """Hill estimation needs the top k+1 order statistics strictly positive."""


class NonPositiveGamma(FailProbError, ValueError):
    """Fitted tail index is not positive; supply parameters manually instead."""


class InvalidFit(FailProbError, ValueError):
    """Tail-fit parameters violate their invariants (sigma > 0, 2 <= k <= n)."""


class NonPositiveArg(FailProbError, ValueError):
    """Tail quantile function evaluated at a non-positive argument."""


class LengthMismatch(FailProbError, ValueError):
    """Paired coordinate samples have different lengths."""


class InvalidMeasure(FailProbError, ValueError):
    """Empirical measure construction with bad points or mass scale."""


class BadRect(FailProbError, ValueError):
    """Rectangle corner outside the admissible quadrant."""


class InvalidFailureSet(FailProbError, ValueError):
    """Failure-set parameters violate their invariants."""


class NotHalfplane(FailProbError, TypeError):
    """Operation defined only for the linear half-plane failure set."""


class BadTuning(FailProbError, ValueError):
    """Tuning parameters (ke, ell, lambda, level, stretches) out of range."""


class BadGrid(FailProbError, ValueError):
    """Stability-scan grid not strictly increasing or not above the sample size."""


class InvalidModel(FailProbError, ValueError):
    """Simulation model parameters out of range."""


class BadN(FailProbError, ValueError):
    """Requested draw count too small."""


class RetentionTooSmall(FailProbError, ValueError):
    """Retention below the reach of the radial unit ball; closed form invalid."""


class ParseError(FailProbError, ValueError):
    """Claims CSV could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyAfterFilter(FailProbError, ValueError):
    """No claims records left after applying the filter threshold."""
