"""Exception hierarchy.

Every error carries a short machine-readable ``code`` that the command line
front end prints alongside the message.
"""

from __future__ import annotations


class NearvecError(Exception):
    code = "error"


class NonPrime(NearvecError, ValueError):
    code = "non_prime"


class NotPrimePower(NearvecError, ValueError):
    code = "not_prime_power"


class CapExceeded(NearvecError):
    code = "cap_exceeded"


class InternalError(NearvecError, RuntimeError):
    code = "internal"


class ZeroInverse(NearvecError, ZeroDivisionError):
    code = "zero_inverse"


class ZeroArgument(NearvecError, ValueError):
    code = "zero_argument"


class NotDicksonPair(NearvecError, ValueError):
    code = "not_dickson_pair"


class FullyDistributive(NearvecError):
    """Raised when a construction needs a right-distributivity failure but
    the nearfield is a field (grade 1)."""

    code = "fully_distributive"


class DimMismatch(NearvecError, ValueError):
    code = "dim_mismatch"


class PivotZero(NearvecError, ValueError):
    code = "pivot_zero"


class TriplePreconditionViolated(NearvecError, ValueError):
    code = "triple_precondition"


class TripleInvalid(NearvecError, ValueError):
    code = "triple_invalid"


class BadRange(NearvecError, ValueError):
    code = "bad_range"


class NotDirect(NearvecError):
    code = "not_direct"


class ElementSyntaxError(NearvecError, ValueError):
    code = "syntax"


class DegreeTooHigh(NearvecError, ValueError):
    code = "degree_too_high"


class ReplayMismatch(NearvecError):
    code = "replay_mismatch"
