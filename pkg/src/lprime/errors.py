"""Exception hierarchy shared by all modules.

Two families matter to callers (and to the CLI exit-code mapping):
``ValidationError`` for rejected inputs, ``ComputationError`` for
evaluations that start but cannot finish (pole, lost convergence,
insufficient precision).
"""


class LPrimeError(Exception):
    """Base class for everything raised on purpose by this package."""


class ValidationError(LPrimeError, ValueError):
    """Input violates a documented precondition."""


class NotAdmissibleError(ValidationError):
    """Modulus has no odd prime pair (p1, p2) usable for a witness."""


class ComputationError(LPrimeError):
    """A numeric evaluation could not be completed."""


class PoleError(ComputationError):
    """Evaluation requested at the simple pole s = 1."""


class ConvergenceError(ComputationError):
    """Series tail refused to drop below the error target within the cap."""


class PrecisionError(ComputationError):
    """Working precision too low for the requested operation."""


class HalfSumMismatchError(ComputationError):
    """Lifted character half-sum differs from the expected value -1.

    Raised by witness construction instead of silently proceeding: a
    mismatch means either the character lift is wrong or the modulus
    does not behave as the construction requires.
    """
