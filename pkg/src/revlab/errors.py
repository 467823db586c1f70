"""Exception hierarchy.

Validation problems (bad arguments, malformed inputs) derive from
``ValueError``; failures of a numerical guard derive from
``NumericalGuardError``. The command line maps the first family to exit
status 2 and the second to exit status 3.
"""


class NumericalGuardError(ArithmeticError):
    """A computation was refused because its accuracy could not be guaranteed."""


class SingularPointError(NumericalGuardError):
    """An evaluation point coincides with a logarithmic singularity."""


class PrecisionExhaustedError(NumericalGuardError):
    """The input does not carry enough digits for the requested expansion depth."""


class DepthInsufficientError(NumericalGuardError):
    """A continued-fraction expansion is too shallow for the requested scale."""


class ScaleError(NumericalGuardError):
    """A dyadic scale exceeds the truncation order of a series."""


class PhaseReductionError(NumericalGuardError):
    """A phase n^2 t lies beyond the range of the extended-precision reduction."""


class FitError(NumericalGuardError):
    """A least-squares fit is degenerate or has too few points."""
