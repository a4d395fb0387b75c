"""Exception hierarchy shared by all char2q modules."""


class Char2qError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(Char2qError):
    """Input text does not conform to the element or descriptor grammar."""


class PrecisionOverflow(Char2qError):
    """A parsed term lies outside the representable precision window."""


class DescriptorMismatch(Char2qError):
    """Operands belong to different fields."""


class DivisionByZero(Char2qError, ZeroDivisionError):
    """Inversion or division by an exact zero."""


class PrecisionLoss(Char2qError):
    """Not enough known coefficients to compute the result exactly.

    Distinct from NoSolution: the answer exists but the declared precision
    cannot certify it.
    """


class NoSolution(Char2qError):
    """An Artin-Schreier equation x^2 + x = a has no solution.

    ``certificate`` is a tag naming the obstruction ('trace' or 'odd-pole');
    exhaustive confirmation is the oracle module's job.
    """

    def __init__(self, certificate: str):
        super().__init__(f"no Artin-Schreier solution ({certificate})")
        self.certificate = certificate


class NotASquare(Char2qError):
    """Square root requested of a non-square element."""


class WindowTooLarge(Char2qError):
    """An enumeration window exceeds the configured size cap."""


class DimensionMismatch(Char2qError):
    """Vector length does not match the ambient quadratic form."""


class DependentConstraints(Char2qError):
    """Prescribed-pairing constraints are inconsistent."""


class SingularAxis(Char2qError):
    """Transvection axis has norm zero."""


class PresentationMismatch(Char2qError):
    """Quaternion elements live in different presentations."""


class RetryBudgetExhausted(Char2qError):
    """Random sampling failed to find a suitable element within budget."""


class SearchExhausted(Char2qError):
    """A bounded witness search ended without success.

    Over finite fields the search is exhaustive, so this proves
    non-existence; over Laurent fields it is one-sided.
    """


class InvalidInstance(Char2qError):
    """A slot instance fails its witness relation checks."""


class PreconditionViolated(Char2qError):
    """An operation's stated hypotheses do not hold for the inputs."""


class SplitAmbient(Char2qError):
    """A norm-zero element appeared where anisotropy is required."""
