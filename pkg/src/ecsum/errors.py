"""Exception types raised across the package."""


class EcsumError(Exception):
    """Base class for all errors raised by ecsum."""


class DescriptorMismatch(EcsumError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(EcsumError, ZeroDivisionError):
    pass


class BadPrime(EcsumError, ValueError):
    """A prime-field modulus is composite or too small."""


class SingularCurve(EcsumError, ValueError):
    pass


class PointNotOnCurve(EcsumError, ValueError):
    pass


class NonGeneric(EcsumError, ValueError):
    """Input violates the genericity hypotheses of a closed-form formula.

    ``hypothesis`` names the violated condition so callers (and the CLI) can
    report it without parsing the message.
    """

    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or hypothesis)


class ArityMismatch(EcsumError, TypeError):
    pass


class ZeroDenominator(EcsumError, ZeroDivisionError):
    pass
