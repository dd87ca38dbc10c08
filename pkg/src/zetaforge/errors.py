"""Exception hierarchy shared by every zetaforge module."""


class ZetaForgeError(Exception):
    """Base class for all library errors."""


# finite fields and characters
class NotPrime(ZetaForgeError, ValueError):
    pass


class ReducibleModulus(ZetaForgeError, ValueError):
    pass


class NoFieldTooLarge(ZetaForgeError, ValueError):
    pass


class FieldMismatch(ZetaForgeError, ValueError):
    pass


class DivisionByZero(ZetaForgeError, ZeroDivisionError):
    pass


class ZeroArgument(ZetaForgeError, ValueError):
    pass


class TrivialCharacter(ZetaForgeError, ValueError):
    pass


# counting
class BudgetExceeded(ZetaForgeError):
    pass


class CharacteristicMismatch(ZetaForgeError, ValueError):
    pass


class NotHomogeneous(ZetaForgeError, ValueError):
    pass


class SingularCurve(ZetaForgeError, ValueError):
    pass


class BadCharacteristic(ZetaForgeError, ValueError):
    pass


class NonIntegralOrbit(ZetaForgeError, ValueError):
    pass


# zeta functions
class InsufficientCounts(ZetaForgeError, ValueError):
    pass


class NoRationalFit(ZetaForgeError):
    pass


class NonIntegralSolution(ZetaForgeError, ValueError):
    pass


class DegreeOutOfRange(ZetaForgeError, ValueError):
    pass


class MissingFactor(ZetaForgeError, ValueError):
    pass


# weil numbers
class NotMonic(ZetaForgeError, ValueError):
    pass


class ZeroRoot(ZetaForgeError, ValueError):
    pass


# L-series
class BadPrime(ZetaForgeError, ValueError):
    pass


class MissingPrime(ZetaForgeError, ValueError):
    pass


class OutOfRegion(ZetaForgeError, ValueError):
    pass
