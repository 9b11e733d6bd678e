"""Exception hierarchy shared by every hopfcode module."""


class HopfcodeError(Exception):
    """Base class for all library errors."""


class CompositeModulus(HopfcodeError, ValueError):
    pass


class InvalidOrder(HopfcodeError, ValueError):
    pass


class NoSuchRoot(HopfcodeError, ValueError):
    pass


class DivisionByZero(HopfcodeError, ZeroDivisionError):
    pass


class BadCharacteristic(HopfcodeError, ValueError):
    pass


class AmbientMismatch(HopfcodeError, ValueError):
    pass


class AlgebraMismatch(HopfcodeError, ValueError):
    pass


class NotInvertible(HopfcodeError, ValueError):
    pass


class BudgetExceeded(HopfcodeError, RuntimeError):
    pass


class InvalidPermutation(HopfcodeError, ValueError):
    pass


class IndexOutOfRange(HopfcodeError, IndexError):
    pass


class NotInR(HopfcodeError, ValueError):
    """Element does not lie in the subalgebra generated by x."""


class ZeroCoefficient(HopfcodeError, ValueError):
    pass


class DegenerateForm(HopfcodeError, ValueError):
    pass


class NotMonomial(HopfcodeError, ValueError):
    pass


class HypothesisViolated(HopfcodeError, ValueError):
    pass


class NotADivisor(HopfcodeError, ValueError):
    pass


class ConstructionError(HopfcodeError, RuntimeError):
    """Raised when structure data fails a construction-time identity."""
