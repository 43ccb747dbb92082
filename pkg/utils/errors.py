"""
Exception hierarchy shared by every amdkit package.

Each error carries the process exit status the CLI maps it to.
"""


class AmdkitError(Exception):
    exit_code = 1


class ValidationError(AmdkitError):
    """A precondition on the inputs was violated."""
    exit_code = 2


class SizeCapExceeded(AmdkitError):
    exit_code = 3


class VerificationFailed(AmdkitError):
    """A claimed mathematical property failed on exhaustive evaluation."""
    exit_code = 4


# algebra
class NonPrime(ValidationError):
    pass


class Reducible(ValidationError):
    pass


class FieldMismatch(ValidationError):
    pass


class FieldDivisionByZero(ValidationError, ZeroDivisionError):
    pass


class NotABasis(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class BadFactorization(ValidationError):
    pass


class DegenerateField(ValidationError):
    pass


class SpecParseError(ValidationError):
    pass


# functions
class NotBalanced(ValidationError):
    pass


class ZeroMap(ValidationError):
    pass


class NotAdditive(ValidationError):
    pass


class CharacteristicDividesDegree(ValidationError):
    pass


class BadTableLength(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


# amd / bounds / derive
class BadSource(ValidationError):
    pass


class ZeroOffset(ValidationError):
    pass


class BadModel(ValidationError):
    pass


class DegenerateParameters(ValidationError):
    pass


class ProfileIncomplete(ValidationError):
    pass


class NotSystematic(ValidationError):
    pass
