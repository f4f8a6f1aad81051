"""Exception hierarchy.

Domain errors (bad parameters, out-of-range ranks, malformed matrices) map to
CLI exit code 2; resource-cap errors map to exit code 3.
"""


class CalabiWilfError(Exception):
    exit_code = 2


class DomainError(CalabiWilfError, ValueError):
    pass


class ResourceCapError(CalabiWilfError):
    exit_code = 3


class NotPrime(DomainError):
    def __init__(self, q):
        super().__init__(f"field order {q} is not prime (only prime fields are supported)")
        self.q = q


class FieldMismatch(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class OutOfRange(DomainError):
    pass


class RankOutOfRange(DomainError):
    pass


class InvalidMatrix(DomainError):
    pass


class InvalidSubset(DomainError):
    pass


class RankDeficient(DomainError):
    pass


class PatternTooLarge(DomainError):
    pass


class ZeroDimensional(DomainError):
    pass


class TooFewTrials(DomainError):
    pass


class TooLarge(ResourceCapError):
    pass


class DimensionTooLarge(ResourceCapError):
    pass


class TooManyCells(ResourceCapError):
    pass
