"""Exception hierarchy.

Every domain error derives from :class:`DomainError`; the CLI maps those to
exit code 3.
"""


class DomainError(Exception):
    """Input lies outside the mathematical domain of an operation."""

    reason = "DomainError"

    def __init__(self, message: str = ""):
        super().__init__(message or self.reason)


class InvalidHookPlacement(DomainError):
    reason = "InvalidHookPlacement"


class PreconditionViolation(DomainError):
    reason = "PreconditionViolation"


class NotOddPrimePower(DomainError):
    reason = "NotOddPrimePower"


class FieldTooLarge(DomainError):
    reason = "FieldTooLarge"


class EnumerationTooLarge(DomainError):
    reason = "EnumerationTooLarge"


class ZeroConstantTerm(DomainError):
    reason = "ZeroConstantTerm"


class NotIrreducible(DomainError):
    reason = "NotIrreducible"


class PrimeDividesQ(DomainError):
    reason = "PrimeDividesQ"


class NotUnitaryFlavor(DomainError):
    reason = "NotUnitaryFlavor"


class NotOddPrime(DomainError):
    reason = "NotOddPrime"


class ZeroInput(DomainError):
    reason = "ZeroInput"


class ValuationMismatch(DomainError):
    reason = "ValuationMismatch"


class NonIntegralDivision(ArithmeticError):
    """Internal invariant breach: an exact quotient left a remainder."""


class NonIntegralIndex(DomainError):
    reason = "NonIntegralIndex"


class UnsupportedLabel(DomainError):
    reason = "UnsupportedLabel"


class EParamTooSmall(DomainError):
    reason = "EParamTooSmall"
