"""Exceptions raised by the library, plus the primality guard they share."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ActionError(ValueError):
    """The input (p, rho) does not satisfy the standing hypotheses."""


class NonPrimeP(ActionError):
    pass


class EvenP(ActionError):
    pass


class WrongOrder(ActionError):
    pass


class NotFree(ActionError):
    pass


class DimensionMismatch(ActionError):
    pass


class InternalConsistencyError(AssertionError):
    """A result contradicts a fact that must hold for validated input."""


class UnsupportedDecoration(DomainError):
    pass


class OracleRefusal(RuntimeError):
    """The brute-force search space is too large to enumerate."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True
