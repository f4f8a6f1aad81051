"""Exact big-integer counting: binomials, q-factorials, q-binomials, branch coins."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError


@dataclass(frozen=True)
class CoinSpec:
    """A loaded coin whose heads probability is numerator/denominator (kept unreduced)."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0 or not 0 <= self.numerator <= self.denominator:
            raise DomainError(f"invalid coin {self.numerator}/{self.denominator}")

    @property
    def probability(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def _check_q(q: int):
    if q < 2:
        raise DomainError(f"q must be at least 2, got {q}")


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def qfactorial(n: int, q: int) -> int:
    """[n]! = prod_{i=1..n} (q^i - 1)/(q - 1), as an exact integer."""
    _check_q(q)
    num = 1
    for i in range(1, n + 1):
        num *= q**i - 1
    return num // (q - 1) ** n


def qbinomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n (0 when k is out of range)."""
    _check_q(q)
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@lru_cache(maxsize=None)
def qbinomial_cached(n: int, k: int, q: int) -> int:
    return qbinomial(n, k, q)


def subspace_coin(n: int, k: int, q: int) -> CoinSpec:
    """Probability that a uniform k x n echelon matrix is of the first kind."""
    if not 1 <= k <= n:
        raise DomainError(f"subspace_coin needs 1 <= k <= n, got n={n}, k={k}")
    _check_q(q)
    return CoinSpec(q**k - 1, q**n - 1)


def subset_coin(n: int, k: int) -> CoinSpec:
    """Probability that a uniform k-subset of {1..n} contains n."""
    if not 1 <= k <= n:
        raise DomainError(f"subset_coin needs 1 <= k <= n, got n={n}, k={k}")
    return CoinSpec(k, n)
