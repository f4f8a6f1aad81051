"""Uniform random selection of k-subsets (Wilf) and k-subspaces (Calabi-Wilf).

Both samplers walk the Pascal-type recurrence from size n down to 0, tossing
one exact loaded coin per step:

* subsets: heads with probability k/n puts n in the subset;
* subspaces: heads with probability (q^k - 1)/(q^n - 1) makes the current
  leftmost column a pivot column (border with a unit row and column);
  tails prefixes a uniformly random column of length k.

Coins compare a uniform big integer below the denominator against the
numerator, so they stay exact even when the probability is within 2^-300 of
0 or 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .echelon import EchelonMatrix
from .errors import DomainError, OutOfRange
from .exactcount import CoinSpec
from .gf import FieldElement, FieldSpec
from .rng import RngStream, uniform_below

__all__ = [
    "SubsetSample",
    "bernoulli_exact",
    "random_subset",
    "random_subspace",
    "random_vector",
    "uniform_below",
]


@dataclass(frozen=True)
class SubsetSample:
    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        m = self.members
        if len(m) != self.k or any(not 1 <= x <= self.n for x in m) or any(a >= b for a, b in zip(m, m[1:])):
            raise DomainError(f"{m} is not a strictly increasing {self.k}-subset of 1..{self.n}")

    def __iter__(self):
        return iter(self.members)


def bernoulli_exact(coin: CoinSpec, rng: RngStream) -> bool:
    return rng.uniform_below(coin.denominator) < coin.numerator


def random_subset(n: int, k: int, rng: RngStream) -> SubsetSample:
    if k < 0 or k > n:
        raise OutOfRange(f"no {k}-subsets of a {n}-set")
    size, want = n, k
    members = []
    while k > 0:
        # heads with probability k/n
        if k == n or rng.uniform_below(n) < k:
            members.append(n)
            k -= 1
        n -= 1
    return SubsetSample(size, want, tuple(reversed(members)))


def random_vector(k: int, q: int, rng: RngStream) -> list[FieldElement]:
    field = FieldSpec(q)
    return [FieldElement(int(v), field) for v in rng.integers(q, k)]


def subspace_pivots(n: int, k: int, q: int, rng: RngStream) -> list[int]:
    """0-based pivot columns chosen by the coin sequence of one subspace draw."""
    pivots = []
    col = 0
    qn = q**n
    qk = q**k
    while k > 0:
        if k == n or rng.uniform_below(qn - 1) < qk - 1:
            pivots.append(col)
            k -= 1
            qk //= q
        n -= 1
        qn //= q
        col += 1
    return pivots


def random_subspace(n: int, k: int, q: int, rng: RngStream) -> EchelonMatrix:
    """A uniformly random k-dimensional subspace of GF(q)^n, as its echelon basis."""
    if k < 0 or k > n:
        raise OutOfRange(f"no {k}-dimensional subspaces of GF({q})^{n}")
    FieldSpec(q)
    pivots = subspace_pivots(n, k, q, rng)
    # Tails columns are uniform in the rows not yet bordered; drawing the whole
    # matrix up front and masking is the same distribution.
    a = rng.integers(q, (k, n))
    if k:
        a[:, pivots] = 0
        rows = np.arange(k)
        a[rows, pivots] = 1
        a[np.arange(n)[None, :] > np.array(pivots)[:, None]] = 0
    return EchelonMatrix._trusted(a, q, tuple(pivots))
