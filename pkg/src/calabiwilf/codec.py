"""Rank/unrank bijections for echelon matrices and k-subsets.

The order is the one ``enumerate_all`` streams: at each size, objects of the
first kind (pivot in the leading column / containing n) come first. For the
second kind of subspace a rank splits as

    r - [n-1, k-1]_q = c * [n-1, k]_q + r'

where ``c`` (0 <= c < q^k) is the prefixed column read in base q with the top
entry least significant, and ``r'`` ranks the remaining k x (n-1) matrix.
"""

from __future__ import annotations

import numpy as np

from .echelon import EchelonMatrix, _trailing_pivots
from .errors import InvalidMatrix, InvalidSubset, OutOfRange, RankOutOfRange
from .exactcount import binomial, qbinomial_cached
from .gf import FieldSpec
from .sampler import SubsetSample


def unrank_subspace(r: int, n: int, k: int, q: int) -> EchelonMatrix:
    FieldSpec(q)
    if k < 0 or k > n:
        raise OutOfRange(f"no {k}-dimensional subspaces of GF({q})^{n}")
    total = qbinomial_cached(n, k, q)
    if not 0 <= r < total:
        raise RankOutOfRange(f"rank {r} not in [0, {total})")
    a = np.zeros((k, n), dtype=np.int64)
    pivots = []
    top = col = 0
    while k > 0:
        first = qbinomial_cached(n - 1, k - 1, q)
        if r < first:
            a[top, col] = 1
            pivots.append(col)
            top += 1
            k -= 1
        else:
            c, r = divmod(r - first, qbinomial_cached(n - 1, k, q))
            for i in range(top, top + k):
                c, a[i, col] = divmod(c, q)
        n -= 1
        col += 1
    return EchelonMatrix._trusted(a, q, tuple(pivots))


def rank_subspace(M, q: int | None = None) -> int:
    """Inverse of ``unrank_subspace``; accepts an EchelonMatrix or raw rows plus q."""
    if not isinstance(M, EchelonMatrix):
        if q is None:
            raise InvalidMatrix("q is required for raw rows")
        M = EchelonMatrix(M, q)
    elif _trailing_pivots(M.entries) != M.pivot_columns:
        raise InvalidMatrix("matrix is not in canonical row-echelon form")
    q = M.q
    k, n = M.shape
    rows = M.entries.tolist()
    pivots = set(M.pivot_columns)
    r = 0
    top = 0
    for col in range(n):
        if k == 0:
            break
        if col in pivots:
            top += 1
            k -= 1
        else:
            c = 0
            for i in range(top + k - 1, top - 1, -1):
                c = c * q + rows[i][col]
            r += qbinomial_cached(n - 1, k - 1, q) + c * qbinomial_cached(n - 1, k, q)
        n -= 1
    return r


def unrank_subset(r: int, n: int, k: int) -> SubsetSample:
    if k < 0 or k > n:
        raise OutOfRange(f"no {k}-subsets of a {n}-set")
    total = binomial(n, k)
    if not 0 <= r < total:
        raise RankOutOfRange(f"rank {r} not in [0, {total})")
    size, want = n, k
    members = []
    while k > 0:
        first = binomial(n - 1, k - 1)
        if r < first:
            members.append(n)
            k -= 1
        else:
            r -= first
        n -= 1
    return SubsetSample(size, want, tuple(reversed(members)))


def rank_subset(subset, n: int | None = None) -> int:
    """Inverse of ``unrank_subset``; accepts a SubsetSample or members plus n."""
    if isinstance(subset, SubsetSample):
        n, members = subset.n, subset.members
    else:
        if n is None:
            raise InvalidSubset("n is required for a raw member list")
        members = tuple(subset)
        try:
            SubsetSample(n, len(members), members)
        except ValueError as exc:
            raise InvalidSubset(str(exc)) from exc
    chosen = set(members)
    k = len(members)
    r = 0
    while k > 0:
        if n in chosen:
            k -= 1
        else:
            r += binomial(n - 1, k - 1)
        n -= 1
    return r
