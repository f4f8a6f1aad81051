"""Canonical row-echelon form with trailing pivots.

Each k x n basis matrix of a subspace is brought to the unique form where

* row i has a pivot column p_i holding 1 and is zero to the right of it,
* p_1 < ... < p_k,
* every pivot column is a unit column.

So the identity block sits at the *right* for generic subspaces, e.g.::

    5 6 3 2 5 1 0 0 0 0
    6 1 0 0 6 0 1 0 0 0
    ...

Pivot columns are 0-based on the objects (``pivot_columns``) and 1-based in
``pivots_of`` and in everything printed.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, InvalidMatrix, RankDeficient, TooLarge
from .exactcount import qbinomial
from .gf import FieldSpec, inverse_mod

MAX_Q = 2**31
ENUMERATION_CAP = 10**6


def _as_array(rows, q: int, n: int | None = None) -> np.ndarray:
    FieldSpec(q)
    if q >= MAX_Q:
        raise DomainError(f"matrix entries need q < 2^31, got {q}")
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        if n is None:
            n = a.shape[1] if a.ndim == 2 else 0
        a = np.zeros((0, n), dtype=np.int64)
    if a.ndim != 2:
        raise InvalidMatrix(f"expected a 2-d array of entries, got shape {a.shape}")
    if n is not None and a.shape[1] != n:
        raise InvalidMatrix(f"expected {n} columns, got {a.shape[1]}")
    if a.size and (a.min() < 0 or a.max() >= q):
        raise InvalidMatrix(f"entries must lie in [0, {q})")
    return a


class DenseMatrix:
    """A k x n matrix over GF(q) with no structural constraint."""

    __slots__ = ("q", "entries")

    def __init__(self, rows, q: int, n: int | None = None):
        self.q = q
        self.entries = _as_array(rows, q, n)
        self.entries.flags.writeable = False

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    def __repr__(self):
        return f"DenseMatrix(q={self.q}, rows={self.entries.tolist()})"


def _trailing_pivots(a: np.ndarray) -> tuple[int, ...] | None:
    """Pivot columns of ``a`` if it is in canonical form, else None."""
    k, n = a.shape
    if k == 0:
        return ()
    if k > n:
        return None
    nz = a != 0
    if not nz.any(axis=1).all():
        return None
    piv = n - 1 - np.argmax(nz[:, ::-1], axis=1)
    if np.any(np.diff(piv) <= 0):
        return None
    if not np.array_equal(a[:, piv], np.eye(k, dtype=a.dtype)):
        return None
    return tuple(int(p) for p in piv)


class EchelonMatrix:
    """A k x n matrix over GF(q) in canonical (trailing-pivot) echelon form.

    Immutable and hashable. Construction validates every invariant unless the
    caller is one of this package's samplers, which build outputs that are
    valid by construction.
    """

    __slots__ = ("q", "entries", "pivot_columns", "_key")

    def __init__(self, rows, q: int, n: int | None = None, *, pivots: Sequence[int] | None = None):
        a = _as_array(rows, q, n)
        found = _trailing_pivots(a)
        if found is None:
            raise InvalidMatrix("matrix is not in canonical row-echelon form")
        if pivots is not None and tuple(pivots) != found:
            raise InvalidMatrix(f"stored pivots {tuple(pivots)} do not match entries {found}")
        self._init(a, q, found)

    def _init(self, a: np.ndarray, q: int, pivots: tuple[int, ...]):
        a.flags.writeable = False
        self.q = q
        self.entries = a
        self.pivot_columns = pivots
        self._key = None

    @classmethod
    def _trusted(cls, a: np.ndarray, q: int, pivots: tuple[int, ...]) -> EchelonMatrix:
        obj = cls.__new__(cls)
        obj._init(a, q, pivots)
        return obj

    @classmethod
    def identity(cls, k: int, q: int) -> EchelonMatrix:
        return cls(np.eye(k, dtype=np.int64), q, k)

    @classmethod
    def empty(cls, n: int, q: int) -> EchelonMatrix:
        return cls(np.zeros((0, n), dtype=np.int64), q, n)

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()

    def _identity_key(self):
        if self._key is None:
            self._key = (self.q, self.n, self.k, self.entries.tobytes())
        return self._key

    def __eq__(self, other):
        if not isinstance(other, EchelonMatrix):
            return NotImplemented
        return self._identity_key() == other._identity_key()

    def __hash__(self):
        return hash(self._identity_key())

    def __repr__(self):
        return f"EchelonMatrix(q={self.q}, n={self.n}, rows={self.rows()})"

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows())


def _entries_and_q(M, q: int | None) -> tuple[np.ndarray, int]:
    if isinstance(M, (EchelonMatrix, DenseMatrix)):
        return M.entries, M.q
    if q is None:
        raise DomainError("q is required for raw array input")
    return _as_array(M, q), q


def is_echelon(M, q: int | None = None) -> bool:
    """True iff ``M`` satisfies every canonical echelon invariant."""
    try:
        a, _ = _entries_and_q(M, q)
    except DomainError:
        return False
    return _trailing_pivots(a) is not None


def pivots_of(M: EchelonMatrix) -> tuple[int, ...]:
    """Pivot columns, 1-based."""
    return tuple(p + 1 for p in M.pivot_columns)


def _first_kind_rows(sub, n):
    yield (1,) + (0,) * (n - 1)
    for r in sub:
        yield (0,) + r


def _enum_rows(n: int, k: int, q: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if k == 0:
        yield ()
        return
    if k > n:
        return
    for sub in _enum_rows(n - 1, k - 1, q):
        yield tuple(_first_kind_rows(sub, n))
    if k > n - 1:
        return
    powers = [q**i for i in range(k)]
    for c in range(q**k):
        column = [(c // p) % q for p in powers]
        for sub in _enum_rows(n - 1, k, q):
            yield tuple((d,) + r for d, r in zip(column, sub))


def enumerate_all(n: int, k: int, q: int, cap: int = ENUMERATION_CAP) -> Iterator[EchelonMatrix]:
    """Stream every canonical k x n echelon matrix over GF(q) exactly once.

    Order is depth-first over the two branches: first-kind matrices (pivot in
    column 1) first, then second-kind ones grouped by their first column,
    read as a base-q number with the top entry least significant.
    """
    FieldSpec(q)
    if k < 0 or k > n:
        return iter(())
    total = qbinomial(n, k, q)
    if total > cap:
        raise TooLarge(f"{total} matrices exceed the enumeration cap {cap}")

    def gen():
        for rows in _enum_rows(n, k, q):
            a = np.array(rows, dtype=np.int64).reshape(k, n)
            yield EchelonMatrix._trusted(a, q, _trailing_pivots(a))

    return gen()


def _rref_leading(a: np.ndarray, q: int) -> np.ndarray:
    """Leading-pivot reduced row echelon form mod q; raises if rank < rows."""
    a = a.copy() % q
    k, n = a.shape
    r = 0
    for c in range(n):
        if r == k:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = (a[r] * inverse_mod(int(a[r, c]), q)) % q
        f = a[:, c].copy()
        f[r] = 0
        a = (a - np.outer(f, a[r])) % q
        r += 1
    if r < k:
        raise RankDeficient(f"rows are linearly dependent (rank {r} < {k})")
    return a


def canonical_form(M, q: int | None = None) -> EchelonMatrix:
    """The unique canonical echelon basis of the row space of ``M``."""
    a, q = _entries_and_q(M, q)
    k, n = a.shape
    if k > n:
        raise RankDeficient(f"{k} rows cannot be independent in dimension {n}")
    # leading-pivot RREF of the column-reversed matrix, then undo both flips
    r = _rref_leading(a[:, ::-1], q)[::-1, ::-1].copy()
    return EchelonMatrix._trusted(r, q, _trailing_pivots(r))
