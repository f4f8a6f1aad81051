"""Statistics over echelon matrices: symbol and pattern counts, minimal weight,
sample and exact moments, and a chi-square uniformity check.

Moment conventions (used everywhere, including output headers):
central moments with denominator N; skewness m3 / m2^(3/2); kurtosis
m4 / m2^2 (non-excess, normal = 3).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from statistics import NormalDist
from typing import Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .codec import rank_subset, rank_subspace
from .echelon import EchelonMatrix, _as_array
from .errors import (
    DimensionTooLarge,
    DomainError,
    PatternTooLarge,
    TooFewTrials,
    TooManyCells,
    ZeroDimensional,
)
from .exactcount import binomial, qbinomial
from .gf import FieldElement, FieldSpec
from .rng import RngStream
from .sampler import random_subset, random_subspace

MIN_WEIGHT_CAP = 2**24
CELL_CAP = 10**4


def _symbol_value(s, q: int) -> int:
    v = s.value if isinstance(s, FieldElement) else int(s)
    if not 0 <= v < q:
        raise DomainError(f"symbol {v} is not in GF({q})")
    return v


def count_symbol(M: EchelonMatrix, s) -> int:
    return int(np.count_nonzero(M.entries == _symbol_value(s, M.q)))


def count_pattern(M: EchelonMatrix, pattern) -> int:
    """Occurrences of ``pattern`` as a consecutive submatrix, overlaps included."""
    p = _as_array(pattern, M.q)
    a, b = p.shape
    if a == 0 or b == 0:
        raise PatternTooLarge("pattern must be non-empty")
    if a > M.k or b > M.n:
        raise PatternTooLarge(f"{a}x{b} pattern does not fit in a {M.k}x{M.n} matrix")
    windows = sliding_window_view(M.entries, (a, b))
    return int(np.count_nonzero((windows == p).all(axis=(2, 3))))


def _coefficient_block(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = q ** np.arange(k, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def min_weight(M: EchelonMatrix, cap: int = MIN_WEIGHT_CAP, chunk: int = 1 << 16) -> int:
    """Minimum Hamming weight over the nonzero vectors of the row space."""
    q, k = M.q, M.k
    if k == 0:
        raise ZeroDimensional("the zero subspace has no nonzero vectors")
    if q**k > cap:
        raise DimensionTooLarge(f"q^k = {q**k} exceeds the brute-force cap {cap}")
    # rows of M are themselves codewords; the identity block makes weight 1 common
    best = int(np.count_nonzero(M.entries, axis=1).min())
    total = q**k
    for start in range(1, total, chunk):
        if best == 1:
            break
        coeffs = _coefficient_block(q, k, start, min(start + chunk, total))
        words = (coeffs @ M.entries) % q
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


@dataclass(frozen=True)
class MomentSummary:
    count: int
    mean: float
    variance: float
    skewness: float | None
    kurtosis: float | None

    @property
    def defined(self) -> bool:
        return self.skewness is not None

    def as_dict(self) -> dict:
        return asdict(self)


def sample_moments(data: Sequence[float]) -> MomentSummary:
    x = np.asarray(data, dtype=np.float64)
    if x.size < 1:
        raise DomainError("sample_moments needs at least one value")
    mean = float(x.mean())
    d = x - mean
    m2 = float(np.mean(d**2))
    if m2 <= 0.0:
        return MomentSummary(int(x.size), mean, 0.0, None, None)
    m3 = float(np.mean(d**3))
    m4 = float(np.mean(d**4))
    return MomentSummary(int(x.size), mean, m2, m3 / m2**1.5, m4 / m2**2)


@dataclass(frozen=True)
class ExactMoments:
    """Exact raw moments E[X^m] and the derived summary.

    ``skewness`` is kept as its exact square (skewness_squared) together with
    the sign, since m3 / m2^(3/2) is generally irrational.
    """

    raw: tuple[Fraction, ...]

    @property
    def mean(self) -> Fraction:
        return self.raw[1]

    @property
    def variance(self) -> Fraction:
        e1, e2 = self.raw[1], self.raw[2]
        return e2 - e1 * e1

    @property
    def third_central(self) -> Fraction:
        e1, e2, e3 = self.raw[1:4]
        return e3 - 3 * e1 * e2 + 2 * e1**3

    @property
    def fourth_central(self) -> Fraction:
        e1, e2, e3, e4 = self.raw[1:5]
        return e4 - 4 * e1 * e3 + 6 * e1 * e1 * e2 - 3 * e1**4

    @property
    def skewness_squared(self) -> Fraction | None:
        v = self.variance
        return None if v == 0 else self.third_central**2 / v**3

    @property
    def skewness(self) -> float | None:
        s2 = self.skewness_squared
        if s2 is None:
            return None
        return math.copysign(math.sqrt(s2), self.third_central)

    @property
    def kurtosis(self) -> Fraction | None:
        v = self.variance
        return None if v == 0 else self.fourth_central / v**2

    def summary(self) -> dict:
        kurt = self.kurtosis
        return {
            "mean": float(self.mean),
            "variance": float(self.variance),
            "skewness": self.skewness,
            "kurtosis": None if kurt is None else float(kurt),
        }


@lru_cache(maxsize=None)
def _column_power_sums(k: int, q: int, max_order: int) -> tuple[int, ...]:
    """sum over all q^k columns of C^m, C = occurrences of a fixed symbol."""
    return tuple(
        sum(j**m * binomial(k, j) * (q - 1) ** (k - j) for j in range(k + 1))
        for m in range(max_order + 1)
    )


@lru_cache(maxsize=None)
def _symbol_power_sums(n: int, k: int, q: int, s: int, max_order: int) -> tuple[int, ...]:
    """sum over all canonical k x n matrices of X^m, X = count of symbol s."""
    if k < 0 or k > n:
        return (0,) * (max_order + 1)
    if k == 0:
        return (1,) + (0,) * max_order
    # first kind: a constant offset from the bordering unit row and column
    offset = 1 if s == 1 else (n + k - 2 if s == 0 else 0)
    first = _symbol_power_sums(n - 1, k - 1, q, s, max_order)
    second = _symbol_power_sums(n - 1, k, q, s, max_order)
    col = _column_power_sums(k, q, max_order)
    out = []
    for m in range(max_order + 1):
        t = 0
        for j in range(m + 1):
            c = binomial(m, j)
            t += c * offset ** (m - j) * first[j] + c * col[m - j] * second[j]
        out.append(t)
    return tuple(out)


def _iterative_power_sums(n: int, k: int, q: int, s: int, max_order: int) -> tuple[int, ...]:
    # fill the cache bottom-up so the recursion never runs deep
    for nn in range(n + 1):
        for kk in range(max(0, k - (n - nn)), min(k, nn) + 1):
            _symbol_power_sums(nn, kk, q, s, max_order)
    return _symbol_power_sums(n, k, q, s, max_order)


def exact_symbol_moments(n: int, k: int, q: int, s, max_order: int = 4) -> ExactMoments:
    """Exact raw moments of the number of entries equal to ``s`` in a uniform
    k x n echelon matrix over GF(q)."""
    FieldSpec(q)
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    max_order = max(max_order, 4)
    sums = _iterative_power_sums(n, k, q, _symbol_value(s, q), max_order)
    total = qbinomial(n, k, q)
    return ExactMoments(tuple(Fraction(x, total) for x in sums))


def chi2_quantile_wh(dof: int, p: float = 0.999) -> float:
    """Wilson-Hilferty approximation to the chi-square p-quantile."""
    z = NormalDist().inv_cdf(p)
    h = 2.0 / (9.0 * dof)
    return dof * (1.0 - h + z * math.sqrt(h)) ** 3


def chi_square_statistic(observed: Sequence[int], expected: float) -> float:
    obs = np.asarray(observed, dtype=np.float64)
    return float(((obs - expected) ** 2).sum() / expected)


@dataclass(frozen=True)
class UniformityResult:
    statistic: float
    dof: int
    threshold_999: float
    passed: bool

    def as_dict(self) -> dict:
        return {"statistic": self.statistic, "dof": self.dof,
                "threshold_999": self.threshold_999, "pass": self.passed}


def _tally_check(cells: int, trials: int, cap: int):
    if cells > cap:
        raise TooManyCells(f"{cells} cells exceed the cap {cap}")
    if cells < 2:
        raise DomainError("uniformity needs at least two cells")
    if trials < 10 * cells:
        raise TooFewTrials(f"{trials} trials < 10 x {cells} cells")


def _uniformity(counts: np.ndarray, trials: int) -> UniformityResult:
    cells = counts.size
    stat = chi_square_statistic(counts, trials / cells)
    thr = chi2_quantile_wh(cells - 1)
    return UniformityResult(stat, cells - 1, thr, stat < thr)


def chi_square_uniformity(n: int, k: int, q: int, trials: int, rng: RngStream,
                          cap: int = CELL_CAP) -> UniformityResult:
    """Tally ranks of ``trials`` sampled subspaces and test against uniform."""
    cells = qbinomial(n, k, q)
    _tally_check(cells, trials, cap)
    counts = np.zeros(cells, dtype=np.int64)
    for _ in range(trials):
        counts[rank_subspace(random_subspace(n, k, q, rng))] += 1
    return _uniformity(counts, trials)


def chi_square_subset_uniformity(n: int, k: int, trials: int, rng: RngStream,
                                 cap: int = CELL_CAP) -> UniformityResult:
    cells = binomial(n, k)
    _tally_check(cells, trials, cap)
    counts = np.zeros(cells, dtype=np.int64)
    for _ in range(trials):
        counts[rank_subset(random_subset(n, k, rng))] += 1
    return _uniformity(counts, trials)
