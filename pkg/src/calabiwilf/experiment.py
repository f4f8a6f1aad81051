"""Monte Carlo experiment grids over random echelon matrices.

Each (k, n, repeat) cell runs ``trials`` independent draws; trial t of that
cell uses ``RngStream(seed, (k, n, repeat, t))``, so results do not depend on
execution order or on the number of worker processes.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError
from .gf import FieldSpec
from .rng import DEFAULT_SEED, RngStream
from .sampler import random_subspace
from .stats import count_pattern, count_symbol, exact_symbol_moments, min_weight, sample_moments

STATS = ("symbol", "pattern", "minweight")

COLUMNS = (
    "stat", "q", "k", "n", "repeat", "trials",
    "mean", "variance", "skewness", "kurtosis",
    "exact_mean", "exact_variance", "exact_skewness", "exact_kurtosis",
    "gap_mean", "gap_variance", "gap_skewness", "gap_kurtosis",
)

# named grids for the `experiment --preset` option
PRESETS = {
    "ones-gf2-k-by-2k": dict(stat="symbol", symbol=1, q=2, k_values=range(50, 101), n_mult=2),
    "pattern-gf3-k-by-2k": dict(stat="pattern", pattern=((1, 0, 2), (1, 0, 2), (1, 0, 1)), q=3,
                                k_values=range(50, 61), n_mult=2),
    "ones-gf3-vs-exact": dict(stat="symbol", symbol=1, q=3, k_values=range(50, 56), n_mult=2, repeats=3),
    "ones-gf2-k-by-3k": dict(stat="symbol", symbol=1, q=2, k_values=range(100, 111), n_mult=3, repeats=3),
    "minweight-gf2": dict(stat="minweight", q=2, k_values=range(1, 6), n_values=range(10, 101, 10)),
}


@dataclass
class ExperimentSpec:
    stat: str
    q: int
    k_values: Sequence[int]
    n_mult: int | None = None
    n_values: Sequence[int] | None = None
    trials: int = 1000
    repeats: int = 1
    seed: int = DEFAULT_SEED
    symbol: int = 1
    pattern: tuple[tuple[int, ...], ...] | None = None
    minweight_cap: int = 2**24
    exact: bool = True

    def __post_init__(self):
        if self.stat not in STATS:
            raise DomainError(f"unknown statistic {self.stat!r}; choose from {STATS}")
        FieldSpec(self.q)
        if (self.n_mult is None) == (self.n_values is None):
            raise DomainError("give exactly one of n_mult and n_values")
        if self.trials < 1 or self.repeats < 1:
            raise DomainError("trials and repeats must be positive")
        if self.stat == "pattern" and not self.pattern:
            raise DomainError("pattern statistic needs a pattern")
        if self.stat == "symbol" and not 0 <= self.symbol < self.q:
            raise DomainError(f"symbol {self.symbol} is not in GF({self.q})")
        self.k_values = list(self.k_values)
        if self.n_values is not None:
            self.n_values = list(self.n_values)

    def cells(self) -> list[tuple[int, int, int]]:
        out = []
        for k in self.k_values:
            ns = [self.n_mult * k] if self.n_mult is not None else self.n_values
            for n in ns:
                if not 0 <= k <= n:
                    raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
                for rep in range(1, self.repeats + 1):
                    out.append((k, n, rep))
        return out


def statistic_values(spec: ExperimentSpec, k: int, n: int, repeat: int) -> list[int]:
    values = []
    for t in range(spec.trials):
        M = random_subspace(n, k, spec.q, RngStream(spec.seed, (k, n, repeat, t)))
        if spec.stat == "symbol":
            values.append(count_symbol(M, spec.symbol))
        elif spec.stat == "pattern":
            values.append(count_pattern(M, spec.pattern))
        else:
            values.append(min_weight(M, cap=spec.minweight_cap))
    return values


def _run_cell(args) -> dict:
    spec, (k, n, repeat) = args
    est = sample_moments(statistic_values(spec, k, n, repeat))
    row = dict.fromkeys(COLUMNS)
    row.update(stat=spec.stat, q=spec.q, k=k, n=n, repeat=repeat, trials=spec.trials,
               mean=est.mean, variance=est.variance, skewness=est.skewness, kurtosis=est.kurtosis)
    if spec.stat == "symbol" and spec.exact:
        ex = exact_symbol_moments(n, k, spec.q, spec.symbol).summary()
        for name, value in ex.items():
            row[f"exact_{name}"] = value
            if value is not None and row[name] is not None:
                row[f"gap_{name}"] = row[name] - value
    return row


def run_experiment(spec: ExperimentSpec, workers: int = 1) -> list[dict]:
    """One row per (k, n, repeat); see COLUMNS for the fixed column set."""
    jobs = [(spec, cell) for cell in spec.cells()]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, jobs))
    return [_run_cell(job) for job in jobs]


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows: list[dict], delimiter: str = ",") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in COLUMNS])
    return buf.getvalue()


def rows_to_jsonl(rows: list[dict]) -> str:
    return "".join(json.dumps({c: r[c] for c in COLUMNS}) + "\n" for r in rows)


def rows_to_text(rows: list[dict]) -> str:
    head = ("moments: central, denominator N; skewness m3/m2^1.5; "
            "kurtosis m4/m2^2 (normal = 3); blank = undefined")
    cols = [c for c in COLUMNS if any(r[c] is not None for r in rows)] or list(COLUMNS)
    table = [cols] + [[(f"{r[c]:.6g}" if isinstance(r[c], float) else _fmt(r[c])) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    lines = ["# " + head]
    lines += ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
    return "\n".join(lines) + "\n"
