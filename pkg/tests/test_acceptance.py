"""Exit criteria. Each test records one PASS/FAIL line, shown in the terminal summary."""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from calabiwilf.codec import rank_subspace, unrank_subspace
from calabiwilf.echelon import EchelonMatrix, canonical_form, enumerate_all, is_echelon, pivots_of
from calabiwilf.exactcount import qbinomial
from calabiwilf.experiment import PRESETS, ExperimentSpec, run_experiment
from calabiwilf.rng import RngStream
from calabiwilf.sampler import random_subspace
from calabiwilf.stats import (
    chi_square_subset_uniformity,
    chi_square_uniformity,
    count_symbol,
    exact_symbol_moments,
    min_weight,
    sample_moments,
)
from conftest import ACCEPTANCE_LINES, PRINTED_MATRIX
from oracles import min_weight_by_codewords, nonzero_vector_weight_moments, raw_moments

# 0.999 quantiles of chi-square with 34 and 19 degrees of freedom
CHI2_999_34 = 65.25
CHI2_999_19 = 43.82
UNIFORMITY_SEEDS = (1, 2, 3)
SMALL_GRID = [(q, n, k) for q in (2, 3) for n in range(6) for k in range(n + 1)]


def record(number, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_1_exact_count():
    t = time.perf_counter()
    value = qbinomial(10, 5, 7)
    dt = time.perf_counter() - t
    record(1, value == 1602592475815614015216 and dt < 0.010, f"qbinomial(10,5,7)={value} in {dt * 1e3:.3f} ms")


def test_2_enumeration_oracle():
    t = time.perf_counter()
    bad = []
    for q, n, k in SMALL_GRID:
        mats = list(enumerate_all(n, k, q))
        if len(mats) != qbinomial(n, k, q) or len(set(mats)) != len(mats) or not all(map(is_echelon, mats)):
            bad.append((q, n, k))
    dt = time.perf_counter() - t
    record(2, not bad and dt < 5, f"{len(SMALL_GRID)} instances, failures={bad}, {dt:.2f} s")


def test_3_codec_bijection():
    t = time.perf_counter()
    bad = []
    for q, n, k in SMALL_GRID:
        for r, M in enumerate(enumerate_all(n, k, q)):
            if unrank_subspace(r, n, k, q) != M or rank_subspace(M) != r:
                bad.append((q, n, k, r))
                break
    dt = time.perf_counter() - t
    record(3, not bad and dt < 5, f"failures={bad}, {dt:.2f} s")


def test_4_sampler_uniformity():
    t = time.perf_counter()
    sub = [chi_square_uniformity(4, 2, 2, 70_000, RngStream(s)) for s in UNIFORMITY_SEEDS]
    sets = [chi_square_subset_uniformity(6, 3, 40_000, RngStream(s)) for s in UNIFORMITY_SEEDS]
    dt = time.perf_counter() - t
    sub_ok = sum(r.dof == 34 and r.statistic < CHI2_999_34 for r in sub) >= 2
    set_ok = sum(r.dof == 19 and r.statistic < CHI2_999_19 for r in sets) >= 2
    detail = (f"subspaces chi2={[round(r.statistic, 2) for r in sub]} (<{CHI2_999_34}), "
              f"subsets chi2={[round(r.statistic, 2) for r in sets]} (<{CHI2_999_19}), {dt:.2f} s")
    record(4, sub_ok and set_ok and dt < 30, detail)


def test_5_exact_moments_vs_enumeration():
    t = time.perf_counter()
    bad = []
    for q, n, k in SMALL_GRID:
        mats = list(enumerate_all(n, k, q))
        for s in range(q):
            if exact_symbol_moments(n, k, q, s).raw[:5] != raw_moments(count_symbol(M, s) for M in mats):
                bad.append((q, n, k, s))
    dt = time.perf_counter() - t
    record(5, not bad and dt < 10, f"failures={bad}, {dt:.2f} s")


def test_6_estimated_vs_exact():
    t = time.perf_counter()
    q, k, n = 3, 12, 24
    est = sample_moments([count_symbol(random_subspace(n, k, q, RngStream(2023, i)), 1) for i in range(1000)])
    ex = exact_symbol_moments(n, k, q, 1)
    dt = time.perf_counter() - t
    se = math.sqrt(float(ex.variance) / 1000)
    z = (est.mean - float(ex.mean)) / se
    rel_var = abs(est.variance - float(ex.variance)) / float(ex.variance)
    record(6, abs(z) <= 5 and rel_var <= 0.25 and dt < 10,
           f"mean {est.mean:.4f} vs {float(ex.mean):.4f} (z={z:.2f}); "
           f"variance {est.variance:.3f} vs {float(ex.variance):.3f} ({rel_var:.1%}); {dt:.2f} s")


def test_7_min_weight():
    rng = RngStream(7)
    mismatches = 0
    for i in range(200):
        q = (2, 3)[i % 2]
        n = 1 + (i * 7) % 16
        k = 1 + (i * 5) % min(n, 8 if q == 2 else 6)
        M = random_subspace(n, k, q, rng)
        mismatches += min_weight(M) != min_weight_by_codewords(M.rows(), q)
    t = time.perf_counter()
    grid = ExperimentSpec(trials=200, seed=11, **PRESETS["minweight-gf2"])
    rows = run_experiment(grid)
    dt = time.perf_counter() - t
    worst = 0.0
    for r in rows:
        if r["k"] != 1:
            continue
        n = r["n"]
        mean, var = nonzero_vector_weight_moments(n)
        assert mean == Fraction(n * 2 ** (n - 1), 2**n - 1)
        worst = max(worst, abs(r["mean"] - float(mean)) / math.sqrt(float(var) / 200))
    record(7, mismatches == 0 and dt < 60 and worst <= 5,
           f"oracle mismatches={mismatches}/200; grid {len(rows)} cells in {dt:.2f} s; worst k=1 |z|={worst:.2f}")


def test_8_canonicalization_uniqueness():
    rnd = np.random.default_rng(8)
    rng = RngStream(8)
    t = time.perf_counter()
    failures = 0
    for i in range(1000):
        q = (2, 3, 5, 7)[i % 4]
        n = 1 + i % 7
        k = 1 + (i // 7) % n
        E = random_subspace(n, k, q, rng)
        A = E.entries.copy()
        for _ in range(10):
            a, b = rnd.integers(k, size=2)
            op = rnd.integers(3)
            if op == 0:
                A[[a, b]] = A[[b, a]]
            elif op == 1:
                A[a] = A[a] * rnd.integers(1, q) % q
            elif a != b:
                A[a] = (A[a] + rnd.integers(q) * A[b]) % q
        failures += canonical_form(A, q) != E
    dt = time.perf_counter() - t
    record(8, failures == 0 and dt < 5, f"failures={failures}/1000, {dt:.2f} s")


def test_9_scale():
    t = time.perf_counter()
    M = random_subspace(200, 100, 2, RngStream(9))
    one = time.perf_counter() - t
    assert is_echelon(M)
    t = time.perf_counter()
    rows = run_experiment(ExperimentSpec(trials=1000, seed=9, **PRESETS["ones-gf2-k-by-2k"]))
    full = time.perf_counter() - t
    record(9, one < 0.1 and full < 120 and len(rows) == 51,
           f"one 100x200 draw {one * 1e3:.2f} ms; k=50..100 x 1000 trials {full:.1f} s")


def test_10_printed_fixture():
    M = EchelonMatrix(PRINTED_MATRIX, 7)
    r = rank_subspace(M)
    ok = is_echelon(PRINTED_MATRIX, 7) and pivots_of(M) == (6, 7, 8, 9, 10) and unrank_subspace(r, 10, 5, 7) == M
    record(10, ok, f"pivots={pivots_of(M)}, rank={r}")
