"""Command-line interface.

Exit codes: 0 success, 2 usage or domain error, 3 resource cap exceeded.
Seeds default to a fixed constant so runs are reproducible; pass --entropy
to draw a seed from the OS instead (it is echoed to stderr).
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

from . import matrixio
from .codec import rank_subset, rank_subspace, unrank_subset, unrank_subspace
from .echelon import ENUMERATION_CAP, EchelonMatrix, enumerate_all, is_echelon
from .errors import CalabiWilfError, InvalidMatrix
from .exactcount import binomial, qbinomial
from .experiment import COLUMNS, PRESETS, ExperimentSpec, rows_to_csv, rows_to_jsonl, rows_to_text, run_experiment
from .gf import FieldSpec
from .rng import DEFAULT_SEED, RngStream
from .sampler import SubsetSample, random_subset, random_subspace
from .stats import CELL_CAP, MIN_WEIGHT_CAP, chi_square_subset_uniformity, chi_square_uniformity, exact_symbol_moments

EXPERIMENT_HELP = (
    "Output columns (fixed, in order): " + ", ".join(COLUMNS) + ". "
    "Moments use central moments with denominator N, skewness m3/m2^1.5 and "
    "kurtosis m4/m2^2 (normal = 3); empty cells mean undefined (zero variance) "
    "or not applicable (exact_* only exist for --stat symbol)."
)


class _Fail(Exception):
    pass


def _int_range(text: str) -> range:
    """'a:b' or 'a:b:step', inclusive of b."""
    try:
        parts = [int(p) for p in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) == 2:
        parts.append(1)
    if len(parts) != 3 or parts[2] <= 0:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use start:end[:step]")
    return range(parts[0], parts[1] + 1, parts[2])


def _parse_rows(text: str) -> list[list[int]]:
    path = Path(text)
    if path.is_file():
        text = path.read_text()
    rows = [r for r in text.replace("\n", ";").split(";") if r.strip()]
    return [[int(v) for v in r.replace(",", " ").split()] for r in rows]


def _seed(args) -> int:
    if getattr(args, "entropy", False):
        seed = secrets.randbits(63)
        print(f"seed={seed}", file=sys.stderr)
        return seed
    return args.seed


def _emit_matrices(mats, fmt: str) -> str:
    out = []
    for M in mats:
        if not is_echelon(M):
            raise InvalidMatrix("refusing to emit a non-canonical matrix")
        out.append(matrixio.to_json(M) + "\n" if fmt == "json" else matrixio.to_text(M))
    return "".join(out) if fmt == "json" else "\n".join(out)


def _emit_subsets(subsets, fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps({"n": s.n, "k": s.k, "members": list(s.members)}) + "\n" for s in subsets)
    return "".join(" ".join(map(str, s.members)) + "\n" for s in subsets)


def cmd_sample(args) -> str:
    FieldSpec(args.q)
    seed = _seed(args)
    mats = (random_subspace(args.n, args.k, args.q, RngStream(seed, i)) for i in range(args.count))
    return _emit_matrices(mats, args.format)


def cmd_sample_subset(args) -> str:
    seed = _seed(args)
    subs = [random_subset(args.n, args.k, RngStream(seed, i)) for i in range(args.count)]
    return _emit_subsets(subs, args.format)


def cmd_count(args) -> str:
    if args.subsets:
        return f"{binomial(args.n, args.k)}\n"
    FieldSpec(args.q)
    return f"{qbinomial(args.n, args.k, args.q)}\n"


def cmd_enumerate(args) -> str:
    return _emit_matrices(enumerate_all(args.n, args.k, args.q, cap=args.cap), args.format)


def _read_matrix(args) -> EchelonMatrix:
    if args.input:
        text = Path(args.input).read_text()
        mats = matrixio.parse_json_lines(text) if text.lstrip().startswith("{") else matrixio.parse_text(text)
        if len(mats) != 1:
            raise InvalidMatrix(f"expected one matrix, found {len(mats)}")
        return mats[0]
    if args.rows is None or args.q is None:
        raise _Fail("rank needs --q with --rows, or --input")
    rows = _parse_rows(args.rows)
    n = args.n if args.n is not None else (len(rows[0]) if rows else None)
    if n is None:
        raise _Fail("an empty matrix needs --n")
    return EchelonMatrix(rows, args.q, n)


def cmd_rank(args) -> str:
    if args.subset:
        if args.n is None or args.members is None:
            raise _Fail("rank --subset needs --n and --members")
        members = [int(v) for v in args.members.replace(",", " ").split()]
        return f"{rank_subset(members, args.n)}\n"
    return f"{rank_subspace(_read_matrix(args))}\n"


def _rank_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"rank must be a decimal integer, got {text!r}")


def cmd_unrank(args) -> str:
    if args.subset:
        return _emit_subsets([unrank_subset(args.rank, args.n, args.k)], args.format)
    if args.q is None:
        raise _Fail("unrank needs --q (or --subset)")
    return _emit_matrices([unrank_subspace(args.rank, args.n, args.k, args.q)], args.format)


def cmd_exact_moments(args) -> str:
    ex = exact_symbol_moments(args.n, args.k, args.q, args.symbol)
    dec = ex.summary()
    rat = {
        "mean": str(ex.mean),
        "variance": str(ex.variance),
        "skewness_squared": None if ex.skewness_squared is None else str(ex.skewness_squared),
        "kurtosis": None if ex.kurtosis is None else str(ex.kurtosis),
    }
    rec = {"q": args.q, "n": args.n, "k": args.k, "symbol": args.symbol,
           "exact": rat, "decimal": dec, "raw_moments": [str(m) for m in ex.raw[:5]]}
    if args.format == "json":
        return json.dumps(rec) + "\n"
    lines = [f"# symbol {args.symbol} in uniform {args.k}x{args.n} echelon matrices over GF({args.q})",
             "# kurtosis m4/m2^2 (normal = 3); skewness m3/m2^1.5 given exactly as its square"]
    for key, label in (("mean", "mean"), ("variance", "variance"),
                       ("skewness_squared", "skewness^2"), ("kurtosis", "kurtosis")):
        lines.append(f"{label:11s} {rat[key] if rat[key] is not None else 'undefined'}")
    for key in ("mean", "variance", "skewness", "kurtosis"):
        v = dec[key]
        lines.append(f"{key:11s} {'undefined' if v is None else format(v, '.12g')}")
    return "\n".join(lines) + "\n"


def cmd_experiment(args) -> str:
    params = dict(PRESETS[args.preset]) if args.preset else {}
    for key, value in (("stat", args.stat), ("q", args.q), ("k_values", args.k_range),
                       ("n_values", args.n_range), ("symbol", args.symbol)):
        if value is not None:
            params[key] = value
    if args.n_mult is not None or args.n_range is not None:
        params["n_mult"] = args.n_mult
        params["n_values"] = args.n_range
    if args.pattern is not None:
        params["pattern"] = tuple(tuple(r) for r in _parse_rows(args.pattern))
    if "stat" not in params or "q" not in params or "k_values" not in params:
        raise _Fail("experiment needs --stat, --q and --k-range (or --preset)")
    if params.get("n_mult") is None and params.get("n_values") is None:
        raise _Fail("experiment needs --n-mult or --n-range")
    if args.trials is not None:
        params["trials"] = args.trials
    if args.repeats is not None:
        params["repeats"] = args.repeats
    spec = ExperimentSpec(seed=_seed(args), minweight_cap=args.minweight_cap, **params)
    rows = run_experiment(spec, workers=args.workers)
    if args.format == "csv":
        return rows_to_csv(rows)
    if args.format == "tsv":
        return rows_to_csv(rows, "\t")
    if args.format == "json":
        return rows_to_jsonl(rows)
    return rows_to_text(rows)


def cmd_uniformity(args) -> str:
    rng = RngStream(_seed(args), 0)
    if args.subset:
        res = chi_square_subset_uniformity(args.n, args.k, args.trials, rng, cap=args.cap)
    else:
        if args.q is None:
            raise _Fail("uniformity needs --q (or --subset)")
        res = chi_square_uniformity(args.n, args.k, args.q, args.trials, rng, cap=args.cap)
    if args.format == "json":
        return json.dumps(res.as_dict()) + "\n"
    verdict = "pass" if res.passed else "FAIL"
    return (f"statistic {res.statistic:.4f}  dof {res.dof}  "
            f"threshold_999 {res.threshold_999:.4f}  {verdict}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="calabiwilf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, q=True, nk=True, seed=False, fmt=("text", "json")):
        if q:
            sp.add_argument("--q", type=int, required=q == "required", help="prime field order")
        if nk:
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--k", type=int, required=True)
        if seed:
            sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"default {DEFAULT_SEED}")
            sp.add_argument("--entropy", action="store_true", help="seed from the OS instead")
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--output", help="write here instead of stdout")

    sp = sub.add_parser("sample", help="uniform random k-dim subspaces of GF(q)^n")
    common(sp, q="required", seed=True)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("sample-subset", help="uniform random k-subsets of {1..n}")
    common(sp, q=False, seed=True)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_sample_subset)

    sp = sub.add_parser("count", help="number of k-dim subspaces (or k-subsets)")
    common(sp)
    sp.add_argument("--subsets", action="store_true", help="print C(n, k) instead")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="all canonical matrices in rank order")
    common(sp, q="required")
    sp.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("rank", help="rank of a matrix (or subset)")
    common(sp, nk=False)
    sp.add_argument("--n", type=int)
    sp.add_argument("--rows", help="'1 0 2; 0 1 1' or a file path")
    sp.add_argument("--input", help="matrix file in text or JSON form")
    sp.add_argument("--subset", action="store_true")
    sp.add_argument("--members", help="subset members, e.g. '1 3 5'")
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("unrank", help="matrix (or subset) with a given rank")
    common(sp)
    sp.add_argument("--rank", type=_rank_arg, required=True, help="decimal, arbitrary size")
    sp.add_argument("--subset", action="store_true")
    sp.set_defaults(func=cmd_unrank)

    sp = sub.add_parser("exact-moments", help="exact moments of a symbol count")
    common(sp, q="required")
    sp.add_argument("--symbol", type=int, default=1)
    sp.set_defaults(func=cmd_exact_moments)

    sp = sub.add_parser("experiment", help="Monte Carlo moment tables", description=EXPERIMENT_HELP)
    common(sp, nk=False, seed=True, fmt=("text", "csv", "tsv", "json"))
    sp.add_argument("--preset", choices=sorted(PRESETS))
    sp.add_argument("--stat", choices=("symbol", "pattern", "minweight"))
    sp.add_argument("--symbol", type=int)
    sp.add_argument("--pattern", help="'1 0 2; 1 0 2; 1 0 1' or a file path")
    sp.add_argument("--k-range", type=_int_range, help="start:end[:step], end inclusive")
    grid = sp.add_mutually_exclusive_group()
    grid.add_argument("--n-mult", type=int, help="n = m * k")
    grid.add_argument("--n-range", type=_int_range, help="explicit n grid, crossed with k")
    sp.add_argument("--trials", type=int)
    sp.add_argument("--repeats", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--minweight-cap", type=int, default=MIN_WEIGHT_CAP)
    sp.set_defaults(func=cmd_experiment)

    sp = sub.add_parser("uniformity", help="chi-square test of sampler uniformity")
    common(sp, seed=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--subset", action="store_true")
    sp.add_argument("--cap", type=int, default=CELL_CAP)
    sp.set_defaults(func=cmd_uniformity)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CalabiWilfError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
