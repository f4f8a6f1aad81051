"""Compare Monte Carlo moments of the count of 1s with their exact values.

Prints, per (k, repeat), the standardized gap of the sample mean, i.e.
(mean - exact_mean) / sqrt(exact_variance / trials), and the relative
variance error.

    python scripts/estimated_vs_exact.py --q 3 --k 50:55 --n-mult 2 --repeats 3
"""

import argparse
import math

from calabiwilf.experiment import ExperimentSpec, run_experiment


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--k", default="10:14")
    p.add_argument("--n-mult", type=int, default=2)
    p.add_argument("--symbol", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()

    lo, hi = (int(x) for x in args.k.split(":"))
    spec = ExperimentSpec(stat="symbol", symbol=args.symbol, q=args.q, k_values=range(lo, hi + 1),
                          n_mult=args.n_mult, trials=args.trials, repeats=args.repeats, seed=args.seed)
    print(f"{'k':>4} {'rep':>3} {'mean':>12} {'exact':>12} {'z':>7} {'var err':>8} {'kurt':>7} {'exact':>7}")
    for r in run_experiment(spec):
        z = r["gap_mean"] / math.sqrt(r["exact_variance"] / r["trials"])
        verr = r["gap_variance"] / r["exact_variance"]
        print(f"{r['k']:>4} {r['repeat']:>3} {r['mean']:>12.4f} {r['exact_mean']:>12.4f} {z:>7.2f} "
              f"{verr:>8.1%} {r['kurtosis'] or float('nan'):>7.3f} {r['exact_kurtosis'] or float('nan'):>7.3f}")


if __name__ == "__main__":
    main()
