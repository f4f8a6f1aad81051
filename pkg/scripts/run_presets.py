"""Run the named experiment grids and write one CSV per grid.

    python scripts/run_presets.py                   # all grids, 1000 trials
    python scripts/run_presets.py minweight-gf2 --trials 200
"""

import argparse
import time
from pathlib import Path

from calabiwilf.experiment import PRESETS, ExperimentSpec, rows_to_csv, run_experiment
from calabiwilf.rng import DEFAULT_SEED


def main():
    p = argparse.ArgumentParser()
    p.add_argument("names", nargs="*", help=", ".join(sorted(PRESETS)))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("results"))
    args = p.parse_args()

    unknown = set(args.names) - set(PRESETS)
    if unknown:
        p.error(f"unknown grids: {sorted(unknown)}")
    args.out.mkdir(parents=True, exist_ok=True)
    for name in args.names or sorted(PRESETS):
        spec = ExperimentSpec(trials=args.trials, seed=args.seed, **PRESETS[name])
        t = time.perf_counter()
        rows = run_experiment(spec, workers=args.workers)
        path = args.out / f"{name}.csv"
        path.write_text(rows_to_csv(rows))
        print(f"{name}: {len(rows)} rows in {time.perf_counter() - t:.1f}s -> {path}")


if __name__ == "__main__":
    main()
