#!/usr/bin/env python3
"""Occurrence-sweep benchmark on generated corpora.

For each alphabet size, builds random texts of length n containing an
exact number of embedded pattern occurrences and races the selected
matchers over the sweep.  Desk-scale defaults finish in well under a
minute:

    python3 scripts/occ_sweep.py --out occ_sweep.csv
"""

import argparse
import sys

from qgramsearch import ALGORITHMS, BenchSpec, EmbedSource, emit_report, \
    run_benchmark


def _ints(text):
    return tuple(int(part) for part in text.split(",") if part)


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="occurrence-sweep benchmark on generated corpora")
    parser.add_argument("--n", type=int, default=400_000)
    parser.add_argument("--sigma", type=_ints, default=(4, 95),
                        help="comma list of alphabet sizes")
    parser.add_argument("--occ", type=_ints, default=(0, 128, 1024, 8192),
                        help="comma list of embedded occurrence counts")
    parser.add_argument("--algos", default="all",
                        help="comma list of algorithms, or 'all'")
    parser.add_argument("--q", type=_ints, default=(3,))
    parser.add_argument("--m", type=_ints, default=(8,))
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("csv", "markdown"), default="csv")
    parser.add_argument("--out", default="-", help="output path, '-' = stdout")
    args = parser.parse_args(argv)

    algos = ALGORITHMS if args.algos == "all" else \
        tuple(part for part in args.algos.split(",") if part)
    rows = []
    for sigma in args.sigma:
        rows.extend(run_benchmark(BenchSpec(
            source=EmbedSource(n=args.n, sigma=sigma, occs=args.occ),
            algorithms=algos, qs=args.q, pattern_lengths=args.m,
            repetitions=args.reps, trials=args.trials, seed=args.seed)))
    report = emit_report(rows, format=args.format)
    if args.out == "-":
        sys.stdout.write(report)
    else:
        with open(args.out, "w") as fh:
            fh.write(report)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
