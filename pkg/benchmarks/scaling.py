# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import argparse

import hitset
from hitset.bench import growth_ratios, run_bench, write_csv

# time ratio per doubling of n + m above which growth counts as quadratic-ish
max_ratio = 2.4


def mean_seconds(records):
    totals = {}
    for r in records:
        t, c = totals.get((r.algo, r.n, r.m), (0.0, 0))
        totals[r.algo, r.n, r.m] = (t + r.seconds, c + 1)
    return {key: t / c for key, (t, c) in totals.items()}


def main():
    parser = argparse.ArgumentParser(description="Solver time over size doublings")
    parser.add_argument("--problem", choices=hitset.model.PROBLEMS, default="unit")
    parser.add_argument("--start", type=int, default=1000, help="first n")
    parser.add_argument("--doublings", type=int, default=3)
    parser.add_argument("--m-ratio", type=float, default=1.0, help="m as a share of n")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--algo", action="append", choices=hitset.solver.ALGOS)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--csv", default=None)
    args = parser.parse_args()

    sizes = []
    for i in range(args.doublings + 1):
        n = args.start << i
        sizes.append((n, max(1, int(n * args.m_ratio))))
    records = run_bench(
        args.problem,
        sizes,
        seed=args.seed,
        repeat=args.repeat,
        algos=tuple(args.algo or ["fast"]),
        workers=args.workers,
    )
    if args.csv:
        write_csv(records, args.csv)

    print("{}\t{}\t{}\t\t{}".format("algo", "n", "m", "seconds"))
    for (algo, n, m), seconds in mean_seconds(records).items():
        print("{}\t{}\t{}\t\t{:.4f}".format(algo, n, m, seconds))

    worst = 0.0
    print("{}\t{}\t\t{}".format("algo", "n+m", "ratio"))
    for algo, before, after, ratio in growth_ratios(records):
        print("{}\t{}->{}\t{:.2f}".format(algo, before, after, ratio))
        worst = max(worst, ratio)
    if worst > max_ratio:
        print("growth above {}x per doubling".format(max_ratio))


if __name__ == "__main__":
    main()
