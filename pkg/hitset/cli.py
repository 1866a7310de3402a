# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import argparse
import logging
import sys

from . import exceptions
from .bench import growth_ratios, parse_sizes, run_bench, write_csv
from .generate import GenParams, generate
from .io import (
    format_solution,
    read_instance,
    read_solution,
    write_duals,
    write_instance,
    write_solution,
)
from .model import PROBLEMS
from .oracle import verify
from .selftest import run_selftest
from .solver import ALGOS, SolveStats, solve

logger = logging.getLogger("hitset")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def cmd_solve(args):
    instance = read_instance(args.input)
    stats = SolveStats()
    solution = solve(instance, algo=args.algo, stats=stats)
    if args.emit_duals:
        if stats.duals is None:
            print(
                "no dual instance for %s with %s" % (instance.problem, stats.algo),
                file=sys.stderr,
            )
            return EXIT_USAGE
        write_duals(stats.duals, args.emit_duals)
    if args.output:
        write_solution(solution, args.output)
    else:
        sys.stdout.write(format_solution(solution))
    if args.stats:
        for key, value in stats.as_row().items():
            print("%s %s" % (key, value))
    return EXIT_OK


def cmd_gen(args):
    params = GenParams(
        args.problem,
        args.n,
        args.m,
        seed=args.seed,
        wmax=args.wmax,
        ensure_hittable=args.ensure_hittable,
        sides=args.sides,
    )
    write_instance(generate(params), args.out)
    return EXIT_OK


def cmd_verify(args):
    ok = verify(read_instance(args.input), read_solution(args.solution))
    print("ok" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_bench(args):
    records = run_bench(
        args.problem,
        parse_sizes(args.sizes),
        seed=args.seed,
        repeat=args.repeat,
        algos=tuple(args.algo or ["fast"]),
    )
    write_csv(records, args.csv)
    for algo, before, after, ratio in growth_ratios(records):
        print("%s\t%d -> %d\t%.2fx" % (algo, before, after, ratio))
    return EXIT_OK


def cmd_selftest(args):
    report = run_selftest(args.trials, args.seed, args.max_n, args.max_m)
    for message in report.messages:
        print(message)
    print("%d trials, %d disagreements" % (report.trials, report.disagreements))
    return EXIT_OK if report.ok else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hitset", description="Exact minimum-weight hitting sets"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--emit-duals", metavar="FILE")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a random instance file")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--wmax", type=int, default=9)
    p.add_argument("--ensure-hittable", action="store_true")
    p.add_argument("--sides", choices=("lower", "upper", "mixed"), default="mixed")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a solution file")
    p.add_argument("--input", required=True)
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time solvers over instance sizes")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--sizes", required=True, help="comma separated N or NxM")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--csv", required=True)
    p.add_argument("--algo", choices=ALGOS, action="append")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="cross-check solvers on random instances")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-m", type=int, default=10)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except exceptions.HitsetInvariantError:
        raise
    except (exceptions.HitsetError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
