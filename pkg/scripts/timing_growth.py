"""Measure how exact-arithmetic costs grow with matrix size.

For each size n, draws random dual matrices with small rational entries and
times the rank/index profile, the weak Drazin-type inverse, and the
verification of its defining equations.  Wall-clock medians go to stdout as
a small table.

    python3 scripts/timing_growth.py --sizes 2 4 6 8 --repeats 5
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from dualinv import index_profile, verify, wddi

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))
import support  # noqa: E402


@dataclass(frozen=True)
class RunConfig:
    sizes: tuple[int, ...]
    repeats: int
    seed: int
    bound: int


def parse_args(argv=None) -> RunConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[2, 4, 6, 8])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--bound", type=int, default=9)
    args = parser.parse_args(argv)
    return RunConfig(tuple(args.sizes), args.repeats, args.seed, args.bound)


def timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main(argv=None) -> None:
    config = parse_args(argv)
    rng = random.Random(config.seed)
    print(f"{'n':>4}  {'profile (ms)':>14}  {'weak inv (ms)':>14}  {'verify (ms)':>14}")
    for n in config.sizes:
        profile_times, inverse_times, verify_times = [], [], []
        for _ in range(config.repeats):
            a = support.rand_dual(rng, n, bound=config.bound)
            profile_times.append(timed(lambda: index_profile(a)))
            holder = {}
            inverse_times.append(timed(lambda: holder.setdefault("x", wddi(a))))
            x = holder["x"]
            verify_times.append(timed(lambda: verify(a, x, "wddi-t")))
        row = [
            statistics.median(times) * 1000
            for times in (profile_times, inverse_times, verify_times)
        ]
        print(f"{n:>4}  {row[0]:>14.2f}  {row[1]:>14.2f}  {row[2]:>14.2f}")


if __name__ == "__main__":
    main()
