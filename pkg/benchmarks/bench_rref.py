#!/usr/bin/env python3
"""Compare the compiled row-reduction kernel against the pure-Python one.

Both backends expose the same rref(rows) -> (reduced_rows, pivot_columns)
contract on lists of Fractions, so we can time them side by side in one
process regardless of which backend the package itself picked at import.

Usage:
    python3 benchmarks/bench_rref.py
    python3 benchmarks/bench_rref.py --sizes 40x40 80x120 --repeats 5
"""

import argparse
import random
import time
from fractions import Fraction

from bihomlie import _rref_py, _rrefc
from bihomlie.linalg import BACKEND


def random_matrix(rng, nrows, ncols, density, magnitude):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if rng.random() < density:
                num = rng.randint(-magnitude, magnitude)
                den = rng.randint(1, magnitude)
                row.append(Fraction(num, den))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def copy_rows(rows):
    return [list(r) for r in rows]


def time_backend(fn, rows, repeats):
    best = None
    result = None
    for _ in range(repeats):
        work = copy_rows(rows)
        t0 = time.perf_counter()
        result = fn(work)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def parse_size(text):
    try:
        r, c = text.lower().split("x")
        return int(r), int(c)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"size {text!r} is not of the form ROWSxCOLS"
        ) from None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--sizes",
        nargs="+",
        type=parse_size,
        default=[(20, 20), (40, 40), (60, 90), (100, 100)],
        metavar="RxC",
    )
    ap.add_argument("--density", type=float, default=0.4)
    ap.add_argument("--magnitude", type=int, default=30)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=20260814)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"package backend at import: {BACKEND}")
    print(
        f"{'size':>9}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}"
    )
    for nrows, ncols in args.sizes:
        rows = random_matrix(
            rng, nrows, ncols, args.density, args.magnitude
        )
        tc, res_c = time_backend(_rrefc.rref, rows, args.repeats)
        tp, res_p = time_backend(_rref_py.rref, rows, args.repeats)
        if res_c != res_p:
            raise SystemExit(
                f"backends disagree on a {nrows}x{ncols} input"
            )
        print(
            f"{nrows:>4}x{ncols:<4}  {tc * 1e3:>8.2f}ms  "
            f"{tp * 1e3:>8.2f}ms  {tp / tc:>7.1f}x"
        )


if __name__ == "__main__":
    main()
