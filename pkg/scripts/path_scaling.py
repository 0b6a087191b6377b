"""Time the tree solver on long paths and check the closed form n+1."""

import argparse
import time

from maxdrd.constructions import path
from maxdrd.labeling import ParamKind
from maxdrd.tree_dp import solve_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="*", default=[1000, 10000, 30000, 100000])
    args = ap.parse_args()
    for n in args.sizes:
        g = path(n)
        start = time.perf_counter()
        res = solve_tree(g, ParamKind.MDRDF)
        dt = time.perf_counter() - start
        print(f"n={n:<7} value={res.value:<7} expected={n + 1:<7} {dt:6.2f}s  {dt / n * 1e6:.1f} us/vertex")


if __name__ == "__main__":
    main()
