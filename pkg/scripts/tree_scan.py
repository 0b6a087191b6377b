"""Scan every non-isomorphic tree of each order and compare gamma_dRm with 5n/4.

Prints, per order, the number of trees, bound violations, equality cases
outside family F, and family-F trees missing equality.
"""

import argparse

import networkx as nx

from maxdrd.constructions import family_f_recognize
from maxdrd.graph import build_graph
from maxdrd.labeling import ParamKind
from maxdrd.tree_dp import solve_tree, tree_value


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args()

    print("n  trees  over  eq_not_F  F_not_eq")
    for n in range(args.min_n, args.max_n + 1):
        over, eq_not_f, f_not_eq, count = [], 0, 0, 0
        for h in nx.nonisomorphic_trees(n):
            count += 1
            t = build_graph(n, list(h.edges()))
            value = tree_value(t, ParamKind.MDRDF)
            in_f = family_f_recognize(t)
            if 4 * value > 5 * n:
                over.append((t, value))
            eq = 4 * value == 5 * n
            eq_not_f += eq and not in_f
            f_not_eq += in_f and not eq
        print(f"{n:<2} {count:>6} {len(over):>5} {eq_not_f:>9} {f_not_eq:>9}")
        for t, value in over:
            cert = solve_tree(t, ParamKind.MDRDF).certificate
            print(f"   value {value} > {5 * n / 4}: edges {t.edges()} labels {cert}")


if __name__ == "__main__":
    main()
