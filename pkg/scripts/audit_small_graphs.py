"""Audit the inequality catalogue on every small connected graph plus seeded
random graphs, and write the corpus report as JSON."""

import argparse
import time

from maxdrd.audit import CorpusSpec, audit_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--all-max-n", type=int, default=5)
    ap.add_argument("--random-n", type=int, nargs="*", default=[8, 9])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="audit_report.json")
    args = ap.parse_args()

    spec = CorpusSpec(max_n=args.max_n, all_graphs_max_n=args.all_max_n,
                      random_n=tuple(args.random_n), count=args.count, seed=args.seed)
    start = time.perf_counter()
    report = audit_corpus(spec, workers=args.workers)
    with open(args.out, "w") as fh:
        fh.write(report.dumps() + "\n")
    print(f"{report.graphs} graphs in {time.perf_counter() - start:.1f}s -> {args.out}")
    for cid, t in report.to_json()["checks"].items():
        print(f"{cid:<10} applicable={t['applicable']:<5} failed={t['failed']:<3} equality={t['equality']}")
    for f in report.failures:
        print("FAIL", f["check"]["id"], f["graph"], f["edges"])


if __name__ == "__main__":
    main()
