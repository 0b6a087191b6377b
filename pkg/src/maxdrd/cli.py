"""Command-line entry point.

Exit status: 0 on success, 1 when a validation or audit check evaluates
false (or a search runs out of budget), 2 on usage or input errors.
Reports go to standard output as JSON unless ``--plain`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import audit as audit_mod
from .closed_forms import ClosedFormQuery, NoClosedForm, closed_form, witness_labeling
from .constructions import (ConstructionError, FamilyFSpec, family_f_build, make_shape,
                            reduce_gstar, sharpness_graph)
from .graph import GraphError, format_graph, read_graph
from .labeling import LabelingError, ParamKind, format_labels, parse_labels, violations
from .solver import DEFAULT_BUDGET, SearchBudgetExceeded, solve_exact
from .tree_dp import NotATreeError, solve_tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_INPUT_ERRORS = (GraphError, LabelingError, ConstructionError, NotATreeError, NoClosedForm,
                 OSError, ValueError)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input: Optional[str] = None
    output: Optional[str] = None
    param: Optional[ParamKind] = None
    plain: bool = False
    seed: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    deterministic: bool = True
    threads: int = 1
    extra: dict = field(default_factory=dict)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# subcommands

def cmd_solve(cfg: RunConfig, args) -> int:
    g = read_graph(cfg.input)
    try:
        if cfg.subcommand == "tree-solve":
            res = solve_tree(g, cfg.param)
        else:
            res = solve_exact(g, cfg.param, cfg.budget)
    except SearchBudgetExceeded as exc:
        out = {"param": cfg.param.value, "complete": False, "upper_bound": exc.best_value,
               "explored": exc.explored}
        _emit(f"{cfg.param.value} incomplete, upper bound {exc.best_value}" if cfg.plain
              else _dump(out), cfg)
        return EXIT_FAIL
    out = {"param": cfg.param.value, "value": res.value, "explored": res.explored, "complete": True}
    if args.certificate:
        out["labels"] = list(res.certificate.labels)
    if cfg.plain:
        text = f"{cfg.param.value} {res.value}"
        if args.certificate:
            text += f"\nlabels {format_labels(res.certificate.labels)}"
        _emit(text, cfg)
    else:
        _emit(_dump(out), cfg)
    return EXIT_OK


def cmd_validate(cfg: RunConfig, args) -> int:
    g = read_graph(cfg.input)
    lab = parse_labels(args.labels, cfg.param.max_label)
    found = violations(g, lab, cfg.param)
    out = {"param": cfg.param.value, "labels": list(lab.labels), "weight": lab.weight,
           "valid": not found,
           "violations": [{"clause": v.clause, "vertex": v.vertex, "detail": v.detail}
                          for v in found]}
    if cfg.plain:
        lines = [f"{'valid' if not found else 'invalid'} {cfg.param.value} weight {lab.weight}"]
        lines += [f"  {v}" for v in found]
        _emit("\n".join(lines), cfg)
    else:
        _emit(_dump(out), cfg)
    return EXIT_OK if not found else EXIT_FAIL


def _spine(args, k: int) -> FamilyFSpec:
    if args.spine_edges:
        pairs = []
        for tok in args.spine_edges.split(","):
            a, _, b = tok.partition("-")
            pairs.append((int(a), int(b)))
        return FamilyFSpec(k, tuple(pairs))
    if args.spine == "star":
        return FamilyFSpec.star_spine(k)
    return FamilyFSpec.path_spine(k)


def cmd_gen(cfg: RunConfig, args) -> int:
    sidecar = None
    if args.shape:
        params = {key: getattr(args, key) for key in ("n", "r", "s") if getattr(args, key) is not None}
        g = make_shape(args.shape, **params)
        sidecar = {"kind": "shape", "shape": args.shape, **params}
    elif args.family_f:
        if args.k is None:
            raise UsageError("--family-f needs --k")
        spec = _spine(args, args.k)
        g = family_f_build(spec)
        sidecar = {"kind": "family_f", "k": spec.k, "spine_edges": [list(e) for e in spec.spine_edges]}
    elif args.reduce:
        base = read_graph(args.reduce)
        g, rmap = reduce_gstar(base)
        sidecar = {"kind": "reduction", **rmap.as_dict()}
    elif args.sharpness:
        if args.cycle is None or args.t is None:
            raise UsageError("--sharpness needs --cycle and --t")
        g = sharpness_graph(args.cycle, args.t, args.isolated)
        sidecar = {"kind": "sharpness", "cycle": args.cycle, "t": args.t, "isolated": args.isolated}
    else:
        raise UsageError("gen needs one of --shape, --family-f, --reduce, --sharpness")
    _emit(format_graph(g), cfg)
    if args.sidecar:
        with open(args.sidecar, "w", encoding="ascii") as fh:
            fh.write(_dump(sidecar) + "\n")
    return EXIT_OK


def cmd_oracle(cfg: RunConfig, args) -> int:
    q = ClosedFormQuery(shape=args.shape, kind=cfg.param, n=args.n or 0, r=args.r or 0,
                        s=args.s or 0, k=args.k or 0)
    value = closed_form(q)
    out = {"shape": q.shape, "param": cfg.param.value, "value": value}
    for key in ("n", "r", "s", "k"):
        if getattr(args, key) is not None:
            out[key] = getattr(args, key)
    if args.witness:
        out["labels"] = list(witness_labeling(q).labels)
    if cfg.plain:
        text = str(value)
        if args.witness:
            text += "\n" + format_labels(out["labels"])
        _emit(text, cfg)
    else:
        _emit(_dump(out), cfg)
    return EXIT_OK


def _plain_checks(report) -> list[str]:
    lines = []
    for c in report.checks:
        if not c.applicable:
            lines.append(f"  {c.id:<10} n/a")
        else:
            lines.append(f"  {c.id:<10} {c.status:<8} lhs={c.lhs} rhs={c.rhs} eq={c.equality}"
                         + (f" predicted={c.predicted_equality}" if c.predicted_equality is not None else "")
                         + (f"  [{c.note}]" if c.note else ""))
    return lines


def cmd_audit(cfg: RunConfig, args) -> int:
    g = read_graph(cfg.input)
    checks = audit_mod.parse_checks(args.checks)
    report = audit_mod.audit(g, checks, graph_id=cfg.input, budget=cfg.budget)
    if cfg.plain:
        params = " ".join(f"{k}={v}" for k, v in report.params.items() if v is not None)
        _emit("\n".join([f"{report.graph}: n={report.n} m={report.m} {params}"]
                        + _plain_checks(report)), cfg)
    else:
        _emit(_dump(report.to_json()), cfg)
    return EXIT_FAIL if report.failures else EXIT_OK


def cmd_audit_corpus(cfg: RunConfig, args) -> int:
    if args.random_n and args.seed is None:
        raise UsageError("--seed is required with --random-n")
    spec = audit_mod.CorpusSpec(max_n=args.max_n, all_graphs_max_n=args.all_max_n,
                                random_n=tuple(args.random_n or ()), count=args.count,
                                seed=args.seed or 0, random_kind=args.random_kind,
                                external=args.corpus)
    checks = audit_mod.parse_checks(args.checks)
    report = audit_mod.audit_corpus(spec, checks, cfg.budget, cfg.threads)
    if cfg.plain:
        lines = [f"graphs audited: {report.graphs}"]
        for cid, t in report.to_json()["checks"].items():
            lines.append(f"  {cid:<10} applicable={t['applicable']} ok={t['ok']} "
                         f"failed={t['failed']} skipped={t['skipped']} equality={t['equality']}")
        for f in report.failures:
            lines.append(f"FAIL {f['check']['id']} on {f['graph']} edges={f['edges']} "
                         f"lhs={f['check']['lhs']} rhs={f['check']['rhs']}")
        _emit("\n".join(lines), cfg)
    else:
        _emit(report.dumps(), cfg)
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _param(choices: Sequence[str]):
    def convert(text: str) -> ParamKind:
        if text.lower() not in choices:
            raise argparse.ArgumentTypeError(f"invalid choice {text!r} (choose from {', '.join(choices)})")
        return ParamKind.parse(text)
    return convert


ALL_PARAMS = [k.value for k in ParamKind]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="maxdrd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="graph file (edge list or DIMACS)")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--plain", action="store_true", help="human-readable output")
        p.add_argument("--json", action="store_true", help="JSON output (the default)")

    p = sub.add_parser("solve", help="exact optimum by branch and bound")
    common(p)
    p.add_argument("--param", required=True, type=_param(ALL_PARAMS))
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--seq", action="store_true", help="sequential search (always the case)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("tree-solve", help="linear-time dynamic program on trees")
    common(p)
    p.add_argument("--param", required=True, type=_param(["drdf", "mdrdf"]))
    p.add_argument("--certificate", action="store_true")

    p = sub.add_parser("validate", help="check a labeling against a parameter kind")
    common(p)
    p.add_argument("--param", required=True, type=_param(ALL_PARAMS))
    p.add_argument("--labels", required=True, help="comma-separated labels, e.g. 2,0,2,1")

    p = sub.add_parser("gen", help="generate a graph in edge-list form")
    common(p, needs_input=False)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--shape", choices=["path", "cycle", "star", "double_star", "complete"])
    mode.add_argument("--family-f", action="store_true")
    mode.add_argument("--reduce", metavar="FILE")
    mode.add_argument("--sharpness", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--spine", choices=["path", "star"], default="path")
    p.add_argument("--spine-edges", help="explicit spine, e.g. 1-2,2-3 (1-based blocks)")
    p.add_argument("--cycle", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--isolated", action="store_true")
    p.add_argument("--sidecar", metavar="FILE", help="write a JSON description (reduction map)")

    p = sub.add_parser("oracle", help="closed-form value for a named family")
    common(p, needs_input=False)
    p.add_argument("--shape", required=True,
                   choices=["path", "cycle", "star", "double_star", "complete", "family_f"])
    p.add_argument("--param", required=True, type=_param(["drdf", "mdrdf"]))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("audit", help="evaluate the inequality catalogue on one graph")
    common(p)
    p.add_argument("--checks", default="all", help="'all' or a list such as B1,B5,P1")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("audit-corpus", help="audit a generated or ingested corpus")
    common(p, needs_input=False)
    p.add_argument("--max-n", type=int, default=7, help="all connected graphs up to this order")
    p.add_argument("--all-max-n", type=int, default=0,
                   help="also disconnected graphs up to this order")
    p.add_argument("--random-n", type=int, nargs="*", help="orders for seeded random graphs")
    p.add_argument("--random-kind", choices=["graph", "tree"], default="graph")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int)
    p.add_argument("--corpus", metavar="FILE", help="extra graphs, edge-list blocks back to back")
    p.add_argument("--checks", default="all")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    return parser


_COMMANDS = {
    "solve": cmd_solve, "tree-solve": cmd_solve, "validate": cmd_validate, "gen": cmd_gen,
    "oracle": cmd_oracle, "audit": cmd_audit, "audit-corpus": cmd_audit_corpus,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(subcommand=args.subcommand, input=getattr(args, "input", None),
                    output=args.output, param=getattr(args, "param", None), plain=args.plain,
                    seed=getattr(args, "seed", None),
                    budget=getattr(args, "budget", DEFAULT_BUDGET),
                    threads=max(1, getattr(args, "threads", 1)))
    try:
        return _COMMANDS[args.subcommand](cfg, args)
    except UsageError as exc:
        print(f"maxdrd {args.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _INPUT_ERRORS as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"maxdrd {args.subcommand}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
