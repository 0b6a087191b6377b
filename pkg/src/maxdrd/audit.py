"""Machine-checks of the inequality catalogue relating the six parameters.

Each check has a hypothesis on the graph.  A check is evaluated only when its
hypothesis holds; otherwise it is reported as not applicable.  If a
parameter it needs cannot be computed within budget it is reported as
skipped.  A check that is evaluated and fails is a hard audit failure.

Check ids
---------
B1   connected: gamma_dR <= gamma_dRm, equality characterised via optimal DRDFs
B2   any graph: gamma_dRm <= 2 gamma_mR, equality iff edgeless
B3   connected, n >= 2: gamma_dRm <= 2 gamma_mR - 1, equality iff K_2
B4   connected, n >= 2, not complete: gamma_dRm <= 2 gamma_mR - 2
B5   any graph: gamma_mR < gamma_dRm
B6   any graph: gamma_m <= gamma_dRm <= 3 gamma_m
B7   any graph: gamma_m + 1 <= gamma_dRm <= 3 gamma_m - 1
B8   connected, n >= 2: gamma_dRm <= 3 gamma_m - 2
B9   connected, n >= 2: gamma_dRm <= gamma_dR + delta
B10  connected, diameter >= 4: gamma_dRm <= 2 (n - delta)
B11  tree, n >= 2: gamma_dR <= gamma_dRm <= gamma_dR + 1
B12  tree, n >= 4: gamma_dRm <= 5n/4, equality iff family F
B13  tree, n >= 3: gamma_dR <= 5n/4, equality iff family F
P1   connected: in every optimal MDRDF each 3-vertex has a private 0-neighbour
     with respect to the vertices labelled 2 or 3
P2   connected: in every optimal MDRDF with a 0, some vertex labelled 1 or 2
     has no 0-neighbour

Two-sided checks are split into ``.lower`` and ``.upper`` records.
Disconnected graphs are audited on B2, B5, B6 and B7 only.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .constructions import family_f_recognize
from .graph import Graph, structure
from .labeling import ALL_KINDS, Labeling, ParamKind
from .solver import DEFAULT_BUDGET, SearchBudgetExceeded, enumerate_optimal, solve_exact
from .tree_dp import tree_value

CHECK_IDS = ("B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10",
             "B11", "B12", "B13", "P1", "P2")
ANY_GRAPH_CHECKS = {"B2", "B5", "B6", "B7"}

# enumeration caps: characterisations over all optimal functions are only
# honest while the optimal set is fully listed
B1_ENUM_CAP = 10**4
PROP1_ENUM_CAP = 10**5


class _Skip(Exception):
    pass


@dataclass
class CheckResult:
    id: str
    applicable: bool
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    holds: Optional[bool] = None
    equality: Optional[bool] = None
    predicted_equality: Optional[bool] = None
    status: str = "n/a"
    note: str = ""

    def to_json(self) -> dict:
        return {k: _num(v) for k, v in asdict(self).items()}


def _num(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else float(v)
    return v


@dataclass
class BoundReport:
    graph: str
    n: int
    m: int
    edges: list
    params: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> dict:
        return {"graph": self.graph, "n": self.n, "m": self.m, "edges": self.edges,
                "params": self.params, "checks": [c.to_json() for c in self.checks]}


class _Params:
    """Lazily computed parameter values for one graph."""

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.tree = g.n >= 1 and g.m == g.n - 1 and structure(g).connected
        self.values: dict[ParamKind, Optional[int]] = {}
        self.failed: set[ParamKind] = set()
        self.optimal: dict[ParamKind, object] = {}

    def __getitem__(self, kind: ParamKind) -> int:
        if kind in self.failed:
            raise _Skip(f"{kind.value} over budget")
        if kind not in self.values:
            try:
                if self.tree and kind in (ParamKind.DRDF, ParamKind.MDRDF):
                    self.values[kind] = tree_value(self.g, kind)
                else:
                    self.values[kind] = solve_exact(self.g, kind, self.budget).value
            except SearchBudgetExceeded:
                self.failed.add(kind)
                raise _Skip(f"{kind.value} over budget") from None
        return self.values[kind]

    def optima(self, kind: ParamKind, cap: int):
        key = (kind, cap)
        if key not in self.optimal:
            try:
                self.optimal[key] = enumerate_optimal(self.g, kind, cap, self.budget)
            except SearchBudgetExceeded:
                self.optimal[key] = None
        res = self.optimal[key]
        if res is None:
            raise _Skip(f"enumerating optimal {kind.value} over budget")
        return res

    def as_dict(self) -> dict:
        return {k.symbol: self.values.get(k) for k in ALL_KINDS}


DR, DRM = ParamKind.DRDF, ParamKind.MDRDF
MR, GM = ParamKind.MRDF, ParamKind.MAX_DOM


def _b1_predicted(g: Graph, optima: Sequence[Labeling], delta: int) -> bool:
    if g.n == 1:
        return True
    deg = g.degrees()
    for f in optima:
        lab = f.labels
        if delta == 1:
            for v in range(g.n):
                if deg[v] == 1 and lab[v] == 1 and lab[g.adj[v][0]] == 2:
                    return True
        if delta == 2:
            for v in range(g.n):
                if deg[v] == 2 and lab[v] == 1 and any(lab[u] == 1 for u in g.adj[v]):
                    return True
    return False


def _prop1_violations(g: Graph, optima: Sequence[Labeling]) -> tuple[int, int]:
    """Counts of optimal MDRDFs violating the private-neighbour property and
    the V_0-does-not-dominate-V_1-and-V_2 property."""
    bad_p1 = bad_p2 = 0
    for f in optima:
        lab = f.labels
        heavy = {v for v in range(g.n) if lab[v] >= 2}
        ok1 = True
        for v in range(g.n):
            if lab[v] != 3:
                continue
            if not any(lab[u] == 0 and {w for w in g.adj[u] if w in heavy} == {v}
                       for u in g.adj[v]):
                ok1 = False
                break
        bad_p1 += not ok1
        if 0 in lab:
            mids = [v for v in range(g.n) if lab[v] in (1, 2)]
            if all(any(lab[u] == 0 for u in g.adj[v]) for v in mids):
                bad_p2 += 1
    return bad_p1, bad_p2


def _want(selected: Optional[Iterable[str]]) -> Callable[[str], bool]:
    if selected is None:
        return lambda cid: True
    wanted = set(selected)
    unknown = wanted - set(CHECK_IDS)
    if unknown:
        raise ValueError(f"unknown check id(s): {', '.join(sorted(unknown))}")
    return lambda cid: cid in wanted


def parse_checks(text: str) -> Optional[list[str]]:
    if text.strip().lower() == "all":
        return None
    ids = [t.strip().upper() for t in text.split(",") if t.strip()]
    _want(ids)
    return ids


def audit(g: Graph, checks: Optional[Iterable[str]] = None, graph_id: str = "G",
          budget: int = DEFAULT_BUDGET) -> BoundReport:
    """Evaluate the selected checks (all when ``checks`` is None) on ``g``."""
    if g.n < 1:
        raise ValueError("audit needs a graph with at least one vertex")
    want = _want(checks)
    st = structure(g)
    P = _Params(g, budget)
    n, delta = g.n, st.min_degree
    connected = st.connected
    tree = P.tree
    complete = g.m == n * (n - 1) // 2
    results: list[CheckResult] = []

    def run(cid: str, hyp: bool, body: Callable[[], CheckResult]) -> None:
        if not want(cid.split(".")[0]):
            return
        if cid.split(".")[0] not in ANY_GRAPH_CHECKS and not connected:
            hyp = False
        if not hyp:
            results.append(CheckResult(cid, applicable=False))
            return
        try:
            res = body()
        except _Skip as exc:
            res = CheckResult(cid, applicable=True, status="skipped", note=str(exc))
        results.append(res)

    def leq(cid: str, lhs, rhs, predicted: Optional[bool] = None, note: str = "") -> CheckResult:
        holds = lhs <= rhs
        eq = lhs == rhs
        if predicted is not None:
            holds = holds and predicted == eq
        return CheckResult(cid, True, lhs, rhs, holds, eq, predicted,
                           "ok" if holds else "fail", note)

    def b1() -> CheckResult:
        lhs, rhs = P[DR], P[DRM]
        try:
            opt = P.optima(DR, B1_ENUM_CAP)
        except _Skip as exc:
            return leq("B1", lhs, rhs, note=f"characterisation skipped: {exc}")
        if opt.overflow:
            return leq("B1", lhs, rhs, note="characterisation skipped: too many optimal DRDFs")
        return leq("B1", lhs, rhs, _b1_predicted(g, opt.labelings, delta))

    run("B1", connected, b1)
    run("B2", True, lambda: leq("B2", P[DRM], 2 * P[MR], predicted=g.m == 0))
    run("B3", connected and n >= 2,
        lambda: leq("B3", P[DRM], 2 * P[MR] - 1, predicted=sorted(g.degrees()) == [1, 1]))
    run("B4", connected and n >= 2 and not complete, lambda: leq("B4", P[DRM], 2 * P[MR] - 2))

    def b5() -> CheckResult:
        lhs, rhs = P[MR], P[DRM]
        holds = lhs < rhs
        return CheckResult("B5", True, lhs, rhs, holds, lhs == rhs, None, "ok" if holds else "fail")

    run("B5", True, b5)
    run("B6.lower", True, lambda: leq("B6.lower", P[GM], P[DRM]))
    run("B6.upper", True, lambda: leq("B6.upper", P[DRM], 3 * P[GM]))
    run("B7.lower", True, lambda: leq("B7.lower", P[GM] + 1, P[DRM]))
    run("B7.upper", True, lambda: leq("B7.upper", P[DRM], 3 * P[GM] - 1))
    run("B8", connected and n >= 2, lambda: leq("B8", P[DRM], 3 * P[GM] - 2))
    run("B9", connected and n >= 2, lambda: leq("B9", P[DRM], P[DR] + delta))
    run("B10", connected and (st.diameter or 0) >= 4, lambda: leq("B10", P[DRM], 2 * (n - delta)))
    run("B11.lower", tree and n >= 2, lambda: leq("B11.lower", P[DR], P[DRM]))
    run("B11.upper", tree and n >= 2, lambda: leq("B11.upper", P[DRM], P[DR] + 1))
    five_quarters = Fraction(5 * n, 4)
    run("B12", tree and n >= 4,
        lambda: leq("B12", P[DRM], five_quarters, predicted=family_f_recognize(g)))
    run("B13", tree and n >= 3,
        lambda: leq("B13", P[DR], five_quarters, predicted=family_f_recognize(g)))

    def prop1(cid: str) -> CheckResult:
        opt = P.optima(DRM, PROP1_ENUM_CAP)
        bad = _prop1_violations(g, opt.labelings)[0 if cid == "P1" else 1]
        note = f"{len(opt.labelings)} optimal MDRDFs examined"
        if opt.overflow:
            note += " (truncated at cap)"
        return CheckResult(cid, True, bad, 0, bad == 0, None, None,
                           "ok" if bad == 0 else "fail", note)

    run("P1", connected, lambda: prop1("P1"))
    run("P2", connected, lambda: prop1("P2"))

    return BoundReport(graph=graph_id, n=g.n, m=g.m, edges=[list(e) for e in g.edges()],
                       params=P.as_dict(), checks=results)


# ---------------------------------------------------------------------------
# corpus runs

@dataclass
class CheckTally:
    applicable: int = 0
    ok: int = 0
    failed: int = 0
    skipped: int = 0
    equality: int = 0


@dataclass
class CorpusReport:
    sources: list
    graphs: int = 0
    tallies: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, report: BoundReport) -> None:
        self.graphs += 1
        for c in report.checks:
            t = self.tallies.setdefault(c.id, CheckTally())
            if not c.applicable:
                continue
            t.applicable += 1
            if c.status == "skipped":
                t.skipped += 1
                continue
            if c.status == "fail":
                t.failed += 1
                self.failures.append({"graph": report.graph, "edges": report.edges,
                                      "params": report.params, "check": c.to_json()})
            else:
                t.ok += 1
            if c.equality:
                t.equality += 1

    def to_json(self) -> dict:
        return {"sources": self.sources, "graphs": self.graphs,
                "checks": {k: asdict(self.tallies[k]) for k in sorted(self.tallies, key=_check_key)},
                "failures": self.failures, "ok": self.ok}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _check_key(cid: str):
    head, _, tail = cid.partition(".")
    return (head[0], int(head[1:]), tail)


def _audit_job(args):
    gid, g, checks, budget = args
    return audit(g, checks, gid, budget)


def audit_many(graphs: Iterable[tuple[str, Graph]], checks: Optional[Sequence[str]] = None,
               budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[BoundReport]:
    """Audit every ``(id, graph)``; the result is sorted by graph id."""
    jobs = [(gid, g, None if checks is None else list(checks), budget) for gid, g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_audit_job, jobs, chunksize=16))
    else:
        reports = [_audit_job(j) for j in jobs]
    return sorted(reports, key=lambda r: r.graph)


@dataclass(frozen=True)
class CorpusSpec:
    """Which graphs an ``audit_corpus`` run covers.

    ``max_n`` selects every connected graph up to that order;
    ``all_graphs_max_n`` additionally includes disconnected graphs up to that
    order; ``random_n`` orders get ``count`` seeded random connected graphs
    (or trees when ``random_kind == "tree"``).
    """
    max_n: int = 7
    all_graphs_max_n: int = 0
    random_n: tuple[int, ...] = ()
    count: int = 500
    seed: int = 0
    random_kind: str = "graph"
    external: Optional[str] = None

    def describe(self) -> list:
        out = []
        if self.max_n:
            out.append({"kind": "connected-exhaustive", "max_n": self.max_n})
        if self.all_graphs_max_n:
            out.append({"kind": "all-exhaustive", "max_n": self.all_graphs_max_n})
        if self.random_n:
            out.append({"kind": f"random-{self.random_kind}", "n": list(self.random_n),
                        "count": self.count, "seed": self.seed})
        if self.external:
            out.append({"kind": "external", "path": self.external})
        return out


def corpus_graphs(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    from .corpus import iter_small_graphs, random_graphs, random_trees
    from .graph import parse_graph_list

    graphs: list[tuple[str, Graph]] = []
    if spec.max_n:
        graphs += list(iter_small_graphs(spec.max_n, connected=True))
    if spec.all_graphs_max_n:
        graphs += [(gid, g) for gid, g in iter_small_graphs(spec.all_graphs_max_n, connected=False)
                   if not structure(g).connected]
    for n in spec.random_n:
        maker = random_trees if spec.random_kind == "tree" else random_graphs
        graphs += maker(n, spec.count, spec.seed)
    if spec.external:
        with open(spec.external, encoding="ascii") as fh:
            ext = parse_graph_list(fh.read())
        graphs += [(f"x-{i:05d}", g) for i, g in enumerate(ext)]
    return graphs


def audit_corpus(spec: CorpusSpec, checks: Optional[Sequence[str]] = None,
                 budget: int = DEFAULT_BUDGET, workers: int = 1) -> CorpusReport:
    report = CorpusReport(sources=spec.describe())
    for r in audit_many(corpus_graphs(spec), checks, budget, workers):
        report.add(r)
    return report
