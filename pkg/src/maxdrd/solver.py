"""Exact minimisation over every parameter kind by depth-first branch and bound.

The search assigns labels along a locality-preserving vertex order.  Each
node keeps, per vertex, the count of assigned neighbours carrying each label
and the number of 0-labels in its closed neighbourhood, so that

* clause checks fire as soon as a closed neighbourhood is fully assigned,
* the maximality clause is pruned once every vertex sees a committed 0,
* a packing lower bound (disjoint free closed neighbourhoods, each charged
  the cheapest completion of its centre's residual demand) bounds the rest.

Certificates are the lexicographically smallest optimal labeling; a second
pass fixes vertex ``0, 1, ...`` to the least label that still admits an
optimal completion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .graph import Graph
from .labeling import Labeling, ParamKind, is_valid

DEFAULT_BUDGET = 10**9

_DOM, _ROMAN, _DOUBLE = 1, 2, 3  # base kind encoded by max label


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before optimality was proved.

    ``best_value``/``best_labeling`` hold the best feasible labeling found so
    far, an upper bound on the optimum and never reported as exact.
    """

    def __init__(self, kind: ParamKind, explored: int, best_value: int,
                 best_labeling: Optional[Labeling]):
        super().__init__(f"{kind.value}: node budget exhausted after {explored} nodes; "
                         f"best upper bound {best_value}")
        self.kind = kind
        self.explored = explored
        self.best_value = best_value
        self.best_labeling = best_labeling


@dataclass(frozen=True)
class SolveResult:
    kind: ParamKind
    value: int
    certificate: Labeling
    explored: int


@dataclass(frozen=True)
class OptimalSet:
    kind: ParamKind
    value: int
    labelings: tuple[Labeling, ...]
    overflow: bool


def search_order(g: Graph) -> list[int]:
    """BFS order per component, started at a maximum-degree vertex and
    expanding neighbours by descending degree (ties by id)."""
    seen = [False] * g.n
    order = []
    by_degree = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    for s in by_degree:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g.adj[u], key=lambda v: (-len(g.adj[v]), v)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _trivial(g: Graph, kind: ParamKind) -> tuple[int, ...]:
    # all-2 (double Roman) or all-1: no clause can fail and V_0 is empty
    return (2 if kind.max_label == 3 else 1,) * g.n


class _Search:
    """Mutable search state for one (graph, kind) pair."""

    def __init__(self, g: Graph, kind: ParamKind, budget: int):
        self.g = g
        self.kind = kind
        self.budget = budget
        self.explored = 0
        self.order = search_order(g)
        n = g.n
        pos = [0] * n
        for i, v in enumerate(self.order):
            pos[v] = i
        self.closing: list[list[int]] = [[] for _ in range(n)]
        for v in range(n):
            last = max([pos[v]] + [pos[u] for u in g.adj[v]])
            self.closing[last].append(v)
        self.closed_mask = [(1 << v) | sum(1 << u for u in g.adj[v]) for v in range(n)]

    def run(self, limit: int, strict: bool, fixed: Sequence[Optional[int]],
            on_leaf: Callable[[list[int], int], Optional[int]]) -> None:
        """Visit every completion with weight below ``limit`` (or at most
        ``limit`` when ``strict`` is false).

        ``on_leaf(labels, weight)`` returns a new limit, or ``None`` to stop.
        """
        g = self.g
        adj = g.adj
        n = g.n
        maxl = self.kind.max_label
        maximal = self.kind.maximal
        order = self.order
        closing = self.closing
        closed_mask = self.closed_mask
        domains = [tuple(range(maxl + 1)) if fixed[v] is None else (fixed[v],)
                   for v in range(n)]

        lab = [-1] * n
        c1 = [0] * n
        c2 = [0] * n
        c3 = [0] * n
        zc = [0] * n
        state = {"alive": n, "free": (1 << n) - 1, "limit": limit, "stop": False}

        def residual(v: int) -> int:
            x = lab[v]
            if maxl == _DOUBLE:
                if x == -1:
                    if c3[v] or c2[v] >= 2:
                        return 0
                    return 1 if c2[v] else 2
                if x == 0:
                    if c3[v] or c2[v] >= 2:
                        return 0
                    return 2 if c2[v] else 3
                if x == 1:
                    return 0 if (c2[v] or c3[v]) else 2
                return 0
            if maxl == _ROMAN:
                if x == -1:
                    return 0 if c2[v] else 1
                if x == 0:
                    return 0 if c2[v] else 2
                return 0
            if x == 1:
                return 0
            return 0 if c1[v] else 1

        def lower_bound() -> int:
            """Packing bound on the weight still to be placed; -1 if infeasible."""
            free = state["free"]
            used = 0
            extra = 0
            for v in order:
                r = residual(v)
                if r:
                    m = closed_mask[v] & free
                    if not m:
                        return -1
                    if not m & used:
                        used |= m
                        extra += r
            return extra

        def satisfied(v: int) -> bool:
            x = lab[v]
            if maxl == _DOUBLE:
                if x == 0:
                    return c3[v] > 0 or c2[v] >= 2
                if x == 1:
                    return c2[v] + c3[v] > 0
                return True
            if maxl == _ROMAN:
                return x != 0 or c2[v] > 0
            return x == 1 or c1[v] > 0

        def assign(v: int, x: int) -> None:
            lab[v] = x
            state["free"] &= ~(1 << v)
            if x == 1:
                for u in adj[v]:
                    c1[u] += 1
            elif x == 2:
                for u in adj[v]:
                    c2[u] += 1
            elif x == 3:
                for u in adj[v]:
                    c3[u] += 1
            else:
                zc[v] += 1
                if zc[v] == 1:
                    state["alive"] -= 1
                for u in adj[v]:
                    zc[u] += 1
                    if zc[u] == 1:
                        state["alive"] -= 1

        def unassign(v: int, x: int) -> None:
            lab[v] = -1
            state["free"] |= 1 << v
            if x == 1:
                for u in adj[v]:
                    c1[u] -= 1
            elif x == 2:
                for u in adj[v]:
                    c2[u] -= 1
            elif x == 3:
                for u in adj[v]:
                    c3[u] -= 1
            else:
                zc[v] -= 1
                if zc[v] == 0:
                    state["alive"] += 1
                for u in adj[v]:
                    zc[u] -= 1
                    if zc[u] == 0:
                        state["alive"] += 1

        def dfs(i: int, w: int) -> None:
            self.explored += 1
            if self.explored > self.budget:
                raise _OutOfBudget
            if i == n:
                new_limit = on_leaf(lab, w)
                if new_limit is None:
                    state["stop"] = True
                else:
                    state["limit"] = new_limit
                return
            v = order[i]
            for x in domains[v]:
                assign(v, x)
                ok = all(satisfied(u) for u in closing[i])
                if ok and maximal and state["alive"] == 0:
                    ok = False
                if ok:
                    lb = lower_bound()
                    if lb >= 0:
                        bound = w + x + lb
                        lim = state["limit"]
                        if bound < lim or (not strict and bound == lim):
                            dfs(i + 1, w + x)
                unassign(v, x)
                if state["stop"]:
                    return

        if n == 0:
            on_leaf(lab, 0)
            return
        dfs(0, 0)


class _OutOfBudget(Exception):
    pass


def solve_exact(g: Graph, kind: ParamKind, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact minimum weight of a labeling of ``kind`` on ``g`` (``n >= 1``).

    Raises :class:`SearchBudgetExceeded` if more than ``budget`` search nodes
    are needed; no value is ever reported that was not proved optimal.
    """
    if g.n < 1:
        raise ValueError("solve_exact needs a graph with at least one vertex")
    search = _Search(g, kind, budget)
    best = {"value": sum(_trivial(g, kind)), "labels": list(_trivial(g, kind))}

    def improve(labels: list[int], w: int) -> int:
        best["value"] = w
        best["labels"] = list(labels)
        return w

    def fail() -> SearchBudgetExceeded:
        return SearchBudgetExceeded(kind, search.explored, best["value"],
                                    Labeling(tuple(best["labels"]), kind.max_label))

    try:
        search.run(best["value"], strict=True, fixed=[None] * g.n, on_leaf=improve)
        value = best["value"]
        cert = _lex_min(search, value, best["labels"])
    except _OutOfBudget:
        raise fail() from None
    lab = Labeling(tuple(cert), kind.max_label)
    assert is_valid(g, lab, kind) and lab.weight == value
    return SolveResult(kind=kind, value=value, certificate=lab, explored=search.explored)


def _lex_min(search: _Search, value: int, known: list[int]) -> list[int]:
    n = search.g.n
    fixed: list[Optional[int]] = [None] * n
    current = list(known)
    for v in range(n):
        for x in range(current[v]):
            fixed[v] = x
            found: list[list[int]] = []

            def take(labels: list[int], w: int) -> None:
                found.append(list(labels))
                return None

            search.run(value, strict=False, fixed=fixed, on_leaf=take)
            if found:
                current = found[0]
                break
        fixed[v] = current[v]
    return current


def enumerate_optimal(g: Graph, kind: ParamKind, cap: int = 10**5,
                      budget: int = DEFAULT_BUDGET) -> OptimalSet:
    """All optimal labelings of ``kind`` (at most ``cap``), sorted.

    ``overflow`` is set when more than ``cap`` optima exist; the returned
    tuple then holds only the first ``cap`` found.
    """
    result = solve_exact(g, kind, budget)
    search = _Search(g, kind, budget)
    found: list[tuple[int, ...]] = []
    overflow = False

    def collect(labels: list[int], w: int) -> Optional[int]:
        nonlocal overflow
        if len(found) >= cap:
            overflow = True
            return None
        found.append(tuple(labels))
        return result.value

    try:
        search.run(result.value, strict=False, fixed=[None] * g.n, on_leaf=collect)
    except _OutOfBudget:
        raise SearchBudgetExceeded(kind, search.explored, result.value,
                                   result.certificate) from None
    found.sort()
    return OptimalSet(kind=kind, value=result.value,
                      labelings=tuple(Labeling(t, kind.max_label) for t in found),
                      overflow=overflow)


def brute_force_value(g: Graph, kind: ParamKind) -> int:
    """Plain enumeration of all ``(max_label+1)^n`` labelings; small n only."""
    from itertools import product
    from .labeling import violations

    best = None
    for labels in product(range(kind.max_label + 1), repeat=g.n):
        w = sum(labels)
        if best is not None and w >= best:
            continue
        if not violations(g, Labeling(labels, kind.max_label), kind):
            best = w
    if best is None:
        raise ValueError("no feasible labeling")
    return best
