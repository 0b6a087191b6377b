"""Linear-time dynamic program for the double Roman parameters on trees.

The tree is rooted at vertex 0.  For every vertex ``v`` the table maps a
state ``(label, need, witness)`` of the subtree rooted at ``v`` to the
least subtree weight realising it:

``need``
    What the children already supply to ``v``'s own clause.  For label 0 it
    is 0 (no 2/3 child), 1 (exactly one 2-child, no 3-child) or 2
    (satisfied).  For label 1 it is 0 or 2.  Labels 2 and 3 always carry 2.
    The parent must make up any shortfall: a 3 covers everything, a 2 covers
    ``need == 1`` for label 0 and ``need == 0`` for label 1.

``witness``
    ``HAVE``: the subtree already contains a positive vertex all of whose
    neighbours are positive and inside the subtree.
    ``PENDING``: ``v`` is positive, all its children are positive, and ``v``
    becomes such a vertex iff the parent is positive.
    ``NONE``: neither.

Children are merged one at a time into an accumulator
``(count, zero_child, have)`` per parent label, so each merge is constant
work and the whole pass is linear in ``n``.
"""

from __future__ import annotations

from typing import Optional

from .graph import Graph, components
from .labeling import Labeling, ParamKind, is_valid
from .solver import SolveResult

NONE, PENDING, HAVE = 0, 1, 2

_TREE_KINDS = (ParamKind.DRDF, ParamKind.MDRDF)


class NotATreeError(ValueError):
    pass


def _check_tree(g: Graph) -> None:
    if g.n == 0:
        raise NotATreeError("empty graph is not a tree")
    comps = components(g)
    if len(comps) > 1:
        raise NotATreeError(f"graph is disconnected ({len(comps)} components)")
    if g.m != g.n - 1:
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in g.edges():
            ru, rv = find(u), find(v)
            if ru == rv:
                raise NotATreeError(f"edge ({u}, {v}) closes a cycle")
            parent[ru] = rv


def _rooted(g: Graph, root: int = 0) -> tuple[list[int], list[int], list[list[int]]]:
    """Preorder, parent array and ordered child lists, without recursion."""
    parent = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    preorder = []
    seen = [False] * g.n
    seen[root] = True
    stack = [root]
    while stack:
        u = stack.pop()
        preorder.append(u)
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                children[u].append(w)
                stack.append(w)
    return preorder, parent, children


def _child_ok(lc: int, need: int, p: int) -> bool:
    """Can a child in state (lc, need) sit under a parent labelled ``p``?"""
    if lc == 0:
        return need == 2 or (need == 1 and p >= 2) or p == 3
    if lc == 1:
        return need == 2 or p >= 2
    return True


def _summaries(table: dict, track: bool) -> list[dict]:
    """Per parent label, the cheapest child state for each (label, has-witness)."""
    out = []
    for p in range(4):
        best: dict = {}
        for key, wt in table.items():
            lc, need, wit = key
            if not _child_ok(lc, need, p):
                continue
            have = track and (wit == HAVE or (wit == PENDING and p > 0))
            k = (lc, have)
            cur = best.get(k)
            if cur is None or wt < cur[0]:
                best[k] = (wt, key)
        out.append(best)
    return out


def _step(p: int, acc: dict, summary: dict, track: bool, keep_back: bool) -> dict:
    new: dict = {}
    for (cnt, zero, have), entry in acc.items():
        wt = entry[0]
        for (lc, chave), (cw, ckey) in summary.items():
            if p == 0:
                ncnt = 2 if lc == 3 else (min(2, cnt + 1) if lc == 2 else cnt)
                nzero = 0
            elif p == 1:
                ncnt = 1 if (cnt or lc >= 2) else 0
                nzero = 1 if (track and (zero or lc == 0)) else 0
            else:
                ncnt = 0
                nzero = 1 if (track and (zero or lc == 0)) else 0
            key = (ncnt, nzero, 1 if (have or chave) else 0)
            tot = wt + cw
            cur = new.get(key)
            if cur is None or tot < cur[0]:
                new[key] = (tot, (cnt, zero, have), ckey) if keep_back else (tot,)
    return new


def _finish(p: int, acc_key: tuple, track: bool) -> tuple[int, int, int]:
    cnt, zero, have = acc_key
    if p == 0:
        need = cnt
    elif p == 1:
        need = 2 if cnt else 0
    else:
        need = 2
    if not track:
        wit = NONE
    elif have:
        wit = HAVE
    elif p > 0 and not zero:
        wit = PENDING
    else:
        wit = NONE
    return (p, need, wit)


def _vertex_table(child_summaries: list[list[dict]], track: bool) -> dict:
    table: dict = {}
    for p in range(4):
        acc = {(0, 0, 0): (p,)}
        for summ in child_summaries:
            acc = _step(p, acc, summ[p], track, keep_back=False)
            if not acc:
                break
        for key, entry in acc.items():
            state = _finish(p, key, track)
            if state not in table or entry[0] < table[state]:
                table[state] = entry[0]
    return table


def _root_ok(state: tuple[int, int, int], maximal: bool) -> bool:
    p, need, wit = state
    if p <= 1 and need != 2:
        return False
    return (not maximal) or wit in (HAVE, PENDING)


def _best_root(table: dict, maximal: bool) -> tuple[int, tuple]:
    best = None
    for state, wt in table.items():
        if _root_ok(state, maximal) and (best is None or wt < best[0]):
            best = (wt, state)
    assert best is not None
    return best


def _tables(g: Graph, kind: ParamKind):
    if kind not in _TREE_KINDS:
        raise ValueError(f"tree solver handles drdf and mdrdf only, not {kind.value}")
    _check_tree(g)
    track = kind is ParamKind.MDRDF
    preorder, parent, children = _rooted(g)
    tables: list[Optional[dict]] = [None] * g.n
    summaries: list[Optional[list]] = [None] * g.n
    for v in reversed(preorder):
        table = _vertex_table([summaries[c] for c in children[v]], track)
        tables[v] = table
        summaries[v] = _summaries(table, track)
        for c in children[v]:
            summaries[c] = None
    return preorder, children, tables, track


def solve_tree(g: Graph, kind: ParamKind) -> SolveResult:
    """Exact ``gamma_dR`` or ``gamma_dR^m`` of a tree, with a certificate."""
    preorder, children, tables, track = _tables(g, kind)
    value, root_state = _best_root(tables[0], kind.maximal)

    labels = [0] * g.n
    chosen = {0: root_state}
    for v in preorder:
        state = chosen[v]
        p = state[0]
        labels[v] = p
        kids = children[v]
        if not kids:
            continue
        steps = [{(0, 0, 0): (p, None, None)}]
        for c in kids:
            steps.append(_step(p, steps[-1], _summaries(tables[c], track)[p], track,
                               keep_back=True))
        target = tables[v][state]
        key = next(k for k, e in steps[-1].items()
                   if e[0] == target and _finish(p, k, track) == state)
        for j in range(len(kids), 0, -1):
            _, prev, ckey = steps[j][key]
            chosen[kids[j - 1]] = ckey
            key = prev

    cert = Labeling(tuple(labels), 3)
    assert cert.weight == value and is_valid(g, cert, kind)
    return SolveResult(kind=kind, value=value, certificate=cert, explored=g.n)


def tree_value(g: Graph, kind: ParamKind) -> int:
    """Optimum only, skipping certificate reconstruction."""
    _, _, tables, _ = _tables(g, kind)
    return _best_root(tables[0], kind.maximal)[0]


def subtree_values(g: Graph, kind: ParamKind) -> list[int]:
    """Optimum for the subtree hanging below each vertex (tree rooted at 0).

    For the path ``0-1-...-(n-1)`` entry ``i`` is the value of ``P_{n-i}``.
    """
    _, _, tables, _ = _tables(g, kind)
    return [_best_root(t, kind.maximal)[0] for t in tables]
