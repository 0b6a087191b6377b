"""Generators for the named graph families and the hardness gadget.

Vertex numbering is fixed per family so labelings can be written down:

* paths and cycles: ``0, 1, ..., n-1`` in order;
* stars: centre 0;
* double star ``S_{r,s}``: supports 0 and 1, leaves of 0 are ``2..r+1``,
  leaves of 1 are ``r+2..r+s+1``;
* family F: block ``i`` (1-based) is the path ``4(i-1) .. 4(i-1)+3`` playing
  ``v1 v2 v3 v4``; spine edges join the ``v2`` vertices;
* ``G*``: original vertices keep ``0..n-1``, gadget ``i`` occupies
  ``n+5i .. n+5i+4`` in the order ``a, y, b, c, d``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, build_graph, components, is_tree
from .labeling import Labeling, ParamKind, is_valid


class Shape(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    DOUBLE_STAR = "double_star"
    COMPLETE = "complete"


class ConstructionError(ValueError):
    pass


def path(n: int) -> Graph:
    if n < 1:
        raise ConstructionError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` on ``n`` vertices in total."""
    if n < 2:
        raise ConstructionError(f"star needs n >= 2 vertices in total, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def double_star(r: int, s: int) -> Graph:
    if not 1 <= r <= s:
        raise ConstructionError(f"double star needs 1 <= r <= s, got r={r}, s={s}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(r)]
    edges += [(1, 2 + r + j) for j in range(s)]
    return build_graph(r + s + 2, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise ConstructionError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_plus_pendant(n: int) -> Graph:
    """``K_n`` with one extra vertex ``n`` hung on vertex 0."""
    if n < 2:
        raise ConstructionError(f"needs n >= 2, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)] + [(0, n)]
    return build_graph(n + 1, edges)


def make_shape(shape: Shape | str, **params: int) -> Graph:
    shape = Shape(shape)
    try:
        if shape is Shape.DOUBLE_STAR:
            return double_star(params["r"], params["s"])
        builder = {Shape.PATH: path, Shape.CYCLE: cycle, Shape.STAR: star,
                   Shape.COMPLETE: complete}[shape]
        return builder(params["n"])
    except KeyError as exc:
        raise ConstructionError(f"{shape.value}: missing parameter {exc.args[0]!r}") from None


# ---------------------------------------------------------------------------
# family F

@dataclass(frozen=True)
class FamilyFSpec:
    k: int
    spine_edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def path_spine(cls, k: int) -> "FamilyFSpec":
        return cls(k, tuple((i, i + 1) for i in range(1, k)))

    @classmethod
    def star_spine(cls, k: int) -> "FamilyFSpec":
        return cls(k, tuple((1, i) for i in range(2, k + 1)))


def _spine_is_tree(spec: FamilyFSpec) -> bool:
    if len(spec.spine_edges) != spec.k - 1:
        return False
    try:
        spine = build_graph(spec.k, [(a - 1, b - 1) for a, b in spec.spine_edges])
    except ValueError:
        return False
    return len(components(spine)) == 1


def family_f_build(spec: FamilyFSpec) -> Graph:
    if spec.k < 1:
        raise ConstructionError(f"family F needs k >= 1, got {spec.k}")
    for a, b in spec.spine_edges:
        if not (1 <= a <= spec.k and 1 <= b <= spec.k):
            raise ConstructionError(f"spine edge ({a}, {b}) outside blocks 1..{spec.k}")
    if not _spine_is_tree(spec):
        raise ConstructionError(f"spine {list(spec.spine_edges)} is not a tree on {spec.k} blocks")
    edges = []
    for i in range(spec.k):
        base = 4 * i
        edges += [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]
    edges += [(4 * (a - 1) + 1, 4 * (b - 1) + 1) for a, b in spec.spine_edges]
    return build_graph(4 * spec.k, edges)


def family_f_recognize(g: Graph) -> bool:
    """Is ``g`` a tree built from ``n/4`` copies of ``P_4`` joined at their
    second vertices?"""
    if g.n < 4 or g.n % 4 or not is_tree(g):
        return False
    if g.n == 4:
        return max(g.degrees()) == 2
    deg = g.degrees()
    adj = g.adj
    owner = [-1] * g.n
    hubs = []
    for x in range(g.n):
        leaves = [u for u in adj[x] if deg[u] == 1]
        tails = [u for u in adj[x] if deg[u] == 2
                 and any(deg[w] == 1 for w in adj[u] if w != x)]
        if len(leaves) != 1 or len(tails) != 1:
            continue
        mid = tails[0]
        end = next(w for w in adj[mid] if w != x)
        block = (x, leaves[0], mid, end)
        if any(owner[b] >= 0 for b in block):
            return False
        for b in block:
            owner[b] = x
        hubs.append(x)
    if len(hubs) != g.n // 4 or min(owner) < 0:
        return False
    hubset = set(hubs)
    # every edge between blocks must join two hubs
    return all(owner[u] == owner[v] or (u in hubset and v in hubset) for u, v in g.edges())


# ---------------------------------------------------------------------------
# hardness gadget

@dataclass(frozen=True)
class ReductionMap:
    n: int
    a: tuple[int, ...]
    y: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"n": self.n, "gadgets": [
            {"x": i, "a": self.a[i], "y": self.y[i], "b": self.b[i], "c": self.c[i], "d": self.d[i]}
            for i in range(self.n)]}


def reduce_gstar(g: Graph) -> tuple[Graph, ReductionMap]:
    """Attach a ``K_{1,4}`` (centre ``y_i``, leaves ``a_i b_i c_i d_i``) to every
    vertex ``x_i`` through the edge ``a_i x_i``."""
    if g.n < 1:
        raise ConstructionError("reduction needs a non-empty graph")
    n = g.n
    roles = {r: [] for r in "aybcd"}
    edges = list(g.edges())
    for i in range(n):
        a, y, b, c, d = (n + 5 * i + j for j in range(5))
        for r, v in zip("aybcd", (a, y, b, c, d)):
            roles[r].append(v)
        edges += [(i, a), (a, y), (y, b), (y, c), (y, d)]
    rmap = ReductionMap(n=n, **{r: tuple(vs) for r, vs in roles.items()})
    return build_graph(6 * n, edges), rmap


def lift_drdf(g: Graph, f: Labeling, rmap: ReductionMap) -> Labeling:
    """Extend a DRDF of ``g`` to an MDRDF of ``G*`` of weight ``w(f) + 3n + 1``.

    Each gadget centre gets 3, its leaves 0, except ``b`` of the first gadget,
    which gets 1 and so has no 0-labelled neighbour.
    """
    if f.max_label != 3 or not is_valid(g, f, ParamKind.DRDF):
        raise ConstructionError(f"labeling {f} is not a double Roman dominating function")
    labels = list(f.labels) + [0] * (5 * g.n)
    for i in range(g.n):
        labels[rmap.y[i]] = 3
    labels[rmap.b[0]] = 1
    return Labeling(tuple(labels), 3)


# ---------------------------------------------------------------------------
# sharpness examples

def sharpness_graph(n_cycle: int, t: int, isolated: bool) -> Graph:
    """``C_{n_cycle}`` with ``t`` pendant leaves on every cycle vertex, plus an
    isolated vertex when requested.

    Cycle vertices are ``0..n_cycle-1``; the leaves of cycle vertex ``i`` are
    ``n_cycle + i*t .. n_cycle + i*t + t - 1``; the isolated vertex is last.
    """
    if n_cycle < 3:
        raise ConstructionError(f"cycle length must be >= 3, got {n_cycle}")
    floor = 2 if isolated else 3
    if t < floor:
        raise ConstructionError(f"t must be >= {floor} (isolated={isolated}), got {t}")
    edges = [(i, (i + 1) % n_cycle) for i in range(n_cycle)]
    for i in range(n_cycle):
        edges += [(i, n_cycle + i * t + j) for j in range(t)]
    total = n_cycle * (t + 1) + (1 if isolated else 0)
    return build_graph(total, edges)


def spine_trees(k: int) -> list[FamilyFSpec]:
    """Every labelled tree on blocks ``1..k`` as a spine (Pruefer decoding)."""
    from itertools import product

    if k == 1:
        return [FamilyFSpec(1, ())]
    if k == 2:
        return [FamilyFSpec(2, ((1, 2),))]
    out = []
    for seq in product(range(1, k + 1), repeat=k - 2):
        out.append(FamilyFSpec(k, tuple(sorted(prufer_edges(k, list(seq))))))
    return out


def prufer_edges(k: int, seq: list[int]) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence over labels ``1..k`` into ``k-1`` edges."""
    import heapq

    degree = [1] * (k + 1)
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(1, k + 1) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges
