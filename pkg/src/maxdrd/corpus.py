"""Graph corpora: every small graph up to isomorphism, and seeded random graphs.

Small graphs are grown one vertex at a time.  Each child ``G + v`` (with
``v`` joined to a vertex subset of ``G``) is reduced to a canonical form and
kept only the first time that form is seen.  The canonical form is the
lexicographically least adjacency string over all vertex orders compatible
with a colour-refinement partition, which is exact (not a heuristic hash).
"""

from __future__ import annotations

import heapq
import random
from itertools import combinations, permutations, product
from typing import Iterator

from .graph import Graph, build_graph, is_connected


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement with isomorphism-invariant colour names."""
    colors = [len(a) for a in g.adj]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(certificate, order)``: equal certificates iff isomorphic graphs.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    """
    colors = _refine(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    best_order = None
    pairs = list(combinations(range(g.n), 2))
    for choice in product(*(permutations(cell) for cell in ordered)):
        order = [v for part in choice for v in part]
        bits = tuple(1 if order[j] in g.adj[order[i]] else 0 for i, j in pairs)
        if best is None or bits < best:
            best, best_order = bits, order
    header = tuple(len(cell) for cell in ordered)
    return (g.n,) + header + (best or ()), tuple(best_order or ())


def relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.n, sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges()))


def small_graphs(max_n: int, connected: bool = True) -> dict[int, list[Graph]]:
    """All graphs (or connected graphs) with ``1..max_n`` vertices, one per
    isomorphism class, in canonical labelling and a deterministic order."""
    levels: dict[int, list[Graph]] = {1: [build_graph(1, [])]}
    for n in range(2, max_n + 1):
        seen: dict[tuple, Graph] = {}
        for parent in levels[n - 1]:
            base = parent.edges()
            start = 1 if connected else 0
            for size in range(start, n):
                for subset in combinations(range(n - 1), size):
                    child = build_graph(n, base + [(u, n - 1) for u in subset])
                    cert, order = canonical_form(child)
                    if cert not in seen:
                        seen[cert] = relabel(child, order)
        levels[n] = [seen[c] for c in sorted(seen, key=lambda c: (seen[c].m, c))]
    return {n: gs for n, gs in levels.items() if n <= max_n}


def iter_small_graphs(max_n: int, connected: bool = True) -> Iterator[tuple[str, Graph]]:
    tag = "c" if connected else "g"
    for n, graphs in small_graphs(max_n, connected).items():
        for i, g in enumerate(graphs):
            yield f"{tag}{n}-{i:04d}", g


def prufer_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labelled tree on ``n`` vertices."""
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """A random spanning tree plus each remaining pair with a per-graph
    density drawn uniformly from [0, 1)."""
    tree = prufer_tree(n, rng)
    present = set(tree.edges())
    density = rng.random()
    extra = [(u, v) for u, v in combinations(range(n), 2)
             if (u, v) not in present and rng.random() < density]
    g = build_graph(n, sorted(present) + extra)
    assert is_connected(g)
    return g


def random_trees(n: int, count: int, seed: int) -> list[tuple[str, Graph]]:
    rng = random.Random(f"tree-{n}-{seed}")
    return [(f"t{n}-s{seed}-{i:04d}", prufer_tree(n, rng)) for i in range(count)]


def random_graphs(n: int, count: int, seed: int) -> list[tuple[str, Graph]]:
    rng = random.Random(f"graph-{n}-{seed}")
    return [(f"r{n}-s{seed}-{i:04d}", random_connected_graph(n, rng)) for i in range(count)]
