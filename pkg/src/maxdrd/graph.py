"""Immutable simple graphs on dense 0-based vertex ids, plus edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, duplicates, bad ids)."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple undirected graph on vertices ``0..n-1``.

    Self-loops, repeated edges (in either orientation) and out-of-range ids
    are rejected with a :class:`GraphError` naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}): vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}): self-loop")
        if v in nbrs[u]:
            raise GraphError(f"edge ({u}, {v}): duplicate edge")
        nbrs[u].add(v)
        nbrs[v].add(u)
        m += 1
    return Graph(n=n, adj=tuple(tuple(sorted(s)) for s in nbrs), m=m)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled in the given order.

    Returns the new graph and the list mapping new ids back to old ones.
    """
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u in vertices for v in g.adj[u]
             if v in index and index[u] < index[v]]
    return build_graph(len(vertices), edges), list(vertices)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


@dataclass(frozen=True)
class Structure:
    min_degree: int
    max_degree: int
    connected: bool
    diameter: Optional[int]
    components: tuple[tuple[int, ...], ...]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    stack.append(w)
        parts.append(tuple(sorted(part)))
    return tuple(parts)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def diameter(g: Graph) -> Optional[int]:
    """All-pairs BFS diameter, or ``None`` for empty/disconnected graphs."""
    if not is_connected(g):
        return None
    return max(max(bfs_distances(g, s)) for s in range(g.n))


def structure(g: Graph) -> Structure:
    degs = g.degrees()
    comps = components(g)
    connected = g.n > 0 and len(comps) == 1
    return Structure(
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        connected=connected,
        diameter=diameter(g) if connected else None,
        components=comps,
    )


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def has_isolated_vertex(g: Graph) -> bool:
    return any(len(a) == 0 for a in g.adj)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# edge-list I/O

def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c ") or line == "c":
            continue
        rows.append(line.split())
    return rows


def _parse_rows(rows: list[list[str]]) -> Graph:
    if not rows:
        raise GraphError("empty graph file")
    head = rows[0]
    try:
        if head[0] == "p":
            # DIMACS-like: "p edge n m" then "e u v" (1-based)
            if len(head) != 4:
                raise GraphError(f"bad DIMACS header: {' '.join(head)!r}")
            n, m = int(head[2]), int(head[3])
            body = rows[1:]
            edges = []
            for r in body:
                if r[0] != "e" or len(r) != 3:
                    raise GraphError(f"bad DIMACS edge line: {' '.join(r)!r}")
                edges.append((int(r[1]) - 1, int(r[2]) - 1))
        else:
            if len(head) != 2:
                raise GraphError(f"bad header, expected 'n m': {' '.join(head)!r}")
            n, m = int(head[0]), int(head[1])
            body = rows[1:]
            edges = []
            for r in body:
                if len(r) != 2:
                    raise GraphError(f"bad edge line, expected 'u v': {' '.join(r)!r}")
                edges.append((int(r[0]), int(r[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"non-integer token in graph file: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    return build_graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either the plain ``n m`` edge-list form or the DIMACS ``p edge`` form."""
    return _parse_rows(_data_lines(text))


def parse_graph_list(text: str) -> list[Graph]:
    """Parse several plain edge-list graphs written back to back."""
    rows = _data_lines(text)
    graphs = []
    i = 0
    while i < len(rows):
        head = rows[i]
        if len(head) != 2:
            raise GraphError(f"bad header in graph list: {' '.join(head)!r}")
        try:
            m = int(head[1])
        except ValueError:
            raise GraphError(f"bad header in graph list: {' '.join(head)!r}") from None
        graphs.append(_parse_rows(rows[i:i + 1 + m]))
        i += 1 + m
    return graphs


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_graph(g))
