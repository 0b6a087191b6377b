"""Labelings and literal validators for the six domination parameter kinds.

Every kind is handled as a labeling ``f: V -> {0..max_label}``:

* ``DOM`` / ``MAX_DOM`` use labels {0, 1}; the set is ``V_1``.
* ``RDF`` / ``MRDF`` use {0, 1, 2}.
* ``DRDF`` / ``MDRDF`` use {0, 1, 2, 3}.

The maximal variants add one clause: ``V_0`` is not a dominating set of the
whole graph.  The empty set dominates only the empty graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


class ParamKind(enum.Enum):
    DOM = "dom"
    MAX_DOM = "maxdom"
    RDF = "rdf"
    MRDF = "mrdf"
    DRDF = "drdf"
    MDRDF = "mdrdf"

    @property
    def max_label(self) -> int:
        return _MAX_LABEL[self]

    @property
    def maximal(self) -> bool:
        return self in (ParamKind.MAX_DOM, ParamKind.MRDF, ParamKind.MDRDF)

    @property
    def base(self) -> "ParamKind":
        """The non-maximal kind with the same label set."""
        return _BASE[self]

    @property
    def symbol(self) -> str:
        return _SYMBOL[self]

    @classmethod
    def parse(cls, text: str) -> "ParamKind":
        try:
            return cls(text.lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown parameter kind {text!r} (choose from {choices})") from None


_MAX_LABEL = {
    ParamKind.DOM: 1, ParamKind.MAX_DOM: 1,
    ParamKind.RDF: 2, ParamKind.MRDF: 2,
    ParamKind.DRDF: 3, ParamKind.MDRDF: 3,
}
_BASE = {
    ParamKind.DOM: ParamKind.DOM, ParamKind.MAX_DOM: ParamKind.DOM,
    ParamKind.RDF: ParamKind.RDF, ParamKind.MRDF: ParamKind.RDF,
    ParamKind.DRDF: ParamKind.DRDF, ParamKind.MDRDF: ParamKind.DRDF,
}
# report keys, also used in the JSON ``params`` block
_SYMBOL = {
    ParamKind.DOM: "gamma", ParamKind.MAX_DOM: "gamma_m",
    ParamKind.RDF: "gamma_R", ParamKind.MRDF: "gamma_mR",
    ParamKind.DRDF: "gamma_dR", ParamKind.MDRDF: "gamma_dRm",
}

# reporting order, weakest first
ALL_KINDS = (ParamKind.DOM, ParamKind.MAX_DOM, ParamKind.RDF,
             ParamKind.MRDF, ParamKind.DRDF, ParamKind.MDRDF)


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class Labeling:
    labels: tuple[int, ...]
    max_label: int = 3

    def __post_init__(self):
        if self.max_label not in (1, 2, 3):
            raise LabelingError(f"max_label must be 1, 2 or 3, got {self.max_label}")
        labels = tuple(int(x) for x in self.labels)
        for i, x in enumerate(labels):
            if not 0 <= x <= self.max_label:
                raise LabelingError(f"label {x} at vertex {i} outside 0..{self.max_label}")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    @property
    def weight(self) -> int:
        return sum(self.labels)

    def classes(self) -> tuple[frozenset[int], ...]:
        """The partition ``(V_0, ..., V_max_label)``."""
        parts: list[set[int]] = [set() for _ in range(self.max_label + 1)]
        for v, x in enumerate(self.labels):
            parts[x].add(v)
        return tuple(frozenset(p) for p in parts)

    def __str__(self) -> str:
        return format_labels(self.labels)

    @classmethod
    def from_set(cls, n: int, members: Iterable[int]) -> "Labeling":
        labels = [0] * n
        for v in members:
            labels[v] = 1
        return cls(tuple(labels), max_label=1)


def weight(lab: Labeling | Sequence[int]) -> int:
    return sum(lab.labels if isinstance(lab, Labeling) else lab)


def parse_labels(text: str, max_label: int = 3) -> Labeling:
    """Parse the comma-separated text form, e.g. ``"2,0,2,1"``."""
    text = text.strip()
    if not text:
        return Labeling((), max_label)
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise LabelingError(f"malformed labeling {text!r}") from None
    return Labeling(values, max_label)


def format_labels(labels: Sequence[int]) -> str:
    return ",".join(str(x) for x in labels)


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    return all(v in members or any(u in members for u in g.adj[v]) for v in range(g.n))


def is_maximal_dominating(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    rest = set(range(g.n)) - members
    return is_dominating(g, members) and not is_dominating(g, rest)


def witness_vertices(g: Graph, labels: Sequence[int]) -> list[int]:
    """Vertices outside ``V_0`` with no neighbour in ``V_0``.

    ``V_0`` fails to dominate the graph exactly when this list is non-empty.
    """
    return [v for v in range(g.n)
            if labels[v] > 0 and all(labels[u] > 0 for u in g.adj[v])]


@dataclass(frozen=True)
class Violation:
    clause: str
    vertex: int | None
    detail: str

    def __str__(self) -> str:
        where = "" if self.vertex is None else f" at vertex {self.vertex}"
        return f"{self.clause}{where}: {self.detail}"


def violations(g: Graph, lab: Labeling, kind: ParamKind) -> list[Violation]:
    """Every violated clause of ``kind`` for ``lab`` on ``g``; empty means valid."""
    if lab.max_label != kind.max_label:
        raise LabelingError(
            f"labeling declares max_label={lab.max_label} but {kind.value} needs {kind.max_label}")
    if len(lab) != g.n:
        raise LabelingError(f"labeling has {len(lab)} entries for a graph of order {g.n}")
    f = lab.labels
    out: list[Violation] = []
    base = kind.base
    for v in range(g.n):
        nb = [f[u] for u in g.adj[v]]
        x = f[v]
        if base is ParamKind.DOM:
            if x == 0 and 1 not in nb:
                out.append(Violation("dominated", v, "vertex not in the set has no neighbour in it"))
        elif base is ParamKind.RDF:
            if x == 0 and 2 not in nb:
                out.append(Violation("zero-needs-2", v, "label 0 without a neighbour labelled 2"))
        else:
            if x == 0 and 3 not in nb and nb.count(2) < 2:
                out.append(Violation("zero-needs-3-or-two-2", v,
                                     "label 0 without a neighbour labelled 3 or two labelled 2"))
            elif x == 1 and not any(y >= 2 for y in nb):
                out.append(Violation("one-needs-2-or-3", v,
                                     "label 1 without a neighbour labelled 2 or 3"))
    if kind.maximal and not witness_vertices(g, f):
        out.append(Violation("V_0 dominates", None,
                             "every vertex is in V_0 or adjacent to V_0"))
    return out


def validate(g: Graph, lab: Labeling, kind: ParamKind) -> tuple[bool, list[Violation]]:
    found = violations(g, lab, kind)
    return not found, found


def is_valid(g: Graph, lab: Labeling, kind: ParamKind) -> bool:
    return not violations(g, lab, kind)
