"""Exact values and explicit optimal labelings for the named families.

Witness labelings follow the case split by residue used to prove each value
(paths by ``n mod 3`` and parity, cycles by ``n mod 6``), so each witness is
also a regression test of that construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labeling import Labeling, ParamKind

FAMILY_F = "family_f"
_SHAPES = ("path", "cycle", "star", "double_star", "complete", FAMILY_F)


class NoClosedForm(LookupError):
    pass


@dataclass(frozen=True)
class ClosedFormQuery:
    shape: str
    kind: ParamKind
    n: int = 0
    r: int = 0
    s: int = 0
    k: int = 0

    def __post_init__(self):
        if self.shape not in _SHAPES:
            raise NoClosedForm(f"unknown shape {self.shape!r}")


def _uncovered(q: ClosedFormQuery) -> NoClosedForm:
    return NoClosedForm(f"no closed form for {q.shape} / {q.kind.value} with {_params(q)}")


def _params(q: ClosedFormQuery) -> str:
    if q.shape == "double_star":
        return f"r={q.r}, s={q.s}"
    if q.shape == FAMILY_F:
        return f"k={q.k}"
    return f"n={q.n}"


def _covered(q: ClosedFormQuery) -> bool:
    mdr = q.kind is ParamKind.MDRDF
    dr = q.kind is ParamKind.DRDF
    if q.shape == "path":
        return (mdr or dr) and q.n >= 1
    if q.shape == "cycle":
        return mdr and q.n >= 3
    if q.shape == "complete":
        return mdr and q.n >= 1
    if q.shape == "star":
        return mdr and q.n >= 2
    if q.shape == "double_star":
        return mdr and 1 <= q.r <= q.s
    if q.shape == FAMILY_F:
        return (mdr or dr) and q.k >= 1
    return False


def closed_form(q: ClosedFormQuery) -> int:
    if not _covered(q):
        raise _uncovered(q)
    n = q.n
    if q.shape == "path" and q.kind is ParamKind.DRDF:
        return n if n % 3 == 0 else n + 1
    if q.shape in ("path", "cycle", "complete"):
        return n + 1
    if q.shape == "star":
        # K_{1,1} and K_{1,2} are the paths P_2, P_3
        return 4 if n >= 4 else n + 1
    if q.shape == "double_star":
        if q.s == 1:
            return 5
        return 6 if q.r == 1 else 7
    return 5 * q.k


def _path_mdrdf(n: int) -> list[int]:
    if n == 1:
        return [2]
    f = [0] * n
    if n % 3 == 0:
        for i in range(1, n, 3):
            f[i] = 3
        f[n - 1] = 1
        return f
    # n = 1, 2 (mod 3): 2 on every even position v_2, v_4, ...
    for i in range(1, n, 2):
        f[i] = 2
    f[0] = 1
    if n % 2:
        f[n - 1] = 1
    return f


def _cycle_mdrdf(n: int) -> list[int]:
    f = [0] * n
    for i in range(1, n, 2):
        f[i] = 2
    f[0] = 1
    if n % 2:
        f[n - 1] = 1
    return f


def _path_drdf(n: int) -> list[int]:
    f = [0] * n
    for i in range(1, n, 3):
        f[i] = 3
    if n % 3 == 1:
        f[n - 1] = 2
    return f


def witness_labeling(q: ClosedFormQuery) -> Labeling:
    """An optimal labeling for the covered query, in the family's numbering
    (see :mod:`maxdrd.constructions`)."""
    if not _covered(q):
        raise NoClosedForm(f"no witness for {q.shape} / {q.kind.value} with {_params(q)}")
    n = q.n
    if q.shape == "path":
        f = _path_drdf(n) if q.kind is ParamKind.DRDF else _path_mdrdf(n)
    elif q.shape == "cycle":
        f = _cycle_mdrdf(n)
    elif q.shape == "complete":
        f = [2] + [1] * (n - 1)
    elif q.shape == "star":
        if n >= 4:
            f = [3, 1] + [0] * (n - 2)
        else:
            # centre 0 plays the path's middle vertex
            p = _path_mdrdf(n)
            f = [p[1], p[0]] + p[2:]
    elif q.shape == "double_star":
        f = [0] * (q.r + q.s + 2)
        first_leaf = 2
        if q.s == 1:
            f[first_leaf], f[0], f[1], f[3] = 1, 2, 0, 2
        elif q.r == 1:
            f[first_leaf], f[0], f[1] = 1, 2, 3
        else:
            f[first_leaf], f[0], f[1] = 1, 3, 3
    else:
        f = []
        for block in range(q.k):
            if q.kind is ParamKind.MDRDF and block == 0:
                f += [1, 2, 0, 2]
            else:
                f += [0, 3, 0, 2]
    return Labeling(tuple(f), 3)
