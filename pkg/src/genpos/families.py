"""Named graph families.

Vertex numbering:

* ``path``/``cycle``: 0..n-1 along the path or cycle.
* ``wheel``: rim cycle 0..n-2, hub n-1.
* ``multipartite``: parts are consecutive blocks in the order given.
* ``kneser2`` and ``line-complete``: 2-subsets of ``{0..n-1}`` in
  lexicographic order (``itertools.combinations``).
* ``complete-minus-edge``: the missing edge is 0-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, ParseError
from .graph import Graph, from_edge_list

KINDS = (
    "path",
    "cycle",
    "complete",
    "wheel",
    "multipartite",
    "kneser2",
    "line-complete",
    "complete-minus-edge",
)

_ALIASES = {
    "petersen": ("kneser2", (5,)),
    "octahedron": ("multipartite", (2, 2, 2)),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    args: tuple[int, ...]

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.args))}"


def Path(n):
    return FamilySpec("path", (n,))


def Cycle(n):
    return FamilySpec("cycle", (n,))


def Complete(n):
    return FamilySpec("complete", (n,))


def Wheel(n):
    return FamilySpec("wheel", (n,))


def CompleteMultipartite(parts):
    return FamilySpec("multipartite", tuple(parts))


def Kneser2(n):
    return FamilySpec("kneser2", (n,))


def LineOfComplete(n):
    return FamilySpec("line-complete", (n,))


def CompleteMinusEdge(n):
    return FamilySpec("complete-minus-edge", (n,))


def parse_family(text: str) -> FamilySpec:
    """Parse ``kind:a,b,...`` (e.g. ``cycle:5``, ``multipartite:3,2,2``)."""
    text = text.strip().lower()
    if text in _ALIASES:
        kind, args = _ALIASES[text]
        return FamilySpec(kind, args)
    kind, _, rest = text.partition(":")
    if kind not in KINDS:
        raise ParseError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        args = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError:
        raise ParseError(f"bad family arguments in {text!r}") from None
    if not args:
        raise ParseError(f"family {kind!r} needs a size")
    return FamilySpec(kind, args)


def _one(spec: FamilySpec) -> int:
    if len(spec.args) != 1:
        raise ParameterError(f"{spec.kind} takes one size, got {spec.args}")
    return spec.args[0]


def make_family(spec: FamilySpec) -> Graph:
    kind = spec.kind
    if any(a < 1 for a in spec.args):
        raise ParameterError(f"sizes must be >= 1: {spec}")
    if kind == "path":
        n = _one(spec)
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        n = _one(spec)
        if n < 3:
            raise ParameterError(f"cycle needs n >= 3, got {n}")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        n = _one(spec)
        return from_edge_list(n, combinations(range(n), 2))
    if kind == "wheel":
        n = _one(spec)
        if n < 4:
            raise ParameterError(f"wheel needs n >= 4, got {n}")
        rim = n - 1
        edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
        return from_edge_list(n, edges)
    if kind == "multipartite":
        part_of = [p for p, size in enumerate(spec.args) for _ in range(size)]
        n = len(part_of)
        return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]])
    if kind == "kneser2":
        n = _one(spec)
        if n < 5:
            raise ParameterError(f"kneser2 needs n >= 5, got {n}")
        pairs = list(combinations(range(n), 2))
        return from_edge_list(
            len(pairs),
            [(i, j) for i, j in combinations(range(len(pairs)), 2) if not set(pairs[i]) & set(pairs[j])],
        )
    if kind == "line-complete":
        n = _one(spec)
        if n < 2:
            raise ParameterError(f"line-complete needs n >= 2, got {n}")
        pairs = list(combinations(range(n), 2))
        return from_edge_list(
            len(pairs),
            [(i, j) for i, j in combinations(range(len(pairs)), 2) if set(pairs[i]) & set(pairs[j])],
        )
    if kind == "complete-minus-edge":
        n = _one(spec)
        if n < 2:
            raise ParameterError(f"complete-minus-edge needs n >= 2, got {n}")
        return from_edge_list(n, [e for e in combinations(range(n), 2) if e != (0, 1)])
    raise ParameterError(f"unknown family kind {kind!r}")


def two_subsets(n: int) -> list[tuple[int, int]]:
    """Labels of the vertices of ``kneser2:n`` and ``line-complete:n``."""
    return list(combinations(range(n), 2))
