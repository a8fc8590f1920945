"""Finite posets and their order complexes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complex import CapacityError, ComplexError, SimplicialComplex, from_minimal_nonfaces

__all__ = [
    "Poset",
    "order_complex",
    "p_poset",
    "exists_realizing_poset",
    "dumps_poset",
    "loads_poset",
]

Pair = tuple[int, int]


def _closure(elements: frozenset[int], pairs: Iterable[Pair]) -> frozenset[Pair]:
    below: dict[int, set[int]] = {x: set() for x in elements}
    for a, b in pairs:
        below[b].add(a)
    changed = True
    while changed:
        changed = False
        for b in elements:
            extra = set().union(*(below[a] for a in below[b])) - below[b]
            if extra:
                below[b] |= extra
                changed = True
    return frozenset((a, b) for b in elements for a in below[b])


@dataclass(frozen=True)
class Poset:
    """Strict order given as the set of pairs ``(a, b)`` with ``a < b``, transitively closed."""

    elements: frozenset[int]
    less: frozenset[Pair]

    def __post_init__(self):
        for a, b in self.less:
            if a == b:
                raise ComplexError(f"relation is not irreflexive at {a}")
            if a not in self.elements or b not in self.elements:
                raise ComplexError(f"pair {(a, b)} leaves the element set")
            if (b, a) in self.less:
                raise ComplexError(f"relation is not antisymmetric on {a}, {b}")
        if _closure(self.elements, self.less) != self.less:
            raise ComplexError("relation is not transitive")

    @classmethod
    def from_relations(cls, elements: Iterable[int], pairs: Iterable[Pair]) -> "Poset":
        """Build from generating pairs ``a < b``; the transitive closure is taken."""
        elements = frozenset(elements)
        closed = _closure(elements, pairs)
        if any(a == b for a, b in closed):
            raise ComplexError("generating relations contain a cycle")
        return cls(elements, closed)

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.less or (b, a) in self.less

    def covers(self) -> list[Pair]:
        return sorted(
            (a, b)
            for a, b in self.less
            if not any((a, c) in self.less and (c, b) in self.less for c in self.elements)
        )


def order_complex(P: Poset) -> SimplicialComplex:
    """Complex of chains: the flag complex whose minimal non-faces are incomparable pairs."""
    incomparable = [
        (a, b) for a, b in combinations(sorted(P.elements), 2) if not P.comparable(a, b)
    ]
    return from_minimal_nonfaces(P.elements, incomparable)


def p_poset(t: int) -> Poset:
    """Elements 1..2t with ``y < x`` exactly when ``x - y >= 2``."""
    if t < 1:
        raise ComplexError("t must be at least 1")
    n = 2 * t
    pairs = [(y, x) for x in range(1, n + 1) for y in range(1, n + 1) if x - y >= 2]
    return Poset(frozenset(range(1, n + 1)), frozenset(pairs))


def exists_realizing_poset(K: SimplicialComplex, *, max_vertices: int = 8) -> Poset | None:
    """Search for a poset whose order complex is exactly K.

    Such a poset has K's 1-skeleton as comparability graph, so the search
    runs over transitive orientations of that graph, then compares chains
    with faces.
    """
    if len(K.vertices) > max_vertices:
        raise CapacityError(f"poset search limited to {max_vertices} vertices")
    if K.is_void:
        return None
    # every vertex of K is an element, so each must be a face
    if any(frozenset({v}) not in K for v in K.vertices):
        return None
    elements = frozenset(K.vertices)
    edges = sorted(tuple(e) for e in K.faces(1))
    adjacent = {frozenset(e) for e in edges}
    less: set[Pair] = set()

    def consistent(a: int, b: int) -> bool:
        # adding a < b must not force a relation between non-adjacent elements
        for c in elements:
            if (b, c) in less and (frozenset((a, c)) not in adjacent or (c, a) in less):
                return False
            if (c, a) in less and (frozenset((c, b)) not in adjacent or (b, c) in less):
                return False
        return True

    def search(i: int) -> Poset | None:
        if i == len(edges):
            try:
                P = Poset(elements, frozenset(less))
            except ComplexError:
                return None
            return P if order_complex(P) == K else None
        a, b = edges[i]
        orientations = [(a, b)] if i == 0 else [(a, b), (b, a)]
        for x, y in orientations:
            if consistent(x, y):
                less.add((x, y))
                found = search(i + 1)
                if found is not None:
                    return found
                less.discard((x, y))
        return None

    return search(0)


def dumps_poset(P: Poset) -> str:
    """``elements: n`` (or ``element-list: ...``) then one cover pair ``a b`` (a below b) per line."""
    order = sorted(P.elements)
    if order == list(range(1, len(order) + 1)):
        lines = [f"elements: {len(order)}"]
    else:
        lines = ["element-list: " + " ".join(map(str, order))]
    lines += [f"{a} {b}" for a, b in P.covers()]
    return "\n".join(lines) + "\n"


def loads_poset(text: str) -> Poset:
    elements = None
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            elements = range(1, int(line.split(":", 1)[1]) + 1)
        elif line.startswith("element-list:"):
            elements = [int(p) for p in line.split(":", 1)[1].split()]
        else:
            a, b = (int(p) for p in line.split())
            pairs.append((a, b))
    if elements is None:
        raise ComplexError("missing 'elements:' header")
    return Poset.from_relations(elements, pairs)
