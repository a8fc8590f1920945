"""Finite abstract simplicial complexes stored by their facets.

A complex is a downward-closed family of finite vertex sets. Only the
inclusion-maximal faces are stored; face queries reduce to facet
containment and full face lists are enumerated on demand and cached.

Two degenerate values are kept apart: the *void* complex has no faces at
all, while the *empty* complex ``{∅}`` has exactly the empty face. Its
reduced homology is a copy of Z in degree -1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping

__all__ = [
    "CapacityError",
    "ComplexError",
    "SimplicialComplex",
    "from_facets",
    "from_minimal_nonfaces",
    "faces",
    "f_vector",
    "euler_characteristic",
    "is_cone",
    "are_isomorphic",
    "relabel",
    "dumps",
    "loads",
]

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Invalid input to a complex constructor or query."""


class CapacityError(RuntimeError):
    """The instance is larger than a configured search limit."""


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset[int]
    facets: frozenset[frozenset[int]]
    labels: Mapping[int, Hashable] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_cache", {})

    # -- basic predicates -------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        """True for ``{∅}``, the complex whose only face is empty."""
        return self.facets == frozenset([frozenset()])

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ComplexError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    @property
    def used_vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    def __contains__(self, sigma: Iterable[int]) -> bool:
        s = frozenset(sigma)
        return any(s <= f for f in self.facets)

    # -- enumeration ------------------------------------------------------

    @property
    def vertex_order(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def facet_masks(self) -> list[int]:
        """Facets as bitmasks over ``vertex_order``."""
        cache = self._cache
        if "masks" not in cache:
            index = {v: i for i, v in enumerate(self.vertex_order)}
            cache["masks"] = [sum(1 << index[v] for v in f) for f in self.facets]
        return cache["masks"]

    def faces_by_dim(self) -> dict[int, list[Face]]:
        """All faces grouped by dimension, each list in lexicographic order."""
        cache = self._cache
        if "faces" not in cache:
            order = self.vertex_order
            grouped: dict[int, list[Face]] = {}
            for mask in _enumerate_face_masks(len(order), self.facet_masks()):
                face = _unmask(mask, order)
                grouped.setdefault(len(face) - 1, []).append(face)
            for lst in grouped.values():
                lst.sort()
            cache["faces"] = grouped
        return cache["faces"]

    def faces(self, d: int | None = None) -> list[Face]:
        grouped = self.faces_by_dim()
        if d is None:
            return [f for k in sorted(grouped) for f in grouped[k]]
        return list(grouped.get(d, []))

    def f_vector(self) -> tuple[int, ...]:
        grouped = self.faces_by_dim()
        if not grouped:
            return ()
        return tuple(len(grouped.get(d, [])) for d in range(-1, max(grouped) + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()[1:]))

    def reduced_euler_characteristic(self) -> int:
        fv = self.f_vector()
        return sum((-1) ** (d - 1) * n for d, n in enumerate(fv))

    def induced(self, subset: Iterable[int]) -> "SimplicialComplex":
        """Subcomplex of all faces contained in ``subset``."""
        w = frozenset(subset)
        if self.is_void:
            return self
        return from_facets(w, [f & w for f in self.facets], labels=self.labels)

    def _seed_faces(self, masks: Iterable[int]) -> None:
        order = self.vertex_order
        grouped: dict[int, list[Face]] = {}
        for mask in masks:
            face = _unmask(mask, order)
            grouped.setdefault(len(face) - 1, []).append(face)
        for lst in grouped.values():
            lst.sort()
        self._cache["faces"] = grouped


def _unmask(mask: int, order: tuple[int, ...]) -> Face:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(order[i])
        mask >>= 1
        i += 1
    return tuple(out)


def _enumerate_face_masks(n: int, facet_masks: list[int]) -> Iterator[int]:
    # Set-enumeration tree; each node keeps only the facets that still contain it.
    if not facet_masks:
        return
    stack = [(0, 0, facet_masks)]
    while stack:
        mask, start, live = stack.pop()
        yield mask
        reach = 0
        for f in live:
            reach |= f
        for i in range(n - 1, start - 1, -1):
            bit = 1 << i
            if reach & bit:
                stack.append((mask | bit, i + 1, [f for f in live if f & bit]))


def _maximal(sets: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    uniq = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(s <= k for k in kept):
            kept.append(s)
    return frozenset(kept)


def from_facets(
    vertex_set: Iterable[int],
    facet_list: Iterable[Iterable[int]],
    *,
    empty: bool = False,
    labels: Mapping[int, Hashable] | None = None,
) -> SimplicialComplex:
    """Build a complex from generating faces, keeping only the maximal ones.

    An empty ``facet_list`` gives the void complex unless ``empty`` is set,
    in which case the result is ``{∅}``.
    """
    verts = frozenset(vertex_set)
    facets = [frozenset(f) for f in facet_list]
    for f in facets:
        if not f <= verts:
            raise ComplexError(f"facet {sorted(f)} is not a subset of the vertex set")
    if not facets and empty:
        facets = [frozenset()]
    return SimplicialComplex(verts, _maximal(facets), labels)


def from_minimal_nonfaces(
    vertex_set: Iterable[int],
    nonface_list: Iterable[Iterable[int]],
    *,
    labels: Mapping[int, Hashable] | None = None,
) -> SimplicialComplex:
    """Complex of all subsets of ``vertex_set`` containing no listed non-face."""
    verts = frozenset(vertex_set)
    order = tuple(sorted(verts))
    index = {v: i for i, v in enumerate(order)}
    nonfaces = []
    for nf in nonface_list:
        nf = frozenset(nf)
        if not nf <= verts:
            raise ComplexError(f"non-face {sorted(nf)} is not a subset of the vertex set")
        nonfaces.append(sum(1 << index[v] for v in nf))
    if 0 in nonfaces:
        return SimplicialComplex(verts, frozenset(), labels)
    # blockers[i]: the rest of every non-face that contains vertex i
    blockers: list[list[int]] = [[] for _ in order]
    for nf in nonfaces:
        for i in range(len(order)):
            if nf >> i & 1:
                blockers[i].append(nf & ~(1 << i))

    def addable(mask: int, i: int) -> bool:
        return not mask >> i & 1 and all(b & mask != b for b in blockers[i])

    found: list[int] = []
    maximal: list[int] = []
    stack = [(0, 0)]
    while stack:
        mask, start = stack.pop()
        found.append(mask)
        if not any(addable(mask, i) for i in range(len(order))):
            maximal.append(mask)
        for i in range(len(order) - 1, start - 1, -1):
            if addable(mask, i):
                stack.append((mask | 1 << i, i + 1))
    K = SimplicialComplex(verts, frozenset(frozenset(_unmask(m, order)) for m in maximal), labels)
    K._seed_faces(found)
    return K


def faces(K: SimplicialComplex, d: int) -> list[Face]:
    return K.faces(d)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """``(f_-1, f_0, f_1, ...)``; the empty tuple for the void complex."""
    return K.f_vector()


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


def is_cone(K: SimplicialComplex) -> int | None:
    """Return an apex vertex lying in every facet, or None."""
    if K.is_void:
        raise ComplexError("cone test is undefined for the void complex")
    common = frozenset.intersection(*K.facets)
    return min(common) if common else None


def relabel(K: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """Apply an injective vertex renaming."""
    if len(set(mapping[v] for v in K.vertices)) != len(K.vertices):
        raise ComplexError("relabelling is not injective")
    new_facets = [frozenset(mapping[v] for v in f) for f in K.facets]
    return from_facets((mapping[v] for v in K.vertices), new_facets, empty=K.is_empty_complex)


def are_isomorphic(
    K1: SimplicialComplex,
    K2: SimplicialComplex,
    *,
    match_unused: bool = False,
    max_vertices: int = 16,
) -> dict[int, int] | None:
    """Search for a vertex bijection carrying the facets of K1 onto those of K2.

    Only vertices that occur in some face take part unless ``match_unused``
    is set; then the unused vertices must also be equinumerous and are
    paired off in sorted order.

    Exhaustive backtracking; candidate images are restricted to vertices with
    the same facet-size signature and partial maps must preserve pairwise
    co-occurrence counts.
    """
    if K1.is_void or K2.is_void:
        raise ComplexError("isomorphism test needs non-void complexes")
    if max(len(K1.vertices), len(K2.vertices)) > max_vertices:
        raise CapacityError(f"isomorphism search limited to {max_vertices} vertices")
    spare1 = sorted(K1.vertices - K1.used_vertices)
    spare2 = sorted(K2.vertices - K2.used_vertices)
    if match_unused and len(spare1) != len(spare2):
        return None
    extra = dict(zip(spare1, spare2)) if match_unused else {}
    if K1.facets == K2.facets:
        return {v: v for v in K1.used_vertices} | extra
    V1, V2 = K1.used_vertices, K2.used_vertices
    if len(V1) != len(V2) or len(K1.facets) != len(K2.facets):
        return None
    if Counter(map(len, K1.facets)) != Counter(map(len, K2.facets)):
        return None

    def signature(K):
        sig = {v: [] for v in K.used_vertices}
        for f in K.facets:
            for v in f:
                sig[v].append(len(f))
        return {v: tuple(sorted(s)) for v, s in sig.items()}

    def codegree(K):
        c = Counter()
        for f in K.facets:
            for a, b in combinations(sorted(f), 2):
                c[a, b] += 1
                c[b, a] += 1
        return c

    s1, s2 = signature(K1), signature(K2)
    if Counter(s1.values()) != Counter(s2.values()):
        return None
    c1, c2 = codegree(K1), codegree(K2)
    # Most constrained first: rare signatures, then high degree.
    rarity = Counter(s1.values())
    order = sorted(V1, key=lambda v: (rarity[s1[v]], -len(s1[v]), v))
    target_facets = K2.facets
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            image = frozenset(frozenset(mapping[v] for v in f) for f in K1.facets)
            return image == target_facets
        u = order[pos]
        for w in sorted(V2):
            if w in used or s2[w] != s1[u]:
                continue
            if any(c1[u, a] != c2[w, mapping[a]] for a in mapping):
                continue
            mapping[u] = w
            used.add(w)
            if extend(pos + 1):
                return True
            del mapping[u]
            used.discard(w)
        return False

    return dict(mapping) | extra if extend(0) else None


# -- text format ----------------------------------------------------------


def dumps(K: SimplicialComplex, comments: Iterable[str] = ()) -> str:
    """Serialize as ``vertices: n`` (or ``vertex-list: ...``) header, optional ``empty: true``, one facet per line."""
    lines = [f"# {c}" for c in comments]
    order = K.vertex_order
    if order == tuple(range(1, len(order) + 1)):
        lines.append(f"vertices: {len(order)}")
    else:
        lines.append("vertex-list: " + " ".join(map(str, order)))
    if K.is_empty_complex:
        lines.append("empty: true")
    else:
        for f in sorted(tuple(sorted(f)) for f in K.facets):
            lines.append(" ".join(map(str, f)))
    return "\n".join(lines) + "\n"


def loads(text: str) -> SimplicialComplex:
    vertices: list[int] | None = None
    empty = False
    facets: list[list[int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            vertices = list(range(1, int(line.split(":", 1)[1]) + 1))
        elif line.startswith("vertex-list:"):
            vertices = [int(p) for p in line.split(":", 1)[1].split()]
        elif line.startswith("empty:"):
            empty = line.split(":", 1)[1].strip().lower() == "true"
        else:
            try:
                facets.append([int(p) for p in line.split()])
            except ValueError:
                raise ComplexError(f"malformed facet line: {raw!r}") from None
    if vertices is None:
        raise ComplexError("missing 'vertices:' header")
    return from_facets(vertices, facets, empty=empty)
