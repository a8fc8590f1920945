"""Compositions, the refinement order and the complexes built from it.

A composition of n is encoded by its cut set, the set of proper prefix
sums. Refinement ``x <= y`` (y splits the parts of x further) is then
plain containment of cut sets, and the complex of a partition lambda is
the complex on the cut positions {1, ..., n-1} whose faces are the cut sets
lying below some composition of type lambda.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Iterable, Sequence

from .complex import CapacityError, ComplexError, SimplicialComplex, from_facets
from .graphs import Tree, augment, leaf_paths

__all__ = [
    "Composition",
    "Partition",
    "compositions",
    "cutset",
    "from_cutset",
    "refines",
    "can_refine_to_type",
    "delta_lambda",
    "hook",
    "distinct_orderings",
    "maximal_elements_count",
    "disconnecting_complex",
]

DEFAULT_MAX_TREE_VERTICES = 20


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise ComplexError("composition parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def type(self) -> "Partition":
        return Partition(self.parts)


@dataclass(frozen=True)
class Partition:
    """Multiset of positive parts, stored weakly decreasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ComplexError("partition parts must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read comma-separated parts, e.g. ``"3,1,1"``."""
        try:
            return cls(tuple(int(p) for p in text.split(",") if p.strip()))
        except ValueError:
            raise ComplexError(f"cannot parse partition {text!r}") from None


def hook(k: int, t: int) -> Partition:
    """The partition (k, 1, ..., 1) with t ones."""
    return Partition((k,) + (1,) * t)


def compositions(n: int) -> list[Composition]:
    return [from_cutset(s, n) for s in _subsets(range(1, n))]


def _subsets(items: Iterable[int]) -> list[frozenset[int]]:
    items = list(items)
    return [frozenset(x for i, x in enumerate(items) if m >> i & 1) for m in range(1 << len(items))]


def cutset(x: Composition | Sequence[int]) -> frozenset[int]:
    parts = x.parts if isinstance(x, Composition) else tuple(x)
    return frozenset(list(accumulate(parts))[:-1])


def from_cutset(cuts: Iterable[int], n: int) -> Composition:
    cuts = sorted(cuts)
    if any(c < 1 or c >= n for c in cuts):
        raise ComplexError(f"cut positions must lie in 1..{n - 1}")
    bounds = [0] + cuts + [n]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def _as_composition(x) -> Composition:
    return x if isinstance(x, Composition) else Composition(tuple(x))


def refines(x, y) -> bool:
    """True when ``x <= y``: every part of x is a sum of consecutive parts of y."""
    x, y = _as_composition(x), _as_composition(y)
    if x.n != y.n:
        raise ComplexError("compositions of different n")
    return cutset(x) <= cutset(y)


def can_refine_to_type(x, lam) -> bool:
    """Whether ``x`` lies below some composition whose parts are the multiset ``lam``.

    Equivalent to splitting the multiset ``lam`` into groups, one per part
    of x, each group summing to that part.
    """
    x = _as_composition(x)
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if x.n != lam.n:
        raise ComplexError("composition and partition of different n")
    return _fits(tuple(sorted(x.parts, reverse=True)), lam.parts)


@lru_cache(maxsize=None)
def _fits(blocks: tuple[int, ...], remaining: tuple[int, ...]) -> bool:
    if not blocks:
        return not remaining
    for group in _groups_summing_to(blocks[0], remaining):
        rest = list(remaining)
        for g in group:
            rest.remove(g)
        if _fits(blocks[1:], tuple(rest)):
            return True
    return False


def _groups_summing_to(target: int, parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    # Sub-multisets of the weakly decreasing tuple ``parts`` summing to target.
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, chosen: list[int]) -> None:
        if left == 0:
            out.append(tuple(chosen))
            return
        prev = None
        for j in range(i, len(parts)):
            p = parts[j]
            if p == prev or p > left:
                continue
            prev = p
            chosen.append(p)
            rec(j + 1, left - p, chosen)
            chosen.pop()

    rec(0, target, [])
    return out


def distinct_orderings(parts: Sequence[int]) -> list[tuple[int, ...]]:
    """Each ordering of the multiset ``parts`` exactly once."""
    counts = Counter(parts)
    keys = sorted(counts)
    out: list[tuple[int, ...]] = []
    seq: list[int] = []

    def rec() -> None:
        if len(seq) == len(parts):
            out.append(tuple(seq))
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                seq.append(key)
                rec()
                seq.pop()
                counts[key] += 1

    rec()
    return out


def maximal_elements_count(lam) -> int:
    """Number of distinct orderings of the parts of ``lam``."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    return factorial(len(lam)) // prod(factorial(m) for m in Counter(lam.parts).values())


def delta_lambda(lam) -> SimplicialComplex:
    """Complex on cut positions {1..n-1} whose facets are the cut sets of type-lambda compositions."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    n = lam.n
    if n < 1:
        raise ComplexError("need a partition of a positive integer")
    facets = {cutset(p) for p in distinct_orderings(lam.parts)}
    return from_facets(range(1, n), facets)


def disconnecting_complex(T: Tree, k: int, *, max_vertices: int | None = None) -> SimplicialComplex:
    """Vertex sets of the augmented tree leaving k consecutive vertices free on every leaf-to-leaf path."""
    if k < 1:
        raise ComplexError("k must be positive")
    That = augment(T)
    limit = max_vertices or int(os.environ.get("CHAINMAIL_MAX_TREE_VERTICES", DEFAULT_MAX_TREE_VERTICES))
    if len(That.vertices) > limit:
        raise CapacityError(f"{len(That.vertices)} vertices exceeds the limit of {limit}")
    order = tuple(sorted(That.vertices))
    index = {v: i for i, v in enumerate(order)}
    # For each path, the masks of its windows of k consecutive vertices.
    windows = []
    for path in leaf_paths(That):
        masks = [sum(1 << index[v] for v in path[i : i + k]) for i in range(len(path) - k + 1)]
        windows.append(masks)

    def is_face(mask: int) -> bool:
        return all(any(w & mask == 0 for w in ws) for ws in windows)

    n = len(order)
    found: list[int] = []
    maximal: list[int] = []
    if is_face(0):
        stack = [(0, 0)]
        while stack:
            mask, start = stack.pop()
            found.append(mask)
            if not any(not mask >> i & 1 and is_face(mask | 1 << i) for i in range(n)):
                maximal.append(mask)
            for i in range(n - 1, start - 1, -1):
                nxt = mask | 1 << i
                if is_face(nxt):
                    stack.append((nxt, i + 1))
    facets = frozenset(frozenset(order[i] for i in range(n) if m >> i & 1) for m in maximal)
    K = SimplicialComplex(frozenset(order), facets)
    if found:
        K._seed_faces(found)
    return K
