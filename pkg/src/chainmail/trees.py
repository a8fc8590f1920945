"""Unlabeled tree enumeration, Prüfer codes and random labeled trees."""

from __future__ import annotations

import heapq
import random
from itertools import product
from typing import Iterator, Sequence

from .complex import CapacityError, ComplexError
from .graphs import Graph, Tree

__all__ = [
    "canonical_form",
    "prufer_decode",
    "labeled_trees",
    "enumerate_trees",
    "trees_up_to",
    "random_tree",
    "star_tree",
]

MAX_ENUMERATION = 10


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    """Labeled tree on 1..n from a Prüfer sequence of length n - 2."""
    n = len(seq) + 2 if n is None else n
    if len(seq) != n - 2 or any(not 1 <= s <= n for s in seq):
        raise ComplexError("invalid Prüfer sequence")
    degree = [1] * (n + 1)
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append(frozenset((leaf, s)))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    edges.append(frozenset(leaves))
    return Tree(frozenset(range(1, n + 1)), frozenset(edges))


def labeled_trees(n: int) -> Iterator[Tree]:
    """All n**(n-2) labeled trees on 1..n."""
    if n == 1:
        yield Tree(frozenset({1}), frozenset())
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


def _centers(G: Graph) -> list[int]:
    adj = {v: set(ns) for v, ns in G.adjacency().items()}
    remaining = set(adj)
    layer = [v for v in remaining if len(adj[v]) <= 1]
    while len(remaining) > 2:
        remaining -= set(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                adj[w].discard(v)
                if len(adj[w]) == 1 and w in remaining:
                    nxt.append(w)
        layer = nxt
    return sorted(remaining)


def canonical_form(T: Tree) -> str:
    """Isomorphism-invariant string: the smallest rooted parenthesis code over the centres."""
    if not T.vertices:
        return ""
    adj = T.adjacency()

    def code(v: int, parent: int | None) -> str:
        return "(" + "".join(sorted(code(w, v) for w in adj[v] if w != parent)) + ")"

    return min(code(c, None) for c in _centers(T))


def enumerate_trees(n: int) -> list[Tree]:
    """One tree per isomorphism class on exactly n vertices (labels 1..n).

    Classes on n + 1 vertices are obtained by hanging a new leaf on every
    vertex of every class on n vertices and deduplicating by canonical form.
    """
    if n < 1:
        return []
    if n > MAX_ENUMERATION:
        raise CapacityError(f"tree enumeration is limited to {MAX_ENUMERATION} vertices")
    level = {"()": Tree(frozenset({1}), frozenset())}
    for m in range(1, n):
        nxt: dict[str, Tree] = {}
        for T in level.values():
            for v in sorted(T.vertices):
                grown = Tree(T.vertices | {m + 1}, T.edges | {frozenset((v, m + 1))})
                nxt.setdefault(canonical_form(grown), grown)
        level = nxt
    return [level[k] for k in sorted(level)]


def trees_up_to(max_n: int) -> Iterator[Tree]:
    for n in range(1, max_n + 1):
        yield from enumerate_trees(n)


def random_tree(n: int, seed: int | None = None) -> Tree:
    """Uniform labeled tree on 1..n from a seeded random Prüfer sequence."""
    if n < 1:
        raise ComplexError("n must be positive")
    if n == 1:
        return Tree(frozenset({1}), frozenset())
    rng = random.Random(seed)
    return prufer_decode([rng.randint(1, n) for _ in range(n - 2)], n)


def star_tree(leaves: int) -> Tree:
    """Centre 1 joined to vertices 2..leaves+1."""
    return Tree.from_edges([(1, i) for i in range(2, leaves + 2)])
