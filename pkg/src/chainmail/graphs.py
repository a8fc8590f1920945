"""Directed graphs, trees and the complexes built from them.

Covers the double directed string, its one-way-ended variant, tree
augmentation (adding a pendant vertex at every leaf) and the directed
augmented tree, the complex of directed forests of a directed graph and
the independence complex of an undirected graph.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .complex import CapacityError, ComplexError, SimplicialComplex, from_minimal_nonfaces

__all__ = [
    "DirectedGraph",
    "Graph",
    "Tree",
    "double_directed_string",
    "primed_string",
    "string_edge_labels",
    "string_tree",
    "path_graph",
    "is_directed_forest",
    "delta_complex",
    "independence_complex",
    "augment",
    "direct_augmented",
    "leaves",
    "leaf_paths",
    "path_order",
    "dumps_graph",
    "loads_graph",
]

Edge = tuple[int, int]

DEFAULT_MAX_EDGES = 24


def _max_edges() -> int:
    return int(os.environ.get("CHAINMAIL_MAX_EDGES", DEFAULT_MAX_EDGES))


@dataclass(frozen=True)
class DirectedGraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        for x, y in self.edges:
            if x == y:
                raise ComplexError(f"self-loop at {x}")
            if x not in self.vertices or y not in self.vertices:
                raise ComplexError(f"edge {(x, y)} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> "DirectedGraph":
        edges = frozenset((int(x), int(y)) for x, y in edges)
        verts = frozenset(vertices) | {v for e in edges for v in e}
        return cls(verts, edges)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are 2-element frozensets."""

    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ComplexError(f"bad undirected edge {sorted(e)}")
            if not e <= self.vertices:
                raise ComplexError(f"edge {sorted(e)} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertices: Iterable[int] = ()):
        edges = frozenset(frozenset(e) for e in edges)
        verts = frozenset(vertices) | {v for e in edges for v in e}
        return cls(verts, edges)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = sorted(e)
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


class Tree(Graph):
    """A finite tree. The vertexless tree is admitted as the string of length 0."""

    def __post_init__(self):
        super().__post_init__()
        if not self.vertices:
            if self.edges:
                raise ComplexError("edges without vertices")
            return
        if len(self.edges) != len(self.vertices) - 1:
            raise ComplexError("a tree on n vertices has n - 1 edges")
        adj = self.adjacency()
        start = min(self.vertices)
        seen = {start}
        todo = [start]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if seen != self.vertices:
            raise ComplexError("tree is not connected")


# -- named families -------------------------------------------------------


def double_directed_string(n: int) -> DirectedGraph:
    """The path on vertices 1..n+1 with both orientations of every edge."""
    if n < 0:
        raise ComplexError("n must be nonnegative")
    edges = [(i, i + 1) for i in range(1, n + 1)] + [(i + 1, i) for i in range(1, n + 1)]
    return DirectedGraph(frozenset(range(1, n + 2)), frozenset(edges))


def primed_string(t: int) -> DirectedGraph:
    """Vertices 1..t+2; one-way end edges 1->2 and t+2->t+1, doubled edges between."""
    if t < 1:
        raise ComplexError("t must be at least 1")
    edges = {(1, 2), (t + 2, t + 1)}
    for i in range(2, t + 1):
        edges |= {(i, i + 1), (i + 1, i)}
    return DirectedGraph(frozenset(range(1, t + 3)), frozenset(edges))


def string_edge_labels(n: int) -> dict[Edge, int]:
    """Label i+1->i as 2i-1 and i->i+1 as 2i, so the labels run along the string."""
    labels = {}
    for i in range(1, n + 1):
        labels[(i + 1, i)] = 2 * i - 1
        labels[(i, i + 1)] = 2 * i
    return labels


def string_tree(t: int) -> Tree:
    """Tree with vertices 1..t in a row (no vertices when t = 0)."""
    if t < 0:
        raise ComplexError("t must be nonnegative")
    return Tree(frozenset(range(1, t + 1)), frozenset(frozenset((i, i + 1)) for i in range(1, t)))


def path_graph(n: int) -> Graph:
    return Graph(frozenset(range(1, n + 1)), frozenset(frozenset((i, i + 1)) for i in range(1, n)))


# -- directed forests -----------------------------------------------------


def is_directed_forest(edge_subset: Iterable[Edge], G: DirectedGraph | None = None) -> bool:
    """In-degree at most one everywhere and no directed cycle."""
    edges = list(edge_subset)
    if G is not None and not set(edges) <= G.edges:
        raise ComplexError("edge subset is not contained in the graph")
    parent: dict[int, int] = {}
    for x, y in edges:
        if y in parent:
            return False
        parent[y] = x
    for start in parent:
        v, steps = start, 0
        while v in parent:
            v = parent[v]
            steps += 1
            if v == start or steps > len(parent):
                return False
    return True


def delta_complex(
    G: DirectedGraph,
    edge_labels: Mapping[Edge, int] | None = None,
    *,
    max_edges: int | None = None,
) -> SimplicialComplex:
    """Complex of directed forests of ``G``.

    Vertices are integer edge labels (default: edges in sorted order get
    1..m); ``labels`` on the result maps each label back to its edge.
    Faces are grown edge by edge, rejecting an edge as soon as it would give
    a vertex in-degree two or close a directed cycle.
    """
    limit = _max_edges() if max_edges is None else max_edges
    if len(G.edges) > limit:
        raise CapacityError(f"{len(G.edges)} edges exceeds the limit of {limit}")
    if edge_labels is None:
        edge_labels = {e: i for i, e in enumerate(sorted(G.edges), start=1)}
    if set(edge_labels) != set(G.edges) or len(set(edge_labels.values())) != len(G.edges):
        raise ComplexError("edge labels must be a bijection on the edge set")
    by_label = sorted((lab, e) for e, lab in edge_labels.items())
    edges = [e for _, e in by_label]
    order = tuple(lab for lab, _ in by_label)
    m = len(edges)
    parent: dict[int, int] = {}

    def addable(i: int) -> bool:
        x, y = edges[i]
        if y in parent:
            return False
        v = x
        while v in parent:
            if v == y:
                return False
            v = parent[v]
        return v != y

    found: list[int] = []
    maximal: list[int] = []

    def grow(mask: int, start: int) -> None:
        found.append(mask)
        if not any(not mask >> i & 1 and addable(i) for i in range(m)):
            maximal.append(mask)
        for i in range(start, m):
            if addable(i):
                x, y = edges[i]
                parent[y] = x
                grow(mask | 1 << i, i + 1)
                del parent[y]

    grow(0, 0)
    facets = frozenset(
        frozenset(order[i] for i in range(m) if mask >> i & 1) for mask in maximal
    )
    K = SimplicialComplex(frozenset(order), facets, {lab: e for lab, e in by_label})
    K._seed_faces(found)
    return K


def independence_complex(gamma: Graph) -> SimplicialComplex:
    """Complex of independent vertex sets of an undirected graph."""
    return from_minimal_nonfaces(gamma.vertices, gamma.edges)


# -- trees ----------------------------------------------------------------


def leaves(G: Graph) -> list[int]:
    adj = G.adjacency()
    return sorted(v for v, nbrs in adj.items() if len(nbrs) == 1)


def augment(T: Tree) -> Tree:
    """Attach a new pendant vertex to every leaf of ``T``.

    New vertices are numbered from ``max(V(T)) + 1`` in the order of the
    leaves they hang from. A single vertex counts as a leaf at both ends
    and receives two pendants; the vertexless tree becomes a single edge
    on ``{1, 2}``.
    """
    if not T.vertices:
        return Tree(frozenset({1, 2}), frozenset({frozenset({1, 2})}))
    nxt = max(T.vertices) + 1
    if len(T.vertices) == 1:
        (v,) = T.vertices
        anchors = [v, v]
    else:
        anchors = leaves(T)
    new_edges = set(T.edges)
    for a in anchors:
        new_edges.add(frozenset((a, nxt)))
        nxt += 1
    verts = T.vertices | {v for e in new_edges for v in e}
    return Tree(frozenset(verts), frozenset(new_edges))


def direct_augmented(T: Tree) -> DirectedGraph:
    """Doubled tree edges plus one edge from each new pendant towards its leaf."""
    if not T.vertices:
        raise ComplexError("the directed augmentation needs a tree with at least one vertex")
    That = augment(T)
    edges = set()
    for e in That.edges:
        a, b = sorted(e)
        if e <= T.vertices:
            edges |= {(a, b), (b, a)}
        elif a in T.vertices:
            edges.add((b, a))
        else:
            edges.add((a, b))
    return DirectedGraph(That.vertices, frozenset(edges))


def _tree_path(adj: Mapping[int, list[int]], a: int, b: int) -> tuple[int, ...]:
    prev = {a: a}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


def leaf_paths(T: Graph) -> list[tuple[int, ...]]:
    """The path between every unordered pair of distinct leaves, smaller leaf first."""
    lv = leaves(T)
    if len(lv) < 2:
        raise ComplexError("need at least two leaves")
    adj = T.adjacency()
    return [_tree_path(adj, a, b) for i, a in enumerate(lv) for b in lv[i + 1 :]]


def path_order(T: Graph) -> tuple[int, ...]:
    """Vertices of a path graph from its smaller end to the other."""
    if len(T.vertices) == 1:
        return tuple(T.vertices)
    lv = leaves(T)
    if len(lv) != 2 or any(T.degree(v) > 2 for v in T.vertices):
        raise ComplexError("not a path")
    return _tree_path(T.adjacency(), lv[0], lv[1])


# -- text format ----------------------------------------------------------


def dumps_graph(G: Graph | DirectedGraph) -> str:
    directed = isinstance(G, DirectedGraph)
    lines = [f"directed: {'true' if directed else 'false'}"]
    lines.append("vertices: " + " ".join(map(str, sorted(G.vertices))))
    if directed:
        pairs = sorted(G.edges)
    else:
        pairs = sorted(tuple(sorted(e)) for e in G.edges)
    lines += [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def loads_graph(text: str, *, as_tree: bool = False) -> Graph | DirectedGraph:
    """Parse ``directed: true|false``, an optional ``vertices:`` line, then ``u v`` edges."""
    directed = None
    vertices: list[int] = []
    pairs: list[Edge] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("directed:"):
            directed = line.split(":", 1)[1].strip().lower() == "true"
        elif line.startswith("vertices:"):
            vertices = [int(p) for p in line.split(":", 1)[1].split()]
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ComplexError(f"malformed edge line: {raw!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    if directed is None:
        raise ComplexError("missing 'directed:' header")
    if directed:
        if as_tree:
            raise ComplexError("a tree file must be undirected")
        return DirectedGraph.from_edges(pairs, vertices)
    cls = Tree if as_tree else Graph
    return cls.from_edges(pairs, vertices)
