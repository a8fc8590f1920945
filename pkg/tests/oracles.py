"""Brute-force reference computations, deliberately naive and independent of the package."""

from fractions import Fraction
from itertools import chain, combinations, permutations


def subsets(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def faces_by_predicate(vertices, is_face):
    return {frozenset(s) for s in subsets(vertices) if is_face(frozenset(s))}


def faces_from_facets(facets):
    out = set()
    for f in facets:
        out |= {frozenset(s) for s in subsets(f)}
    return out


def forest_by_union_find(edges):
    """Directed forest test via: underlying graph acyclic and every in-degree <= 1."""
    heads = [y for _, y in edges]
    if len(heads) != len(set(heads)):
        return False
    parent = {}

    def find(v):
        while parent.get(v, v) != v:
            v = parent[v]
        return v

    for x, y in edges:
        if {x, y} in [{a, b} for a, b in edges if (a, b) != (x, y)]:
            return False
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[rx] = ry
    return True


def leaf_paths_brute(adj):
    """Leaf-to-leaf simple paths by depth-first search over all simple paths."""
    leaves = [v for v, ns in adj.items() if len(ns) == 1]
    out = []
    for a in leaves:
        stack = [(a, (a,))]
        while stack:
            v, path = stack.pop()
            if v != a and v in leaves:
                if a < v:
                    out.append(path)
                continue
            for w in adj[v]:
                if w not in path:
                    stack.append((w, path + (w,)))
    return sorted(out)


def disconnecting_faces_brute(adj, k):
    paths = leaf_paths_brute(adj)

    def ok(S):
        return all(
            any(all(x not in S for x in p[i : i + k]) for i in range(len(p) - k + 1)) for p in paths
        )

    return faces_by_predicate(adj.keys(), ok)


def rank_over_q(M):
    """Gaussian elimination over the rationals."""
    A = [[Fraction(x) for x in row] for row in M]
    rank, cols = 0, len(A[0]) if A else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                q = A[r][c] / A[rank][c]
                A[r] = [a - q * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def orderings(parts):
    return set(permutations(parts))


def tree_isomorphic_brute(t1, t2):
    """Exhaustive relabeling test for small trees given as (vertices, edge set)."""
    v1, e1 = sorted(t1[0]), {frozenset(e) for e in t1[1]}
    v2, e2 = sorted(t2[0]), {frozenset(e) for e in t2[1]}
    if len(v1) != len(v2) or len(e1) != len(e2):
        return False
    for perm in permutations(v2):
        m = dict(zip(v1, perm))
        if {frozenset(m[x] for x in e) for e in e1} == e2:
            return True
    return False
