from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chainmail.complex import CapacityError, ComplexError
from chainmail.trees import (
    canonical_form,
    enumerate_trees,
    labeled_trees,
    prufer_decode,
    random_tree,
    star_tree,
    trees_up_to,
)

from oracles import tree_isomorphic_brute

UNLABELED_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def brute_canon(T):
    vs = sorted(T.vertices)
    best = None
    for perm in permutations(range(len(vs))):
        m = dict(zip(vs, perm))
        key = tuple(sorted(tuple(sorted(m[x] for x in e)) for e in T.edges))
        if best is None or key < best:
            best = key
    return best


def test_prufer_decode_known():
    T = prufer_decode([4, 4, 4, 5])
    assert T.edges == {frozenset(e) for e in [(1, 4), (2, 4), (3, 4), (4, 5), (5, 6)]}
    with pytest.raises(ComplexError):
        prufer_decode([7], 3)


def test_labeled_tree_counts():
    for n in range(1, 7):
        trees = list(labeled_trees(n))
        assert len(trees) == max(1, n ** (n - 2))
        assert len({T.edges for T in trees}) == len(trees)


@pytest.mark.parametrize("n", range(1, 11))
def test_unlabeled_counts(n):
    assert len(enumerate_trees(n)) == UNLABELED_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_prufer_dedup(n):
    classes = {brute_canon(T) for T in labeled_trees(n)}
    ours = {brute_canon(T) for T in enumerate_trees(n)}
    assert ours == classes


def test_seven_vertex_classes_pairwise_distinct():
    trees = enumerate_trees(7)
    for a, b in combinations(trees, 2):
        assert not tree_isomorphic_brute((a.vertices, a.edges), (b.vertices, b.edges))


def test_trees_up_to_is_cumulative():
    assert len(list(trees_up_to(6))) == sum(UNLABELED_COUNTS[:6])


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_trees(11)
    assert enumerate_trees(0) == []


@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_random_tree_is_reproducible(n, seed):
    a, b = random_tree(n, seed), random_tree(n, seed)
    assert a == b and a.vertices == frozenset(range(1, n + 1))


@given(st.integers(2, 7), st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(n, seed, rnd):
    T = random_tree(n, seed)
    perm = list(range(1, n + 1))
    rnd.shuffle(perm)
    m = dict(zip(range(1, n + 1), perm))
    U = type(T).from_edges([tuple(m[x] for x in e) for e in T.edges], perm)
    assert canonical_form(T) == canonical_form(U)


@given(st.integers(2, 7), st.integers(0, 10**6), st.integers(0, 10**6))
def test_canonical_form_separates_classes(n, s1, s2):
    a, b = random_tree(n, s1), random_tree(n, s2)
    same = tree_isomorphic_brute((a.vertices, a.edges), (b.vertices, b.edges))
    assert (canonical_form(a) == canonical_form(b)) == same


def test_star():
    T = star_tree(3)
    assert T.degree(1) == 3 and len(T.vertices) == 4
