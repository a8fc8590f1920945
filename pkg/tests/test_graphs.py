import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chainmail.complex import ComplexError
from chainmail.graphs import (
    DirectedGraph,
    Graph,
    Tree,
    augment,
    delta_complex,
    direct_augmented,
    double_directed_string,
    dumps_graph,
    independence_complex,
    is_directed_forest,
    leaf_paths,
    leaves,
    loads_graph,
    path_graph,
    path_order,
    primed_string,
    string_edge_labels,
    string_tree,
)
from chainmail.trees import star_tree
from chainmail.verify import delta_L

from oracles import faces_by_predicate, forest_by_union_find, leaf_paths_brute, subsets


def test_double_directed_string_shape():
    G = double_directed_string(3)
    assert G.vertices == {1, 2, 3, 4}
    assert len(G.edges) == 6
    assert all((b, a) in G.edges for a, b in G.edges)


def test_string_labels_run_along_string():
    labels = string_edge_labels(2)
    assert labels == {(2, 1): 1, (1, 2): 2, (3, 2): 3, (2, 3): 4}


def test_forest_predicate_examples():
    assert is_directed_forest([])
    assert is_directed_forest([(1, 2), (2, 3)])
    assert not is_directed_forest([(1, 2), (2, 1)])
    assert not is_directed_forest([(1, 3), (2, 3)])
    assert not is_directed_forest([(1, 2), (2, 3), (3, 1)])
    with pytest.raises(ComplexError):
        is_directed_forest([(1, 5)], double_directed_string(2))


def test_delta_L_small_cases():
    assert delta_L(0).is_empty_complex
    assert delta_L(1).facets == {frozenset({1}), frozenset({2})}
    # minimal nonfaces of Delta(L_2): the two 2-cycles and the in-degree-2 pair at vertex 2
    assert delta_L(2).facets == {frozenset({1, 3}), frozenset({1, 4}), frozenset({2, 4})}


def test_delta_labels_map_back_to_edges():
    K = delta_complex(primed_string(2))
    assert K.labels == {1: (1, 2), 2: (2, 3), 3: (3, 2), 4: (4, 3)}


@st.composite
def small_digraphs(draw):
    n = draw(st.integers(1, 5))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=8)) if pairs else set()
    return DirectedGraph.from_edges(edges, range(1, n + 1))


@settings(max_examples=60)
@given(small_digraphs())
def test_delta_complex_matches_brute_force(G):
    K = delta_complex(G)
    label = {v: k for k, v in K.labels.items()}
    brute = faces_by_predicate(G.edges, lambda s: forest_by_union_find(list(s)))
    assert {frozenset(K.labels[i] for i in f) for f in K.faces()} == brute
    assert set(label) == set(G.edges)


@given(small_digraphs(), st.data())
def test_forest_predicate_matches_union_find(G, data):
    subset = data.draw(st.sets(st.sampled_from(sorted(G.edges)))) if G.edges else set()
    assert is_directed_forest(subset) == forest_by_union_find(list(subset))


def test_independence_complex_of_path_matches_brute():
    g = path_graph(5)
    brute = faces_by_predicate(g.vertices, lambda s: not any(e <= s for e in g.edges))
    assert {frozenset(f) for f in independence_complex(g).faces()} == brute


def test_tree_validation():
    with pytest.raises(ComplexError):
        Tree(frozenset({1, 2, 3}), frozenset({frozenset({1, 2})}))
    with pytest.raises(ComplexError):
        Tree.from_edges([(1, 2), (3, 4), (4, 5)], range(1, 6))
    assert string_tree(0).vertices == frozenset()


def test_augment_conventions():
    e = augment(string_tree(0))
    assert e.vertices == {1, 2} and e.edges == {frozenset({1, 2})}
    single = augment(string_tree(1))
    assert single.vertices == {1, 2, 3} and leaves(single) == [2, 3]
    star = augment(star_tree(3))
    assert leaves(star) == [5, 6, 7]
    assert star.edges >= {frozenset({2, 5}), frozenset({3, 6}), frozenset({4, 7})}


def test_direct_augmented_orients_pendants_inward():
    G = direct_augmented(string_tree(2))
    assert G.edges == {(3, 1), (1, 2), (2, 1), (4, 2)}
    with pytest.raises(ComplexError):
        direct_augmented(string_tree(0))


def test_direct_augmented_string_is_primed_string_up_to_relabel():
    for t in range(1, 6):
        T = string_tree(t)
        pos = {v: i + 1 for i, v in enumerate(path_order(augment(T)))}
        G = direct_augmented(T)
        assert {(pos[a], pos[b]) for a, b in G.edges} == primed_string(t).edges


@given(st.integers(2, 9), st.integers(0, 10_000))
def test_leaf_paths_match_brute(n, seed):
    from chainmail.trees import random_tree

    T = random_tree(n, seed)
    assert sorted(leaf_paths(T)) == leaf_paths_brute(T.adjacency())


def test_path_order():
    assert path_order(augment(string_tree(2))) == (3, 1, 2, 4)
    with pytest.raises(ComplexError):
        path_order(star_tree(3))


def test_graph_text_round_trip():
    for G in (star_tree(3), double_directed_string(2), Graph(frozenset({1, 2, 9}), frozenset({frozenset({1, 2})}))):
        H = loads_graph(dumps_graph(G))
        assert (H.vertices, H.edges) == (G.vertices, G.edges)
    assert isinstance(loads_graph(dumps_graph(star_tree(2)), as_tree=True), Tree)


def test_directed_forest_count_on_string():
    # every subset of a directed path is a forest
    G = DirectedGraph.from_edges([(1, 2), (2, 3), (3, 4)])
    assert len(delta_complex(G).faces()) == len(list(subsets(G.edges)))
