import random
from itertools import combinations

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_isomorphism_classes, to_nx
from test_graph import graphs
from wordrep.canon import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    contains_induced,
    find_induced,
)
from wordrep.catalog import a_graph, t_graph
from wordrep.gluing import experiment_6_1
from wordrep.graph import complete_graph, cycle_graph, empty_graph, from_edge_list, induced_subgraph, path_graph


def test_relabeled_cycles_share_a_form():
    c = cycle_graph(5)
    assert canonical_form(c) == canonical_form(c.relabel([2, 4, 1, 0, 3]))


def test_cycle_vs_path():
    assert canonical_form(cycle_graph(5)) != canonical_form(path_graph(5))


def test_eleven_classes_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    labelled = [from_edge_list(4, [p for k, p in enumerate(pairs) if mask >> k & 1]) for mask in range(64)]
    forms = {canonical_form(g) for g in labelled}
    assert len(forms) == 11
    assert brute_isomorphism_classes(labelled) == 11


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_form_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_matches_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_hard_regular_graphs():
    # strongly regular and vertex-transitive graphs defeat plain refinement
    pet = from_edge_list(10, list(nx.petersen_graph().edges()))
    rng = random.Random(3)
    perm = list(range(10))
    rng.shuffle(perm)
    assert canonical_form(pet) == canonical_form(pet.relabel(perm))
    prism = from_edge_list(10, list(nx.circular_ladder_graph(5).edges()))
    assert not are_isomorphic(pet, prism)
    c10 = cycle_graph(10)
    two_c5 = from_edge_list(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert not are_isomorphic(c10, two_c5)


def test_canonical_labeling_is_a_permutation():
    g = t_graph(9)
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(g.n))
    assert are_isomorphic(canonical_graph(g), g)


def test_form_gives_a_total_order():
    forms = sorted(canonical_form(t_graph(i)) for i in range(1, 10))
    assert len(set(forms)) == 9


def test_contains_induced_examples():
    assert contains_induced(t_graph(1), complete_graph(4))
    assert not contains_induced(complete_graph(5), empty_graph(2))
    g4 = experiment_6_1(5, 4).graph
    assert contains_induced(g4, a_graph(4))


@given(graphs(max_n=8), graphs(max_n=4))
def test_find_induced_witness(host, pattern):
    w = find_induced(host, pattern)
    expected = nx.algorithms.isomorphism.GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_isomorphic()
    assert (w is not None) == expected
    if w is not None:
        assert len(set(w)) == pattern.n
        for a in range(pattern.n):
            for b in range(a + 1, pattern.n):
                assert host.has_edge(w[a], w[b]) == pattern.has_edge(a, b)
        assert are_isomorphic(induced_subgraph(host, sorted(w)), pattern)
