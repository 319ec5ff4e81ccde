import pytest

from wordrep.canon import are_isomorphic, canonical_form
from wordrep.catalog import (
    MINIMAL,
    REPRESENTABLE,
    a_graph,
    b_graph,
    catalog,
    complete,
    get,
    interval_split,
    k_ell_k,
    k_i_ell,
    k_prime,
    k_triangle,
    m_graph,
    split_from_neighbourhoods,
    t_graph,
)
from wordrep.enumeration import is_minimal_nonrep
from wordrep.graph import complete_graph, split_partition
from wordrep.orientation import find_semi_transitive
from wordrep.verdict import decide_graph
from wordrep.words import represents


def test_k_triangle_counts():
    g = k_triangle(3)
    assert (g.n, g.num_edges) == (6, 9)
    for ell in range(3, 11):
        g = k_triangle(ell)
        assert g.n == 2 * ell and g.num_edges == ell * (ell - 1) // 2 + 2 * ell
    with pytest.raises(ValueError):
        k_triangle(2)


def test_k_triangle_representable():
    for ell in range(3, 8):
        assert decide_graph(k_triangle(ell)).representable


def test_complete_is_a_permutation_graph():
    for n in range(1, 7):
        assert represents(tuple(range(n)), complete(n))


def test_a_graph_counts_and_shape():
    for ell in range(4, 11):
        g = a_graph(ell)
        assert g.n == 2 * ell - 1
        assert g.num_edges == ell * (ell - 1) // 2 + 2 * (ell - 1)
        p = split_partition(g)
        assert {g.label(c) for c in p.clique} == {str(i) for i in range(1, ell + 1)}
    with pytest.raises(ValueError):
        a_graph(3)


def test_a_graph_identities():
    assert are_isomorphic(a_graph(4), t_graph(1))
    assert are_isomorphic(a_graph(5), t_graph(5))
    for ell in range(4, 7):
        assert not decide_graph(a_graph(ell)).representable


def test_k_ell_k():
    assert decide_graph(k_ell_k(5, 2)).representable
    assert decide_graph(k_ell_k(5, 3)).representable
    with pytest.raises(ValueError):
        k_ell_k(4, 3)
    with pytest.raises(ValueError):
        k_ell_k(5, 1)


def test_gluing_constructions():
    assert are_isomorphic(k_prime(2), complete_graph(3))
    for ell in range(3, 7):
        for i in range(2, ell + 1):
            assert are_isomorphic(k_i_ell(ell, i), k_i_ell(ell, 2))
    for n in range(4, 8):
        assert not decide_graph(b_graph(n)).representable
    for bad in (lambda: k_prime(1), lambda: m_graph(3), lambda: b_graph(3), lambda: k_i_ell(4, 5)):
        with pytest.raises(ValueError):
            bad()


def test_t_graphs_shape_and_minimality():
    for i in range(5, 10):
        assert split_partition(t_graph(i)).m == 5
    forms = {canonical_form(t_graph(i)) for i in range(5, 10)}
    assert len(forms) == 5
    for i in range(1, 10):
        assert not decide_graph(t_graph(i)).representable
        assert is_minimal_nonrep(t_graph(i))
    with pytest.raises(ValueError):
        t_graph(10)


def test_t5_to_t9_neighbourhoods():
    expected = {
        5: {"6": {1, 2}, "7": {2, 3}, "8": {3, 4}, "9": {4, 1}},
        6: {"6": {1, 2, 3}, "7": {1, 2}, "8": {1, 4}, "9": {2, 5}},
        7: {"6": {1, 3}, "7": {2, 4}, "8": {1, 2, 5}, "9": {3, 4, 5}},
        8: {"6": {1, 3}, "7": {2, 4}, "8": {1, 2, 5}, "9": {1, 2, 3, 4}},
        9: {"6": {1, 3}, "7": {1, 4}, "8": {2, 3}, "9": {1, 2, 3, 5}, "10": {1, 3, 4, 5}},
    }
    for i, hoods in expected.items():
        g = t_graph(i)
        for name, hood in hoods.items():
            assert {int(g.label(c)) for c in g.neighbors(g.vertex(name))} == hood


def test_interval_split():
    for m, d in ((5, 4), (6, 5)):
        g = interval_split(m, d)
        assert g.n == m + 2 and decide_graph(g).representable
    with pytest.raises(ValueError):
        interval_split(5, 2)


def test_catalog_verdicts_match_both_deciders():
    for entry in catalog():
        v = decide_graph(entry.graph)
        if entry.expected_verdict == REPRESENTABLE:
            assert v.representable, entry.name
        else:
            assert v.representable is False, entry.name
        if entry.expected_verdict == MINIMAL:
            assert is_minimal_nonrep(entry.graph), entry.name
        if entry.graph.n <= 10:
            assert (find_semi_transitive(entry.graph) is not None) == (entry.expected_verdict == REPRESENTABLE)


def test_get_by_name_and_pattern():
    assert get("T6") == t_graph(6)
    assert get("Ktri7") == k_triangle(7)
    assert get("K'6") == k_prime(6)
    assert get("K6^2") == k_ell_k(6, 2)
    assert get("K6_3") == k_i_ell(6, 3)
    assert get("Interval7,5") == interval_split(7, 5)
    with pytest.raises(KeyError):
        get("nope")


def test_split_from_neighbourhoods_errors():
    with pytest.raises(ValueError):
        split_from_neighbourhoods(3, [[4]])
    with pytest.raises(ValueError):
        split_from_neighbourhoods(3, [[1]], ["a", "b"])
