import pytest

from wordrep.canon import are_isomorphic, contains_induced
from wordrep.catalog import a_graph, b_graph, complete, k_prime, k_triangle, m_graph, t_graph
from wordrep.gluing import (
    GlueSpec,
    experiment_6_1,
    experiment_6_2,
    find_apex_witness,
    glue,
    witness_is_apex_graph,
)
from wordrep.graph import complete_graph, induced_subgraph, path_graph
from wordrep.verdict import decide_graph


def test_glue_examples():
    k3 = complete_graph(3)
    assert are_isomorphic(glue(GlueSpec(k3, (0, 1, 2), k3, (0, 1, 2))), k3)
    clique = (0, 1, 2, 3)
    assert are_isomorphic(glue(GlueSpec(k_prime(4), clique, m_graph(4), clique)), b_graph(4))
    edge = complete_graph(2)
    p3 = glue(GlueSpec(edge, (1,), edge, (0,)))
    assert are_isomorphic(p3, path_graph(3)) and decide_graph(p3).representable


def test_glue_errors():
    k3 = complete_graph(3)
    with pytest.raises(ValueError):
        GlueSpec(k3, (0, 1), k3, (0,))
    with pytest.raises(ValueError):
        GlueSpec(path_graph(3), (0, 2), k3, (0, 1))
    with pytest.raises(ValueError):
        GlueSpec(k3, (0, 0), k3, (0, 1))
    with pytest.raises(ValueError):
        GlueSpec(k3, (0, 5), k3, (0, 1))


@pytest.mark.parametrize(
    "g1, c1, g2, c2",
    [
        (k_triangle(4), (0, 1, 2), t_graph(2), (0, 1, 2)),
        (k_prime(5), (0, 1), m_graph(5), (3, 4)),
        (complete(4), (3, 0), k_triangle(3), (1, 2)),
    ],
)
def test_glue_counts(g1, c1, g2, c2):
    g = glue(GlueSpec(g1, c1, g2, c2))
    k = len(c1)
    assert g.n == g1.n + g2.n - k
    for a, b in zip(c1, c2):
        assert g.degree(a) == g1.degree(a) + g2.degree(b) - (k - 1)


def test_glue_inherits_non_representability():
    for i in (1, 2, 6):
        t = t_graph(i)
        clique = (t.vertex("1"), t.vertex("2")) if i != 1 else (t.vertex("2"), t.vertex("3"))
        g = glue(GlueSpec(t, clique, k_triangle(3), (0, 1)))
        assert contains_induced(g, t)
        assert not decide_graph(g).representable


def test_experiment_triangle_examples():
    r = experiment_6_1(5, 4)
    assert r.verdict.representable is False
    assert contains_induced(r.graph, a_graph(4))
    assert experiment_6_1(5, 2).verdict.representable
    assert experiment_6_1(5, 5).verdict.representable


@pytest.mark.parametrize("ell", [5, 6])
def test_experiment_triangle_depends_on_i(ell):
    for i in range(2, ell + 1):
        r = experiment_6_1(ell, i)
        assert (r.verdict.representable is False) == (2 < i < ell)
        if 2 < i < ell:
            # the named vertex set induces the apex graph on i+1 clique vertices
            assert witness_is_apex_graph(r)
            assert are_isomorphic(induced_subgraph(r.graph, r.witness), a_graph(i + 1))
            assert find_apex_witness(r.graph, i + 1) is not None


def test_experiment_triangle_bounds():
    with pytest.raises(ValueError):
        experiment_6_1(3, 2)
    with pytest.raises(ValueError):
        experiment_6_1(5, 6)


@pytest.mark.parametrize("n", [4, 5, 8])
def test_experiment_words(n):
    r = experiment_6_2(n)
    assert r.k_prime_word_ok and r.m_word_ok
    assert r.b_verdict.representable is False
    assert r.glue_is_b and r.passed


def test_experiment_words_bounds():
    with pytest.raises(ValueError):
        experiment_6_2(3)
