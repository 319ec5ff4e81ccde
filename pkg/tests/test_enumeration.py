import json
import random
from itertools import combinations
from math import comb

import pytest

from wordrep.canon import are_isomorphic, canonical_form, contains_induced
from wordrep.catalog import b_graph, complete, split_from_neighbourhoods, t_graph
from wordrep.enumeration import (
    EnumConfig,
    candidate_count,
    candidates,
    emit_verdicts,
    find_minimal_nonrep,
    is_minimal_nonrep,
    parse_caps,
    run_enumeration,
    run_enumeration_by_decide,
)
from wordrep.graph import induced_subgraph, split_partition, to_graph6
from wordrep.split import decide, degree_cap
from wordrep.verdict import decide_graph


@pytest.fixture(scope="module")
def report5():
    return find_minimal_nonrep(5)


def _families(g):
    p = split_partition(g)
    return frozenset(frozenset(g.neighbors(v)) for v in p.independent)


def test_zero_caps_give_only_the_clique():
    out = list(candidates(EnumConfig(4, {2: 0, 3: 0})))
    assert len(out) == 1 and out[0] == complete(4)


def test_m4_candidate_count_and_set():
    cfg = EnumConfig(4)
    assert cfg.caps == {2: 5, 3: 3}
    graphs = list(candidates(cfg))
    pairs = sum(comb(6, k) for k in range(6))
    triples = sum(comb(4, k) for k in range(4))
    assert len(graphs) == pairs * triples == 945 == candidate_count(cfg)
    # brute-force oracle: every subset of pairs and triples within the caps
    expected = set()
    two = list(combinations(range(4), 2))
    three = list(combinations(range(4), 3))
    for a in range(6):
        for fa in combinations(two, a):
            for b in range(4):
                for fb in combinations(three, b):
                    expected.add(frozenset(frozenset(h) for h in fa + fb))
    assert {_families(g) for g in graphs} == expected


def test_m5_candidate_count():
    # C(10,<=6)^2 * C(5,<=3)
    assert candidate_count(EnumConfig(5)) == 848 * 848 * 26 == 18_696_704


def test_candidate_order_is_deterministic():
    cfg = EnumConfig(4)
    assert [to_graph6(g) for g in candidates(cfg)] == [to_graph6(g) for g in candidates(cfg)]


def test_config_validation():
    with pytest.raises(ValueError):
        EnumConfig(2)
    with pytest.raises(ValueError):
        EnumConfig(7)
    with pytest.raises(ValueError):
        EnumConfig(4, {4: 1})
    with pytest.raises(ValueError):
        EnumConfig(4, {2: -1})
    with pytest.raises(ValueError):
        EnumConfig(4, jobs=0)
    assert EnumConfig(5).covers_all_minimal
    assert not EnumConfig(5, {2: 1}).covers_all_minimal
    assert parse_caps("2:6,4:3", 5) == {2: 6, 4: 3}
    assert parse_caps("6,6,3", 5) == {2: 6, 3: 6, 4: 3}
    with pytest.raises(ValueError):
        parse_caps("5:1", 5)


def test_is_minimal_examples():
    assert is_minimal_nonrep(t_graph(1))
    assert not is_minimal_nonrep(complete(5))
    with pytest.raises(ValueError):
        is_minimal_nonrep(b_graph(5))
    b5 = b_graph(5)
    assert not is_minimal_nonrep(b5, allow_nonsplit=True)
    b4_like = induced_subgraph(b5, [v for v in range(b5.n) if v != b5.vertex("5")])
    assert are_isomorphic(b4_like, b_graph(4))
    assert decide_graph(b4_like).representable is False
    assert is_minimal_nonrep(b_graph(4), allow_nonsplit=True)


def test_m3_finds_nothing():
    r = find_minimal_nonrep(3)
    assert r.minimal == () and r.non_representable == 0


def test_m4_reproduces_t1_to_t4():
    r = find_minimal_nonrep(4)
    assert len(r.minimal) == 4
    for i in range(1, 5):
        assert sum(are_isomorphic(mg.graph, t_graph(i)) for mg in r.minimal) == 1


def test_m5_reproduces_t5_to_t9(report5):
    assert len(report5.minimal) == 5
    for i in range(5, 10):
        assert sum(are_isomorphic(mg.graph, t_graph(i)) for mg in report5.minimal) == 1
    for mg in report5.minimal:
        assert split_partition(mg.graph).m == 5
        assert is_minimal_nonrep(mg.graph)
        assert not any(contains_induced(mg.graph, t_graph(i)) for i in range(1, 5))


def test_minimal_set_is_sorted_and_deduplicated(report5):
    keys = [mg.canonical for mg in report5.minimal]
    assert keys == sorted(set(keys))
    assert all(mg.canonical == canonical_form(mg.graph) for mg in report5.minimal)


@pytest.mark.parametrize("m", [3, 4])
def test_engine_matches_decide_route(m):
    fast = run_enumeration(EnumConfig(m))
    slow = run_enumeration_by_decide(EnumConfig(m))
    assert (fast.total, fast.representable, fast.non_representable) == (
        slow.total, slow.representable, slow.non_representable)
    assert [mg.canonical for mg in fast.minimal] == [mg.canonical for mg in slow.minimal]
    assert fast.max_representable_per_degree == slow.max_representable_per_degree


def test_engine_verdicts_match_decide_on_m5_slice():
    cfg = EnumConfig(5, {2: 2, 3: 1, 4: 1})
    n = 0
    for (g6, verdict), g in zip(emit_verdicts(cfg), candidates(cfg)):
        assert g6 == to_graph6(g)
        assert (verdict == "representable") == decide(g).representable
        n += 1
    assert n == candidate_count(cfg) == 56 * 11 * 6


def test_emit_lines_for_m4():
    lines = list(emit_verdicts(EnumConfig(4)))
    assert len(lines) == 945
    assert sum(v == "representable" for _, v in lines) == run_enumeration(EnumConfig(4)).representable


@pytest.mark.parametrize("m", [3, 4, 5])
def test_caps_hold_for_representable_candidates(m, report5):
    r = report5 if m == 5 else find_minimal_nonrep(m)
    for d, c in r.max_representable_per_degree.items():
        assert c <= degree_cap(m, d)
        assert c == degree_cap(m, d)


def test_report_is_deterministic_across_workers(report5):
    other = run_enumeration(EnumConfig(5, jobs=2))
    a, b = report5.to_json(), other.to_json()
    for d in (a, b):
        d.pop("wall_time_s")
        d.pop("jobs")
    assert a == b


def test_report_json(report5):
    doc = json.loads(report5.dumps())
    assert doc["schema"] == 1
    assert doc["clique_size"] == 5
    assert doc["total_candidates"] == 18_696_704
    assert doc["representable"] + doc["non_representable"] == doc["total_candidates"]
    assert len(doc["minimal"]) == 5
    first = doc["minimal"][0]
    assert set(first) >= {"graph6", "canonical", "edges"}


def test_every_non_representable_candidate_contains_a_known_minimal_graph():
    m4 = [mg.graph for mg in find_minimal_nonrep(4).minimal]
    for g in candidates(EnumConfig(4)):
        if not decide(g).representable:
            assert any(contains_induced(g, h) for h in m4)
    patterns = [t_graph(i) for i in range(1, 10)]
    rng = random.Random(0)
    univ = {d: list(combinations(range(1, 6), d)) for d in (2, 3, 4)}
    checked = 0
    while checked < 10_000:
        fam = []
        for d in (2, 3, 4):
            fam += rng.sample(univ[d], rng.randint(0, degree_cap(5, d) + 1))
        g = split_from_neighbourhoods(5, fam)
        if decide(g).representable:
            continue
        checked += 1
        assert any(contains_induced(g, h) for h in patterns)


def test_small_caps_report_is_flagged_incomplete():
    r = run_enumeration(EnumConfig(4, {2: 1, 3: 1}))
    assert not r.complete and r.total == 7 * 5
