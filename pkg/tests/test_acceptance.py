"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed at the end.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from conftest import ACCEPTANCE
from wordrep.canon import are_isomorphic
from wordrep.catalog import (
    catalog,
    cycle,
    interval_split,
    k_ell_k,
    split_from_neighbourhoods,
    t_graph,
)
from wordrep.enumeration import EnumConfig, find_minimal_nonrep, is_minimal_nonrep, run_enumeration
from wordrep.gluing import experiment_6_1, experiment_6_2
from wordrep.graph import split_partition
from wordrep.orientation import find_semi_transitive, is_semi_transitive
from wordrep.split import (
    clique_degree_predicate,
    decide,
    degree_cap,
    large_degree_obstruction,
    orientation_of_witness,
    reduce_assumptions,
)
from wordrep.threshold import is_threshold, random_threshold, reduction_certificate
from wordrep.words import graph_of_word, represents


@contextmanager
def criterion(k, text, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[k] = (ok, f"{text} [{elapsed:.2f}s]")
        print(f"{'PASS' if ok else 'FAIL'} criterion {k}: {text}")


def exhaustive_split_suite():
    """Every K_m (m = 3, 4) plus at most four distinct neighbourhoods of sizes 2..m-1."""
    for m in (3, 4):
        hoods = [h for s in range(2, m) for h in combinations(range(1, m + 1), s)]
        for k in range(5):
            for fam in combinations(hoods, k):
                yield split_from_neighbourhoods(m, fam)


def random_clique5_suite(count=1000, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(1, 5)
        hoods = [rng.sample(range(1, 6), rng.randint(1, 4)) for _ in range(k)]
        yield split_from_neighbourhoods(5, hoods)


def test_c1_word_check():
    with criterion(1, "1521324354 represents C5 and induces exactly its edges", limit=1):
        c5 = cycle(5)
        word = [c5.vertex(c) for c in "1521324354"]
        assert represents(word, c5)
        assert graph_of_word([int(c) for c in "1521324354"]) == c5


def test_c2_catalog_verdicts():
    with criterion(2, "T1..T9 non-representable and minimal", limit=300):
        for i in range(1, 10):
            g = t_graph(i)
            assert not decide(g).representable, f"T{i}"
            assert is_minimal_nonrep(g), f"T{i}"


def test_c3_cross_oracle():
    with criterion(3, "exhaustive orientation search agrees with decide on T1..T9", limit=30 * 60):
        for i in range(1, 10):
            g = t_graph(i)
            start = time.perf_counter()
            assert find_semi_transitive(g) is None, f"T{i}"
            assert time.perf_counter() - start < (30 * 60 if i == 9 else 60)
            assert not decide(g).representable


def test_c4_enumeration_m3():
    with criterion(4, "clique 3: no minimal non-representable graph", limit=10):
        assert find_minimal_nonrep(3).minimal == ()


def _matches(report, indices):
    if len(report.minimal) != len(indices):
        return False
    return all(
        sum(are_isomorphic(mg.graph, t_graph(i)) for mg in report.minimal) == 1 for i in indices
    )


def test_c5_enumeration_m4():
    with criterion(5, "clique 4: exactly four minimal graphs, T1..T4", limit=120):
        assert _matches(find_minimal_nonrep(4), range(1, 5))


def test_c6_enumeration_m5():
    with criterion(6, "clique 5: exactly five minimal graphs, T5..T9", limit=30 * 60):
        r = find_minimal_nonrep(5)
        assert r.complete
        assert all(split_partition(mg.graph).m == 5 for mg in r.minimal)
        assert _matches(r, range(5, 10))


def test_c7_oracle_sweep():
    with criterion(7, "decide equals orientation search: exhaustive m=3,4 plus 1000 random m=5", limit=20 * 60):
        exhaustive = list(exhaustive_split_suite())
        assert len(exhaustive) == 8 + 386
        for g in exhaustive:
            dec = decide(g)
            assert dec.representable == (find_semi_transitive(g) is not None)
            if dec.representable:
                assert is_semi_transitive(orientation_of_witness(g, dec.witness))
        for g in random_clique5_suite():
            assert decide(g).representable == (find_semi_transitive(g) is not None)


def test_c8_threshold():
    with criterion(8, "500 random threshold graphs representable with certificates"):
        rng = random.Random(8)
        for seed in range(500):
            g = random_threshold(rng.randint(1, 12), seed)
            assert is_threshold(g) is not None
            assert len(reduction_certificate(g)) == g.n - 1
            assert decide(g).representable


def test_c9_degree_caps():
    with criterion(9, "representable candidates respect the degree caps; cap constructions meet them"):
        for m in (3, 4, 5):
            r = run_enumeration(EnumConfig(m))
            for d, c in r.max_representable_per_degree.items():
                assert c <= degree_cap(m, d)
        for m in range(3, 8):
            for d in range(2, m):
                g = k_ell_k(m, d) if 2 * d <= m + 1 else interval_split(m, d)
                p = split_partition(g)
                count = sum(1 for v in p.independent if g.degree(v) == d)
                assert count == degree_cap(m, d)
                assert decide(g).representable


def test_c10_gluing():
    with criterion(10, "triangle gluing depends on i; word gluing passes for n=4..8", limit=300):
        for ell in (5, 6):
            for i in range(2, ell + 1):
                r = experiment_6_1(ell, i)
                assert (r.verdict.representable is False) == (2 < i < ell), (ell, i)
        for n in range(4, 9):
            assert experiment_6_2(n).passed, n


def test_c11_sufficient_conditions():
    with criterion(11, "degree predicate and large-degree obstruction are sound on every test graph"):
        graphs = list(exhaustive_split_suite()) + list(random_clique5_suite())
        graphs += [e.graph for e in catalog() if split_partition(e.graph) is not None]
        positives = negatives = 0
        for g in graphs:
            p = split_partition(g)
            verdict = decide(g, p).representable
            if clique_degree_predicate(g, p):
                positives += 1
                assert verdict
            rg, rp, _, _ = reduce_assumptions(g, p, clique_twins=False)
            if large_degree_obstruction(rg, rp):
                negatives += 1
                assert not verdict
        assert positives > 0 and negatives > 0


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
