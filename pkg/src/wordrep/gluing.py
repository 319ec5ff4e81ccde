"""Gluing two graphs along cliques, and the two counterexample constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canon import are_isomorphic, find_induced
from .catalog import a_graph, b_graph, k_i_ell, k_prime, k_triangle, m_graph
from .graph import Graph, from_edge_list, induced_subgraph, is_clique
from .verdict import Verdict, decide_graph
from .words import represents

__all__ = [
    "GlueSpec",
    "apex_gluing",
    "word_gluing",
    "GluingReport",
    "WordGluingReport",
    "experiment_6_1",
    "experiment_6_2",
    "glue",
    "k_prime_word",
    "m_word",
    "witness_is_apex_graph",
    "find_apex_witness",
]


@dataclass(frozen=True)
class GlueSpec:
    """Identify ``c1[t]`` in ``g1`` with ``c2[t]`` in ``g2`` for every ``t``."""

    g1: Graph
    c1: tuple[int, ...]
    g2: Graph
    c2: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.c1) != len(self.c2):
            raise ValueError("glued cliques must have equal size")
        for g, c in ((self.g1, self.c1), (self.g2, self.c2)):
            if len(set(c)) != len(c):
                raise ValueError("clique list has duplicates")
            if any(not 0 <= v < g.n for v in c):
                raise ValueError("clique list names a vertex outside its graph")
            if not is_clique(g, c):
                raise ValueError("vertex list does not induce a clique")


def glue(spec: GlueSpec) -> Graph:
    """Graph1's vertices keep their ids; graph2's unglued vertices follow in id order."""
    g1, g2 = spec.g1, spec.g2
    where = dict(zip(spec.c2, spec.c1))
    nxt = g1.n
    for v in range(g2.n):
        if v not in where:
            where[v] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(where[u], where[v]) for u, v in g2.edges()]
    labels = None
    if g1.labels is not None or g2.labels is not None:
        names = [g1.label(v) for v in range(g1.n)] + [""] * (nxt - g1.n)
        for v in range(g2.n):
            if where[v] >= g1.n:
                names[where[v]] = g2.label(v)
        labels = names if len(set(names)) == len(names) else None
    return from_edge_list(nxt, set(edges), labels)


@dataclass(frozen=True)
class GluingReport:
    ell: int
    i: int
    graph: Graph
    verdict: Verdict
    witness: tuple[int, ...] | None
    witness_labels: tuple[str, ...] | None


def apex_gluing(ell: int, i: int) -> GluingReport:
    """Glue the triangle graph on ``K_l`` with ``K_l + x~{1,i}``, vertex ``j`` onto ``j``.

    For ``2 < i < l`` the vertices ``1..i+1``, ``1'..(i-1)'`` and ``x`` induce the
    apex graph on ``i+1`` clique vertices, so the result is not representable.
    """
    if ell < 4:
        raise ValueError("l must be at least 4")
    if not 2 <= i <= ell:
        raise ValueError(f"need 2 <= i <= l, got i={i}, l={ell}")
    tri = k_triangle(ell)
    kil = k_i_ell(ell, i)
    clique = list(range(ell))
    g = glue(GlueSpec(tri, tuple(clique), kil, tuple(clique)))
    verdict = decide_graph(g)
    witness = labels = None
    if 2 < i < ell:
        names = [str(c) for c in range(1, i + 2)] + [f"{c}'" for c in range(1, i)] + ["x"]
        witness = tuple(sorted(g.vertex(s) for s in names))
        labels = tuple(g.label(v) for v in witness)
    return GluingReport(ell, i, g, verdict, witness, labels)


def witness_is_apex_graph(report: GluingReport) -> bool:
    """The recorded witness set induces the apex graph on ``i+1`` clique vertices."""
    if report.witness is None:
        return False
    return are_isomorphic(induced_subgraph(report.graph, report.witness), a_graph(report.i + 1))


def k_prime_word(n: int) -> list[str]:
    """``x 1 2 x 3 4 ... n``."""
    return ["x", "1", "2", "x"] + [str(c) for c in range(3, n + 1)]


def m_word(n: int) -> list[str]:
    """``y 1 z 4 y 2 z 3 5 6 ... n``."""
    return ["y", "1", "z", "4", "y", "2", "z", "3"] + [str(c) for c in range(5, n + 1)]


@dataclass(frozen=True)
class WordGluingReport:
    n: int
    k_prime_word_ok: bool
    m_word_ok: bool
    b_verdict: Verdict
    glue_is_b: bool

    @property
    def passed(self) -> bool:
        return (
            self.k_prime_word_ok
            and self.m_word_ok
            and self.b_verdict.representable is False
            and self.glue_is_b
        )


def _word_ids(g: Graph, letters: Sequence[str]) -> tuple[int, ...]:
    return tuple(g.vertex(s) for s in letters)


def word_gluing(n: int) -> WordGluingReport:
    """Two representable graphs whose glue along ``1..n`` is not representable."""
    if n < 4:
        raise ValueError("n must be at least 4")
    kp = k_prime(n)
    mg = m_graph(n)
    bg = b_graph(n)
    kp_ok = represents(_word_ids(kp, k_prime_word(n)), kp)
    m_ok = represents(_word_ids(mg, m_word(n)), mg)
    clique = tuple(range(n))
    glued = glue(GlueSpec(kp, clique, mg, clique))
    return WordGluingReport(n, kp_ok, m_ok, decide_graph(bg), are_isomorphic(glued, bg))


experiment_6_1 = apex_gluing
experiment_6_2 = word_gluing


def find_apex_witness(g: Graph, i: int) -> tuple[int, ...] | None:
    """Any induced copy of the apex graph on ``i`` clique vertices."""
    return find_induced(g, a_graph(i))
