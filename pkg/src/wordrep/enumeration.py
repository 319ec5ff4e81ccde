"""Exhaustive search for minimal non-representable split graphs on a fixed clique.

A candidate is ``K_m`` plus a family of independent vertices with pairwise
distinct neighbourhoods of sizes ``2..m-1``. Lower degrees and twins never
matter for minimality, and a neighbourhood of size ``m`` would enlarge the
clique.

The engine tabulates, for every neighbourhood ``N`` and path order ``p``,
whether ``N`` is classifiable under ``p`` and whether two neighbourhoods
respect each other's restrictions under ``p``; both are stored as bitmasks over
the ``m!`` orders. A family is representable iff the AND of its pairwise masks
is nonzero. Representability is hereditary, so a depth-first walk only ever
descends into representable families; every non-representable family with a
representable parent becomes a minimality candidate.
"""

from __future__ import annotations

import json
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, Mapping

from .canon import canonical_form
from .graph import (
    Graph,
    SplitPartition,
    induced_subgraph,
    maximum_cliques,
    split_partition,
    to_graph6,
)
from .split import _classify_mask, _conflict, decide, degree_cap, large_degree_obstruction

__all__ = [
    "EnumConfig",
    "EnumReport",
    "MinimalGraph",
    "candidate_count",
    "candidates",
    "emit_verdicts",
    "find_minimal_nonrep",
    "is_minimal_nonrep",
    "parse_caps",
    "run_enumeration",
    "run_enumeration_by_decide",
]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class EnumConfig:
    """``caps[d]`` bounds how many independent vertices of degree ``d`` a candidate has.

    The default is one more than :func:`degree_cap`. A graph exceeding a cap by
    two already contains a non-representable proper induced subgraph at one
    over, so the default envelope holds every minimal graph.
    """

    m: int
    caps: Mapping[int, int] | None = None
    jobs: int = 1
    emit: bool = False

    def __post_init__(self) -> None:
        if not 3 <= self.m <= 6:
            raise ValueError(f"clique size must be in 3..6, got {self.m}")
        caps = {d: degree_cap(self.m, d) + 1 for d in range(2, self.m)}
        if self.caps is not None:
            for d, c in self.caps.items():
                if d not in caps:
                    raise ValueError(f"cap given for degree {d} outside 2..{self.m - 1}")
                if c < 0:
                    raise ValueError("caps must be non-negative")
                caps[d] = c
        object.__setattr__(self, "caps", dict(sorted(caps.items())))
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    @property
    def covers_all_minimal(self) -> bool:
        """Whether the caps reach the envelope that provably contains every minimal graph."""
        return all(c >= degree_cap(self.m, d) + 1 for d, c in self.caps.items())


def parse_caps(text: str, m: int) -> dict[int, int]:
    """``"2:6,3:6,4:3"`` or positional ``"6,6,3"`` for degrees ``2, 3, ...``."""
    caps = {}
    parts = [p.strip() for p in text.split(",") if p.strip()]
    for k, part in enumerate(parts):
        if ":" in part:
            d, c = part.split(":", 1)
            caps[int(d)] = int(c)
        else:
            caps[k + 2] = int(part)
    if any(not 2 <= d <= m - 1 for d in caps):
        raise ValueError(f"cap degrees must lie in 2..{m - 1}")
    return caps


# -- tables -------------------------------------------------------------


@dataclass(frozen=True)
class _Tables:
    m: int
    universe: tuple[int, ...]
    size: tuple[int, ...]
    feas: tuple[int, ...]
    compat: tuple[tuple[int, ...], ...]

    @property
    def top(self) -> int:
        """Number of leading universe entries of size ``m - 1``."""
        return self.size.count(self.m - 1)


@lru_cache(maxsize=None)
def _tables(m: int) -> _Tables:
    # largest neighbourhoods first, so parallel work splits on the degree-(m-1) family
    universe = tuple(
        sum(1 << t for t in c)
        for size in range(m - 1, 1, -1)
        for c in combinations(range(m), size)
    )
    orders = list(permutations(range(m)))
    shapes = []
    for hood in universe:
        row = []
        for perm in orders:
            pm = 0
            for k, t in enumerate(perm):
                if hood >> t & 1:
                    pm |= 1 << k
            row.append(_classify_mask(pm, m))
        shapes.append(row)
    feas = tuple(sum(1 << q for q, s in enumerate(row) if s is not None) for row in shapes)
    u = len(universe)
    compat = [[0] * u for _ in range(u)]
    for a in range(u):
        for b in range(a, u):
            mask = 0
            for q in range(len(orders)):
                x, y = shapes[a][q], shapes[b][q]
                if x is None or y is None:
                    continue
                if a != b and (_conflict(x, y) or _conflict(y, x)):
                    continue
                mask |= 1 << q
            compat[a][b] = compat[b][a] = mask
    return _Tables(
        m,
        universe,
        tuple(h.bit_count() for h in universe),
        feas,
        tuple(tuple(r) for r in compat),
    )


def _graph_of_family(m: int, hoods: list[int]) -> Graph:
    clique = (1 << m) - 1
    adj = [clique & ~(1 << t) for t in range(m)]
    for k, hood in enumerate(hoods):
        v = m + k
        adj.append(hood)
        for t in range(m):
            if hood >> t & 1:
                adj[t] |= 1 << v
    labels = tuple(str(i) for i in range(1, m + len(hoods) + 1))
    return Graph(m + len(hoods), tuple(adj), labels)


def _family_graph(tables: _Tables, family: int) -> Graph:
    return _graph_of_family(tables.m, [tables.universe[t] for t in range(len(tables.universe)) if family >> t & 1])


# -- candidate stream -----------------------------------------------------


def candidate_count(cfg: EnumConfig) -> int:
    """Number of candidates: a product of partial binomial sums, one per degree."""
    total = 1
    for d, cap in cfg.caps.items():
        total *= sum(comb(comb(cfg.m, d), k) for k in range(cap + 1))
    return total


def _walk(tables: _Tables, caps: Mapping[int, int]) -> Iterator[tuple[list[int], int]]:
    """Every cap-respecting family in depth-first order, with its surviving path orders."""
    u = len(tables.universe)
    everything = (1 << factorial(tables.m)) - 1
    counts = dict.fromkeys(caps, 0)
    chosen: list[int] = []

    def rec(start: int, comp: list[int], good: int) -> Iterator[tuple[list[int], int]]:
        yield chosen, good
        for t in range(start, u):
            d = tables.size[t]
            if counts[d] >= caps[d]:
                continue
            ct = tables.compat[t]
            nxt = comp[:]
            for s in range(t + 1, u):
                nxt[s] &= ct[s]
            counts[d] += 1
            chosen.append(t)
            yield from rec(t + 1, nxt, good & comp[t])
            chosen.pop()
            counts[d] -= 1

    yield from rec(0, list(tables.feas), everything)


def candidates(cfg: EnumConfig) -> Iterator[Graph]:
    """``K_m`` plus every cap-respecting family, in a fixed depth-first order."""
    tables = _tables(cfg.m)
    for chosen, _ in _walk(tables, cfg.caps):
        yield _graph_of_family(cfg.m, [tables.universe[t] for t in chosen])


def emit_verdicts(cfg: EnumConfig) -> Iterator[tuple[str, str]]:
    """``(graph6, verdict)`` for every candidate, in :func:`candidates` order."""
    tables = _tables(cfg.m)
    for chosen, good in _walk(tables, cfg.caps):
        g = _graph_of_family(cfg.m, [tables.universe[t] for t in chosen])
        yield to_graph6(g), "representable" if good else "non-representable"


# -- minimality -----------------------------------------------------------


def is_minimal_nonrep(g: Graph, *, allow_nonsplit: bool = False) -> bool:
    """Non-representable, and every single-vertex deletion is representable.

    Split graphs use the structural decider. Other graphs are refused unless
    ``allow_nonsplit`` is set, in which case the guarded exhaustive search
    decides each graph.
    """
    part = split_partition(g)
    if part is None:
        if not allow_nonsplit:
            raise ValueError("graph is not a split graph")
        return _is_minimal_general(g)
    if decide(g, part).representable:
        return False
    for v in range(g.n):
        h = induced_subgraph(g, [u for u in range(g.n) if u != v])
        if not decide(h).representable:
            return False
    return True


def _is_minimal_general(g: Graph) -> bool:
    from .verdict import decide_graph

    if decide_graph(g).representable is not False:
        return False
    return all(
        decide_graph(induced_subgraph(g, [u for u in range(g.n) if u != v])).representable
        for v in range(g.n)
    )


# -- the search -------------------------------------------------------------


@dataclass
class _Partial:
    representable: set[int] = field(default_factory=set)
    events: set[int] = field(default_factory=set)
    max_per_degree: dict[int, int] = field(default_factory=dict)


def _explore(
    tables: _Tables, caps: Mapping[int, int], family: int, lo: int, hi: int, split_tasks: bool
) -> tuple[_Partial, list[int]]:
    """Walk representable families over universe slots ``lo..hi`` on top of ``family``.

    With ``split_tasks`` the representable nodes are returned as task roots
    instead of being recorded.
    """
    part = _Partial()
    roots: list[int] = []
    u = len(tables.universe)
    counts = dict.fromkeys(caps, 0)
    comp = list(tables.feas)
    good = (1 << factorial(tables.m)) - 1
    for t in range(u):
        if family >> t & 1:
            counts[tables.size[t]] += 1
            good &= comp[t]
            ct = tables.compat[t]
            for s in range(u):
                comp[s] &= ct[s]

    # comp[t]: orders compatible with t and every chosen member; good: orders for the family
    def rec(fam: int, start: int, comp: list[int], good: int) -> None:
        if split_tasks:
            roots.append(fam)
        else:
            part.representable.add(fam)
            for d, c in counts.items():
                if c > part.max_per_degree.get(d, 0):
                    part.max_per_degree[d] = c
        for t in range(start, hi):
            d = tables.size[t]
            if counts[d] >= caps[d]:
                continue
            child = good & comp[t]
            if not child:
                part.events.add(fam | 1 << t)
                continue
            ct = tables.compat[t]
            nxt = comp[:]
            for s in range(t + 1, u):
                nxt[s] &= ct[s]
            counts[d] += 1
            rec(fam | 1 << t, t + 1, nxt, child)
            counts[d] -= 1

    rec(family, lo, comp, good)
    return part, roots


def _explore_task(args: tuple[int, tuple[tuple[int, int], ...], int]) -> _Partial:
    m, caps, root = args
    tables = _tables(m)
    part, _ = _explore(tables, dict(caps), root, tables.top, len(tables.universe), False)
    return part


@dataclass(frozen=True)
class MinimalGraph:
    graph: Graph
    canonical: bytes
    graph6: str

    def to_json(self) -> dict:
        part = split_partition(self.graph)
        return {
            "graph6": self.graph6,
            "canonical": self.canonical.hex(),
            "vertices": self.graph.n,
            "edges": [list(e) for e in self.graph.labeled_edges()],
            "independent_neighbourhoods": [
                sorted(self.graph.label(c) for c in self.graph.neighbors(v))
                for v in (part.independent if part else ())
            ],
        }


@dataclass(frozen=True)
class EnumReport:
    m: int
    caps: dict[int, int]
    total: int
    representable: int
    non_representable: int
    minimal: tuple[MinimalGraph, ...]
    candidate_events: int
    max_representable_per_degree: dict[int, int]
    complete: bool
    wall_time: float
    jobs: int = 1

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "clique_size": self.m,
            "caps": {str(d): c for d, c in self.caps.items()},
            "covers_all_minimal": self.complete,
            "total_candidates": self.total,
            "representable": self.representable,
            "non_representable": self.non_representable,
            "minimality_candidates": self.candidate_events,
            "max_representable_per_degree": {
                str(d): c for d, c in sorted(self.max_representable_per_degree.items())
            },
            "minimal": [g.to_json() for g in self.minimal],
            "wall_time_s": round(self.wall_time, 3),
            "jobs": self.jobs,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _minimal_graphs(tables: _Tables, rep: set[int], events: set[int]) -> list[Graph]:
    found: dict[bytes, Graph] = {}
    for fam in sorted(events):
        if any(fam & ~(1 << t) not in rep for t in range(len(tables.universe)) if fam >> t & 1):
            continue
        g = _family_graph(tables, fam)
        if not is_minimal_nonrep(g):
            continue
        key = canonical_form(g)
        found.setdefault(key, g)
    return [found[k] for k in sorted(found)]


def run_enumeration(cfg: EnumConfig) -> EnumReport:
    """Table-driven search; deterministic for every worker count."""
    if cfg.m == 6:
        warnings.warn("clique size 6 is a long-running best-effort search", stacklevel=2)
    start = time.perf_counter()
    tables = _tables(cfg.m)
    top_part, roots = _explore(tables, cfg.caps, 0, 0, tables.top, True)
    caps = tuple(cfg.caps.items())
    tasks = [(cfg.m, caps, r) for r in roots]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_explore_task, tasks))
    else:
        parts = [_explore_task(t) for t in tasks]
    rep: set[int] = set()
    events = set(top_part.events)
    peak: dict[int, int] = dict.fromkeys(cfg.caps, 0)
    for p in parts:
        rep |= p.representable
        events |= p.events
        for d, c in p.max_per_degree.items():
            peak[d] = max(peak[d], c)
    minimal = []
    for g in _minimal_graphs(tables, rep, events):
        if len(maximum_cliques(g)[0]) != cfg.m:
            raise AssertionError("minimal graph with the wrong clique number")
        minimal.append(MinimalGraph(g, canonical_form(g), to_graph6(g)))
    total = candidate_count(cfg)
    return EnumReport(
        cfg.m,
        dict(cfg.caps),
        total,
        len(rep),
        total - len(rep),
        tuple(minimal),
        len(events),
        peak,
        cfg.covers_all_minimal,
        time.perf_counter() - start,
        cfg.jobs,
    )


def find_minimal_nonrep(m: int, *, jobs: int = 1) -> EnumReport:
    return run_enumeration(EnumConfig(m, jobs=jobs))


def _prefilter(g: Graph, part: SplitPartition) -> bool:
    """Cheap sufficient test for non-representability, applicable to reduced candidates."""
    return large_degree_obstruction(g, part)


def run_enumeration_by_decide(cfg: EnumConfig) -> EnumReport:
    """Reference route: decide every candidate, then test each non-representable one.

    Only practical for small clique sizes; serves as a cross-check of the
    table-driven engine.
    """
    start = time.perf_counter()
    total = rep = 0
    peak = dict.fromkeys(cfg.caps, 0)
    found: dict[bytes, Graph] = {}
    nonrep_count = 0
    for g in candidates(cfg):
        total += 1
        part = SplitPartition(tuple(range(cfg.m)), tuple(range(cfg.m, g.n)))
        if not _prefilter(g, part) and decide(g, part).representable:
            rep += 1
            for d in cfg.caps:
                k = sum(1 for v in part.independent if g.degree(v) == d)
                peak[d] = max(peak[d], k)
            continue
        nonrep_count += 1
        if is_minimal_nonrep(g):
            found.setdefault(canonical_form(g), g)
    minimal = tuple(MinimalGraph(found[k], k, to_graph6(found[k])) for k in sorted(found))
    return EnumReport(
        cfg.m,
        dict(cfg.caps),
        total,
        rep,
        nonrep_count,
        minimal,
        nonrep_count,
        peak,
        cfg.covers_all_minimal,
        time.perf_counter() - start,
    )
