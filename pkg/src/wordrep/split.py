"""Structural word-representability decision for split graphs.

Any acyclic orientation orders the clique ``K_m`` as a path ``p1 -> ... -> pm``.
For a fixed path order each independent vertex must see either an interval
``{p_lo..p_hi}`` (a source or a sink, interchangeable) or a proper prefix plus a
proper suffix (in-arcs from the prefix, out-arcs to the suffix); on top of that,
a prefix-suffix vertex forbids other vertices from covering both of its
boundary positions. With sources and sinks interchangeable the per-order
classification is forced, so deciding costs ``m!`` cheap passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .graph import Graph, SplitPartition, bits, induced_subgraph, split_partition
from .orientation import Orientation

__all__ = [
    "AB",
    "C",
    "ISOLATED",
    "Isolated",
    "Reduction",
    "SplitDecision",
    "SplitWitness",
    "check_restrictions",
    "classify",
    "clique_degree_predicate",
    "decide",
    "degree_cap",
    "large_degree_obstruction",
    "orientation_of_witness",
    "parse_witness",
    "reduce_assumptions",
]


@dataclass(frozen=True)
class AB:
    """Neighbourhood is the path interval ``p_lo..p_hi`` (1-based, inclusive)."""

    lo: int
    hi: int

    def positions(self, m: int) -> set[int]:
        return set(range(self.lo, self.hi + 1))


@dataclass(frozen=True)
class C:
    """In-arcs from ``p_1..p_i``, out-arcs to ``p_j..p_m``, with ``i < j``."""

    i: int
    j: int

    def positions(self, m: int) -> set[int]:
        return set(range(1, self.i + 1)) | set(range(self.j, m + 1))


@dataclass(frozen=True)
class Isolated:
    def positions(self, m: int) -> set[int]:
        return set()


ISOLATED = Isolated()

Shape = AB | C | Isolated


def _classify_mask(pm: int, m: int) -> AB | C | None:
    """Classify a nonempty position mask (bit ``k`` is position ``k+1``)."""
    lo = (pm & -pm).bit_length()
    hi = pm.bit_length()
    size = pm.bit_count()
    if hi - lo + 1 == size:
        return AB(lo, hi)
    i = (~pm & (pm + 1)).bit_length() - 1  # length of the run of ones from position 1
    top = pm ^ ((1 << m) - 1)
    j = top.bit_length() + 1  # first position of the run of ones ending at m
    if i >= 1 and j <= m and i + (m - j + 1) == size:
        return C(i, j)
    return None


def classify(positions: Iterable[int], m: int) -> AB | C | None:
    """Interval, prefix-plus-suffix, or ``None`` when neither shape fits."""
    pm = 0
    for p in positions:
        if not 1 <= p <= m:
            raise ValueError(f"position {p} outside 1..{m}")
        pm |= 1 << (p - 1)
    if not pm:
        raise ValueError("positions must be nonempty")
    if pm == (1 << m) - 1:
        raise ValueError("positions cover the whole clique")
    return _classify_mask(pm, m)


def _conflict(x: Shape, y: Shape) -> bool:
    """True iff ``y`` breaks the boundary restriction of prefix-suffix vertex ``x``."""
    if not isinstance(x, C):
        return False
    a, b = x.i, x.j
    if isinstance(y, AB):
        return y.lo <= a and y.hi >= b
    if isinstance(y, C):
        return y.i >= b or y.j <= a
    return False


def check_restrictions(assignment: Mapping[int, Shape], m: int) -> tuple[int, int] | None:
    """First violating pair ``(x, y)``, or ``None`` when every restriction holds.

    ``x`` is the prefix-suffix vertex whose boundary positions ``y`` covers.
    """
    items = sorted(assignment.items())
    for x, sx in items:
        if sx is None:
            raise ValueError(f"vertex {x} is unclassified")
        if not isinstance(sx, C):
            continue
        for y, sy in items:
            if y != x and _conflict(sx, sy):
                return (x, y)
    return None


def degree_cap(m: int, d: int) -> int:
    """Most independent vertices of degree ``d`` with distinct neighbourhoods."""
    if m < 3:
        raise ValueError("m must be at least 3")
    if not 2 <= d <= m - 1:
        raise ValueError(f"degree must be in 2..{m - 1}, got {d}")
    return m if 2 * d <= m + 1 else m - d + 1


# -- reductions -------------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """One removal: ``kind`` is ``degree0``, ``degree1``, ``twin`` or ``clique-twin``."""

    kind: str
    removed: int
    partner: int | None = None


def reduce_assumptions(
    g: Graph, partition: SplitPartition, *, clique_twins: bool = True
) -> tuple[Graph, SplitPartition, list[Reduction], tuple[int, ...]]:
    """Strip vertices whose removal cannot change representability.

    Removes independent vertices of degree 0 or 1, one of two independent
    vertices with equal neighbourhoods, and one of two clique vertices with
    equal neighbourhoods outside each other. Returns the reduced graph, its
    partition, the trace in removal order, and the kept original ids (the
    reduced graph's vertex ``i`` is original vertex ``kept[i]``).
    ``clique_twins=False`` keeps the clique intact.
    """
    partition.validate(g)
    alive = g.full_mask
    clique = set(partition.clique)
    trace: list[Reduction] = []
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if v in clique:
                continue
            deg = (g.adj[v] & alive).bit_count()
            if deg <= 1:
                partner = next(bits(g.adj[v] & alive), None)
                trace.append(Reduction("degree0" if deg == 0 else "degree1", v, partner))
                alive &= ~(1 << v)
                changed = True
                break
        if changed:
            continue
        seen: dict[int, int] = {}
        for v in bits(alive):
            if v in clique:
                continue
            hood = g.adj[v] & alive
            if hood in seen:
                trace.append(Reduction("twin", v, seen[hood]))
                alive &= ~(1 << v)
                changed = True
                break
            seen[hood] = v
        if changed or not clique_twins:
            continue
        seen = {}
        for v in bits(alive):
            if v not in clique:
                continue
            hood = (g.adj[v] | 1 << v) & alive
            if hood in seen:
                trace.append(Reduction("clique-twin", v, seen[hood]))
                alive &= ~(1 << v)
                changed = True
                break
            seen[hood] = v
    kept = tuple(bits(alive))
    index = {v: i for i, v in enumerate(kept)}
    reduced = induced_subgraph(g, kept)
    part = SplitPartition(
        tuple(index[v] for v in partition.clique if alive >> v & 1),
        tuple(index[v] for v in partition.independent if alive >> v & 1),
    )
    return reduced, part, trace, kept


# -- witnesses ----------------------------------------------------------


@dataclass(frozen=True)
class SplitWitness:
    partition: SplitPartition
    order: tuple[int, ...]
    assignment: dict[int, Shape] = field(hash=False)

    def to_text(self, g: Graph | None = None) -> str:
        name = g.label if g is not None else str
        lines = [" ".join(name(v) for v in self.order)]
        for v in sorted(self.assignment):
            s = self.assignment[v]
            if isinstance(s, AB):
                lines.append(f"{name(v)}: AB {s.lo} {s.hi}")
            elif isinstance(s, C):
                lines.append(f"{name(v)}: C {s.i} {s.j}")
            else:
                lines.append(f"{name(v)}: none")
        return "\n".join(lines) + "\n"


def parse_witness(text: str, g: Graph) -> SplitWitness:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty witness")
    order = tuple(g.vertex(tok) for tok in rows[0].split())
    assignment: dict[int, Shape] = {}
    for row in rows[1:]:
        head, _, rest = row.partition(":")
        parts = rest.split()
        v = g.vertex(head.strip())
        if parts[0] == "AB":
            assignment[v] = AB(int(parts[1]), int(parts[2]))
        elif parts[0] == "C":
            assignment[v] = C(int(parts[1]), int(parts[2]))
        elif parts[0] == "none":
            assignment[v] = ISOLATED
        else:
            raise ValueError(f"unknown vertex type in {row!r}")
    part = SplitPartition(tuple(sorted(order)), tuple(sorted(assignment)))
    return SplitWitness(part, order, assignment)


def orientation_of_witness(g: Graph, w: SplitWitness) -> Orientation:
    """Clique arcs along the path order; interval vertices as sources;
    prefix-suffix vertices receive from the prefix and point into the suffix."""
    order = w.order
    m = len(order)
    if sorted(order) != sorted(w.partition.clique):
        raise ValueError("path order is not a permutation of the clique")
    out = [0] * g.n
    for a in range(m):
        for b in range(a + 1, m):
            out[order[a]] |= 1 << order[b]
    for v in w.partition.independent:
        shape = w.assignment.get(v)
        if shape is None:
            raise ValueError(f"independent vertex {v} has no type")
        hood = {order[p - 1] for p in shape.positions(m)}
        if hood != set(bits(g.adj[v])):
            raise ValueError(f"type of vertex {v} does not match its neighbourhood")
        if isinstance(shape, AB):
            for p in hood:
                out[v] |= 1 << p
        elif isinstance(shape, C):
            for p in range(1, shape.i + 1):
                out[order[p - 1]] |= 1 << v
            for p in range(shape.j, m + 1):
                out[v] |= 1 << order[p - 1]
    return Orientation(g, tuple(out))


def _lift(
    g: Graph,
    partition: SplitPartition,
    reduced: SplitWitness,
    trace: Sequence[Reduction],
    kept: Sequence[int],
) -> SplitWitness:
    order = [kept[v] for v in reduced.order]
    assignment: dict[int, Shape] = {kept[v]: s for v, s in reduced.assignment.items()}
    for step in reversed(trace):
        v = step.removed
        if step.kind == "degree0":
            assignment[v] = ISOLATED
        elif step.kind == "degree1":
            q = order.index(step.partner) + 1
            assignment[v] = AB(q, q)
        elif step.kind == "twin":
            assignment[v] = assignment[step.partner]
        else:
            q = order.index(step.partner) + 1
            order.insert(q, v)
            for u, s in list(assignment.items()):
                if isinstance(s, AB):
                    assignment[u] = AB(s.lo if s.lo <= q else s.lo + 1, s.hi + 1 if s.hi >= q else s.hi)
                elif isinstance(s, C):
                    assignment[u] = C(s.i + 1 if s.i >= q else s.i, s.j if s.j <= q else s.j + 1)
    return SplitWitness(partition, tuple(order), assignment)


# -- decision -----------------------------------------------------------


@dataclass(frozen=True)
class SplitDecision:
    """Outcome of :func:`decide`.

    For a negative outcome, ``failure`` describes why the first path order
    failed, in reduced-graph ids mapped back to the input: either
    ``("infeasible", order, v)`` or ``("restriction", order, x, y)``.
    """

    representable: bool
    witness: SplitWitness | None
    orders_tried: int
    infeasible_orders: int = 0
    restricted_orders: int = 0
    failure: tuple | None = None
    reduced_vertices: int = 0


def _decide_core(
    g: Graph, partition: SplitPartition, skip_reversals: bool
) -> tuple[SplitWitness | None, int, int, int, tuple | None]:
    clique = partition.clique
    m = len(clique)
    indep = partition.independent
    cidx = {c: t for t, c in enumerate(clique)}
    hoods = []
    for v in indep:
        hm = 0
        for c in bits(g.adj[v]):
            hm |= 1 << cidx[c]
        hoods.append(hm)
    tried = infeasible = restricted = 0
    first_failure = None
    for perm in permutations(range(m)):
        if skip_reversals and m > 1 and perm[0] > perm[-1]:
            continue
        tried += 1
        pos = [0] * m
        for k, t in enumerate(perm):
            pos[t] = k
        shapes: list[Shape] = []
        bad = None
        for v, hm in zip(indep, hoods):
            if not hm:
                shapes.append(ISOLATED)
                continue
            pm = 0
            for t in bits(hm):
                pm |= 1 << pos[t]
            s = _classify_mask(pm, m)
            if s is None:
                bad = v
                break
            shapes.append(s)
        order = tuple(clique[t] for t in perm)
        if bad is not None:
            infeasible += 1
            if first_failure is None:
                first_failure = ("infeasible", order, bad)
            continue
        assignment = dict(zip(indep, shapes))
        clash = check_restrictions(assignment, m)
        if clash is not None:
            restricted += 1
            if first_failure is None:
                first_failure = ("restriction", order) + clash
            continue
        return SplitWitness(partition, order, assignment), tried, infeasible, restricted, None
    return None, tried, infeasible, restricted, first_failure


def decide(
    g: Graph,
    partition: SplitPartition | None = None,
    *,
    reduce: bool = True,
    skip_reversals: bool = False,
) -> SplitDecision:
    """Decide word-representability of a split graph.

    Path orders are tried in lexicographic order of clique vertex ids; the
    first one that classifies every independent vertex and satisfies all
    restrictions yields the witness. ``skip_reversals`` tries only one of each
    order and its reverse, which cannot change the verdict.
    """
    if partition is None:
        partition = split_partition(g)
        if partition is None:
            raise ValueError("graph is not a split graph")
    partition.validate(g)
    if not reduce:
        w, tried, inf, res, fail = _decide_core(g, partition, skip_reversals)
        return SplitDecision(w is not None, w, tried, inf, res, fail, g.n)
    rg, rpart, trace, kept = reduce_assumptions(g, partition)
    w, tried, inf, res, fail = _decide_core(rg, rpart, skip_reversals)
    if fail is not None:
        kind, order, *rest = fail
        fail = (kind, tuple(kept[v] for v in order), *(kept[v] for v in rest))
    lifted = _lift(g, partition, w, trace, kept) if w is not None else None
    return SplitDecision(w is not None, lifted, tried, inf, res, fail, rg.n)


# -- sufficient conditions ----------------------------------------------


def clique_degree_predicate(g: Graph, partition: SplitPartition) -> bool:
    """Every clique vertex has degree at most ``m``; true implies representable."""
    m = partition.m
    return all(g.degree(v) <= m for v in partition.clique)


def large_degree_obstruction(g: Graph, partition: SplitPartition) -> bool:
    """Some clique vertex sees ``d+1`` independent vertices of one degree ``d <= m-2``.

    True implies non-representable. Independent neighbourhoods must be distinct.
    """
    hoods = [g.adj[v] for v in partition.independent]
    if len(set(hoods)) != len(hoods):
        raise ValueError("independent vertices with equal neighbourhoods; reduce first")
    m = partition.m
    for c in partition.clique:
        counts: dict[int, int] = {}
        for v in partition.independent:
            if g.adj[v] >> c & 1:
                d = g.degree(v)
                counts[d] = counts.get(d, 0) + 1
        if any(d <= m - 2 and k >= d + 1 for d, k in counts.items()):
            return True
    return False
