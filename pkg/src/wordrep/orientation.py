"""Orientations, semi-transitivity, and exhaustive search for semi-transitive orientations.

An orientation is semi-transitive when it is acyclic and every directed path
``u1 -> ... -> uk`` closed by an arc ``u1 -> uk`` carries all arcs ``ui -> uj``.
A graph is word-representable exactly when it has such an orientation, so the
search below is the refutation oracle for arbitrary small graphs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bits

__all__ = [
    "CycleWitness",
    "Orientation",
    "SearchGuardError",
    "ShortcutWitness",
    "find_semi_transitive",
    "find_violation",
    "is_semi_transitive",
    "parse_orientation",
]

DEFAULT_GUARD = 12


class SearchGuardError(ValueError):
    """Raised when an exhaustive search would exceed its size guard."""


@dataclass(frozen=True)
class Orientation:
    base: Graph
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.base
        if len(self.out) != g.n:
            raise ValueError("orientation size does not match its graph")
        inn = [0] * g.n
        for u in range(g.n):
            for v in bits(self.out[u]):
                inn[v] |= 1 << u
        for v in range(g.n):
            if self.out[v] & ~g.adj[v]:
                raise ValueError(f"arc out of {v} is not an edge of the graph")
            if self.out[v] & inn[v]:
                raise ValueError(f"an edge at {v} is oriented both ways")
            if self.out[v] | inn[v] != g.adj[v]:
                raise ValueError(f"an edge at {v} is left unoriented")

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        out = [0] * g.n
        for u, v in arcs:
            out[u] |= 1 << v
        return cls(g, tuple(out))

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> Orientation:
        """Orient every edge from the earlier to the later vertex of ``order``."""
        pos = {v: i for i, v in enumerate(order)}
        if len(pos) != g.n or set(pos) != set(range(g.n)):
            raise ValueError("order must list every vertex exactly once")
        out = []
        for u in range(g.n):
            later = 0
            for v in bits(g.adj[u]):
                if pos[v] > pos[u]:
                    later |= 1 << v
            out.append(later)
        return cls(g, tuple(out))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.base.n) for v in bits(self.out[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def to_text(self) -> str:
        g = self.base
        return "".join(f"{g.label(u)} -> {g.label(v)}\n" for u, v in self.arcs())


def parse_orientation(text: str, g: Graph) -> Orientation:
    arcs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        left, sep, right = line.partition("->")
        if not sep:
            raise ValueError(f"expected 'u -> v', got {line!r}")
        arcs.append((g.vertex(left.strip()), g.vertex(right.strip())))
    return Orientation.from_arcs(g, arcs)


@dataclass(frozen=True)
class CycleWitness:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ShortcutWitness:
    """Directed path closed by the arc ``path[0] -> path[-1]`` that misses ``missing``."""

    path: tuple[int, ...]
    missing: tuple[int, int]


def _topological_order(out: Sequence[int], n: int) -> list[int] | None:
    indeg = [0] * n
    for u in range(n):
        for v in bits(out[u]):
            indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for v in bits(out[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return order if len(order) == n else None


def _find_cycle(out: Sequence[int], n: int) -> tuple[int, ...]:
    color = [0] * n
    stack: list[int] = []

    def visit(u: int) -> tuple[int, ...] | None:
        color[u] = 1
        stack.append(u)
        for v in bits(out[u]):
            if color[v] == 1:
                return tuple(stack[stack.index(v):])
            if color[v] == 0:
                found = visit(v)
                if found:
                    return found
        stack.pop()
        color[u] = 2
        return None

    for s in range(n):
        if color[s] == 0:
            found = visit(s)
            if found:
                return found
    raise AssertionError("no cycle in a graph without a topological order")


def _path_within(out: Sequence[int], src: int, dst: int, allowed: int) -> list[int]:
    """Shortest directed path src..dst through vertices of ``allowed``."""
    prev = {src: src}
    frontier = [src]
    while frontier and dst not in prev:
        nxt = []
        for u in frontier:
            for v in bits(out[u] & allowed):
                if v not in prev:
                    prev[v] = u
                    nxt.append(v)
        frontier = nxt
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def find_violation(o: Orientation) -> CycleWitness | ShortcutWitness | None:
    """First obstruction to semi-transitivity, or ``None`` if there is none.

    For an arc ``u -> v`` let ``W`` hold ``u``, ``v`` and every vertex on a
    directed path between them. The arc closes a shortcut iff two vertices of
    ``W`` are joined by a directed path but are not adjacent.
    """
    g = o.base
    n = g.n
    order = _topological_order(o.out, n)
    if order is None:
        return CycleWitness(_find_cycle(o.out, n))
    desc = [0] * n
    for u in reversed(order):
        d = 0
        for v in bits(o.out[u]):
            d |= 1 << v | desc[v]
        desc[u] = d
    anc = [0] * n
    for u in order:
        for v in bits(o.out[u]):
            anc[v] |= 1 << u | anc[u]
    for u in range(n):
        for v in bits(o.out[u]):
            inner = desc[u] & anc[v]
            if not inner:
                continue
            w = inner | 1 << u | 1 << v
            for a in bits(w):
                bad = desc[a] & w & ~g.adj[a]
                if bad:
                    b = (bad & -bad).bit_length() - 1
                    path = _path_within(o.out, u, a, w)
                    path += _path_within(o.out, a, b, w)[1:]
                    path += _path_within(o.out, b, v, w)[1:]
                    return ShortcutWitness(tuple(path), (a, b))
    return None


def is_semi_transitive(o: Orientation) -> bool:
    return find_violation(o) is None


# -- exhaustive search --------------------------------------------------


def _true_twin_predecessors(g: Graph) -> list[int]:
    """For each vertex, the mask of smaller-id vertices with the same closed neighbourhood."""
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    return [sum(1 << u for u in range(v) if closed[u] == closed[v]) for v in range(g.n)]


def _search(g: Graph, first: int | None) -> tuple[int, ...] | None:
    """Depth-first search over acyclic orientations, each generated once.

    Every acyclic orientation is produced from its lexicographically least
    topological order: a vertex skipped while smaller than the chosen one is
    kept ``pending`` until a neighbour is placed before it. A prefix whose
    induced orientation already contains a shortcut is abandoned, since the
    newest vertex is a sink and only arcs into it can close new shortcuts.
    Permuting a class of true twins is an automorphism, so within a class the
    vertices are placed in increasing id order.
    """
    n = g.n
    adj = g.adj
    twins_before = _true_twin_predecessors(g)
    anc = [0] * n
    order: list[int] = []

    def clean(v: int, placed: int) -> bool:
        into = adj[v] & placed
        av = 0
        for u in bits(into):
            av |= anc[u] | 1 << u
        anc[v] = av
        for u in bits(into):
            # vertices on paths u ~> v
            w = 1 << u | 1 << v
            for x in bits(av):
                if anc[x] >> u & 1:
                    w |= 1 << x
            if w.bit_count() == 2:
                continue
            for b in bits(w):
                if anc[b] & w & ~adj[b]:
                    return False
        return True

    def extend(placed: int, pending: int) -> bool:
        if len(order) == n:
            return True
        remaining = ~placed & ((1 << n) - 1)
        choices = remaining if order or first is None else 1 << first
        for v in bits(choices):
            if pending >> v & 1:
                continue
            if twins_before[v] & ~placed:
                continue
            if not clean(v, placed):
                continue
            below = remaining & ((1 << v) - 1)
            new_pending = (pending | below) & ~adj[v] & ~(1 << v)
            order.append(v)
            if extend(placed | 1 << v, new_pending):
                return True
            order.pop()
        return False

    if extend(0, 0):
        return tuple(order)
    return None


def find_semi_transitive(
    g: Graph, *, guard: int = DEFAULT_GUARD, jobs: int = 1
) -> Orientation | None:
    """A semi-transitive orientation of ``g``, or ``None`` if none exists.

    The search is exhaustive, so ``None`` proves ``g`` is not
    word-representable. With ``jobs > 1`` the search is split by first vertex
    and the hit with the smallest first vertex is returned, matching the
    sequential result.
    """
    if g.n > guard:
        raise SearchGuardError(f"{g.n} vertices exceeds the exhaustive-search guard {guard}")
    if jobs <= 1:
        order = _search(g, None)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search, [g] * g.n, range(g.n)))
        order = next((r for r in results if r is not None), None)
    if order is None:
        return None
    return Orientation.from_order(g, order)
