"""Undirected simple graphs on dense vertex ids, stored as adjacency bitmasks.

A :class:`Graph` is an immutable value. Row ``adj[v]`` is an ``int`` whose bit
``u`` is set iff ``uv`` is an edge. Optional labels are display metadata only;
every algorithm in the package works on the ids ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "GraphFormatError",
    "SplitPartition",
    "bits",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "from_edge_list",
    "induced_subgraph",
    "is_clique",
    "is_independent",
    "maximum_cliques",
    "parse_edge_list_text",
    "parse_graph6",
    "path_graph",
    "split_partition",
    "to_edge_list_text",
    "to_graph6",
]

MAX_VERTICES = 63


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be distinct")

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Vertex id carrying ``label`` (falls back to decimal ids when unlabeled)."""
        if self.labels is not None:
            try:
                return self.labels.index(label)
            except ValueError:
                raise KeyError(label) from None
        v = int(label)
        if not 0 <= v < self.n:
            raise KeyError(label)
        return v

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertex ids")
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = _mask(perm[u] for u in bits(self.adj[v]))
        labels = None
        if self.labels is not None:
            new = [""] * self.n
            for v in range(self.n):
                new[perm[v]] = self.labels[v]
            labels = tuple(new)
        return Graph(self.n, tuple(adj), labels)

    def without_labels(self) -> Graph:
        return Graph(self.n, self.adj) if self.labels is not None else self

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, None if labels is None else tuple(labels))

    def labeled_edges(self) -> list[tuple[str, str]]:
        return [(self.label(u), self.label(v)) for u, v in self.edges()]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={to_graph6(self)!r})"


# -- constructors -----------------------------------------------------


def from_edge_list(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), None if labels is None else tuple(labels))


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, ())


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``, re-indexed densely in increasing id order."""
    order = sorted(set(keep))
    if not order:
        raise ValueError("keep set must be nonempty")
    if order[0] < 0 or order[-1] >= g.n:
        raise ValueError("keep set contains a vertex outside the graph")
    index = {v: i for i, v in enumerate(order)}
    keep_mask = _mask(order)
    adj = tuple(_mask(index[u] for u in bits(g.adj[v] & keep_mask)) for v in order)
    labels = None if g.labels is None else tuple(g.labels[v] for v in order)
    return Graph(len(order), adj, labels)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = _mask(vs)
    return all((g.adj[v] | 1 << v) & mask == mask for v in vs)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = _mask(vs)
    return all(g.adj[v] & mask == 0 for v in vs)


# -- graph6 -----------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(n + 63)] if n <= 62 else ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        if vals[1] == 63:
            raise GraphFormatError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n == 0:
        raise GraphFormatError("graph6 string encodes the null graph")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    stream = 0
    for v in body:
        stream = stream << 6 | v
    pad = 6 * len(body) - need
    if stream & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    stream >>= pad
    adj = [0] * n
    k = need - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


# -- plain edge-list text ---------------------------------------------


def parse_edge_list_text(text: str) -> Graph:
    """Parse ``n`` on the first line, then one 0-based ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty edge list")
    if len(rows[0]) != 1:
        raise GraphFormatError("first line must hold the vertex count alone")
    try:
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise GraphFormatError(f"expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(str(exc)) from None
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- cliques and split partitions -------------------------------------


def maximum_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximum cliques, each as a sorted tuple, in lexicographic order."""
    best: list[int] = []
    best_size = 0

    def expand(r: int, p: int, x: int, size: int) -> None:
        nonlocal best, best_size
        if not p and not x:
            if size > best_size:
                best_size, best = size, [r]
            elif size == best_size:
                best.append(r)
            return
        if size + p.bit_count() < best_size:
            return
        pivot = max(bits(p | x), key=lambda u: (p & g.adj[u]).bit_count())
        for v in bits(p & ~g.adj[pivot]):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v], size + 1)
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, g.full_mask, 0, 0)
    return sorted(tuple(bits(c)) for c in best)


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.clique)

    def validate(self, g: Graph) -> None:
        """Raise ``ValueError`` unless this is a valid maximal-clique split of ``g``."""
        if sorted(self.clique + self.independent) != list(range(g.n)):
            raise ValueError("partition does not cover the vertex set exactly once")
        if not self.clique:
            raise ValueError("clique side is empty")
        if not is_clique(g, self.clique):
            raise ValueError("clique side is not complete")
        if not is_independent(g, self.independent):
            raise ValueError("independent side has an edge")
        cmask = _mask(self.clique)
        for v in self.independent:
            if g.adj[v] & cmask == cmask:
                raise ValueError(f"independent vertex {v} is adjacent to the whole clique")


def split_partition(g: Graph) -> SplitPartition | None:
    """Split partition with a maximum clique, or ``None`` if ``g`` is not split.

    Among maximum cliques whose complement is independent, the
    lexicographically least vertex set is chosen.
    """
    for clique in maximum_cliques(g):
        rest = [v for v in range(g.n) if v not in clique]
        if is_independent(g, rest):
            return SplitPartition(clique, tuple(rest))
    return None
