"""Canonical labelling, isomorphism and induced-subgraph search.

Canonical forms come from equitable-partition refinement followed by an
individualise-and-refine search over the stabilised partition. Two prunings keep
the search tree small on the symmetric graphs this package builds:

* twins (equal open or closed neighbourhoods) in the target cell are tried once;
* automorphisms found from equal leaf certificates prune orbits at every node
  whose individualised vertices they fix.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "contains_induced",
    "find_induced",
]


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by neighbour counts into each splitter cell, fragments
    ordered by count; after any split the scan restarts from the first cell.
    """
    cells = [list(c) for c in cells]
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((g.adj[v] & smask).bit_count(), []).append(v)
                new.extend(groups[k] for k in sorted(groups))
            if len(new) != len(cells):
                cells = new
                break
        else:
            return cells


def _certificate(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(g.adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order whose relabelled adjacency is the canonical representative.

    ``result[i]`` is the original vertex placed at canonical position ``i``.
    """
    initial: dict[int, list[int]] = {}
    for v in range(g.n):
        initial.setdefault(g.degree(v), []).append(v)
    root = _refine(g, [initial[d] for d in sorted(initial)])

    best_cert: tuple[int, ...] | None = None
    best_order: tuple[int, ...] | None = None
    automorphisms: list[list[int]] = []

    def orbits_fixing(fixed: list[int], cell: list[int]) -> dict[int, int]:
        parent = {v: v for v in cell}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in automorphisms:
            if all(gamma[f] == f for f in fixed):
                for v in cell:
                    w = gamma[v]
                    if w in parent:
                        a, b = find(v), find(w)
                        if a != b:
                            parent[max(a, b)] = min(a, b)
        return {v: find(v) for v in cell}

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_cert, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = tuple(c[0] for c in cells)
            cert = _certificate(g, order)
            if best_cert is None or cert < best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                gamma = [0] * g.n
                for a, b in zip(order, best_order):
                    gamma[a] = b
                if any(gamma[v] != v for v in range(g.n)):
                    automorphisms.append(gamma)
            return
        cell = cells[target]
        open_keys: set[int] = set()
        closed_keys: set[int] = set()
        tried_orbits: set[int] = set()
        for v in cell:
            if g.adj[v] in open_keys or g.adj[v] | 1 << v in closed_keys:
                continue
            orbit = orbits_fixing(fixed, cell)[v]
            if orbit in tried_orbits:
                continue
            open_keys.add(g.adj[v])
            closed_keys.add(g.adj[v] | 1 << v)
            tried_orbits.add(orbit)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(g, child), fixed + [v])

    search(root, [])
    assert best_order is not None
    return best_order


def canonical_form(g: Graph) -> bytes:
    """Relabelling-invariant byte key; equal for two graphs iff they are isomorphic."""
    cert = _certificate(g, canonical_labeling(g))
    width = (g.n + 7) // 8
    return bytes([g.n]) + b"".join(r.to_bytes(width, "little") for r in cert)


def canonical_graph(g: Graph) -> Graph:
    """Copy of ``g`` relabelled into canonical order (labels carried along)."""
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(map(g1.degree, g1.vertices)) != sorted(map(g2.degree, g2.vertices)):
        return False
    return canonical_form(g1) == canonical_form(g2)


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Host vertices ``w`` with ``w[i]`` the image of pattern vertex ``i``, or ``None``."""
    if pattern.n > host.n:
        return None
    # place high-degree, well-connected pattern vertices first
    order: list[int] = []
    remaining = set(pattern.vertices)
    while remaining:
        placed = 0
        for p in order:
            placed |= 1 << p
        nxt = max(remaining, key=lambda p: ((pattern.adj[p] & placed).bit_count(), pattern.degree(p), -p))
        order.append(nxt)
        remaining.discard(nxt)
    host_deg = [host.degree(v) for v in host.vertices]
    image = [-1] * pattern.n

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        p = order[k]
        need = pattern.degree(p)
        for h in range(host.n):
            if used >> h & 1 or host_deg[h] < need:
                continue
            ok = True
            for q in order[:k]:
                if pattern.has_edge(p, q) != host.has_edge(h, image[q]):
                    ok = False
                    break
            if ok:
                image[p] = h
                if extend(k + 1, used | 1 << h):
                    return True
        image[p] = -1
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None
