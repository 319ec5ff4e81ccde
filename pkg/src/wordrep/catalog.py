"""Named constructions and the minimal non-representable split graphs T1..T9.

Clique vertices are labelled ``1..l``; degree-restricted independent vertices
attached to a window starting at ``i`` are labelled ``i'``; extra vertices keep
their letters (``x``, ``y``, ``z``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .graph import Graph, cycle_graph, from_edge_list

__all__ = [
    "CatalogEntry",
    "a_graph",
    "b_graph",
    "catalog",
    "complete",
    "cycle",
    "get",
    "interval_split",
    "k_ell_k",
    "k_i_ell",
    "k_prime",
    "k_triangle",
    "m_graph",
    "split_from_neighbourhoods",
    "t_graph",
]


def _build(names: list[str], edges: Iterable[tuple[str, str]]) -> Graph:
    index = {name: i for i, name in enumerate(names)}
    return from_edge_list(len(names), ((index[a], index[b]) for a, b in edges), names)


def _clique_names(m: int) -> list[str]:
    return [str(i) for i in range(1, m + 1)]


def _clique_edges(names: list[str]) -> list[tuple[str, str]]:
    return list(combinations(names, 2))


def split_from_neighbourhoods(
    m: int, neighbourhoods: Iterable[Iterable[int]], names: Iterable[str] | None = None
) -> Graph:
    """``K_m`` on ``1..m`` plus one independent vertex per neighbourhood (1-based)."""
    hoods = [sorted(set(h)) for h in neighbourhoods]
    clique = _clique_names(m)
    extra = list(names) if names is not None else [str(m + k + 1) for k in range(len(hoods))]
    if len(extra) != len(hoods):
        raise ValueError("one name per independent vertex is required")
    edges = _clique_edges(clique)
    for name, hood in zip(extra, hoods):
        for c in hood:
            if not 1 <= c <= m:
                raise ValueError(f"neighbour {c} outside the clique 1..{m}")
            edges.append((str(c), name))
    return _build(clique + extra, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    names = _clique_names(n)
    return _build(names, _clique_edges(names))


def cycle(n: int) -> Graph:
    return cycle_graph(n).with_labels(_clique_names(n))


def _cyclic_windows(ell: int, k: int) -> list[list[int]]:
    return [[(i + t) % ell + 1 for t in range(k)] for i in range(ell)]


def k_ell_k(ell: int, k: int) -> Graph:
    """``K_l`` plus ``l`` independent vertices on the distinct cyclic ``k``-windows."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if ell < 2 * k - 1:
        raise ValueError(f"need l >= 2k-1, got l={ell}, k={k}")
    return split_from_neighbourhoods(ell, _cyclic_windows(ell, k), [f"{i}'" for i in range(1, ell + 1)])


def k_triangle(ell: int) -> Graph:
    """``K_l`` plus ``i'`` adjacent to ``i, i+1`` and ``l'`` adjacent to ``1, l``."""
    if ell < 3:
        raise ValueError("l must be at least 3")
    return k_ell_k(ell, 2)


def a_graph(ell: int) -> Graph:
    """The triangle graph on ``l-1`` clique vertices plus vertex ``l`` joined to all of them."""
    if ell < 4:
        raise ValueError("l must be at least 4")
    base = k_triangle(ell - 1)
    names = list(base.labels)
    edges = list(base.labeled_edges()) + [(str(c), str(ell)) for c in range(1, ell)]
    names.insert(ell - 1, str(ell))
    return _build(names, edges)


def k_prime(n: int) -> Graph:
    """``K_n`` plus ``x`` adjacent to ``1`` and ``2``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    names = _clique_names(n)
    return _build(names + ["x"], _clique_edges(names) + [("1", "x"), ("2", "x")])


def k_i_ell(ell: int, i: int) -> Graph:
    """``K_l`` plus ``x`` adjacent to ``1`` and ``i``."""
    if not 2 <= i <= ell:
        raise ValueError(f"need 2 <= i <= l, got i={i}, l={ell}")
    names = _clique_names(ell)
    return _build(names + ["x"], _clique_edges(names) + [("1", "x"), (str(i), "x")])


def m_graph(n: int) -> Graph:
    """``K_n`` with ``y ~ {1, 4, z}`` and ``z ~ {2, 4, y}``."""
    if n < 4:
        raise ValueError("n must be at least 4")
    names = _clique_names(n)
    extra = [("1", "y"), ("4", "y"), ("2", "z"), ("4", "z"), ("y", "z")]
    return _build(names + ["y", "z"], _clique_edges(names) + extra)


def b_graph(n: int) -> Graph:
    """``m_graph(n)`` plus ``x`` adjacent to ``1`` and ``2``."""
    base = m_graph(n)
    return _build(list(base.labels) + ["x"], base.labeled_edges() + [("1", "x"), ("2", "x")])


def interval_split(m: int, d: int) -> Graph:
    """``K_m`` plus the ``m-d+1`` independent vertices on non-wrapping ``d``-intervals."""
    if not (m + 1) / 2 < d <= m - 1:
        raise ValueError(f"need (m+1)/2 < d <= m-1, got m={m}, d={d}")
    hoods = [list(range(s, s + d)) for s in range(1, m - d + 2)]
    return split_from_neighbourhoods(m, hoods, [f"{s}'" for s in range(1, m - d + 2)])


# Edge lists on the drawing's node names; in T1 the long strokes of the outer
# triangle pass through its middle nodes, so they are split at those nodes.
_T1_4 = {
    1: (7, [(1, 2), (2, 4), (1, 3), (3, 6), (4, 5), (5, 6), (2, 5), (3, 5), (2, 3),
            (7, 2), (7, 3), (7, 5)]),
    2: (7, [(1, 2), (1, 4), (1, 7), (1, 3), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
            (3, 4), (3, 5), (6, 4)]),
    3: (7, [(2, 6), (2, 7), (5, 3), (5, 4), (5, 2), (1, 3), (1, 4), (6, 3), (7, 4),
            (1, 6), (1, 7), (2, 3), (2, 4), (4, 3), (1, 2)]),
    4: (8, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 3), (2, 4),
            (2, 5), (2, 6), (3, 4), (3, 6), (3, 8), (4, 8), (4, 7)]),
}

# independent-vertex neighbourhoods atop the clique 1..5
_T5_9 = {
    5: {6: (1, 2), 7: (2, 3), 8: (3, 4), 9: (4, 1)},
    6: {6: (1, 2, 3), 7: (1, 2), 8: (1, 4), 9: (2, 5)},
    7: {6: (1, 3), 7: (2, 4), 8: (1, 2, 5), 9: (3, 4, 5)},
    8: {6: (1, 3), 7: (2, 4), 8: (1, 2, 5), 9: (1, 2, 3, 4)},
    9: {6: (1, 3), 7: (1, 4), 8: (2, 3), 9: (1, 2, 3, 5), 10: (1, 3, 4, 5)},
}


def t_graph(idx: int) -> Graph:
    if idx in _T1_4:
        n, edges = _T1_4[idx]
        names = [str(i) for i in range(1, n + 1)]
        return _build(names, [(str(a), str(b)) for a, b in edges])
    if idx in _T5_9:
        hoods = _T5_9[idx]
        return split_from_neighbourhoods(5, hoods.values(), [str(v) for v in hoods])
    raise ValueError(f"T-graph index must be in 1..9, got {idx}")


# -- named table ----------------------------------------------------------

REPRESENTABLE = "representable"
NON_REPRESENTABLE = "non-representable"
MINIMAL = "minimal-non-representable"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    expected_verdict: str
    provenance: str


def catalog() -> list[CatalogEntry]:
    entries = [
        CatalogEntry(f"T{i}", t_graph(i), MINIMAL,
                     f"minimal obstruction on a {4 if i <= 4 else 5}-clique")
        for i in range(1, 10)
    ]
    entries += [
        CatalogEntry("C5", cycle(5), REPRESENTABLE, "word 1521324354"),
        CatalogEntry("K5", complete(5), REPRESENTABLE, "any permutation"),
    ]
    entries += [CatalogEntry(f"Ktri{l}", k_triangle(l), REPRESENTABLE, "triangle construction")
                for l in range(3, 7)]
    entries += [CatalogEntry(f"A{l}", a_graph(l), MINIMAL, "triangle graph plus apex")
                for l in range(4, 7)]
    entries += [
        CatalogEntry("K5^2", k_ell_k(5, 2), REPRESENTABLE, "cyclic windows, l >= 2k-1"),
        CatalogEntry("K5^3", k_ell_k(5, 3), REPRESENTABLE, "cyclic windows, l = 2k-1"),
        CatalogEntry("Interval5,4", interval_split(5, 4), REPRESENTABLE, "non-wrapping intervals"),
        CatalogEntry("Interval6,5", interval_split(6, 5), REPRESENTABLE, "non-wrapping intervals"),
    ]
    for n in (4, 5):
        entries += [
            CatalogEntry(f"K'{n}", k_prime(n), REPRESENTABLE, "word x12x34...n"),
            CatalogEntry(f"M{n}", m_graph(n), REPRESENTABLE, "word y1z4y2z3567...n"),
            CatalogEntry(f"B{n}", b_graph(n), NON_REPRESENTABLE, "glue of K'n and Mn"),
        ]
    return entries


_PATTERNS: list[tuple[str, Callable[..., Graph]]] = [
    (r"T(\d+)", t_graph),
    (r"K(\d+)", complete),
    (r"C(\d+)", cycle),
    (r"Ktri(\d+)", k_triangle),
    (r"A(\d+)", a_graph),
    (r"K(\d+)\^(\d+)", k_ell_k),
    (r"K'(\d+)", k_prime),
    (r"M(\d+)", m_graph),
    (r"B(\d+)", b_graph),
    (r"K(\d+)_(\d+)", k_i_ell),
    (r"Interval(\d+),(\d+)", interval_split),
]


def get(name: str) -> Graph:
    """Catalog graph by name, e.g. ``T6``, ``Ktri5``, ``A4``, ``K5^2``, ``K'4``, ``B5``."""
    for entry in catalog():
        if entry.name == name:
            return entry.graph
    for pattern, builder in _PATTERNS:
        match = re.fullmatch(pattern, name)
        if match:
            return builder(*map(int, match.groups()))
    raise KeyError(f"unknown catalog graph {name!r}")
