"""Threshold graphs: construction, recognition, and the twin-elimination certificate."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, bits

__all__ = [
    "BuildSequence",
    "TwinStep",
    "build",
    "is_threshold",
    "random_threshold",
    "reduction_certificate",
]


@dataclass(frozen=True)
class BuildSequence:
    """Steps over ``*`` (first vertex), ``I`` (isolated) and ``D`` (dominating).

    ``order`` optionally names, per step, the graph vertex that step created.
    """

    steps: str
    order: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("empty build sequence")
        if self.steps[0] != "*" or set(self.steps[1:]) - {"I", "D"}:
            raise ValueError(f"malformed build sequence {self.steps!r}")
        if self.order is not None and len(self.order) != len(self.steps):
            raise ValueError("order length does not match the sequence")

    @classmethod
    def parse(cls, text: str) -> BuildSequence:
        return cls(text.strip().upper())

    def __str__(self) -> str:
        return self.steps


def build(seq: BuildSequence | str) -> Graph:
    """Replay a build sequence; vertex ``i`` is created by step ``i``."""
    steps = seq.steps if isinstance(seq, BuildSequence) else BuildSequence(seq).steps
    adj = [0] * len(steps)
    for i, op in enumerate(steps):
        if op == "D":
            adj[i] = (1 << i) - 1
            for u in range(i):
                adj[u] |= 1 << i
    return Graph(len(steps), tuple(adj))


def is_threshold(g: Graph) -> BuildSequence | None:
    """Strip isolated or dominating vertices, lowest id first; ``None`` if stuck."""
    alive = g.full_mask
    stripped: list[tuple[int, str]] = []
    while alive.bit_count() > 1:
        for v in bits(alive):
            hood = g.adj[v] & alive
            if hood == 0:
                stripped.append((v, "I"))
                break
            if hood == alive & ~(1 << v):
                stripped.append((v, "D"))
                break
        else:
            return None
        alive &= ~(1 << stripped[-1][0])
    last = alive.bit_length() - 1
    stripped.append((last, "*"))
    stripped.reverse()
    return BuildSequence("".join(op for _, op in stripped), tuple(v for v, _ in stripped))


@dataclass(frozen=True)
class TwinStep:
    removed: int
    twin: int
    adjacent: bool


def reduction_certificate(g: Graph) -> list[TwinStep]:
    """Delete vertices in build order, each one a twin of the next-built vertex.

    Vertices built consecutively see the same later vertices, so they have
    equal neighbourhoods apart from each other; deleting twins preserves
    word-representability down to a single vertex.
    """
    seq = is_threshold(g)
    if seq is None:
        raise ValueError("graph is not a threshold graph")
    order = seq.order
    alive = g.full_mask
    steps = []
    for removed, twin in zip(order, order[1:]):
        a = g.adj[removed] & alive & ~(1 << twin)
        b = g.adj[twin] & alive & ~(1 << removed)
        if a != b:
            raise AssertionError(f"vertices {removed} and {twin} are not twins")
        steps.append(TwinStep(removed, twin, g.has_edge(removed, twin)))
        alive &= ~(1 << removed)
    return steps


def random_threshold(n: int, seed: int) -> Graph:
    """Threshold graph from ``n - 1`` fair coin flips between isolated and dominating."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    return build("*" + "".join(rng.choice("ID") for _ in range(n - 1)))
