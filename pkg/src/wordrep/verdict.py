"""One entry point that routes a graph to the right decider and packages the result."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graph import Graph, split_partition
from .orientation import DEFAULT_GUARD, Orientation, find_semi_transitive, is_semi_transitive
from .split import SplitWitness, decide, orientation_of_witness
from .words import represents

__all__ = [
    "METHOD_SEARCH",
    "METHOD_SPLIT",
    "NON_REPRESENTABLE",
    "REPRESENTABLE",
    "UNKNOWN",
    "Verdict",
    "decide_graph",
    "verify_certificate",
]

REPRESENTABLE = "representable"
NON_REPRESENTABLE = "non-representable"
UNKNOWN = "unknown-guarded"

METHOD_SPLIT = "split-decider"
METHOD_SEARCH = "semi-transitive-search"
METHOD_WORD = "word"


@dataclass(frozen=True)
class Verdict:
    status: str
    method: str
    certificate: Any = None
    detail: dict | None = None

    @property
    def representable(self) -> bool | None:
        if self.status == UNKNOWN:
            return None
        return self.status == REPRESENTABLE


def decide_graph(g: Graph, *, guard: int = DEFAULT_GUARD, force: bool = False) -> Verdict:
    """Split graphs go to the structural decider; others to the guarded exhaustive search."""
    part = split_partition(g)
    if part is not None:
        d = decide(g, part)
        detail = {
            "clique": list(part.clique),
            "orders_tried": d.orders_tried,
            "reduced_vertices": d.reduced_vertices,
        }
        if d.representable:
            return Verdict(REPRESENTABLE, METHOD_SPLIT, d.witness, detail)
        detail.update(
            infeasible_orders=d.infeasible_orders,
            restricted_orders=d.restricted_orders,
            first_failure=list(d.failure) if d.failure else None,
        )
        return Verdict(NON_REPRESENTABLE, METHOD_SPLIT, None, detail)
    if g.n > guard and not force:
        return Verdict(UNKNOWN, METHOD_SEARCH, None, {"guard": guard, "vertices": g.n})
    o = find_semi_transitive(g, guard=g.n if force else guard)
    if o is None:
        return Verdict(NON_REPRESENTABLE, METHOD_SEARCH, None, {"exhaustive": True})
    return Verdict(REPRESENTABLE, METHOD_SEARCH, o, None)


def verify_certificate(g: Graph, v: Verdict) -> bool:
    """Re-check a positive certificate with the independent checker for its kind."""
    cert = v.certificate
    if isinstance(cert, SplitWitness):
        return is_semi_transitive(orientation_of_witness(g, cert))
    if isinstance(cert, Orientation):
        return cert.base == g and is_semi_transitive(cert)
    if isinstance(cert, tuple):
        return represents(cert, g)
    return cert is None and v.status != REPRESENTABLE
