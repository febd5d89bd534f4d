"""
The doubling bijection on an odd cycle.

With 1-based labels the map is ``j -> 2j - 1 (mod 2s+1)``; on the 0-based
residues used internally the same map reads ``x -> 2x (mod t)`` and its
inverse is multiplication by ``s + 1``, the inverse of 2 mod ``2s + 1``.

It carries every arc of ``s`` consecutive vertices of C_{2s+1} onto an
independent ``s``-set and back, which turns the rainbow question on
independent sets into one on arcs.
"""

from __future__ import annotations

from dataclasses import dataclass

from rainbow_cycles.cycle.model import (
    Arc,
    CycleContext,
    Vertex,
    VertexSet,
    arc_members,
    arc_of,
    is_independent,
)
from rainbow_cycles.errors import (
    InvalidParameters,
    NotAnArc,
    NotIndependent,
    WrongSize,
)


@dataclass(frozen=True)
class DoublingMap:
    context: CycleContext

    def __post_init__(self):
        if not self.context.is_odd:
            raise InvalidParameters(
                f"The doubling map needs an odd cycle, got t={self.context.t}."
            )

    @property
    def s(self) -> int:
        return (self.context.t - 1) // 2

    def apply(self, j: Vertex) -> Vertex:
        return self.context.reduce(2 * j)

    def invert(self, v: Vertex) -> Vertex:
        return self.context.reduce((self.s + 1) * v)


def independent_set_to_arc(S: VertexSet) -> Arc:
    """
    Pull an independent s-set of C_{2s+1} back to its arc.

    Raises
    ------
    WrongSize
        If ``|S| != s``.
    NotIndependent
        If ``S`` contains an edge.
    NotAnArc
        If the preimage is not ``s`` consecutive vertices.
    """
    dmap = DoublingMap(S.context)
    if len(S) != dmap.s:
        raise WrongSize(
            f"Expected an independent set of size {dmap.s}, got {len(S)}."
        )
    if not is_independent(S):
        raise NotIndependent(f"{S.to_external()} contains an edge.")

    preimage = VertexSet.of(S.context, (dmap.invert(v) for v in S))
    arc = arc_of(preimage)
    if arc is None:
        raise NotAnArc(
            f"Preimage {preimage.to_external()} of {S.to_external()} is not "
            f"{dmap.s} consecutive vertices."
        )
    return arc


def arc_to_independent_set(A: Arc) -> VertexSet:
    dmap = DoublingMap(A.context)
    if A.length != dmap.s:
        raise WrongSize(f"Expected an arc of length {dmap.s}, got {A.length}.")
    return VertexSet.of(A.context, (dmap.apply(v) for v in arc_members(A)))
