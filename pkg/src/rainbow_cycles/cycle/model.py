from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from rainbow_cycles.errors import InvalidParameters

# 0-based residue mod t; the 1-based labels only exist in documents.
Vertex = int


@dataclass(frozen=True)
class CycleContext:
    """The cycle C_t on the residues ``0, ..., t-1``."""

    t: int

    def __post_init__(self):
        if isinstance(self.t, bool) or not isinstance(self.t, int):
            raise InvalidParameters(
                f"Cycle order must be an integer, got {self.t!r}."
            )
        if self.t < 3:
            raise InvalidParameters(f"Cycle order must be >= 3, got {self.t}.")

    @property
    def vertices(self) -> range:
        return range(self.t)

    @property
    def is_odd(self) -> bool:
        return self.t % 2 == 1

    def reduce(self, value: int) -> Vertex:
        return value % self.t

    def contains(self, v: Vertex) -> bool:
        return 0 <= v < self.t

    def from_external(self, label: int) -> Vertex:
        if not 1 <= label <= self.t:
            raise InvalidParameters(
                f"Vertex label {label} is outside 1..{self.t}."
            )
        return label - 1

    def to_external(self, v: Vertex) -> int:
        return v + 1


def adjacency(u: Vertex, v: Vertex, ctx: CycleContext) -> bool:
    """True iff ``u`` and ``v`` differ by +-1 mod t."""
    return (u - v) % ctx.t in (1, ctx.t - 1)


@dataclass(frozen=True)
class VertexSet:
    """
    A set of cycle vertices stored as a sorted, duplicate-free tuple.

    Use :meth:`of` to build one from an arbitrary iterable; the constructor
    itself only checks that ``members`` is already canonical.
    """

    members: tuple[Vertex, ...]
    context: CycleContext

    def __post_init__(self):
        members = tuple(self.members)
        if any(not self.context.contains(v) for v in members):
            raise InvalidParameters(
                f"Vertices {members} are not all in 0..{self.context.t - 1}."
            )
        if any(a >= b for a, b in zip(members, members[1:])):
            raise InvalidParameters(
                f"Vertices {members} are not sorted and distinct."
            )
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, ctx: CycleContext, vertices: Iterable[Vertex]) -> VertexSet:
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            raise InvalidParameters(f"Repeated vertex in {vertices}.")
        return cls(tuple(sorted(vertices)), ctx)

    @classmethod
    def from_external(
        cls, ctx: CycleContext, labels: Iterable[int]
    ) -> VertexSet:
        return cls.of(ctx, (ctx.from_external(x) for x in labels))

    def to_external(self) -> list[int]:
        return [self.context.to_external(v) for v in self.members]

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, int) or not self.context.contains(v):
            return False
        return bool(self.mask >> v & 1)


def is_independent(S: VertexSet) -> bool:
    members = S.members
    t = S.context.t
    # in a sorted list, only neighbours in the list can be at distance 1,
    # and only first/last can wrap around
    if any(b - a == 1 for a, b in zip(members, members[1:])):
        return False
    if len(members) >= 2 and members[0] == 0 and members[-1] == t - 1:
        return False
    return True


@dataclass(frozen=True)
class Arc:
    """``length`` consecutive vertices starting at ``start`` (mod t)."""

    start: Vertex
    length: int
    context: CycleContext

    def __post_init__(self):
        if not self.context.contains(self.start):
            raise InvalidParameters(
                f"Arc start {self.start} is outside 0..{self.context.t - 1}."
            )
        if not 1 <= self.length <= self.context.t - 1:
            raise InvalidParameters(
                f"Arc length must be in 1..{self.context.t - 1}, "
                f"got {self.length}."
            )

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, int):
            return False
        return (v - self.start) % self.context.t < self.length


def arc_members(A: Arc) -> VertexSet:
    return VertexSet.of(
        A.context, (A.context.reduce(A.start + j) for j in range(A.length))
    )


def arc_of(S: VertexSet) -> Optional[Arc]:
    """
    The arc whose members are exactly ``S``, or None.

    The start is the unique member whose cyclic predecessor is absent.
    """
    ctx = S.context
    if not 1 <= len(S) < ctx.t:
        return None
    starts = [v for v in S.members if ctx.reduce(v - 1) not in S]
    if len(starts) != 1:
        return None
    arc = Arc(starts[0], len(S), ctx)
    return arc if arc_members(arc) == S else None
