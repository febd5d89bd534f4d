from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Literal, Mapping, Optional, Sequence

from rainbow_cycles.cycle.model import (
    CycleContext,
    Vertex,
    VertexSet,
    adjacency,
    is_independent,
)
from rainbow_cycles.errors import (
    InvalidParameters,
    NotIndependent,
    WrongCycleOrder,
    WrongSize,
)


class CaseTag(IntEnum):
    CASE_1 = 1  # k < a_1 + s - 1
    CASE_2 = 2  # k > a_1 + s - 1


@dataclass(frozen=True)
class Instance:
    """
    An ordered family of vertex sets of one cycle; repeats are allowed.

    Construction only checks that every set lives on ``context``. Call
    :meth:`validate` for the size / independence / cycle-order contract.
    """

    context: CycleContext
    family: tuple[VertexSet, ...]

    def __post_init__(self):
        family = tuple(self.family)
        for i, S in enumerate(family):
            if S.context != self.context:
                raise InvalidParameters(
                    f"Set {i + 1} lives on C_{S.context.t}, "
                    f"not C_{self.context.t}.",
                    index=i,
                )
        object.__setattr__(self, "family", family)

    @property
    def s(self) -> int:
        return len(self.family)

    def validate(
        self, *, set_size: Optional[int] = None, odd_cycle: bool = True
    ) -> None:
        """
        Check the family against the rainbow problem's hypotheses.

        Parameters
        ----------
        set_size : int | None
            Required size of every set; defaults to the number of sets.
        odd_cycle : bool
            Also require ``t == 2s + 1`` (the solver's setting).

        Raises
        ------
        WrongCycleOrder, WrongSize, NotIndependent
        """
        if odd_cycle and self.context.t != 2 * self.s + 1:
            raise WrongCycleOrder(
                f"{self.s} sets need C_{2 * self.s + 1}, got C_{self.context.t}."
            )
        size = self.s if set_size is None else set_size
        for i, S in enumerate(self.family):
            if len(S) != size:
                raise WrongSize(
                    f"Set {i + 1} has {len(S)} vertices, expected {size}.",
                    index=i,
                )
            if not is_independent(S):
                raise NotIndependent(
                    f"Set {i + 1} {S.to_external()} contains an edge.",
                    index=i,
                )


@dataclass(frozen=True)
class Trace:
    """How a certificate was derived; ignored by the checker."""

    rotation: int  # rho, added to arc starts during normalization
    permutation: tuple[int, ...]  # normalized position -> 0-based set index
    k: int
    case: CaseTag
    r: int
    window_start: int  # 1-based, normalized frame


@dataclass(frozen=True)
class RainbowCertificate:
    # 0-based family index -> vertex; partial maps are rainbow sets too
    assignment: Mapping[int, Vertex]
    trace: Optional[Trace] = field(default=None, compare=False)

    @property
    def vertices(self) -> list[Vertex]:
        return [self.assignment[i] for i in sorted(self.assignment)]


Reason = Literal["size", "membership", "distinctness", "independence"]


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: Optional[Reason] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(
    inst: Instance, cert: RainbowCertificate, size: Optional[int] = None
) -> Verification:
    """
    Re-derive the rainbow property from scratch; never raises.

    Checks, in order: the certificate picks exactly ``size`` distinct
    family indices (default: all of them), each picked vertex belongs to
    its set, the vertices are pairwise distinct and jointly independent.
    """
    ctx = inst.context
    want = inst.s if size is None else size
    indices: Sequence[int] = sorted(cert.assignment)

    if len(indices) != want:
        return Verification(
            False, "size", f"{len(indices)} representatives, expected {want}."
        )
    if any(not 0 <= i < inst.s for i in indices):
        return Verification(
            False, "size", f"Set indices {list(indices)} exceed the family."
        )

    for i in indices:
        v = cert.assignment[i]
        if v not in inst.family[i]:
            return Verification(
                False,
                "membership",
                f"Vertex {_label(ctx, v)} is not in set {i + 1}.",
            )

    chosen = [cert.assignment[i] for i in indices]
    if len(set(chosen)) != len(chosen):
        return Verification(
            False, "distinctness", f"Repeated vertex in {_labels(ctx, chosen)}."
        )

    for a, u in enumerate(chosen):
        for w in chosen[a + 1 :]:
            if adjacency(u, w, ctx):
                return Verification(
                    False,
                    "independence",
                    f"Vertices {_label(ctx, u)} and {_label(ctx, w)} "
                    "are adjacent.",
                )
    return Verification(True)


def _label(ctx: CycleContext, v) -> str:
    return str(ctx.to_external(v)) if isinstance(v, int) else repr(v)


def _labels(ctx: CycleContext, vs) -> list[str]:
    return [_label(ctx, v) for v in vs]
