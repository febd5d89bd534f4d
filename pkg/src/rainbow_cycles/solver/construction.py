"""
The constructive steps on arcs of ``s`` consecutive vertices in C_{2s+1}.

All arithmetic here happens in the 1-based integer frame in which the
construction is stated: arc starts ``a_i`` lie in ``[1, 2s+1]``, the shift
``k`` in ``[0, 2s]``, and window vertices are plain integers such as
``k + i - s`` that are reduced mod ``2s+1`` only when turned into a vertex.
Case selection, ``r`` and the monotonicity audit compare integers, never
residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from rainbow_cycles.cycle.model import (
    Arc,
    CycleContext,
    Vertex,
    VertexSet,
    arc_of,
)
from rainbow_cycles.errors import (
    AssignmentOutOfArc,
    ClaimViolation,
    NoValidK,
    WrongCycleOrder,
    WrongSize,
)
from rainbow_cycles.solver.instance import CaseTag


@dataclass(frozen=True)
class NormalizedArcs:
    starts: tuple[int, ...]  # a_1 = 1 <= a_2 <= ... <= a_s <= 2s+1
    rotation: int  # rho: normalized start = original start + rho (mod t)
    permutation: tuple[int, ...]  # normalized position -> original index
    context: CycleContext

    @property
    def s(self) -> int:
        return len(self.starts)


@dataclass(frozen=True)
class ShiftChoice:
    k: int
    case: CaseTag
    r: int
    forbidden: frozenset[int]


def normalize(arcs: Sequence[Arc]) -> NormalizedArcs:
    """
    Rotate and stably sort arc starts so that ``a_1 = 1``.

    Parameters
    ----------
    arcs : Sequence[Arc]
        ``s`` arcs of length ``s`` on C_{2s+1}.

    Returns
    -------
    NormalizedArcs
        With ``rotation = 1 - min(a_i)`` and ``permutation[p]`` the index in
        ``arcs`` of the arc at normalized position ``p``.
    """
    if not arcs:
        raise WrongSize("Cannot normalize an empty family.")
    ctx = arcs[0].context
    s = len(arcs)
    if ctx.t != 2 * s + 1:
        raise WrongCycleOrder(f"{s} arcs need C_{2 * s + 1}, got C_{ctx.t}.")
    for i, arc in enumerate(arcs):
        if arc.length != s or arc.context != ctx:
            raise WrongSize(
                f"Arc {i + 1} must have length {s} on C_{ctx.t}.", index=i
            )

    reps = [arc.start + 1 for arc in arcs]
    rotation = 1 - min(reps)
    rotated = [(a + rotation - 1) % ctx.t + 1 for a in reps]
    order = sorted(range(s), key=rotated.__getitem__)
    return NormalizedArcs(
        starts=tuple(rotated[i] for i in order),
        rotation=rotation,
        permutation=tuple(order),
        context=ctx,
    )


def forbidden_residues(starts: Sequence[int], s: int) -> frozenset[int]:
    """``{a_i - 1 - i} U {a_i + s - i}`` mod 2s+1, for ``i = 1..s``."""
    t = 2 * s + 1
    out = set()
    for i, a in enumerate(starts, start=1):
        out.add((a - 1 - i) % t)
        out.add((a + s - i) % t)
    return frozenset(out)


def admissible_shifts(norm: NormalizedArcs) -> list[int]:
    forbidden = forbidden_residues(norm.starts, norm.s)
    return [k for k in range(2 * norm.s + 1) if k not in forbidden]


def choose_k(norm: NormalizedArcs, s: int) -> ShiftChoice:
    """
    Pick the smallest admissible shift and classify it.

    At most ``2s`` residues are forbidden among the ``2s + 1`` candidates,
    so a shift always exists.

    Raises
    ------
    NoValidK
        If no shift is admissible, or the shift equals ``a_1 + s - 1``.
    ClaimViolation
        If the computed ``r`` is not positive.
    """
    if s != norm.s:
        raise WrongSize(f"{norm.s} normalized arcs, but s={s}.")
    shifts = admissible_shifts(norm)
    if not shifts:
        raise NoValidK(f"Every shift is forbidden for starts {norm.starts}.")
    return classify_shift(norm, shifts[0])


def classify_shift(norm: NormalizedArcs, k: int) -> ShiftChoice:
    """Case tag and ``r`` for an admissible shift ``k``."""
    starts, s = norm.starts, norm.s
    forbidden = forbidden_residues(starts, s)
    if not 0 <= k <= 2 * s or k in forbidden:
        raise NoValidK(f"Shift {k} is not admissible for starts {starts}.")

    pivot = starts[0] + s - 1
    if k < pivot:
        case = CaseTag.CASE_1
        r = max(
            (i for i, a in enumerate(starts, 1) if k > a - 1 - i), default=0
        )
    elif k > pivot:
        case = CaseTag.CASE_2
        r = max(
            (i for i, a in enumerate(starts, 1) if k > a + s - i), default=0
        )
    else:
        raise NoValidK(f"Shift {k} equals the forbidden pivot {pivot}.")

    if r < 1:
        raise ClaimViolation(f"r = {r} for k = {k}, starts {starts}.")
    return ShiftChoice(k=k, case=case, r=r, forbidden=forbidden)


def claim_violations(norm: NormalizedArcs, choice: ShiftChoice) -> list[str]:
    """
    Every failed monotonicity implication for ``choice.k``.

    With ``L_i = a_i - 1 - i`` and ``U_i = a_i + s - i``: ``k > L_i`` must
    imply ``k > L_j`` for ``j <= i``, ``k > U_i`` must imply ``k > U_j``
    for ``j <= i``, and the ``<`` versions must propagate to ``j >= i``.
    The case bound on ``k`` is checked as well.
    """
    k, s = choice.k, norm.s
    lows = [a - 1 - i for i, a in enumerate(norm.starts, 1)]
    highs = [a + s - i for i, a in enumerate(norm.starts, 1)]
    out = []
    for name, seq in (("a_i-1-i", lows), ("a_i+s-i", highs)):
        for i in range(s):
            for j in range(s):
                if j <= i and k > seq[i] and not k > seq[j]:
                    out.append(
                        f"k={k} > {name} at i={i + 1} but not at j={j + 1}"
                    )
                if j >= i and k < seq[i] and not k < seq[j]:
                    out.append(
                        f"k={k} < {name} at i={i + 1} but not at j={j + 1}"
                    )
    if choice.case is CaseTag.CASE_1 and not k < s:
        out.append(f"Case 1 with k={k} >= s={s}")
    if choice.case is CaseTag.CASE_2 and not k > s:
        out.append(f"Case 2 with k={k} <= s={s}")
    return out


def check_claims(norm: NormalizedArcs, choice: ShiftChoice) -> None:
    violations = claim_violations(norm, choice)
    if violations:
        raise ClaimViolation("; ".join(violations))


def construct_assignment(
    norm: NormalizedArcs, choice: ShiftChoice
) -> tuple[Vertex, ...]:
    """
    Build the window: entry ``i - 1`` is the vertex for normalized position
    ``i``, given as a 0-based residue in the normalized frame.

    Case 1 sends ``i <= r`` to ``k + i`` and ``i > r`` to ``k + i - s``;
    Case 2 sends ``i > r`` to ``k + i`` and ``i <= r`` to ``k + s + i``.

    Raises
    ------
    AssignmentOutOfArc
        If a vertex misses its arc or the vertices are not ``s``
        consecutive vertices.
    """
    ctx, s = norm.context, norm.s
    k, r = choice.k, choice.r

    raw = []
    for i in range(1, s + 1):
        if choice.case is CaseTag.CASE_1:
            raw.append(k + i if i <= r else k + i - s)
        else:
            raw.append(k + i if i > r else k + s + i)

    window = tuple((x - 1) % ctx.t for x in raw)
    for i, (a, v) in enumerate(zip(norm.starts, window), start=1):
        if v not in Arc(a - 1, s, ctx):
            raise AssignmentOutOfArc(
                f"Vertex {v + 1} for position {i} is outside the arc "
                f"starting at {a} (k={k}, r={r}, case {int(choice.case)}).",
                index=norm.permutation[i - 1],
            )
    if len(set(window)) != s or arc_of(VertexSet.of(ctx, window)) is None:
        raise AssignmentOutOfArc(
            f"Window {[v + 1 for v in window]} is not {s} consecutive vertices."
        )
    return window


def window_start(norm: NormalizedArcs, window: Sequence[Vertex]) -> int:
    """1-based first vertex of the window, in the normalized frame."""
    arc = arc_of(VertexSet.of(norm.context, window))
    if arc is None:
        raise AssignmentOutOfArc(
            f"Window {[v + 1 for v in window]} is not an arc."
        )
    return arc.start + 1
