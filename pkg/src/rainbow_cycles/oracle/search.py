from __future__ import annotations

from itertools import combinations
from random import Random
from typing import Iterator, Optional, Sequence

from rainbow_cycles.cycle.model import (
    Arc,
    CycleContext,
    Vertex,
    VertexSet,
    is_independent,
)
from rainbow_cycles.cycle.transform import arc_to_independent_set
from rainbow_cycles.errors import InvalidParameters
from rainbow_cycles.solver.instance import Instance


def iter_independent_sets(ctx: CycleContext, m: int) -> Iterator[VertexSet]:
    """Independent ``m``-subsets of C_t in lexicographic order."""
    if not 1 <= m < ctx.t:
        raise InvalidParameters(f"Set size must be in 1..{ctx.t - 1}, got {m}.")
    for combo in combinations(ctx.vertices, m):
        S = VertexSet(combo, ctx)
        if is_independent(S):
            yield S


def enumerate_independent_sets(ctx: CycleContext, m: int) -> list[VertexSet]:
    return list(iter_independent_sets(ctx, m))


def rotate(S: VertexSet, shift: int) -> VertexSet:
    ctx = S.context
    return VertexSet.of(ctx, (ctx.reduce(v + shift) for v in S))


def canonical_rotation(S: VertexSet) -> VertexSet:
    """The lexicographically smallest rotation of ``S``."""
    return min(
        (rotate(S, shift) for shift in S.context.vertices),
        key=lambda R: R.members,
    )


def is_canonical(S: VertexSet) -> bool:
    return canonical_rotation(S) == S


def brute_force_rainbow(
    family: Sequence[VertexSet], m: int
) -> Optional[dict[int, Vertex]]:
    """
    Search for a (partial) rainbow independent ``m``-set.

    Backtracks over family indices in order, trying the index's vertices in
    ascending order before skipping the index, and prunes any vertex that
    repeats or touches one already chosen. The first solution found is
    returned, so the result is deterministic.

    Parameters
    ----------
    family : Sequence[VertexSet]
        Sets on a common cycle.
    m : int
        Number of distinct indices (and vertices) required.

    Returns
    -------
    dict[int, Vertex] | None
        0-based family index -> vertex, or None when no rainbow independent
        ``m``-set exists.
    """
    if m <= 0:
        return {}
    n = len(family)
    if n < m:
        return None
    t = family[0].context.t
    full = (1 << t) - 1

    # bit v of closed[v] and of its two neighbours: taking v blocks all three
    closed = [
        (1 << v | 1 << (v + 1) % t | 1 << (v - 1) % t) & full for v in range(t)
    ]
    members = [S.members for S in family]
    chosen: dict[int, Vertex] = {}

    def search(pos: int, need: int, blocked: int) -> bool:
        if need == 0:
            return True
        if n - pos < need:
            return False
        for v in members[pos]:
            if blocked >> v & 1:
                continue
            chosen[pos] = v
            if search(pos + 1, need - 1, blocked | closed[v]):
                return True
            del chosen[pos]
        return search(pos + 1, need, blocked)

    return dict(chosen) if search(0, m, 0) else None


def random_instance(s: int, rng: Random) -> Instance:
    """
    ``s`` independent ``s``-sets of C_{2s+1}, drawn uniformly with repeats.

    Every such set is the doubling image of one of the ``2s + 1`` arcs, so
    drawing a uniform arc start per set covers the whole instance space.
    """
    if s < 1:
        raise InvalidParameters(f"s must be >= 1, got {s}.")
    ctx = CycleContext(2 * s + 1)
    family = tuple(
        arc_to_independent_set(Arc(rng.randrange(ctx.t), s, ctx))
        for _ in range(s)
    )
    return Instance(ctx, family)
