from __future__ import annotations

from rainbow_cycles.cycle.transform import DoublingMap, independent_set_to_arc
from rainbow_cycles.errors import RainbowError
from rainbow_cycles.solver.construction import (
    check_claims,
    choose_k,
    construct_assignment,
    normalize,
    window_start,
)
from rainbow_cycles.solver.instance import Instance, RainbowCertificate, Trace


def solve(inst: Instance) -> RainbowCertificate:
    """
    Construct a rainbow independent s-set for s independent s-sets of
    C_{2s+1}.

    The sets are pulled back to arcs through the doubling map, the arcs are
    normalized, a shift is chosen, the window is built in the normalized
    frame, and each window vertex is rotated back and pushed forward
    through the doubling map to the set it represents.

    Parameters
    ----------
    inst : Instance
        ``s`` independent ``s``-sets on C_{2s+1}.

    Returns
    -------
    RainbowCertificate
        Covering every family index, with the derivation trace attached.

    Raises
    ------
    WrongCycleOrder, WrongSize, NotIndependent
        When ``inst`` violates the hypotheses.
    """
    inst.validate(odd_cycle=True)
    ctx, s = inst.context, inst.s
    dmap = DoublingMap(ctx)

    arcs = []
    for i, S in enumerate(inst.family):
        try:
            arcs.append(independent_set_to_arc(S))
        except RainbowError as e:
            e.index = i
            raise

    norm = normalize(arcs)
    choice = choose_k(norm, s)
    check_claims(norm, choice)
    window = construct_assignment(norm, choice)

    assignment = {}
    for pos, v in enumerate(window):
        arc_vertex = ctx.reduce(v - norm.rotation)
        assignment[norm.permutation[pos]] = dmap.apply(arc_vertex)

    trace = Trace(
        rotation=norm.rotation,
        permutation=norm.permutation,
        k=choice.k,
        case=choice.case,
        r=choice.r,
        window_start=window_start(norm, window),
    )
    return RainbowCertificate(
        assignment=dict(sorted(assignment.items())), trace=trace
    )
