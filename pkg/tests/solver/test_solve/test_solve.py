import random
from itertools import product

import pytest

from rainbow_cycles.cycle.model import Arc, CycleContext, VertexSet
from rainbow_cycles.cycle.transform import arc_to_independent_set
from rainbow_cycles.errors import NotIndependent, WrongCycleOrder, WrongSize
from rainbow_cycles.solver.instance import (
    CaseTag,
    Instance,
    RainbowCertificate,
    verify_certificate,
)
from rainbow_cycles.solver.solve import solve


def instance(t, sets):
    ctx = CycleContext(t)
    return Instance(
        ctx, tuple(VertexSet.from_external(ctx, labels) for labels in sets)
    )


def external(cert):
    return {i + 1: v + 1 for i, v in cert.assignment.items()}


def random_instance(rng, s):
    ctx = CycleContext(2 * s + 1)
    family = tuple(
        arc_to_independent_set(Arc(rng.randrange(ctx.t), s, ctx))
        for _ in range(s)
    )
    return Instance(ctx, family)


def test_solve_hand_traced_instance():
    cert = solve(instance(5, [[2, 4], [3, 5]]))
    assert external(cert) == {1: 2, 2: 5}

    trace = cert.trace
    assert trace.rotation == -1
    assert trace.permutation == (1, 0)
    assert (trace.k, trace.case, trace.r) == (1, CaseTag.CASE_1, 2)
    assert trace.window_start == 2


def test_solve_single_set():
    cert = solve(instance(3, [[2]]))
    assert external(cert) == {1: 2}


def test_solve_identical_sets():
    cert = solve(instance(5, [[1, 3], [1, 3]]))
    assert external(cert) == {1: 1, 2: 3}


@pytest.mark.parametrize(
    "t,sets,error,index",
    [
        (5, [[1, 2], [3, 5]], NotIndependent, 0),
        (5, [[1, 3], [2]], WrongSize, 1),
        (7, [[1, 3], [2, 4]], WrongCycleOrder, None),
    ],
)
def test_solve_rejects_invalid_instances(t, sets, error, index):
    with pytest.raises(error) as info:
        solve(instance(t, sets))
    assert info.value.index == index


@pytest.mark.parametrize("s", range(1, 5))
def test_solve_is_correct_on_every_family(s):
    ctx = CycleContext(2 * s + 1)
    for starts in product(ctx.vertices, repeat=s):
        family = tuple(arc_to_independent_set(Arc(a, s, ctx)) for a in starts)
        inst = Instance(ctx, family)
        assert verify_certificate(inst, solve(inst))


def test_solve_is_deterministic():
    rng = random.Random(20251019)
    for _ in range(100):
        inst = random_instance(rng, rng.randint(1, 8))
        first, second = solve(inst), solve(inst)
        assert first == second
        assert first.trace == second.trace


# --- verify_certificate ------------------------------------------------------


def test_verify_accepts_the_solver_certificate():
    inst = instance(5, [[2, 4], [3, 5]])
    assert verify_certificate(inst, solve(inst)).ok


@pytest.mark.parametrize(
    "sets,assignment,reason",
    [
        ([[1, 3], [1, 3]], {0: 0, 1: 0}, "distinctness"),
        ([[1, 3], [2, 4]], {0: 0, 1: 1}, "independence"),
        ([[1, 3], [2, 4]], {0: 0}, "size"),
        ([[1, 3], [2, 4]], {0: 0, 5: 3}, "size"),
        ([[1, 3], [2, 4]], {0: 1, 1: 3}, "membership"),
    ],
)
def test_verify_rejections(sets, assignment, reason):
    result = verify_certificate(
        instance(5, sets), RainbowCertificate(assignment)
    )
    assert not result
    assert result.reason == reason
    assert result.detail


def test_verify_partial_rainbow_sets():
    inst = instance(7, [[1, 3, 5], [2, 4, 6], [3, 5, 7]])
    cert = RainbowCertificate({0: 0, 2: 4})
    assert not verify_certificate(inst, cert)
    assert verify_certificate(inst, cert, size=2)


def test_verify_ignores_the_trace():
    inst = instance(5, [[2, 4], [3, 5]])
    bare = RainbowCertificate(dict(solve(inst).assignment))
    assert verify_certificate(inst, bare)
    assert bare == solve(inst)
