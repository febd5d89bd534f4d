from itertools import product
from random import Random

import pytest

from rainbow_cycles.cycle.model import CycleContext, VertexSet
from rainbow_cycles.errors import InvalidParameters
from rainbow_cycles.oracle.search import (
    brute_force_rainbow,
    canonical_rotation,
    enumerate_independent_sets,
    is_canonical,
    iter_independent_sets,
    random_instance,
    rotate,
)
from rainbow_cycles.solver.instance import (
    Instance,
    RainbowCertificate,
    verify_certificate,
)


def family(t, sets):
    ctx = CycleContext(t)
    return [VertexSet.from_external(ctx, labels) for labels in sets]


def test_enumerate_pairs_of_c5():
    sets = enumerate_independent_sets(CycleContext(5), 2)
    assert [S.to_external() for S in sets] == [
        [1, 3],
        [1, 4],
        [2, 4],
        [2, 5],
        [3, 5],
    ]


@pytest.mark.parametrize(
    "t,m,count",
    [(5, 1, 5), (7, 3, 7), (7, 2, 14), (9, 3, 30), (11, 4, 55), (8, 4, 2)],
)
def test_enumeration_counts(t, m, count):
    assert len(enumerate_independent_sets(CycleContext(t), m)) == count


@pytest.mark.parametrize("m", [0, 5, 9])
def test_enumeration_rejects_bad_sizes(m):
    with pytest.raises(InvalidParameters):
        list(iter_independent_sets(CycleContext(5), m))


def test_canonical_rotation():
    ctx = CycleContext(9)
    S = VertexSet.from_external(ctx, [4, 7, 9])
    assert canonical_rotation(S).to_external() == [1, 3, 7]
    assert rotate(S, 1).to_external() == [1, 5, 8]
    assert not is_canonical(S)
    assert is_canonical(canonical_rotation(S))


def test_every_orbit_has_one_canonical_member():
    ctx = CycleContext(9)
    sets = enumerate_independent_sets(ctx, 3)
    reps = [S for S in sets if is_canonical(S)]
    assert len(reps) == 4
    orbits = {canonical_rotation(S) for S in sets}
    assert orbits == set(reps)


@pytest.mark.parametrize(
    "sets,m,expected",
    [
        ([[1, 3], [1, 3]], 2, {0: 0, 1: 2}),
        ([[1, 3]], 2, None),
        ([[2, 4], [3, 5]], 2, {0: 1, 1: 4}),
        ([[2, 4], [3, 5]], 0, {}),
    ],
)
def test_brute_force_examples(sets, m, expected):
    assert brute_force_rainbow(family(5, sets), m) == expected


def test_brute_force_finds_partial_rainbow_sets():
    # sets 1 and 2 are singletons on one edge; only one of them can be used
    fam = family(7, [[1], [2], [4]])
    found = brute_force_rainbow(fam, 2)
    assert found == {0: 0, 2: 3}
    assert brute_force_rainbow(fam, 3) is None


@pytest.mark.parametrize("s", range(2, 6))
def test_fewer_than_s_sets_never_suffice(s):
    ctx = CycleContext(2 * s + 1)
    sets = enumerate_independent_sets(ctx, s)
    for fam in product(sets[:4], repeat=s - 1):
        assert brute_force_rainbow(list(fam), s) is None


@pytest.mark.parametrize("t,m", [(7, 2), (9, 3)])
def test_brute_force_solutions_pass_the_checker(t, m):
    ctx = CycleContext(t)
    sets = enumerate_independent_sets(ctx, m)
    for fam in product(sets[:8], repeat=m):
        found = brute_force_rainbow(fam, m)
        assert found is not None
        inst = Instance(ctx, tuple(fam))
        assert verify_certificate(inst, RainbowCertificate(found))


@pytest.mark.parametrize("s", [1, 2, 5])
def test_random_instances_are_valid_and_seeded(s):
    inst = random_instance(s, Random(3))
    inst.validate()
    assert inst.context.t == 2 * s + 1
    assert len(inst.family) == s
    assert inst == random_instance(s, Random(3))


def test_random_instance_rejects_bad_sizes():
    with pytest.raises(InvalidParameters):
        random_instance(0, Random(0))
