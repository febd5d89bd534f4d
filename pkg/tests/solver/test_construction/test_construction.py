from itertools import product

import pytest

from rainbow_cycles.cycle.model import Arc, CycleContext
from rainbow_cycles.errors import NoValidK, WrongCycleOrder, WrongSize
from rainbow_cycles.solver.construction import (
    NormalizedArcs,
    admissible_shifts,
    check_claims,
    choose_k,
    claim_violations,
    classify_shift,
    construct_assignment,
    forbidden_residues,
    normalize,
    window_start,
)
from rainbow_cycles.solver.instance import CaseTag


def arcs(t, starts):
    ctx = CycleContext(t)
    s = (t - 1) // 2
    return [Arc(a - 1, s, ctx) for a in starts]


def normalized(starts):
    s = len(starts)
    return NormalizedArcs(
        starts=tuple(starts),
        rotation=0,
        permutation=tuple(range(s)),
        context=CycleContext(2 * s + 1),
    )


def all_normalized(s):
    for tail in product(range(1, 2 * s + 2), repeat=s - 1):
        yield normalize(arcs(2 * s + 1, (1, *tail)))


# --- normalize ---------------------------------------------------------------


@pytest.mark.parametrize(
    "starts,expected,rotation,permutation",
    [
        ((3, 4), (1, 2), -2, (0, 1)),
        ((1, 1, 1), (1, 1, 1), 0, (0, 1, 2)),
        ((5, 2), (1, 4), -1, (1, 0)),
    ],
)
def test_normalize_examples(starts, expected, rotation, permutation):
    norm = normalize(arcs(2 * len(starts) + 1, starts))
    assert norm.starts == expected
    assert norm.rotation == rotation
    assert norm.permutation == permutation


def test_normalize_is_stable_on_ties():
    norm = normalize(arcs(7, (4, 2, 4)))
    assert norm.starts == (1, 3, 3)
    assert norm.permutation == (1, 0, 2)


def test_normalize_rejects_mismatched_families():
    with pytest.raises(WrongCycleOrder):
        normalize(arcs(7, (1, 2)))
    with pytest.raises(WrongSize):
        normalize([])


# --- choose_k ----------------------------------------------------------------


def test_forbidden_residues_examples():
    assert forbidden_residues((1, 2), 2) == {4, 2}
    assert forbidden_residues((1, 1), 2) == {1, 2, 3, 4}


@pytest.mark.parametrize("starts", [(1, 2), (1, 1)])
def test_choose_k_examples(starts):
    choice = choose_k(normalized(starts), 2)
    assert (choice.k, choice.case, choice.r) == (0, CaseTag.CASE_1, 2)


@pytest.mark.parametrize("s", range(1, 8))
def test_choose_k_on_identical_arcs(s):
    choice = choose_k(normalized((1,) * s), s)
    assert (choice.k, choice.case, choice.r) == (0, CaseTag.CASE_1, s)


@pytest.mark.parametrize("s", range(1, 6))
def test_smallest_shift_satisfies_every_claim(s):
    for norm in all_normalized(s):
        assert len(forbidden_residues(norm.starts, s)) <= 2 * s
        choice = choose_k(norm, s)
        assert choice.k == admissible_shifts(norm)[0]
        assert claim_violations(norm, choice) == []


@pytest.mark.parametrize("s", range(1, 5))
def test_every_admissible_shift_builds_a_window(s):
    for norm in all_normalized(s):
        for k in admissible_shifts(norm):
            choice = classify_shift(norm, k)
            check_claims(norm, choice)
            window = construct_assignment(norm, choice)
            assert len(set(window)) == s


def test_classify_shift_rejects_forbidden_shifts():
    norm = normalized((1, 2))
    with pytest.raises(NoValidK):
        classify_shift(norm, 2)
    with pytest.raises(NoValidK):
        classify_shift(norm, 5)


def test_choose_k_checks_family_size():
    with pytest.raises(WrongSize):
        choose_k(normalized((1, 2)), 3)


# --- construct_assignment ----------------------------------------------------


@pytest.mark.parametrize(
    "starts,expected",
    [((1, 2), (0, 1)), ((1, 1), (0, 1)), ((1, 1, 1), (0, 1, 2))],
)
def test_case_one_windows(starts, expected):
    norm = normalized(starts)
    window = construct_assignment(norm, choose_k(norm, len(starts)))
    assert window == expected
    assert window_start(norm, window) == 1


def test_case_two_window():
    norm = normalized((1, 4))
    assert admissible_shifts(norm) == [0, 3]

    choice = classify_shift(norm, 3)
    assert (choice.case, choice.r) == (CaseTag.CASE_2, 1)
    assert claim_violations(norm, choice) == []

    # position 1 takes k+s+1 = 6 -> vertex 1, position 2 takes k+2 = 5
    window = construct_assignment(norm, choice)
    assert window == (0, 4)
    assert window_start(norm, window) == 5


def test_claim_violations_reports_bad_case_bounds():
    norm = normalized((1, 4))
    choice = classify_shift(norm, 3)
    bogus = type(choice)(
        k=choice.k, case=CaseTag.CASE_1, r=choice.r, forbidden=choice.forbidden
    )
    assert any("Case 1" in v for v in claim_violations(norm, bogus))
