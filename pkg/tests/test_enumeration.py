import math
from collections import Counter

import pytest

from candy_sharing import (
    THEOREMS,
    BudgetExceeded,
    State,
    canonical_rotation,
    check_states,
    count_states,
    enumerate_states,
    is_symmetric,
    random_states,
    rotate,
    verify,
)
from candy_sharing.enumeration import weak_compositions
from oracles import compositions_brute, least_rotation_brute


def test_small_examples():
    assert set(enumerate_states(2, 2)) == {State.of(0, 2), State.of(1, 1), State.of(2, 0)}
    assert len(list(enumerate_states(3, 3))) == 10
    assert list(map(tuple, enumerate_states(3, 3, unique=True))) == [
        (1, 1, 1),
        (0, 2, 1),
        (0, 1, 2),
        (0, 0, 3),
    ]


@pytest.mark.parametrize("n, m", [(n, n) for n in range(1, 9)] + [(3, 0), (4, 6), (1, 5)])
def test_complete_and_duplicate_free(n, m):
    got = list(weak_compositions(n, m))
    assert len(got) == len(set(got)) == count_states(n, m) == math.comb(m + n - 1, n - 1)
    if n <= 6:
        assert set(got) == compositions_brute(n, m)


def test_colex_order():
    got = list(weak_compositions(3, 2))
    assert got == sorted(got, key=lambda c: c[::-1])


@pytest.mark.parametrize("n", range(1, 7))
def test_unique_mode_expands_back_to_all(n):
    unique = list(enumerate_states(n, unique=True))
    assert len({s.counts for s in unique}) == len(unique)
    expanded = Counter()
    for s in unique:
        assert s.counts == least_rotation_brute(s.counts)
        # each necklace contributes its distinct rotations once
        expanded.update({rotate(s, k) for k in range(n)})
    assert expanded == Counter(enumerate_states(n))


def test_every_state_has_its_representative_exactly_once():
    reps = Counter(enumerate_states(6, unique=True))
    for s in enumerate_states(6):
        assert reps[canonical_rotation(s)] == 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_states(8, budget=100))
    with pytest.raises(BudgetExceeded):
        verify("prediction", [8], budget=100)


def test_random_states_are_reproducible_and_valid():
    a = random_states(12, None, 50, seed=3)
    assert a == random_states(12, None, 50, seed=3)
    assert all(s.n == 12 and s.total == 12 for s in a)


def test_random_states_cover_the_space():
    seen = set(random_states(3, 3, 500, seed=0))
    assert seen == set(enumerate_states(3))


@pytest.mark.parametrize("theorem", THEOREMS)
def test_every_theorem_holds_on_small_rings(theorem):
    report = verify(theorem, range(3, 7))
    assert report.ok, report.failures[:3]


def test_states_checked_counts():
    assert verify("tau-invariance", [4]).states_checked == 35
    assert verify("monopoly", range(3, 13)).states_checked == 10
    sym = verify("symmetric", [5])
    assert sym.states_checked == sum(1 for s in enumerate_states(5) if is_symmetric(s))


def test_verify_is_deterministic_across_workers():
    one = verify("taxonomy", range(3, 8), jobs=1)
    many = verify("taxonomy", range(3, 8), jobs=3)
    assert one.to_json() == many.to_json()
    assert one.csv_rows() == many.csv_rows()


def test_failures_are_reported_not_raised():
    # unbalanced states break the prediction preconditions
    report = check_states("prediction", [State.of(3, 0, 0), State.of(2, 0, 0)])
    assert report.states_checked == 2
    assert len(report.failures) == 1
    assert report.failures[0]["state"] == [2, 0, 0]
    assert "NotBalanced" in report.failures[0]["observed"]


def test_mismatch_is_reported():
    # not a monopoly state, so it does not end in the equivocal 2-cycle
    report = check_states("monopoly", [State.of(1, 1, 2, 0)])
    assert not report.ok


def test_report_json_shape():
    report = verify("monopoly", [3, 4])
    assert report.to_json() == {
        "theorem": "monopoly",
        "n": [3, 4],
        "states_checked": 2,
        "failures": [],
    }
    assert "elapsed_ms" in report.to_json(timing=True)
    assert report.csv_rows() == [
        {"theorem": "monopoly", "n": 3, "states_checked": 1, "failures": 0},
        {"theorem": "monopoly", "n": 4, "states_checked": 1, "failures": 0},
    ]
