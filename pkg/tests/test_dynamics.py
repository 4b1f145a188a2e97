import pytest

from candy_sharing import (
    CandyError,
    CycleNotFound,
    State,
    detect_cycle,
    enumerate_states,
    index,
    is_periodic,
    orbit,
    rotate,
    step,
)
from oracles import transient_and_period

S = State.of


def wave(n):
    return State((0, 2) + (1,) * (n - 2))


def test_index_lowering_example():
    traj = detect_cycle(S(2, 2, 0, 0))
    assert (traj.transient_length, traj.period) == (1, 1)
    assert traj.cycle == (S(1, 1, 1, 1),)


def test_wave_of_four():
    traj = detect_cycle(S(0, 2, 1, 1))
    assert (traj.transient_length, traj.period) == (0, 4)
    assert set(traj.cycle) == {rotate(S(0, 2, 1, 1), k) for k in range(4)}


def test_alternation_has_period_two():
    traj = detect_cycle(S(0, 2, 0, 2))
    assert (traj.transient_length, traj.period) == (0, 2)


def test_fixed_state():
    traj = detect_cycle(S(1, 1, 1))
    assert (traj.transient_length, traj.period) == (0, 1)


@pytest.mark.parametrize("n", range(3, 12))
def test_wave_moves_one_place_clockwise(n):
    assert step(wave(n)) == rotate(wave(n), -1)


@pytest.mark.parametrize("n", range(3, 9))
def test_wave_period_is_n(n):
    assert detect_cycle(wave(n)).period == n


def test_is_periodic():
    assert is_periodic(S(0, 2, 1, 1))
    assert not is_periodic(S(2, 2, 0, 0))
    assert is_periodic(S(1, 1, 1, 1))


def test_cap_raises():
    with pytest.raises(CycleNotFound):
        detect_cycle(S(4, 0, 0, 0), max_steps=1)


def test_max_steps_must_be_positive():
    with pytest.raises(CandyError):
        detect_cycle(S(1), max_steps=0)


def test_steps_are_kept_on_request():
    traj = detect_cycle(S(2, 2, 0, 0), keep_steps=True)
    assert traj.steps == (S(2, 2, 0, 0), S(1, 1, 1, 1))
    assert detect_cycle(S(2, 2, 0, 0)).steps is None


def test_orbit_prefix():
    assert orbit(S(0, 2, 1), 3) == [S(0, 2, 1), S(1, 0, 2), S(2, 1, 0), S(0, 2, 1)]


def test_trajectory_json():
    assert detect_cycle(S(2, 2, 0, 0)).to_json() == {
        "initial": [2, 2, 0, 0],
        "transient_length": 1,
        "period": 1,
        "cycle": [[1, 1, 1, 1]],
    }


def _check_trajectory(s, traj):
    p = traj.period
    for i, t in enumerate(traj.cycle):
        assert step(t) == traj.cycle[(i + 1) % p]
    assert len(set(traj.cycle)) == p
    x = s
    for _ in range(traj.transient_length):
        x = step(x)
    assert x == traj.cycle[0]


@pytest.mark.parametrize("n", range(1, 8))
def test_agrees_with_brute_force_orbit(n):
    for s in enumerate_states(n):
        traj = detect_cycle(s)
        t, p, cyc = transient_and_period(s.counts, limit=4 * n + 10)
        assert (traj.transient_length, traj.period) == (t, p)
        assert [x.counts for x in traj.cycle] == cyc
        _check_trajectory(s, traj)


def test_cycles_have_small_entries_and_constant_index():
    for n in range(3, 9):
        for s in enumerate_states(n):
            traj = detect_cycle(s)
            values = {index(t) for t in traj.cycle}
            assert len(values) == 1
            assert all(max(t.counts) <= 2 for t in traj.cycle)


def test_unbalanced_states_still_close():
    for s in [S(5, 0, 0), S(9, 0, 0, 0, 0), S(3, 3, 3, 3)]:
        traj = detect_cycle(s)
        _check_trajectory(s, traj)
