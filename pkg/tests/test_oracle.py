import pytest

from dstream import oracle
from dstream.chronology import epoch_of, hanoi_value, meta_epoch_of


def test_naive_arithmetic():
    assert [oracle.naive_hanoi(T) for T in range(8)] == [0, 1, 0, 2, 0, 1, 0, 3]
    assert [oracle.naive_log2_floor(x) for x in (1, 2, 3, 4, 1023, 1024)] == [0, 1, 1, 2, 9, 10]
    for T in range(3000):
        assert oracle.naive_epoch(16, T) == epoch_of(16, T)
    for t in range(62):
        assert oracle.naive_meta_epoch(t) == meta_epoch_of(t)


def test_replay_examples():
    assert oracle.replay("steady", 32, 0) == [None] * 32
    table = oracle.replay("steady", 32, 13)
    head = [0, 1, 6, 2, 10, 7, 13, 3, 16, 11, 18, 8, 20]
    assert table == [head.index(k) if k in head else None for k in range(32)]


def test_replay_state_history():
    state = oracle.ReplayState("stretched", 16).advance_to(40)
    assert state.time == 40 and len(state.history) == 40
    assert all(k is None or 0 <= k < 16 for k in state.history)


def test_instance_helpers():
    for h in range(6):
        times = [T for T in range(500) if hanoi_value(T) == h]
        assert oracle.instances_before(h, 500) == times
        assert oracle.instance_count(h, 500) == len(times)
    assert list(oracle.hanoi_values_before(0)) == []
    assert list(oracle.hanoi_values_before(8)) == [0, 1, 2, 3]


def test_goal_steady_epoch0():
    assert oracle.goal_steady(32, 10) == set(range(10))


@pytest.mark.parametrize("T", range(0, 600, 37))
def test_goals_against_scan(T):
    n = oracle.reservation_count(16, T)
    by_h: dict[int, list[int]] = {}
    for x in range(T):
        by_h.setdefault(oracle.naive_hanoi(x), []).append(x)
    first = {x for xs in by_h.values() for x in xs[:n]}
    last = {x for xs in by_h.values() for x in xs[-n:]}
    assert oracle.goal_stretched(16, T) == first
    assert oracle.goal_tilted(16, T) == last
    assert oracle.goal_steady(16, T) == oracle.goal_steady_brute(16, T)


def test_reservation_count_halves_per_meta_epoch():
    assert oracle.reservation_count(16, 0) == 8
    assert oracle.reservation_count(16, 16) == 4
    assert oracle.reservation_count(16, 2**15) == 1


def test_ideal_steady_cost():
    assert oracle.ideal_steady_cost(4, 4) == 0
    # Keeping 4 of 14 leaves 10 discards across 5 gaps.
    assert oracle.ideal_steady_cost(4, 14) == 2
    assert oracle.ideal_steady_cost(4, 15) == 3


def test_gap_profile_brute():
    assert oracle.gap_profile_brute({0, 1, 2, 6}, 7) == [0, 0, 0, 3, 3, 3, 0]
