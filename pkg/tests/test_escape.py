"""Escape times and the diverging tower family."""

import random

import pytest

from odofull import (
    ClopenSet,
    DepthCapError,
    Dyadic,
    EmptySetError,
    INFINITE,
    escape_time,
    escape_tower_family,
)


def escape_oracle(subset: ClopenSet) -> dict:
    """Per-point bidirectional walk, the simplest possible route."""
    size = 1 << subset.depth
    member = subset.bits
    times = {}
    for s in subset.prefixes():
        k = 1
        while ((member >> ((s + k) % size)) & 1) and ((member >> ((s - k) % size)) & 1):
            k += 1
        times[s] = k
    return times


def test_whole_space_never_escapes():
    result = escape_time(ClopenSet.full())
    assert result.is_infinite
    assert result.integral is INFINITE
    assert list(result.times.values()) == [INFINITE]


def test_single_cylinder_escapes_immediately():
    for depth in range(1, 6):
        result = escape_time(ClopenSet.from_prefixes(depth, {depth}))
        assert set(result.times.values()) == {1}
        assert result.integral == Dyadic(1, depth)


def test_three_cylinder_run():
    result = escape_time(ClopenSet.from_prefixes(2, {0, 1, 2}))
    assert result.times == {0: 1, 1: 2, 2: 1}
    assert result.integral == Dyadic(1)


def test_empty_set_rejected():
    with pytest.raises(EmptySetError):
        escape_time(ClopenSet.empty())


def test_escape_matches_pointwise_oracle():
    rng = random.Random(401)
    for _ in range(400):
        depth = rng.randint(1, 8)
        bits = rng.getrandbits(1 << depth)
        if not bits:
            bits = 1
        subset = ClopenSet(depth, bits)
        if subset.is_full:
            continue
        result = escape_time(subset)
        assert result.times == escape_oracle(subset)
        assert result.integral == Dyadic(sum(result.times.values()), result.depth)


def test_tower_family_first_row():
    row = escape_tower_family(1)[0]
    assert (row.m, row.depth) == (1, 3)
    assert row.measure == Dyadic(1, 1)
    assert row.integral == Dyadic(3, 2)


def test_tower_family_measures_and_growth():
    rows = escape_tower_family(5)
    for row in rows:
        assert row.measure == Dyadic(1, row.m)
    for previous, current in zip(rows, rows[1:]):
        assert current.integral * 2 >= previous.integral * 3


def test_tower_family_closed_form():
    # escape from a run of K consecutive levels sums min(s+1, K-s)
    for row in escape_tower_family(4):
        K = 4**row.m
        assert row.integral == Dyadic((K // 2) * (K // 2 + 1), 3 * row.m)


def test_tower_family_matches_oracle_at_small_depth():
    for row in escape_tower_family(3):
        subset = ClopenSet.from_prefixes(row.depth, range(4**row.m))
        assert row.integral == Dyadic(sum(escape_oracle(subset).values()), row.depth)


def test_tower_family_depth_cap():
    with pytest.raises(DepthCapError):
        escape_tower_family(9)
    with pytest.raises(ValueError):
        escape_tower_family(0)
