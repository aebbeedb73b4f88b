"""Skyscraper systems, within-tower elements, exact metrics."""

import random

import pytest

from odofull import (
    CrossesTopError,
    Dyadic,
    MassExceedsOneError,
    NotBijectiveError,
    NotInLevelSetError,
    SystemMismatchError,
    TowerElement,
    TowerSystem,
    counterexample_element,
    counterexample_report,
    tower_metric,
)


def path_distance_oracle(u: TowerElement, v: TowerElement) -> Dyadic:
    """Per-point walk along the tower path graph instead of |shift| sums."""
    total = Dyadic(0)
    for tower, mu, mv in zip(u.system.towers, u.moves, v.moves):
        a, b = dict(mu), dict(mv)
        for i in set(a) | set(b):
            top, bottom = i + a.get(i, 0), i + b.get(i, 0)
            steps = 0
            while top != bottom:
                top += 1 if top < bottom else -1
                steps += 1
            total = total + tower.base_measure * steps
    return total


# -- systems -----------------------------------------------------------------


def test_tower_make_single():
    system = TowerSystem([(4, Dyadic(1, 3))])
    assert system.total_mass == Dyadic(1, 1)
    assert system.mass_deficit() == Dyadic(1, 1)


def test_tower_make_geometric_family():
    count = 6
    system = TowerSystem([(4**n, Dyadic(1, 3 * n)) for n in range(1, count + 1)])
    assert system.total_mass == Dyadic((1 << count) - 1, count)
    assert system.mass_deficit() == Dyadic(1, count)


def test_tower_make_mass_check():
    with pytest.raises(MassExceedsOneError):
        TowerSystem([(1, Dyadic(2))])
    with pytest.raises(ValueError):
        TowerSystem([(0, Dyadic(1, 1))])
    with pytest.raises(ValueError):
        TowerSystem([(1, Dyadic(0))])


# -- elements -----------------------------------------------------------------


def test_identity_element():
    system = TowerSystem([(4, Dyadic(1, 3))])
    u = TowerElement(system, [[0, 0, 0, 0]])
    assert u.is_identity
    assert u == TowerElement.identity(system)


def test_half_swap_is_involution():
    system = TowerSystem([(4, Dyadic(1, 3))])
    u = TowerElement(system, [[2, 2, -2, -2]])
    assert u * u == TowerElement.identity(system)
    assert u.inverse() == u


def test_crossing_top_rejected():
    system = TowerSystem([(4, Dyadic(1, 3))])
    with pytest.raises(CrossesTopError):
        TowerElement(system, [[1, 1, 1, 1]])
    with pytest.raises(CrossesTopError):
        TowerElement(system, [[-1, 0, 0, 0]])


def test_non_bijective_rejected():
    system = TowerSystem([(4, Dyadic(1, 3))])
    with pytest.raises(NotBijectiveError):
        TowerElement(system, [[1, 0, 0, 0]])
    with pytest.raises(NotBijectiveError):
        TowerElement(system, [[2, 1, 0, -1]])


def test_sparse_and_dense_construction_agree():
    system = TowerSystem([(8, Dyadic(1, 4)), (2, Dyadic(1, 4))])
    dense = TowerElement(system, [[4, 0, 0, 0, -4, 0, 0, 0], [1, -1]])
    sparse = TowerElement.from_moves(system, [{0: 4, 4: -4}, {0: 1, 1: -1}])
    assert dense == sparse
    assert dense.dense_shifts() == ((4, 0, 0, 0, -4, 0, 0, 0), (1, -1))
    assert dense.shift_at(0, 4) == -4
    assert dense.shift_at(0, 3) == 0


def test_group_laws_random():
    rng = random.Random(503)
    system = TowerSystem([(6, Dyadic(1, 4)), (5, Dyadic(1, 5))])

    def random_tower_element():
        shifts = []
        for tower in system.towers:
            levels = list(range(tower.height))
            rng.shuffle(levels)
            shifts.append([levels[i] - i for i in range(tower.height)])
        return TowerElement(system, shifts)

    identity = TowerElement.identity(system)
    for _ in range(100):
        u, v, w = (random_tower_element() for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert u * u.inverse() == identity
        assert u.inverse() * u == identity


def test_system_mismatch_rejected():
    a = TowerElement.identity(TowerSystem([(2, Dyadic(1, 2))]))
    b = TowerElement.identity(TowerSystem([(3, Dyadic(1, 2))]))
    with pytest.raises(SystemMismatchError):
        tower_metric(a, b)
    with pytest.raises(SystemMismatchError):
        a * b


# -- metrics -------------------------------------------------------------------


def test_metric_zero_on_equal_elements():
    u = counterexample_element(2)
    assert tower_metric(u, u) == Dyadic(0)
    assert tower_metric(u, u, induced_on=[range(0, 16, 4)]) == Dyadic(0)


def test_metric_first_crossing_element():
    u = counterexample_element(1)
    identity = TowerElement.identity(u.system)
    assert tower_metric(u, identity) == Dyadic(1, 1)
    assert tower_metric(u, identity, induced_on=[[0, 2]]) == Dyadic(1, 2)


def test_metric_matches_path_walk_oracle():
    rng = random.Random(509)
    system = TowerSystem([(16, Dyadic(1, 6)), (64, Dyadic(1, 8))])
    for _ in range(50):
        shifts = []
        for tower in system.towers:
            levels = list(range(tower.height))
            rng.shuffle(levels)
            shifts.append([levels[i] - i for i in range(tower.height)])
        u = TowerElement(system, shifts)
        shifts = []
        for tower in system.towers:
            levels = list(range(tower.height))
            rng.shuffle(levels)
            shifts.append([levels[i] - i for i in range(tower.height)])
        v = TowerElement(system, shifts)
        assert tower_metric(u, v) == path_distance_oracle(u, v)


def test_metric_induced_rejects_moves_off_the_level_set():
    u = counterexample_element(1)
    identity = TowerElement.identity(u.system)
    with pytest.raises(NotInLevelSetError):
        tower_metric(u, identity, induced_on=[[0, 1]])
    with pytest.raises(ValueError):
        tower_metric(u, identity, induced_on=[[0, 99]])


def test_metric_induced_counts_positions_not_levels():
    system = TowerSystem([(9, Dyadic(1, 4))])
    u = TowerElement.from_moves(system, [{0: 8, 8: -8}])
    identity = TowerElement.identity(system)
    assert tower_metric(u, identity) == Dyadic(1)
    # levels 0, 4, 8 sit one return-step apart, so the jump costs two steps
    assert tower_metric(u, identity, induced_on=[[0, 4, 8]]) == Dyadic(1, 2)


# -- the crossing involutions ------------------------------------------------------


def test_counterexample_element_small_cases():
    u1 = counterexample_element(1)
    assert dict(u1.moves[0]) == {0: 2, 2: -2}
    u2 = counterexample_element(2)
    assert dict(u2.moves[0]) == {0: 8, 4: 8, 8: -8, 12: -8}


def test_counterexample_elements_are_involutions():
    for n in range(1, 13):
        u = counterexample_element(n)
        assert (u * u).is_identity
        assert len(u.moves[0]) == 2**n


def test_counterexample_report_exact_columns():
    report = counterexample_report(10)
    assert report.mass_deficit == Dyadic(1, 10)
    for row in report.rows:
        assert row.ambient_distance == Dyadic(1, 1)
        assert row.induced_distance == Dyadic(1, row.n + 1)


def test_counterexample_induced_column_sums_geometrically():
    report = counterexample_report(10)
    total = Dyadic(0)
    for row in report.rows:
        total = total + row.induced_distance
    assert total == Dyadic(1023, 11)
