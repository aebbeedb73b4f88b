"""Decompositions and certified factorizations."""

import random

import pytest

from odofull import (
    ClopenSet,
    FullGroupElement,
    NotAlmostPositiveError,
    NotPeriodicError,
    NotPositiveError,
    decompose_pnp,
    factor_periodic_into_involutions,
    factor_positive,
    induce,
    normal_form,
    positivize,
    random_element,
)
from odofull.verify import random_periodic_element

E = FullGroupElement
T = E.odometer()
IDENTITY = E.identity()


# -- cycle-class decomposition ---------------------------------------------------


def test_decompose_periodic_element_is_pure_periodic():
    u = E(2, [1, 1, -2, 0])
    parts = decompose_pnp(u)
    assert parts == (u, IDENTITY, IDENTITY)


def test_decompose_positive_cycle_element():
    u = E(2, [3, 1, -2, 2])
    parts = decompose_pnp(u)
    assert parts == (IDENTITY, u, IDENTITY)
    inverted = decompose_pnp(u.inverse())
    assert inverted == (IDENTITY, IDENTITY, u.inverse())


def test_decompose_recomposes_with_disjoint_supports():
    rng = random.Random(307)
    for _ in range(300):
        u = random_element(rng.randint(0, 7), 2, rng=rng)
        parts = decompose_pnp(u)
        assert parts.periodic * parts.almost_positive * parts.almost_negative == u
        assert parts.periodic.is_periodic()
        supports = [p.support() for p in parts]
        for i in range(3):
            for j in range(i + 1, 3):
                assert (supports[i] & supports[j]).is_empty
        # disjoint supports commute
        assert parts.almost_negative * parts.periodic * parts.almost_positive == u


# -- positivize --------------------------------------------------------------------


def test_positivize_odometer():
    straightened = positivize(T)
    assert straightened.domain == ClopenSet.full()
    assert straightened.induced == T
    assert straightened.left_periodic == IDENTITY
    assert straightened.right_periodic == IDENTITY


def test_positivize_identity_convention():
    straightened = positivize(IDENTITY)
    assert straightened.domain == ClopenSet.empty()
    assert straightened.induced == IDENTITY
    assert straightened.left_periodic == IDENTITY
    assert straightened.right_periodic == IDENTITY


def test_positivize_worked_example():
    # partial sums: from 0 they stay positive (3,5,6,4), from 3 as well
    # (2,3,1,4); from 1 and 2 they dip negative
    u = E(2, [3, 1, -2, 2])
    straightened = positivize(u)
    assert straightened.domain == ClopenSet.from_prefixes(2, {0, 3})
    assert straightened.induced == E(2, [3, 0, 0, 1])
    assert straightened.induced.index() == u.index()
    assert straightened.left_periodic.is_periodic()
    assert straightened.right_periodic.is_periodic()
    assert straightened.left_periodic * straightened.induced == u
    assert straightened.induced * straightened.right_periodic == u


def test_positivize_rejects_negative_or_periodic_cycles():
    with pytest.raises(NotAlmostPositiveError):
        positivize(T.inverse())
    with pytest.raises(NotAlmostPositiveError):
        positivize(E(1, [1, -1]))


def test_positivize_random_almost_positive_elements():
    rng = random.Random(311)
    checked = 0
    while checked < 200:
        u = random_element(rng.randint(0, 6), 1, rng=rng)
        u = decompose_pnp(u).almost_positive
        straightened = positivize(u)
        assert all(n >= 0 for n in straightened.induced.cocycle)
        assert straightened.induced.index() == u.index()
        assert straightened.left_periodic.is_periodic()
        assert straightened.right_periodic.is_periodic()
        assert straightened.left_periodic * straightened.induced == u
        assert straightened.induced * straightened.right_periodic == u
        if not u.is_identity:
            support_bits = straightened.domain.bits_at_depth(max(u.depth, straightened.domain.depth))
            element_bits = u.support().bits_at_depth(max(u.depth, straightened.domain.depth))
            assert support_bits & ~element_bits == 0
            checked += 1


# -- factor_positive -----------------------------------------------------------------


def test_factor_positive_identity_is_empty_word():
    cert = factor_positive(IDENTITY)
    assert cert.word == ()
    assert cert.verified


def test_factor_positive_single_return_map():
    subset = ClopenSet.from_prefixes(2, {0, 3})
    u = induce(T, subset).element
    assert u == E(2, [3, 0, 0, 1])
    cert = factor_positive(u)
    assert cert.verified
    assert len(cert.word) == 1
    assert cert.word[0].domain == subset


def test_factor_positive_rejects_negative_steps():
    with pytest.raises(NotPositiveError):
        factor_positive(T.inverse())


def test_factor_positive_word_length_equals_index():
    rng = random.Random(313)
    for _ in range(150):
        u = random_element(rng.randint(0, 6), 0, rng=rng)
        cert = factor_positive(u)
        assert cert.verified
        assert len(cert.word) == u.index()
        assert cert.compose_word() == u


def test_factor_positive_on_products_of_return_maps():
    rng = random.Random(317)
    for _ in range(100):
        depth = rng.randint(1, 5)
        u = IDENTITY
        for _ in range(rng.randint(1, 3)):
            bits = rng.getrandbits(1 << depth) or 1
            u = u * induce(T, ClopenSet(depth, bits)).element
        cert = factor_positive(u)
        assert cert.verified and len(cert.word) == u.index()


# -- normal form -----------------------------------------------------------------------


def test_normal_form_odometer():
    cert = normal_form(T)
    assert cert.verified
    assert [f.kind for f in cert.word] == ["power_of_T"]
    assert cert.word[-1].power == 1


def test_normal_form_involution():
    cert = normal_form(E(1, [1, -1]))
    assert cert.verified
    assert cert.word[-1].kind == "power_of_T"
    assert cert.word[-1].power == 0
    assert all(f.element.is_periodic() for f in cert.word[:-1])
    assert len(cert.word) == 2


def test_normal_form_of_return_map_to_half():
    # the return map to one half is one periodic swap away from the odometer
    u = induce(T, ClopenSet.from_prefixes(1, {0})).element
    cert = normal_form(u)
    assert cert.verified
    assert cert.word[-1].power == 1
    periodic_factors = [f.element for f in cert.word[:-1]]
    assert periodic_factors == [u * T.inverse()]
    assert all(q.is_periodic() for q in periodic_factors)


def test_normal_form_random_elements():
    rng = random.Random(331)
    for _ in range(120):
        u = random_element(rng.randint(0, 6), 1, rng=rng)
        cert = normal_form(u)
        assert cert.verified
        assert cert.word[-1].kind == "power_of_T"
        assert cert.word[-1].power == u.index()
        assert all(f.element.is_periodic() for f in cert.word[:-1])


# -- involution factorization --------------------------------------------------------------


def test_involutions_identity_empty_word():
    cert = factor_periodic_into_involutions(IDENTITY)
    assert cert.word == () and cert.verified


def test_involutions_of_an_involution():
    swap = E(1, [1, -1])
    cert = factor_periodic_into_involutions(swap)
    assert cert.verified
    assert [f.element for f in cert.word] == [swap]


def test_involutions_of_three_cycle():
    u = E(2, [1, 1, -2, 0])
    cert = factor_periodic_into_involutions(u)
    assert cert.verified
    assert len(cert.word) == 2
    for f in cert.word:
        assert f.element * f.element == IDENTITY


def test_involutions_reject_aperiodic():
    with pytest.raises(NotPeriodicError):
        factor_periodic_into_involutions(T)


def test_involutions_random_periodic():
    rng = random.Random(337)
    for _ in range(150):
        u = random_periodic_element(rng, rng.randint(0, 6))
        cert = factor_periodic_into_involutions(u)
        assert cert.verified
        for f in cert.word:
            assert f.element * f.element == IDENTITY
