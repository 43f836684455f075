from fractions import Fraction

import pytest
from hypothesis import assume, given

from src.algebra.weyl import (
    P0Vector,
    WeylElement,
    normal_order_word,
    p0_act,
    p0_reach_one,
    projection_phi,
    quotient_map,
    reverse_order,
    weyl_multiply,
    weyl_of_p0,
    word_of,
)
from src.utils.errors import ArityError, ZeroVectorError
from strategies import multi_indices, p0_vectors, weyl_elements

# ==========================================================
# WEYL ALGEBRA K_n^+
# ==========================================================


def test_canonical_commutation():
    t1, d1 = WeylElement.t_power((1, 0)), WeylElement.d_power((1, 0))
    d2 = WeylElement.d_power((0, 1))
    one = WeylElement.scalar(2, 1)
    assert weyl_multiply(d1, t1) - weyl_multiply(t1, d1) == one
    assert weyl_multiply(d2, t1) == weyl_multiply(t1, d2)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_t_times_power_of_d(m):
    t = WeylElement.t_power((1,))
    d_m, d_m1 = WeylElement.d_power((m,)), WeylElement.d_power((m - 1,))
    assert weyl_multiply(t, d_m) == weyl_multiply(d_m, t) - d_m1 * m


def test_scalar_product_and_zero():
    a = WeylElement.monomial((1, 0), (0, 2), 3)
    assert (a * Fraction(1, 3)) == WeylElement.monomial((1, 0), (0, 2))
    assert weyl_multiply(a, WeylElement(2)).is_zero()


@given(weyl_elements(2), weyl_elements(2), weyl_elements(2))
def test_associativity(a, b, c):
    assert weyl_multiply(weyl_multiply(a, b), c) == weyl_multiply(a, weyl_multiply(b, c))


@given(multi_indices(2, 2), multi_indices(2, 2), multi_indices(2, 2), multi_indices(2, 2))
def test_product_agrees_with_word_rewriting(b1, g1, b2, g2):
    fast = weyl_multiply(WeylElement.monomial(b1, g1), WeylElement.monomial(b2, g2))
    slow = normal_order_word(2, word_of(b1, g1) + word_of(b2, g2))
    assert fast == slow


def test_mixed_arity_is_rejected():
    with pytest.raises(ArityError):
        weyl_multiply(WeylElement.scalar(1, 1), WeylElement.scalar(2, 1))


# ==========================================================
# THE MODULE P_0
# ==========================================================


def test_t_lowers_dbar():
    image = p0_act(WeylElement.t_power((1, 0)), P0Vector.monomial((1, 0)))
    assert image == P0Vector.one(2) * -1


def test_t_kills_one_and_d_raises():
    one = P0Vector.one(2)
    assert p0_act(WeylElement.t_power((0, 1)), one).is_zero()
    assert p0_act(WeylElement.d_power((2, 1)), one) == P0Vector.monomial((2, 1))


def test_reach_one_example():
    v = P0Vector.monomial((2, 0), 3) + P0Vector.monomial((0, 1))
    beta, c = p0_reach_one(v)
    assert tuple(beta) == (2, 0)
    assert c == 6


def test_reach_one_needs_nonzero_vector():
    with pytest.raises(ZeroVectorError):
        p0_reach_one(P0Vector(2))


@given(p0_vectors(3))
def test_every_nonzero_vector_reaches_one(v):
    assume(not v.is_zero())
    beta, c = p0_reach_one(v)
    assert c != 0
    assert p0_act(WeylElement.t_power(beta), v) == P0Vector.one(3) * c


@given(weyl_elements(2), p0_vectors(2))
def test_action_is_quotient_map_of_product(a, v):
    assert p0_act(a, v) == quotient_map(weyl_multiply(a, weyl_of_p0(v)))


def test_quotient_map_reorders_before_dropping_t():
    t2_d2 = WeylElement.monomial((0, 1), (0, 1))
    assert projection_phi(t2_d2).is_zero()
    assert quotient_map(t2_d2) == P0Vector.one(2) * -1
    assert quotient_map(t2_d2) == p0_act(WeylElement.t_power((0, 1)), P0Vector.monomial((0, 1)))


@given(multi_indices(2, 3), multi_indices(2, 3))
def test_reverse_order_matches_word_rewriting(beta, gamma):
    assert reverse_order(WeylElement.monomial(beta, gamma)) == normal_order_word(2, word_of(beta, gamma), t_first=False)


def test_reverse_order_single_commutator():
    # t d = d t - 1
    assert reverse_order(WeylElement.monomial((1,), (1,))) == WeylElement.monomial((1,), (1,)) - WeylElement.scalar(1, 1)


@given(weyl_elements(2, max_exp=1), weyl_elements(2, max_exp=1), p0_vectors(2))
def test_p0_is_a_module(a, b, v):
    assert p0_act(weyl_multiply(a, b), v) == p0_act(a, p0_act(b, v))


def test_projection_drops_terms_with_t():
    a = WeylElement.monomial((0, 0), (1, 1), 2) + WeylElement.monomial((1, 0), (0, 0))
    assert projection_phi(a) == P0Vector.monomial((1, 1), 2)
