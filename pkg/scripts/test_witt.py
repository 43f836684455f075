from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from src.algebra.polynomial import Polynomial
from src.algebra.witt import (
    G0_NAMES,
    G1_NAMES,
    WittElement,
    ad_matrix,
    apply_to_polynomial,
    basis_of_grade,
    bracket,
    g0_coordinates,
    grade_component,
    grade_dimension,
    w2_named,
)
from src.utils.errors import ArityError
from strategies import polynomials, witt_elements

# ==========================================================
# SYMPY ORACLE
# ==========================================================
# Polynomials and vector fields are rebuilt as sympy expressions so that
# the action of W_n^+ can be compared with sympy.diff.


def _symbols(n):
    return sympy.symbols(f"t1:{n + 1}")


def _to_sympy(f: Polynomial):
    t = _symbols(f.n)
    return sympy.expand(sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[t[j] ** a for j, a in enumerate(alpha)])
         for alpha, c in f.items()),
        sympy.Integer(0),
    ))


def _field_on(x: WittElement, expr):
    t = _symbols(x.n)
    total = sympy.Integer(0)
    for (alpha, i), c in x.items():
        coeff = sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[t[j] ** a for j, a in enumerate(alpha)])
        total += coeff * sympy.diff(expr, t[i])
    return sympy.expand(total)


# ==========================================================
# BRACKET
# ==========================================================


def test_bracket_example_n2():
    lhs = bracket(WittElement.t_d(2, 0, 1), WittElement.t_d(2, 1, 0))
    assert lhs == WittElement.t_d(2, 0, 0) - WittElement.t_d(2, 1, 1)


def test_bracket_with_partial_lowers_grade():
    x = WittElement.symbol((2, 0), 1)  # t1^2 d2
    assert bracket(WittElement.partial(2, 0), x) == WittElement.symbol((1, 0), 1, 2)


def test_euler_field_grades():
    euler = WittElement.euler(3)
    for k in range(-1, 3):
        for b in basis_of_grade(3, k):
            assert bracket(euler, b) == b * k


def test_bracket_arity_mismatch():
    with pytest.raises(ArityError):
        bracket(WittElement.partial(2, 0), WittElement.partial(3, 0))


@given(witt_elements(2), witt_elements(2), witt_elements(2))
def test_jacobi_identity(x, y, z):
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jac.is_zero()


@given(witt_elements(3, max_exp=2), witt_elements(3, max_exp=2))
def test_antisymmetry(x, y):
    assert (bracket(x, y) + bracket(y, x)).is_zero()


@given(witt_elements(2), witt_elements(2), polynomials(2))
def test_bracket_is_commutator_of_derivations(x, y, f):
    lhs = apply_to_polynomial(bracket(x, y), f)
    rhs = apply_to_polynomial(x, apply_to_polynomial(y, f)) - apply_to_polynomial(y, apply_to_polynomial(x, f))
    assert lhs == rhs


@given(witt_elements(3, max_exp=2), polynomials(3, max_exp=3))
def test_action_matches_sympy(x, f):
    assert _to_sympy(apply_to_polynomial(x, f)) == _field_on(x, _to_sympy(f))


# ==========================================================
# GRADING
# ==========================================================


@pytest.mark.parametrize("n,k,dim", [(1, -1, 1), (2, -1, 2), (2, 0, 4), (2, 1, 6), (3, 1, 18), (3, 0, 9)])
def test_grade_dimensions(n, k, dim):
    assert grade_dimension(n, k) == dim
    assert len(basis_of_grade(n, k)) == dim


def test_grades_below_minus_one_are_empty():
    assert basis_of_grade(2, -2) == []
    assert grade_dimension(2, -2) == 0


def test_grade_component_and_degree():
    x = WittElement.partial(2, 0) + WittElement.symbol((1, 1), 0, Fraction(1, 2))
    assert grade_component(x, -1) == WittElement.partial(2, 0)
    assert grade_component(x, 1) == WittElement.symbol((1, 1), 0, Fraction(1, 2))
    assert grade_component(x, 0).is_zero()
    assert not x.is_homogeneous()


def test_ad_matrix_of_euler_is_scalar():
    euler = WittElement.euler(2)
    matrix = ad_matrix(euler, 1)
    assert len(matrix) == 6
    for r, row in enumerate(matrix):
        assert row == [Fraction(1) if c == r else Fraction(0) for c in range(6)]


# ==========================================================
# NAMED ELEMENTS OF W_2^+
# ==========================================================


def test_named_elements_span_g0_and_g1():
    named = w2_named()
    assert all(named[k].grades() == [0] for k in G0_NAMES)
    assert all(named[k].grades() == [1] for k in G1_NAMES)
    assert g0_coordinates(named["e"]) == (1, 0, 0, 0)
    assert g0_coordinates(named["i"]) == (0, 1, 0, 0)
    assert g0_coordinates(named["h"]) == (0, 0, 1, 0)
    assert g0_coordinates(named["f"]) == (0, 0, 0, 1)


def test_sl2_relations_on_named_basis():
    named = w2_named()
    e, h, f, i = named["e"], named["h"], named["f"], named["i"]
    assert bracket(i, e).is_zero() and bracket(i, f).is_zero() and bracket(i, h).is_zero()
    # [h, e] and [h, f] are multiples of e and f
    he, hf = g0_coordinates(bracket(h, e)), g0_coordinates(bracket(h, f))
    assert he[1:] == (0, 0, 0) and he[0] != 0
    assert hf[:3] == (0, 0, 0) and hf[3] != 0
    assert he[0] == -hf[3]
