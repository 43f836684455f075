from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.multi_index import (
    MultiIndex,
    indices_of_size,
    indices_up_to,
    lex_compare,
    mi_binomial,
    mi_factorial,
    mi_sub,
)
from src.core.scalars import format_scalar, to_scalar
from src.utils.errors import ArityError, UsageError, WittSmoothError
from strategies import multi_indices

# ==========================================================
# SCALARS
# ==========================================================


def test_scalars_parse_exactly():
    assert to_scalar("3/6") == Fraction(1, 2)
    assert to_scalar(-4) == Fraction(-4)
    assert to_scalar(Fraction(2, 3)) == Fraction(2, 3)
    assert format_scalar(Fraction(-6, 4)) == "-3/2"
    assert format_scalar(Fraction(5)) == "5"


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_scalars_reject_inexact_values(bad):
    with pytest.raises(TypeError):
        to_scalar(bad)


# ==========================================================
# MULTI-INDICES
# ==========================================================


def test_multi_index_arithmetic():
    a, b = MultiIndex((2, 1)), MultiIndex((1, 1))
    assert a + b == MultiIndex((3, 2))
    assert a - b == MultiIndex((1, 0))
    assert b - a is None
    assert a.size() == 3
    assert b.le(a) and not a.le(b)
    assert repr(a) == "(2,1)"
    assert mi_binomial(MultiIndex((3, 2)), MultiIndex((1, 1))) == 6
    assert mi_factorial(MultiIndex((3, 2))) == 12


def test_multi_index_rejects_negative_and_mixed_arity():
    with pytest.raises(ValueError):
        MultiIndex((1, -1))
    with pytest.raises(ArityError):
        mi_sub(MultiIndex((1,)), MultiIndex((1, 0)))
    assert issubclass(ArityError, WittSmoothError)


def test_enumeration_sizes_and_order():
    for n in range(1, 5):
        for m in range(0, 5):
            found = list(indices_of_size(n, m))
            assert len(found) == comb(m + n - 1, n - 1)
            assert found == sorted(found, reverse=True)
    assert list(indices_of_size(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(indices_up_to(3, 2))) == 1 + 3 + 6


@given(multi_indices(3), multi_indices(3))
def test_lex_compare_matches_tuple_order(a, b):
    a, b = MultiIndex(a), MultiIndex(b)
    assert lex_compare(a, b) == (a > b) - (a < b)


@given(multi_indices(3), multi_indices(3))
def test_add_then_sub_recovers(a, b):
    a, b = MultiIndex(a), MultiIndex(b)
    assert (a + b) - b == a


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_unit_vectors_sum_to_size(exps):
    n = len(exps)
    total = MultiIndex.zero(n)
    for i, e in enumerate(exps):
        for _ in range(e):
            total = total + MultiIndex.unit(n, i)
    assert total == MultiIndex(exps)


# ==========================================================
# ERRORS
# ==========================================================


def test_error_codes_follow_class_names():
    err = UsageError("bad input")
    assert err.to_dict() == {"type": "UsageError", "message": "bad input"}
    assert isinstance(err, ValueError)
