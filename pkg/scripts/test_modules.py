from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.algebra.witt import WittElement, basis_of_grade, bracket
from src.analysis.closure import quotient_graded_dims
from src.analysis.window import TruncationWindow
from src.core.multi_index import MultiIndex
from src.modules.base import TrivialModule
from src.modules.continuous import TruncatedSeries, bracket_series, continuous_act
from src.modules.families import (
    exterior_tensor,
    highest_weight_eigenvalues,
    highest_weight_vector,
    l_n_generators,
    make_w_phi,
    top_action_n1,
    v_phi,
)
from src.modules.induced import induce
from src.modules.quotient import QuotientModule
from src.representations.gln import exterior_power, one_dim_module
from src.utils.errors import CapExceeded, FamilyError, RangeError
from strategies import module_vectors, witt_elements

TENSOR = exterior_tensor(2, 1)
W_PHI = make_w_phi(2, Fraction(3, 2))
INDUCED = induce(exterior_power(2, 1))


def _axiom_holds(module, x, y, v):
    lhs = module.act(x, module.act(y, v)) - module.act(y, module.act(x, v))
    return lhs == module.act(bracket(x, y), v)


# ==========================================================
# TENSOR MODULES F(P_0, M)
# ==========================================================


@given(witt_elements(2, max_exp=3), witt_elements(2, max_exp=3), module_vectors(TENSOR))
def test_tensor_module_axiom(x, y, v):
    assert _axiom_holds(TENSOR, x, y, v)


@settings(max_examples=20)
@given(witt_elements(3, max_exp=2, max_terms=2), witt_elements(3, max_exp=2, max_terms=2), module_vectors(exterior_tensor(3, 2), max_terms=2))
def test_tensor_module_axiom_n3(x, y, v):
    assert _axiom_holds(exterior_tensor(3, 2), x, y, v)


def test_tensor_highest_weight_vector_n2():
    module, v = highest_weight_vector(2, 1)
    assert module.act(WittElement.t_d(2, 0, 0), v).is_zero()
    assert module.act(WittElement.t_d(2, 1, 1), v) == v * -1
    assert module.act(WittElement.t_d(2, 0, 1), v).is_zero()
    assert highest_weight_eigenvalues(2, 1) == [0, -1]


@settings(max_examples=30)
@given(witt_elements(2, max_exp=3), witt_elements(2, max_exp=3), module_vectors(exterior_tensor(2, 0)))
def test_tensor_module_axiom_on_lambda_zero(x, y, v):
    assert _axiom_holds(exterior_tensor(2, 0), x, y, v)


def test_lambda_zero_highest_weight_vector_is_1bar():
    module, v = highest_weight_vector(2, 0)
    assert module.labels() == [0] and module.M.basis_labels == ["1"]
    assert highest_weight_eigenvalues(2, 0) == [-1, -1]
    for i in range(2):
        assert module.act(WittElement.t_d(2, i, i), v) == v * -1
    assert module.act(WittElement.t_d(2, 0, 1), v).is_zero()


def test_partial_acts_by_raising_dbar():
    v = TENSOR.basis_vector((1, 0), 1)
    assert TENSOR.act(WittElement.partial(2, 1), v) == TENSOR.basis_vector((1, 1), 1)


@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (2, 1)])
def test_tensor_weights_follow_degree(alpha):
    # Lambda^1(C^2): the identity acts by 1, so omega acts by 1 - 2 - |alpha|
    v = TENSOR.basis_vector(alpha, 0)
    weight = TENSOR.weight_of((MultiIndex(alpha), 0))
    assert weight == -1 - sum(alpha)
    assert TENSOR.act(WittElement.euler(2), v) == v * weight


# ==========================================================
# INDUCED MODULES Ind(M) AND W(phi)
# ==========================================================


@given(witt_elements(2, max_exp=3), witt_elements(2, max_exp=3), module_vectors(INDUCED))
def test_induced_module_axiom(x, y, v):
    assert _axiom_holds(INDUCED, x, y, v)


@given(witt_elements(2, max_exp=3), witt_elements(2, max_exp=3), module_vectors(W_PHI))
def test_w_phi_module_axiom(x, y, v):
    assert _axiom_holds(W_PHI, x, y, v)


def test_g_minus_one_acts_freely():
    v = INDUCED.basis_vector((1, 0), 1)
    assert INDUCED.act(WittElement.partial(2, 0), v) == INDUCED.basis_vector((2, 0), 1)


def test_w_phi_weights():
    for alpha in [(0, 0), (1, 0), (1, 2)]:
        v = W_PHI.basis_vector(alpha, 0)
        weight = W_PHI.weight_of((MultiIndex(alpha), 0))
        assert weight == Fraction(3, 2) - sum(alpha)
        assert W_PHI.act(WittElement.euler(2), v) == v * weight


def test_g_geq_one_kills_v_phi():
    v = v_phi(W_PHI)
    for k in (1, 2):
        for x in basis_of_grade(2, k):
            assert W_PHI.act(x, v).is_zero()


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("c", [Fraction(1), Fraction(-2, 3)])
def test_top_action_n1(m, c):
    value, expected = top_action_n1(m, c)
    assert value == expected


def test_top_action_rejects_negative_m():
    with pytest.raises(RangeError):
        top_action_n1(-1, 1)


def test_level_bound_on_basis_vectors():
    """g_k maps d^alpha (x) e into degree <= |alpha| - k for k >= 0."""
    for alpha in [(1, 0), (2, 1), (0, 3)]:
        v = INDUCED.basis_vector(alpha, 0)
        for k in range(0, 4):
            for x in basis_of_grade(2, k):
                assert INDUCED.act(x, v).ht() <= max(sum(alpha) - k, -1)


# ==========================================================
# VECTORS AND ERRORS
# ==========================================================


def test_family_mismatch_is_rejected():
    with pytest.raises(FamilyError):
        TENSOR.act(WittElement.partial(2, 0), INDUCED.basis_vector((0, 0), 0))


def test_cap_exceeded():
    v = TENSOR.basis_vector((1, 1), 0)
    with pytest.raises(CapExceeded) as info:
        TENSOR.act(WittElement.partial(2, 0), v, cap=2)
    assert info.value.height == 3


def test_trivial_module():
    module = TrivialModule(2)
    v = module.basis_vector((0, 0), 0)
    for k in (-1, 0, 1):
        for x in basis_of_grade(2, k):
            assert module.act(x, v).is_zero()
    assert module.graded_dim(0) == 1 and module.graded_dim(1) == 0
    assert module.smoothness_bound(v) == 0


def test_vector_height_and_top():
    v = TENSOR.basis_vector((2, 0), 0) + TENSOR.basis_vector((0, 2), 1) + TENSOR.basis_vector((1, 0), 0)
    assert v.ht() == 2
    assert v.lth() == 2
    assert v.top() == TENSOR.basis_vector((2, 0), 0) + TENSOR.basis_vector((0, 2), 1)
    assert TENSOR.vector().ht() == -1


# ==========================================================
# L_n AND QUOTIENTS
# ==========================================================


def test_l_n_generators_live_in_top_exterior_power():
    parent, generators = l_n_generators(2, 2, 2)
    assert parent.M.dim == 1
    # d_k p (x) e_k ^ e_j for each dbar^alpha with |alpha| <= 2 and each j
    assert len(generators) == 12
    assert all(g.ht() >= 1 for g in generators)
    with pytest.raises(RangeError):
        l_n_generators(2, 0, 2)


def test_quotient_by_l_n_is_trivial_line():
    parent, generators = l_n_generators(2, 2, 3)
    window = TruncationWindow(parent, 3)
    assert quotient_graded_dims(window, generators) == [1, 0, 0, 0]
    quotient = QuotientModule(window, generators)
    top = quotient.project(parent.basis_vector((0, 0), 0))
    assert not top.is_zero()
    for k in (-1, 0, 1):
        for x in basis_of_grade(2, k):
            assert quotient.act(x, top).is_zero()
    assert quotient.graded_dim(0) == 1 and quotient.graded_dim(2) == 0


def test_w_phi_at_zero_has_one_dimensional_top_quotient():
    module = make_w_phi(2, 0)
    window = TruncationWindow(module, 3)
    generators = [module.basis_vector(MultiIndex.unit(2, i), 0) for i in range(2)]
    assert quotient_graded_dims(window, generators) == [1, 0, 0, 0]


# ==========================================================
# CONTINUOUS ACTION
# ==========================================================


def test_continuous_action_ignores_high_components():
    v = TENSOR.basis_vector((1, 0), 0)
    assert TENSOR.smoothness_bound(v) == 2
    series = TruncatedSeries.from_element(WittElement.partial(2, 1) + WittElement.t_d(2, 0, 0))
    base = continuous_act(series, v, TENSOR)
    assert base == TENSOR.act(WittElement.partial(2, 1) + WittElement.t_d(2, 0, 0), v)
    tail = WittElement.symbol((3, 0), 1) + WittElement.symbol((2, 2), 0)
    assert continuous_act(series.extend(tail), v, TENSOR) == base
    assert continuous_act(series.truncate(1), v, TENSOR) == base


def test_continuous_action_respects_brackets():
    v = TENSOR.basis_vector((1, 1), 1)
    x = TruncatedSeries.from_element(WittElement.partial(2, 0) + WittElement.symbol((1, 1), 1) + WittElement.symbol((4, 0), 0))
    y = TruncatedSeries.from_element(WittElement.t_d(2, 1, 0) + WittElement.symbol((0, 3), 1, 2))
    lhs = continuous_act(bracket_series(x, y), v, TENSOR)
    rhs = continuous_act(x, continuous_act(y, v, TENSOR), TENSOR) - continuous_act(y, continuous_act(x, v, TENSOR), TENSOR)
    assert lhs == rhs


def test_series_components_must_be_homogeneous():
    with pytest.raises(ValueError):
        TruncatedSeries(2, {0: WittElement.partial(2, 0)})


def test_one_dim_source_central_weight():
    module = induce(one_dim_module(2, 5))
    assert module.weight_of((MultiIndex((1, 1)), 0)) == 3
