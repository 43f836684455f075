from fractions import Fraction

import pytest

from src.algebra.witt import WittElement
from src.analysis.annihilator import annihilator_space, height, weight_space
from src.analysis.closure import cyclicity_certificate, l_tilde_truncated, quotient_graded_dims
from src.analysis.intertwiner import (
    IntertwinerCertificate,
    IntertwinerViolation,
    intertwiner_check,
    perturbed,
    phi_map,
    psi_map,
)
from src.analysis.linalg import SparseEchelon, determinant, nullspace, rank, solve_in_span
from src.analysis.orbits import local_finiteness_orbit, smoothness_bound_check
from src.analysis.window import TruncationWindow
from src.core.multi_index import MultiIndex
from src.modules.base import TrivialModule
from src.modules.families import exterior_tensor, highest_weight_vector, make_w_phi, v_phi
from src.modules.tensor import TensorModule
from src.representations.gln import exterior_power, one_dim_module
from src.utils.errors import CapExceeded, RangeError, WindowError

# ==========================================================
# EXACT LINEAR ALGEBRA
# ==========================================================


def test_domain_matrix_helpers():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rank(rows) == 1
    assert determinant(rows) == 0
    kernel = nullspace(rows, 2)
    assert len(kernel) == 1
    a, b = kernel[0]
    assert a + 2 * b == 0
    assert determinant([[Fraction(1, 2), 0], [0, 6]]) == 3


def test_solve_in_span():
    columns = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    assert solve_in_span(columns, [Fraction(3), Fraction(2)]) == [1, 2]
    assert solve_in_span([[Fraction(1), Fraction(1)]], [Fraction(1), Fraction(0)]) is None


def test_sparse_echelon_tracks_span():
    echelon = SparseEchelon()
    assert echelon.add({"a": Fraction(1), "b": Fraction(1)}) is not None
    assert echelon.add({"b": Fraction(2)}) is not None
    assert echelon.add({"a": Fraction(3), "b": Fraction(-1)}) is None
    assert len(echelon) == 2
    assert echelon.contains({"a": Fraction(5)})
    assert not echelon.contains({"c": Fraction(1)})


# ==========================================================
# WINDOWS, ANNIHILATORS AND HEIGHT
# ==========================================================


def test_window_defaults_and_ranges():
    window = TruncationWindow(exterior_tensor(2, 1), 3)
    assert window.grade_cap == 4 and window.is_complete()
    assert window.to_dict() == {"D": 3, "K": 4, "level": 1}
    with pytest.raises(RangeError):
        TruncationWindow(exterior_tensor(2, 1), -1)
    with pytest.raises(RangeError):
        TruncationWindow(exterior_tensor(2, 1), 2, grade_cap=-2)


def test_incomplete_window_is_refused():
    window = TruncationWindow(exterior_tensor(2, 1), 3, grade_cap=2)
    with pytest.raises(WindowError):
        height(window)
    with pytest.raises(WindowError):
        annihilator_space(window, 1)


def test_annihilator_vectors_are_killed():
    module = exterior_tensor(2, 1)
    window = TruncationWindow(module, 2)
    basis = annihilator_space(window, 1)
    assert basis
    for v in basis:
        for k in window.acting_grades(low=1):
            for x in window.acting(k):
                assert module.act(x, v).is_zero()
    with pytest.raises(RangeError):
        annihilator_space(window, -1)


def test_height_of_natural_tensor_module():
    report = height(TruncationWindow(exterior_tensor(2, 1), 3))
    assert report.value == 1
    assert report.to_dict()["height"] == 1


def test_height_of_trivial_module():
    assert height(TruncationWindow(TrivialModule(2), 2)).value == 0


def test_highest_weight_space_is_a_line():
    module, v = highest_weight_vector(2, 1)
    space = weight_space(TruncationWindow(module, 2), [0, -1])
    assert len(space) == 1
    (w,) = space
    key = next(iter(v.terms))
    assert w * (1 / w.terms[key]) == v


# ==========================================================
# CYCLICITY
# ==========================================================


@pytest.mark.parametrize("lam", [Fraction(1), Fraction(-2), Fraction(1, 3)])
def test_w_phi_is_cyclic_from_d1_v_phi(lam):
    module = make_w_phi(2, lam)
    seed = module.act(WittElement.symbol((0, 0), 0), v_phi(module))
    result = cyclicity_certificate(TruncationWindow(module, 3), seed, 2)
    assert result.certificate
    assert result.reached == result.expected == [1, 2, 3]


def test_d1_v_phi_misses_v_phi_at_lambda_zero():
    module = make_w_phi(2, 0)
    seed = module.act(WittElement.symbol((0, 0), 0), v_phi(module))
    assert seed == module.basis_vector((1, 0), 0)
    result = cyclicity_certificate(TruncationWindow(module, 3), seed, 2)
    assert not result.certificate
    assert result.reached[0] == 0


def test_non_cyclic_vector_gets_counterexample():
    module = make_w_phi(2, 0)
    v = module.basis_vector((1, 0), 0)
    result = cyclicity_certificate(TruncationWindow(module, 3), v, 1)
    assert not result.certificate
    assert result.reached[0] == 0
    assert result.to_dict()["counterexample_basis"]


def test_target_degree_must_be_below_window():
    module = make_w_phi(2, 1)
    with pytest.raises(RangeError):
        cyclicity_certificate(TruncationWindow(module, 2), v_phi(module), 2)


def test_l_tilde_contains_l_n_slice():
    module = exterior_tensor(2, 2)
    basis = l_tilde_truncated(2, 2, TruncationWindow(module, 2))
    assert len(basis) >= 5
    with pytest.raises(RangeError):
        l_tilde_truncated(2, 2, TruncationWindow(exterior_tensor(2, 1), 2))
    # same family, n and dim as F(P_0, Lambda^2(C^2)), but E_ii acts by 3
    with pytest.raises(RangeError):
        l_tilde_truncated(2, 2, TruncationWindow(TensorModule(one_dim_module(2, 6)), 2))


def test_quotient_dims_without_generators_are_slice_dims():
    module = exterior_tensor(2, 1)
    assert quotient_graded_dims(TruncationWindow(module, 2), []) == [2, 4, 6]


# ==========================================================
# LOCAL FINITENESS AND SMOOTHNESS BOUNDS
# ==========================================================


@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (2, 1)])
def test_orbits_are_finite(alpha):
    module = exterior_tensor(2, 1)
    window = TruncationWindow(module, 4)
    v = module.basis_vector(alpha, 1)
    for i in range(2):
        report = local_finiteness_orbit(window, i, 1, v)
        assert report.dimension <= sum(alpha) + 1
        assert report.to_dict()["i"] == i + 1


def test_raising_orbit_leaves_the_window():
    module = exterior_tensor(2, 1)
    window = TruncationWindow(module, 4)
    with pytest.raises(CapExceeded):
        local_finiteness_orbit(window, 0, -1, module.basis_vector((1, 0), 0))
    with pytest.raises(RangeError):
        local_finiteness_orbit(window, 2, 1, module.basis_vector((1, 0), 0))


@pytest.mark.parametrize("alpha", [(0, 0), (1, 1), (3, 0)])
def test_smoothness_bound_holds(alpha):
    window = TruncationWindow(exterior_tensor(2, 1), 4)
    report = smoothness_bound_check(window, alpha)
    assert report.within_bound
    assert report.predicted == sum(alpha) + 1


def test_smoothness_bound_of_trivial_module():
    report = smoothness_bound_check(TruncationWindow(TrivialModule(2), 2), (0, 0))
    assert report.within_bound and report.predicted == 0


# ==========================================================
# INTERTWINERS
# ==========================================================


def test_psi_is_an_isomorphism():
    src, tgt, images = psi_map(exterior_power(2, 1), degree=3)
    result = intertwiner_check(src, tgt, images)
    assert isinstance(result, IntertwinerCertificate)
    assert result.to_dict()["certificate"] is True


def test_perturbed_psi_is_rejected():
    src, tgt, images = psi_map(exterior_power(2, 1), degree=3)
    result = intertwiner_check(src, tgt, perturbed(images, 0))
    assert isinstance(result, IntertwinerViolation)
    assert result.to_dict()["violation"] == "f(x.v) != x.f(v)"


@pytest.mark.parametrize("n,lam", [(2, 1), (2, Fraction(-1, 2)), (3, 2)])
def test_phi_is_an_isomorphism(n, lam):
    src, tgt, images = phi_map(n, lam, degree=3 if n == 2 else 2)
    assert isinstance(intertwiner_check(src, tgt, images), IntertwinerCertificate)


def test_zero_map_is_not_bijective():
    src, tgt, images = psi_map(exterior_power(2, 1), degree=2)
    zero = {label: tgt.module.vector() for label in images}
    result = intertwiner_check(src, tgt, zero)
    assert isinstance(result, IntertwinerViolation)
    assert "bijective" in result.reason


def test_identity_window_keys_are_ordered():
    window = TruncationWindow(exterior_tensor(2, 1), 1)
    keys = window.keys()
    assert keys[0] == (MultiIndex((0, 0)), 0)
    assert len(keys) == 2 + 4
    assert WittElement.partial(2, 0) in window.acting(-1)
