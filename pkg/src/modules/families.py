"""Named members of the module families: W(phi), L_n(P_0, r), highest weight vectors."""

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from src.algebra.witt import WittElement
from src.core.multi_index import MultiIndex, indices_up_to
from src.modules.base import TrivialModule
from src.modules.induced import GlnSource, InducedModule
from src.modules.tensor import TensorModule
from src.modules.vectors import ModuleVector
from src.representations.gln import wedge_sign_sort, exterior_power, one_dim_module, wedge_basis
from src.utils.errors import RangeError

logger = logging.getLogger(__name__)


def make_w_phi(n: int, lam) -> InducedModule:
    """W(phi) = Ind_{g>=0}^g C v_phi with omega_n -> lambda and [g>=0, g>=0] -> 0."""
    return InducedModule(GlnSource(one_dim_module(n, lam)), family="wphi")


def v_phi(module: InducedModule) -> ModuleVector:
    return module.basis_vector(MultiIndex.zero(module.n), 0)


def trivial_module(n: int) -> TrivialModule:
    return TrivialModule(n)


def exterior_tensor(n: int, r: int) -> TensorModule:
    """F(P_0, Lambda^r(C^n))."""
    return TensorModule(exterior_power(n, r))


def highest_weight_vector(n: int, r: int) -> Tuple[TensorModule, ModuleVector]:
    """1bar (x) e_1 ^ ... ^ e_r in F(P_0, Lambda^r(C^n))."""
    module = exterior_tensor(n, r)
    label = wedge_basis(n, r).index(tuple(range(r)))
    return module, module.basis_vector(MultiIndex.zero(n), label)


def highest_weight_eigenvalues(n: int, r: int) -> List[Fraction]:
    """t_i d_i acts on the highest weight vector by 0 for i <= r and by -1 for i > r."""
    return [Fraction(0) if i < r else Fraction(-1) for i in range(n)]


def l_n_generators(n: int, r: int, bound: int) -> Tuple[TensorModule, List[ModuleVector]]:
    """
    Spanning vectors sum_k (d_k p) (x) (e_k ^ e_{i2} ^ ... ^ e_{ir}) of L_n(P_0, r),
    with p = dbar^alpha for |alpha| <= bound and i2 < ... < ir.
    """
    if not 1 <= r <= n:
        raise RangeError(f"L_n(P_0, r) needs 1 <= r <= n, got r = {r}, n = {n}")
    module = exterior_tensor(n, r)
    index = {wedge: pos for pos, wedge in enumerate(wedge_basis(n, r))}
    generators: List[ModuleVector] = []
    for alpha in indices_up_to(n, bound):
        for tail in wedge_basis(n, r - 1):
            terms: Dict = {}
            for k in range(n):
                sign, wedge = wedge_sign_sort([k, *tail])
                if not sign:
                    continue
                raised = MultiIndex(a + (1 if pos == k else 0) for pos, a in enumerate(alpha))
                key = (raised, index[wedge])
                terms[key] = terms.get(key, 0) + sign
            vec = module.vector(terms)
            if not vec.is_zero():
                generators.append(vec)
    logger.debug("L_%d(P_0, %d): %d generators up to |p| = %d", n, r, len(generators), bound)
    return module, generators


def top_action_n1(m: int, c) -> Tuple[Fraction, Fraction]:
    """
    For n = 1 and E = C v with t_1 d_1 v = c v and g_{>=1} v = 0:
    (t_1^(m+1) d_1) . (d_1^m (x) v) against (-1)^m (m+1)! c v.
    """
    if m < 0:
        raise RangeError("m must be non-negative")
    c = Fraction(c)
    module = InducedModule(GlnSource(one_dim_module(1, c)))
    x = WittElement.symbol((m + 1,), 0)
    image = module.act(x, module.basis_vector((m,), 0))
    expected = (-1) ** m * factorial(m + 1) * c
    return image.coefficient((0,), 0), expected
