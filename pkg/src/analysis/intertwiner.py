"""
Intertwiner checks between two graded modules.

A map is given by the images of the degree-0 basis and extended by
d-equivariance: f(d^alpha (x) e) = d^alpha . f(1 (x) e). The check compares
f(x . v) with x . f(v) for the basis of g_k, -1 <= k <= K, on basis vectors of
degree below D, and asks f to be bijective on every slice F_m, m <= D.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Tuple, Union

from src.algebra.witt import WittElement
from src.analysis.linalg import rank
from src.analysis.window import TruncationWindow
from src.core.multi_index import MultiIndex
from src.modules.families import make_w_phi
from src.modules.induced import InducedModule, induce
from src.modules.tensor import TensorModule
from src.modules.vectors import Key, ModuleVector
from src.representations.gln import GlnModule, one_dim_module, tau_twist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntertwinerCertificate:
    checks: int
    window: dict

    def to_dict(self) -> dict:
        return {"certificate": True, "checks": self.checks, "window": self.window}


@dataclass(frozen=True)
class IntertwinerViolation:
    reason: str
    element: Optional[str] = None
    vector: Optional[str] = None

    def to_dict(self) -> dict:
        return {"violation": self.reason, "element": self.element, "vector": self.vector}


IntertwinerResult = Union[IntertwinerCertificate, IntertwinerViolation]


class GradedMap:
    """A d-equivariant linear map determined by its values on the degree-0 labels."""

    def __init__(self, source_window: TruncationWindow, target_window: TruncationWindow, images: Dict[Hashable, ModuleVector]):
        self.source = source_window.module
        self.target = target_window.module
        self.images = images
        self._memo: Dict[Key, ModuleVector] = {}

    def on_key(self, key: Key) -> ModuleVector:
        hit = self._memo.get(key)
        if hit is None:
            alpha, label = key
            hit = self.images.get(label)
            if hit is None:
                hit = self.target.vector()
            for i, a in enumerate(alpha):
                for _ in range(a):
                    hit = self.target.act(WittElement.partial(self.target.n, i), hit)
            self._memo[key] = hit
        return hit

    def __call__(self, v: ModuleVector) -> ModuleVector:
        out = self.target.vector()
        for key, c in v.terms.items():
            out = out + self.on_key(key) * c
        return out


def intertwiner_check(
    source_window: TruncationWindow,
    target_window: TruncationWindow,
    images: Dict[Hashable, ModuleVector],
) -> IntertwinerResult:
    f = GradedMap(source_window, target_window, images)
    source, target = f.source, f.target
    checks = 0
    keys = source_window.keys(source_window.degree - 1)
    for k in source_window.acting_grades():
        for x in source_window.acting(k):
            for key in keys:
                v = source.basis_vector(*key)
                lhs = f(source.act(x, v))
                rhs = target.act(x, f(v))
                checks += 1
                if lhs != rhs:
                    logger.info("intertwining fails for %r on %r", x, v)
                    return IntertwinerViolation("f(x.v) != x.f(v)", repr(x), repr(v))

    for m in range(source_window.degree + 1):
        src_keys = source_window.keys_of_degree(m)
        tgt_keys = target_window.keys_of_degree(m)
        if len(src_keys) != len(tgt_keys):
            return IntertwinerViolation(f"slice dimensions differ at degree {m}: {len(src_keys)} vs {len(tgt_keys)}")
        index = {key: r for r, key in enumerate(tgt_keys)}
        columns = []
        for key in src_keys:
            col = [Fraction(0)] * len(tgt_keys)
            for target_key, c in f.on_key(key).terms.items():
                if target_key not in index:
                    return IntertwinerViolation(f"image leaves the slice of degree {m}", vector=repr(key))
                col[index[target_key]] = c
            columns.append(col)
        rows = [[col[r] for col in columns] for r in range(len(tgt_keys))]
        if rank(rows) != len(src_keys):
            return IntertwinerViolation(f"not bijective on the slice of degree {m}")
    return IntertwinerCertificate(checks, source_window.to_dict())


def psi_map(M: GlnModule, degree: int = 4, grade_cap: Optional[int] = None) -> Tuple[TruncationWindow, TruncationWindow, Dict]:
    """Ind_{g>=0}^g M -> F(P_0, M^tau), 1 (x) v -> 1bar (x) v."""
    A = induce(M)
    B = TensorModule(tau_twist(M))
    zero = MultiIndex.zero(M.n)
    images = {j: B.basis_vector(zero, j) for j in range(M.dim)}
    return TruncationWindow(A, degree, grade_cap), TruncationWindow(B, degree, grade_cap), images


def phi_map(n: int, lam, degree: int = 4, grade_cap: Optional[int] = None) -> Tuple[TruncationWindow, TruncationWindow, Dict]:
    """W(phi) -> F(P_0, V(0, n + lambda)), v_phi -> 1bar (x) 1."""
    lam = Fraction(lam)
    A: InducedModule = make_w_phi(n, lam)
    B = TensorModule(one_dim_module(n, n + lam))
    images = {0: B.basis_vector(MultiIndex.zero(n), 0)}
    return TruncationWindow(A, degree, grade_cap), TruncationWindow(B, degree, grade_cap), images


def perturbed(images: Dict[Hashable, ModuleVector], label: Hashable, factor=2) -> Dict[Hashable, ModuleVector]:
    out = dict(images)
    out[label] = out[label] * factor
    return out
