"""
Submodule closures inside a truncation window.

Everything the closure adds is x . u for some u already in the submodule, so
a vector found in the closure really lies in the generated submodule. The
converse holds only inside the window: raising operators are applied to
vectors of degree below the height cap and not beyond. Certificates built on
the closure are sound; counterexamples are window-relative.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.witt import basis_of_grade
from src.analysis.linalg import SparseEchelon, SparseRow, nullspace
from src.analysis.window import TruncationWindow
from src.modules.families import l_n_generators
from src.modules.tensor import TensorModule
from src.modules.vectors import ModuleVector
from src.modules.whittaker import Monomial, TruncatedWhittaker, monomial_degree
from src.utils.errors import RangeError

logger = logging.getLogger(__name__)

Operator = Tuple[bool, Callable[[SparseRow], SparseRow]]


def close_span(
    seeds: Sequence[SparseRow],
    operators: Sequence[Operator],
    degree: Callable[[Hashable], int],
    order: Callable[[Hashable], tuple],
    height_cap: int,
) -> SparseEchelon:
    """
    Smallest operator-stable span containing the seeds, as far as the cap allows.

    ``operators`` are (raises_degree, apply) pairs. Raising operators act on
    rows of degree below ``height_cap``; the others on rows of degree at
    most ``height_cap``.
    """
    echelon = SparseEchelon(order)
    queue: List[SparseRow] = []
    for seed in seeds:
        added = echelon.add(seed)
        if added is not None:
            queue.append(added)
    while queue:
        row = queue.pop()
        deg = max(degree(k) for k in row)
        if deg > height_cap:
            continue
        for raises, apply in operators:
            if raises and deg >= height_cap:
                continue
            image = apply(row)
            if image:
                added = echelon.add(image)
                if added is not None:
                    queue.append(added)
    return echelon


def rows_by_degree(echelon: SparseEchelon, degree: Callable[[Hashable], int]) -> Dict[int, int]:
    """Number of echelon rows whose pivot has each degree."""
    out: Dict[int, int] = {}
    for pivot in echelon.rows:
        d = degree(pivot)
        out[d] = out.get(d, 0) + 1
    return out


def _module_operators(window: TruncationWindow) -> List[Operator]:
    module = window.module
    raising_grades = {-1} if module.is_finite() else {-1, 0}
    ops: List[Operator] = []
    for k in window.acting_grades():
        for x in window.acting(k):
            def apply(row, x=x):
                return module.act(x, module.vector(row)).terms
            ops.append((k in raising_grades, apply))
    return ops


def module_closure(window: TruncationWindow, generators: Sequence[ModuleVector], height_cap: Optional[int] = None) -> SparseEchelon:
    module = window.module
    for g in generators:
        module.check_vector(g)
    cap = window.degree if height_cap is None else height_cap
    echelon = close_span(
        [g.terms for g in generators if not g.is_zero()],
        _module_operators(window),
        module.key_degree,
        module.key_order,
        cap,
    )
    logger.debug("closure of %d generators in %s: dimension %d", len(generators), window.to_dict(), len(echelon))
    return echelon


def quotient_graded_dims(window: TruncationWindow, generators: Sequence[ModuleVector]) -> List[int]:
    """dim (F / <generators>)_m for 0 <= m <= D."""
    window.require_complete()
    module = window.module
    echelon = module_closure(window, generators)
    counts = rows_by_degree(echelon, module.key_degree)
    return [len(module.keys_of_total_degree(m)) - counts.get(m, 0) for m in range(window.degree + 1)]


@dataclass
class CyclicityResult:
    certificate: bool
    target_degree: int
    reached: List[int]
    expected: List[int]
    window: dict
    missing: List[ModuleVector] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "certificate": self.certificate,
            "target_degree": self.target_degree,
            "reached_dims": self.reached,
            "slice_dims": self.expected,
            "window": self.window,
            "kind": "evidence within window",
        }
        if not self.certificate:
            out["counterexample_basis"] = [repr(v) for v in self.missing]
        return out


def cyclicity_certificate(window: TruncationWindow, v: ModuleVector, target_degree: Optional[int] = None) -> CyclicityResult:
    """Whether the closure of v contains the whole slice F_{<=D'}, D' < D."""
    window.require_complete()
    module = window.module
    target = window.degree - 1 if target_degree is None else target_degree
    if not 0 <= target < window.degree:
        raise RangeError(f"target degree D' = {target} must satisfy 0 <= D' < D = {window.degree}")
    echelon = module_closure(window, [v])
    counts = rows_by_degree(echelon, module.key_degree)
    reached = [counts.get(m, 0) for m in range(target + 1)]
    expected = [len(module.keys_of_total_degree(m)) for m in range(target + 1)]
    ok = reached == expected
    missing = []
    if not ok:
        for m in range(target + 1):
            for key in module.keys_of_total_degree(m):
                if key not in echelon.rows:
                    missing.append(module.vector(echelon.reduce({key: Fraction(1)})))
    return CyclicityResult(ok, target, reached, expected, window.to_dict(), missing)


def l_tilde_truncated(n: int, r: int, window: TruncationWindow) -> List[ModuleVector]:
    """
    {v in F_{<=D} : x . v in L_n(P_0, r) for every basis x of g_k, -1 <= k <= K}, a
    degree-bounded approximation of the largest such subspace of F(P_0, Lambda^r).
    """
    module, generators = l_n_generators(n, r, window.degree)
    if not (
        isinstance(window.module, TensorModule)
        and window.module.descriptor() == module.descriptor()
        and np.array_equal(window.module.M.action, module.M.action)
    ):
        raise RangeError("the window must be over F(P_0, Lambda^r(C^n))")
    ambient = TruncationWindow(module, window.degree + 1, window.grade_cap)
    span = module_closure(ambient, generators, height_cap=window.degree + 1)
    keys = window.keys()
    rows: Dict[tuple, List[Fraction]] = {}
    block = 0
    for k in window.acting_grades():
        for x in window.acting(k):
            for col, key in enumerate(keys):
                image = span.reduce(module.act(x, module.vector({key: 1})).terms)
                for target, c in image.items():
                    row = rows.setdefault((block, target), [Fraction(0)] * len(keys))
                    row[col] += c
            block += 1
    kernel = nullspace(list(rows.values()), len(keys))
    return [window.module.vector({key: c for key, c in zip(keys, vec) if c}) for vec in kernel]


# -- M(phi) as a g_{>=0}-module -----------------------------------------

def whittaker_cyclicity(M: TruncatedWhittaker, v: Dict[Monomial, Fraction], target_degree: int) -> CyclicityResult:
    """Closure of v in M(phi) under g_0 and g_1, compared with the PBW slice of degree <= D'."""
    if not 0 <= target_degree < M.degree:
        raise RangeError(f"target degree {target_degree} must be below the truncation {M.degree}")
    ops: List[Operator] = []
    for k in (0, 1):
        for x in basis_of_grade(2, k):
            ops.append((k == 0, lambda row, x=x: M.act(x, row)))
    echelon = close_span(
        [dict(v)] if v else [],
        ops,
        monomial_degree,
        lambda m: (monomial_degree(m), m),
        M.degree,
    )
    counts = rows_by_degree(echelon, monomial_degree)
    reached = [counts.get(d, 0) for d in range(target_degree + 1)]
    expected = [M.slice_dim(d) - (M.slice_dim(d - 1) if d else 0) for d in range(target_degree + 1)]
    return CyclicityResult(reached == expected, target_degree, reached, expected, {"D": M.degree})
