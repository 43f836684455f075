"""Local finiteness of t_i^(k+1) d_i and measured smoothness bounds."""

import logging
from dataclasses import dataclass
from typing import List

from src.algebra.witt import WittElement
from src.analysis.linalg import SparseEchelon
from src.analysis.window import TruncationWindow
from src.core.multi_index import MultiIndex
from src.modules.vectors import ModuleVector
from src.utils.errors import RangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitReport:
    direction: int
    grade: int
    dimension: int
    steps: int

    def to_dict(self) -> dict:
        return {"i": self.direction + 1, "k": self.grade, "orbit_dim": self.dimension, "steps": self.steps}


def local_finiteness_orbit(window: TruncationWindow, i: int, k: int, v: ModuleVector) -> OrbitReport:
    """
    dim span{x^m v : m >= 0} for x = t_i^(k+1) d_i. Raises CapExceeded when an
    iterate leaves F_{<=D}, which means k is too small for the family.
    """
    module = window.module
    if not 0 <= i < module.n:
        raise RangeError(f"direction {i + 1} outside 1..{module.n}")
    exps = [0] * module.n
    exps[i] = k + 1
    x = WittElement.symbol(exps, i)
    span = SparseEchelon(module.key_order)
    w = v
    steps = 0
    limit = len(window.keys()) + 1
    while not w.is_zero() and steps <= limit:
        if span.add(w.terms) is None:
            break
        w = module.act(x, w, cap=window.degree)
        steps += 1
    logger.debug("orbit of t_%d^%d d_%d: dim %d after %d steps", i + 1, k + 1, i + 1, len(span), steps)
    return OrbitReport(i, k, len(span), steps)


@dataclass(frozen=True)
class SmoothnessReport:
    alpha: MultiIndex
    measured: int
    predicted: int

    @property
    def within_bound(self) -> bool:
        return self.measured <= self.predicted

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "measured": self.measured,
            "predicted": self.predicted,
            "within_bound": self.within_bound,
        }


def _grade_kills(window: TruncationWindow, k: int, vectors: List[ModuleVector]) -> bool:
    module = window.module
    return all(module.act(x, w).is_zero() for x in window.acting(k) for w in vectors)


def smoothness_bound_check(window: TruncationWindow, alpha) -> SmoothnessReport:
    """Least M with g_{>=M} (d^alpha (x) E) = 0, scanned up to two grades past |alpha| + l."""
    module = window.module
    alpha = MultiIndex(alpha)
    predicted = alpha.size() + module.level
    vectors = [module.basis_vector(alpha, label) for label in module.labels(window.source_bound())]
    top = predicted + 2
    measured = top + 1
    for k in range(top, -2, -1):
        if not _grade_kills(window, k, vectors):
            break
        measured = k
    report = SmoothnessReport(alpha, measured, predicted)
    if not report.within_bound:
        logger.warning("grade %d still acts on d^%s (x) E; predicted %d", measured - 1, alpha, predicted)
    return report
