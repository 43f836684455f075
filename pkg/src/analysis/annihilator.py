"""
Annihilator spaces V^(r) = {v : g_{>=r} v = 0}, the height, and weight spaces.

All are computed inside a TruncationWindow: on F_{<=D} the grades r..K cover
g_{>=r} because g_{>=D+l} already kills F_{<=D}.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from src.algebra.witt import WittElement
from src.analysis.linalg import nullspace
from src.analysis.window import TruncationWindow
from src.modules.vectors import Key, ModuleVector
from src.utils.errors import ArityError, RangeError

logger = logging.getLogger(__name__)


def _solve_on_keys(window: TruncationWindow, keys: List[Key], images: List[Dict[Key, Dict[Key, Fraction]]]):
    """Kernel of the linear map sum c_key e_key -> (image_1, image_2, ...) stacked."""
    rows: Dict[tuple, List[Fraction]] = {}
    for block, image in enumerate(images):
        for col, key in enumerate(keys):
            for target, c in image[key].items():
                row = rows.setdefault((block, target), [Fraction(0)] * len(keys))
                row[col] += c
    kernel = nullspace(list(rows.values()), len(keys))
    return [window.module.vector({key: c for key, c in zip(keys, vec) if c}) for vec in kernel]


def _images(window: TruncationWindow, x: WittElement, keys: List[Key]) -> Dict[Key, Dict[Key, Fraction]]:
    module = window.module
    out = {}
    for key in keys:
        acc: Dict[Key, Fraction] = {}
        for symbol, c in x.items():
            for target, d in module.act_symbol_cached(symbol, key).items():
                acc[target] = acc.get(target, 0) + c * d
        out[key] = acc
    return out


def annihilator_space(window: TruncationWindow, r: int) -> List[ModuleVector]:
    """Basis of {v in F_{<=D} : g_k v = 0 for r <= k <= K}."""
    if r < 0:
        raise RangeError(f"annihilator index r = {r} must be >= 0")
    window.require_complete()
    keys = window.keys()
    images = []
    for k in window.acting_grades(low=r):
        for x in window.acting(k):
            images.append(_images(window, x, keys))
    basis = _solve_on_keys(window, keys, images)
    logger.debug("V^(%d) in %s: dimension %d", r, window.to_dict(), len(basis))
    return basis


@dataclass(frozen=True)
class HeightReport:
    """``value`` is the height when found, else None meaning "> K"."""

    value: Optional[int]
    grade_cap: int
    window: dict

    def to_dict(self) -> dict:
        return {"height": self.value if self.value is not None else f"> {self.grade_cap}", "window": self.window}


def height(window: TruncationWindow) -> HeightReport:
    """Least r <= K with V^(r) nonzero inside the window."""
    window.require_complete()
    for r in range(0, window.grade_cap + 1):
        if annihilator_space(window, r):
            logger.info("height %d within %s", r, window.to_dict())
            return HeightReport(r, window.grade_cap, window.to_dict())
    return HeightReport(None, window.grade_cap, window.to_dict())


def weight_space(window: TruncationWindow, eigenvalues: Sequence) -> List[ModuleVector]:
    """Basis of {w in F_{<=D} : t_i d_i w = lambda_i w for all i}."""
    n = window.module.n
    if len(eigenvalues) != n:
        raise ArityError(f"{len(eigenvalues)} eigenvalues for n = {n}")
    keys = window.keys()
    images = []
    for i, lam in enumerate(eigenvalues):
        shifted = _images(window, WittElement.t_d(n, i, i), keys)
        for key in keys:
            shifted[key] = dict(shifted[key])
            shifted[key][key] = shifted[key].get(key, 0) - Fraction(lam)
        images.append(shifted)
    return _solve_on_keys(window, keys, images)
