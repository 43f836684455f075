"""
Truncated power-series derivations sum_{i >= -1} x_i, x_i in g_i, acting on smooth
modules. Only finitely many components act on a given vector v: those below
the smoothness bound N of v, since g_{>=N} v = 0.
"""

from typing import Dict, Iterable, Optional

from src.algebra.witt import WittElement, bracket, grade_component
from src.modules.base import SmoothModule
from src.modules.vectors import ModuleVector
from src.utils.errors import ArityError


class TruncatedSeries:
    """Homogeneous components x_k in g_k for finitely many k."""

    def __init__(self, n: int, components: Optional[Dict[int, WittElement]] = None):
        self.n = n
        self.components: Dict[int, WittElement] = {}
        for k, x in (components or {}).items():
            if x.n != n:
                raise ArityError(f"component over {x.n} variables in a series over {n}")
            part = grade_component(x, k)
            if part != x:
                raise ValueError(f"component {k} is not homogeneous of grade {k}")
            if not x.is_zero():
                self.components[k] = x

    @classmethod
    def from_element(cls, x: WittElement) -> "TruncatedSeries":
        return cls(x.n, {k: grade_component(x, k) for k in x.grades()})

    @classmethod
    def from_parts(cls, n: int, parts: Iterable[WittElement]) -> "TruncatedSeries":
        total = WittElement.zero(n)
        for p in parts:
            total = total + p
        return cls.from_element(total)

    def top_grade(self) -> int:
        return max(self.components, default=-2)

    def truncate(self, K: int) -> "TruncatedSeries":
        return TruncatedSeries(self.n, {k: x for k, x in self.components.items() if k <= K})

    def extend(self, extra: WittElement) -> "TruncatedSeries":
        return TruncatedSeries.from_element(self.as_element() + extra)

    def as_element(self) -> WittElement:
        total = WittElement.zero(self.n)
        for x in self.components.values():
            total = total + x
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.n == other.n and self.components == other.components

    def __repr__(self) -> str:
        return " + ".join(f"[{k}] {x!r}" for k, x in sorted(self.components.items())) or "0"


def bracket_series(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """[x, y] with [x, y]_k = sum_{a + b = k} [x_a, y_b]."""
    return TruncatedSeries.from_element(bracket(x.as_element(), y.as_element()))


def continuous_act(series: TruncatedSeries, v: ModuleVector, module: SmoothModule) -> ModuleVector:
    """D v = sum_{k=-1}^{N-1} x_k v with N the smoothness bound of v."""
    if series.n != module.n:
        raise ArityError(f"arity mismatch: series over {series.n}, module over {module.n}")
    bound = module.smoothness_bound(v)
    out = module.vector()
    for k, x in sorted(series.components.items()):
        if k < bound:
            out = out + module.act(x, v)
    return out
