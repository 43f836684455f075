"""Truncation windows: the finite slice F_{<=D} of a module plus the acting grades -1..K."""

from dataclasses import dataclass, field
from typing import List, Optional

from src.algebra.witt import WittElement, basis_of_grade
from src.modules.base import SmoothModule
from src.modules.vectors import Key
from src.utils.errors import RangeError, WindowError


@dataclass
class TruncationWindow:
    module: SmoothModule
    degree: int = 4
    grade_cap: Optional[int] = None
    source_degree: int = 2
    _acting: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if self.degree < 0:
            raise RangeError(f"degree bound D = {self.degree} must be >= 0")
        if self.grade_cap is None:
            self.grade_cap = self.degree + self.module.level
        if self.grade_cap < -1:
            raise RangeError(f"grade cap K = {self.grade_cap} must be >= -1")

    @property
    def level(self) -> int:
        return self.module.level

    def is_complete(self) -> bool:
        return self.grade_cap >= self.degree + self.level

    def require_complete(self) -> None:
        if not self.is_complete():
            raise WindowError(
                f"window D = {self.degree}, K = {self.grade_cap} is incomplete: need K >= D + {self.level}"
            )

    def source_bound(self) -> int:
        return self.source_degree if not self.module.is_finite() else 0

    def keys(self, bound: Optional[int] = None) -> List[Key]:
        """Basis of F_{<=bound}, default the window degree."""
        bound = self.degree if bound is None else bound
        return self.module.basis_up_to(bound, self.source_bound())

    def keys_of_degree(self, m: int) -> List[Key]:
        return self.module.basis(m, self.source_bound())

    def acting(self, k: int) -> List[WittElement]:
        """Basis of g_k, filtered to the grades the module carries."""
        if k not in self._acting:
            self._acting[k] = basis_of_grade(self.module.n, k) if self.module.supports_grade(k) else []
        return self._acting[k]

    def acting_grades(self, low: int = -1) -> range:
        return range(max(low, -1), self.grade_cap + 1)

    def key_in_window(self, key: Key, bound: Optional[int] = None) -> bool:
        bound = self.degree if bound is None else bound
        alpha, label = key
        return alpha.size() <= bound and self.module.label_degree(label) <= self.source_bound()

    def to_dict(self) -> dict:
        out = {"D": self.degree, "K": self.grade_cap, "level": self.level}
        if not self.module.is_finite():
            out["source_degree"] = self.source_degree
        return out
