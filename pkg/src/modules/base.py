"""
Common interface of the graded smooth module families.

Every family acts on basis keys (alpha, label); ``act`` extends that
bilinearly over the terms of a WittElement and of a ModuleVector. A family
exposes its graded slices F_m = span{d^alpha (x) e : |alpha| = m} as explicit
finite bases; for an infinite coefficient space the labels are cut at a
source degree.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from math import comb
from typing import Dict, Hashable, List, Optional, Tuple

from src.algebra.witt import Symbol, WittElement, symbol_grade
from src.core.multi_index import MultiIndex, indices_of_size
from src.modules.vectors import Key, ModuleVector
from src.utils.errors import ArityError, CapExceeded, FamilyError

logger = logging.getLogger(__name__)


class SmoothModule(ABC):
    """A Z_+-graded module over W_n^+ (or over g_{>=0} for M(phi)) with finite graded slices."""

    family: str = "abstract"
    #: nilpotency level l with g_{>=l} killing the degree-0 slice
    level: int = 1

    def __init__(self, n: int):
        self.n = n
        self._cache: Dict[Tuple[Symbol, Key], Dict[Key, Fraction]] = {}

    # -- coefficient space --------------------------------------------
    @abstractmethod
    def labels(self, source_degree: int) -> List[Hashable]:
        """Basis labels of the degree-0 slice, cut at ``source_degree`` when infinite."""

    def label_degree(self, label: Hashable) -> int:
        return 0

    def is_finite(self) -> bool:
        return True

    # -- actions on basis keys ----------------------------------------
    @abstractmethod
    def act_symbol(self, symbol: Symbol, key: Key) -> Dict[Key, Fraction]:
        """The image of d^alpha (x) label under one basis symbol t^beta d_i."""

    def act_symbol_cached(self, symbol: Symbol, key: Key) -> Dict[Key, Fraction]:
        memo = (symbol, key)
        hit = self._cache.get(memo)
        if hit is None:
            hit = {k: c for k, c in self.act_symbol(symbol, key).items() if c}
            self._cache[memo] = hit
        return hit

    def supports_grade(self, k: int) -> bool:
        """Whether elements of grade k act; M(phi) only carries the g_{>=0} action."""
        return k >= -1

    def vector(self, terms=None) -> ModuleVector:
        return ModuleVector(self.n, self.family, terms)

    def basis_vector(self, alpha, label, c=1) -> ModuleVector:
        return ModuleVector.basis(self.n, self.family, alpha, label, c)

    def check_vector(self, w: ModuleVector) -> None:
        if w.family != self.family:
            raise FamilyError(f"{w.family} vector handed to a {self.family} module")
        if w.n != self.n:
            raise ArityError(f"arity mismatch: vector over {w.n}, module over {self.n}")

    def act(self, x: WittElement, w: ModuleVector, cap: Optional[int] = None) -> ModuleVector:
        """x . w; with ``cap`` set, a result of height above it raises CapExceeded."""
        self.check_vector(w)
        if x.n != self.n:
            raise ArityError(f"arity mismatch: element over {x.n}, module over {self.n}")
        out: Dict[Key, Fraction] = {}
        for symbol, c in x.items():
            if not self.supports_grade(symbol_grade(symbol)):
                raise ValueError(f"{self.family} module carries no action of grade {symbol_grade(symbol)}")
            for key, d in w._terms.items():
                for target, e in self.act_symbol_cached(symbol, key).items():
                    out[target] = out.get(target, 0) + c * d * e
        result = ModuleVector(self.n, self.family, out)
        if cap is not None and result.ht() > cap:
            raise CapExceeded(result.ht(), cap)
        return result

    # -- grading ------------------------------------------------------
    def basis(self, m: int, source_degree: int = 0) -> List[Key]:
        """Keys spanning F_m."""
        labels = self.labels(source_degree)
        return [(alpha, label) for alpha in sorted(indices_of_size(self.n, m)) for label in labels]

    def basis_up_to(self, bound: int, source_degree: int = 0) -> List[Key]:
        return [key for m in range(bound + 1) for key in self.basis(m, source_degree)]

    def graded_dim(self, m: int, source_degree: int = 0) -> int:
        """dim F_m = C(m+n-1, n-1) * dim of the degree-0 slice."""
        return comb(m + self.n - 1, self.n - 1) * len(self.labels(source_degree)) if m >= 0 else 0

    def key_degree(self, key: Key) -> int:
        """Filtration degree |alpha| + degree of the label; |alpha| for finite coefficient spaces."""
        alpha, label = key
        return alpha.size() + self.label_degree(label)

    def keys_of_total_degree(self, m: int) -> List[Key]:
        if self.is_finite():
            return self.basis(m)
        out = []
        for d in range(m + 1):
            labels = [lab for lab in self.labels(d) if self.label_degree(lab) == d]
            out.extend((alpha, lab) for alpha in sorted(indices_of_size(self.n, m - d)) for lab in labels)
        return out

    def key_order(self, key: Key) -> Tuple:
        """Total order, major on key_degree."""
        alpha, label = key
        return (self.key_degree(key), alpha, label)

    def smoothness_bound(self, w: ModuleVector) -> int:
        """Some N with g_{>=N} w = 0."""
        self.check_vector(w)
        if w.is_zero():
            return -1
        return w.ht() + self.level

    def weight_of(self, key: Key) -> Optional[Fraction]:
        """omega_n-eigenvalue of a basis key when the family is omega_n-graded."""
        return None

    def descriptor(self) -> dict:
        return {"family": self.family, "n": self.n}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"


class TrivialModule(SmoothModule):
    """The one-dimensional module C on which all of W_n^+ acts by zero."""

    family = "trivial"
    level = 0

    def labels(self, source_degree: int) -> List[Hashable]:
        return [0]

    def basis(self, m: int, source_degree: int = 0) -> List[Key]:
        return [(MultiIndex.zero(self.n), 0)] if m == 0 else []

    def graded_dim(self, m: int, source_degree: int = 0) -> int:
        return 1 if m == 0 else 0

    def act_symbol(self, symbol: Symbol, key: Key) -> Dict[Key, Fraction]:
        return {}

    def smoothness_bound(self, w: ModuleVector) -> int:
        self.check_vector(w)
        return -1 if w.is_zero() else 0

    def weight_of(self, key: Key) -> Optional[Fraction]:
        return Fraction(0)
