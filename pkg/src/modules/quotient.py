"""
Quotients F / N of a module by the submodule N generated inside a window.

Representatives are kept in normal form modulo the echelon basis of N, so
each quotient vector is the reduced parent vector. The quotient basis is the
set of parent keys that are not pivots of N.
"""

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence

from src.algebra.witt import Symbol
from src.analysis.closure import module_closure
from src.analysis.window import TruncationWindow
from src.modules.base import SmoothModule
from src.modules.vectors import Key, ModuleVector

logger = logging.getLogger(__name__)


class QuotientModule(SmoothModule):
    family = "quotient"

    def __init__(self, window: TruncationWindow, generators: Sequence[ModuleVector]):
        window.require_complete()
        parent = window.module
        super().__init__(parent.n)
        self.parent = parent
        self.window = window
        self.level = parent.level
        self.submodule = module_closure(window, generators)

    def is_finite(self) -> bool:
        return self.parent.is_finite()

    def label_degree(self, label: Hashable) -> int:
        return self.parent.label_degree(label)

    def labels(self, source_degree: int = 0) -> List[Hashable]:
        return self.parent.labels(source_degree)

    def basis(self, m: int, source_degree: int = 0) -> List[Key]:
        return [key for key in self.parent.basis(m, source_degree) if key not in self.submodule.rows]

    def graded_dim(self, m: int, source_degree: int = 0) -> int:
        return len(self.basis(m, source_degree))

    def normal_form(self, terms: Dict[Key, Fraction]) -> Dict[Key, Fraction]:
        return self.submodule.reduce(terms)

    def project(self, w: ModuleVector) -> ModuleVector:
        """The class of a parent vector."""
        self.parent.check_vector(w)
        return self.vector(self.normal_form(w.terms))

    def lift(self, w: ModuleVector) -> ModuleVector:
        self.check_vector(w)
        return self.parent.vector(w.terms)

    def act_symbol(self, symbol: Symbol, key: Key) -> Dict[Key, Fraction]:
        return self.normal_form(self.parent.act_symbol_cached(symbol, key))

    def supports_grade(self, k: int) -> bool:
        return self.parent.supports_grade(k)

    def weight_of(self, key: Key) -> Optional[Fraction]:
        return self.parent.weight_of(key)

    def descriptor(self) -> dict:
        return {"family": self.family, "n": self.n, "parent": self.parent.descriptor(), "window": self.window.to_dict()}
