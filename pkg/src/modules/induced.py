"""
Induced modules Ind_{g>=0}^g E with PBW basis d^alpha (x) e.

g_{-1} acts freely: d_i . (d^alpha (x) e) = d^(alpha + e_i) (x) e. Every
other element is pushed through the d's one at a time,

    x . (d_i u) = d_i (x . u) + [x, d_i] . u,

until it reaches 1 (x) E, where the source action takes over. [x, d_i] has
grade one lower than x, so the recursion ends.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, Hashable, List, Optional

import numpy as np

from src.algebra.witt import Symbol, WittElement, basis_of_grade, bracket, symbol_grade
from src.core.multi_index import MultiIndex
from src.modules.base import SmoothModule
from src.modules.vectors import Key
from src.representations.gln import GlnModule, identity
from src.utils.errors import ModuleRelationError

logger = logging.getLogger(__name__)

Label = Hashable


class InducedSource(ABC):
    """A g_{>=0}-module E with g_{>=level} E = 0, given on a basis of labels."""

    level: int = 1

    def __init__(self, n: int):
        self.n = n

    @abstractmethod
    def labels(self, source_degree: int) -> List[Label]:
        ...

    @abstractmethod
    def act_symbol(self, symbol: Symbol, label: Label) -> Dict[Label, Fraction]:
        """Action of a basis symbol of grade >= 0 on a basis vector of E."""

    def label_degree(self, label: Label) -> int:
        return 0

    def is_finite(self) -> bool:
        return True

    def central_weight(self) -> Optional[Fraction]:
        """Scalar by which omega_n acts on E, when it does."""
        return None

    def validate(self, source_degree: int = 1, extra_grades: int = 2) -> None:
        """Check g_k E = 0 for level <= k < level + extra_grades on the truncated basis."""
        for k in range(self.level, self.level + extra_grades):
            for x in basis_of_grade(self.n, k):
                ((symbol, _),) = x.items()
                for label in self.labels(source_degree):
                    if any(self.act_symbol(symbol, label).values()):
                        raise ModuleRelationError(
                            f"g_{k} does not kill the source vector {label}; level {self.level} is wrong"
                        )


class GlnSource(InducedSource):
    """A gl_n-module M viewed as a g_{>=0}-module: t_i d_j -> E_ij and g_{>=1} -> 0."""

    level = 1

    def __init__(self, M: GlnModule):
        super().__init__(M.n)
        self.M = M

    def labels(self, source_degree: int = 0) -> List[Label]:
        return list(range(self.M.dim))

    def act_symbol(self, symbol: Symbol, label: Label) -> Dict[Label, Fraction]:
        alpha, j = symbol
        if alpha.size() != 1:
            return {}
        i = alpha.index(1)
        column = self.M.action[i, j][:, label]
        return {row: Fraction(e) for row, e in enumerate(column) if e}

    def central_weight(self) -> Optional[Fraction]:
        scalar = self.M.identity_action()
        c = scalar[0, 0]
        return Fraction(c) if np.array_equal(scalar, identity(self.M.dim) * c) else None


class InducedModule(SmoothModule):
    family = "induced"

    def __init__(self, source: InducedSource, family: str = "induced", validate: bool = True):
        super().__init__(source.n)
        self.source = source
        self.family = family
        self.level = source.level
        if validate:
            source.validate()

    def labels(self, source_degree: int = 0) -> List[Hashable]:
        return self.source.labels(source_degree)

    def label_degree(self, label: Hashable) -> int:
        return self.source.label_degree(label)

    def is_finite(self) -> bool:
        return self.source.is_finite()

    def act_symbol(self, symbol: Symbol, key: Key) -> Dict[Key, Fraction]:
        alpha, label = key
        beta, i = symbol
        if symbol_grade(symbol) == -1:
            shifted = MultiIndex(a + (1 if pos == i else 0) for pos, a in enumerate(alpha))
            return {(shifted, label): Fraction(1)}

        if alpha.size() == 0:
            return {(alpha, lab): c for lab, c in self.source.act_symbol(symbol, label).items()}

        # peel off the first d_p of d^alpha
        p = next(pos for pos, a in enumerate(alpha) if a)
        rest = MultiIndex(a - (1 if pos == p else 0) for pos, a in enumerate(alpha))
        d_p = WittElement.partial(self.n, p)
        x = WittElement(self.n, {symbol: 1})

        out: Dict[Key, Fraction] = {}
        for (gamma, lab), c in self.act_symbol_cached(symbol, (rest, label)).items():
            raised = MultiIndex(g + (1 if pos == p else 0) for pos, g in enumerate(gamma))
            out[(raised, lab)] = out.get((raised, lab), 0) + c
        for inner, c in bracket(x, d_p).items():
            for target, d in self.act_symbol_cached(inner, (rest, label)).items():
                out[target] = out.get(target, 0) + c * d
        return out

    def weight_of(self, key: Key) -> Optional[Fraction]:
        """omega_n acts on d^alpha (x) e by c - |alpha| when it acts on E by c."""
        c = self.source.central_weight()
        return None if c is None else c - key[0].size()

    def descriptor(self) -> dict:
        return {"family": self.family, "n": self.n, "level": self.level}

    def __repr__(self) -> str:
        return f"InducedModule(family={self.family!r}, n={self.n}, level={self.level})"


def induce(M: GlnModule) -> InducedModule:
    """Ind_{g>=0}^g M for a gl_n-module M with g_{>=1} M = 0."""
    return InducedModule(GlnSource(M))
