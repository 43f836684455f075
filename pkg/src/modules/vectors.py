"""
Vectors of graded smooth modules.

A vector is sum_alpha d^alpha (x) v_alpha, stored sparsely as a map
(alpha, label) -> coefficient, where ``label`` names a basis vector of the
coefficient space (an integer index for finite-dimensional spaces, a PBW
exponent tuple for M(phi)). The ``family`` tag says which module family the
vector belongs to.
"""

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

from src.core.multi_index import MultiIndex
from src.utils.errors import ArityError, FamilyError

Key = Tuple[MultiIndex, Hashable]


class ModuleVector:
    __slots__ = ("n", "family", "_terms")

    def __init__(self, n: int, family: str, terms: Optional[Mapping[Tuple[Iterable[int], Hashable], object]] = None):
        self.n = n
        self.family = family
        clean: Dict[Key, Fraction] = {}
        for (alpha, label), c in (terms or {}).items():
            alpha = alpha if isinstance(alpha, MultiIndex) else MultiIndex(alpha)
            if len(alpha) != n:
                raise ArityError(f"d^{alpha} in a module over {n} variables")
            key = (alpha, label)
            clean[key] = clean.get(key, 0) + Fraction(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def zero(cls, n: int, family: str) -> "ModuleVector":
        return cls(n, family)

    @classmethod
    def basis(cls, n: int, family: str, alpha: Iterable[int], label: Hashable, c=1) -> "ModuleVector":
        return cls(n, family, {(MultiIndex(alpha), label): c})

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Key, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0].size(), kv[0][0], kv[0][1]))

    def coefficient(self, alpha, label) -> Fraction:
        return self._terms.get((MultiIndex(alpha), label), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> List[MultiIndex]:
        """Supp(w): the alpha with v_alpha != 0."""
        return sorted({alpha for alpha, _ in self._terms})

    def ht(self) -> int:
        """Largest |alpha| in the support; -1 for the zero vector."""
        return max((alpha.size() for alpha, _ in self._terms), default=-1)

    def top(self) -> "ModuleVector":
        m = self.ht()
        return ModuleVector(self.n, self.family, {k: c for k, c in self._terms.items() if k[0].size() == m})

    def lth(self) -> int:
        """Number of alpha of size ht(w) in the support."""
        m = self.ht()
        return len({alpha for alpha, _ in self._terms if alpha.size() == m})

    def component(self, alpha) -> Dict[Hashable, Fraction]:
        """v_alpha as a sparse map label -> coefficient."""
        alpha = MultiIndex(alpha)
        return {label: c for (a, label), c in self._terms.items() if a == alpha}

    def dense_component(self, alpha, dim: int) -> List[Fraction]:
        comp = self.component(alpha)
        return [comp.get(k, Fraction(0)) for k in range(dim)]

    def retag(self, family: str) -> "ModuleVector":
        return ModuleVector(self.n, family, self._terms)

    # -- linear structure ---------------------------------------------
    def _check(self, other: "ModuleVector") -> None:
        if self.family != other.family:
            raise FamilyError(f"cannot combine {self.family} and {other.family} vectors")
        if self.n != other.n:
            raise ArityError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return ModuleVector(self.n, self.family, out)

    def __neg__(self) -> "ModuleVector":
        return self * -1

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def __mul__(self, scalar) -> "ModuleVector":
        scalar = Fraction(scalar)
        return ModuleVector(self.n, self.family, {k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleVector)
            and self.n == other.n
            and self.family == other.family
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.family, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*d^{alpha}(x){label}" for (alpha, label), c in self.items())
