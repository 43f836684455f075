"""Sparse polynomials in t_1..t_n with exact coefficients: the ring the Witt algebra derives."""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from src.core.multi_index import MultiIndex, mi_add
from src.utils.errors import ArityError


class Polynomial:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Iterable[int], object] = None):
        self.n = n
        clean: Dict[MultiIndex, Fraction] = {}
        for alpha, c in (terms or {}).items():
            alpha = MultiIndex(alpha)
            if len(alpha) != n:
                raise ArityError(f"monomial {alpha} in a polynomial over {n} variables")
            c = Fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, Fraction(0)) + c
        self._terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def monomial(cls, alpha, c=1) -> "Polynomial":
        alpha = MultiIndex(alpha)
        return cls(len(alpha), {alpha: c})

    @property
    def terms(self) -> Dict[MultiIndex, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[MultiIndex, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise ArityError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return Polynomial(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(self.n, {a: c * Fraction(other) for a, c in self._terms.items()})
        self._check(other)
        out: Dict[MultiIndex, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                key = mi_add(a, b)
                out[key] = out.get(key, Fraction(0)) + c * d
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def derivative(self, i: int) -> "Polynomial":
        """d/dt_i, i counted from 0."""
        out = {}
        for a, c in self._terms.items():
            if a[i]:
                lowered = list(a)
                lowered[i] -= 1
                out[tuple(lowered)] = c * a[i]
        return Polynomial(self.n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t^{a}" for a, c in self.items())
