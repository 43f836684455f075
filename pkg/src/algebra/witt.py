"""
The Lie algebra W_n^+ of polynomial vector fields, basis t^alpha d_i.

Directions are counted from 0 internally (``d_0`` prints as d1);
the JSON codec and ``repr`` print them from 1.

    [t^a d_i, t^b d_j] = b_i t^(a+b-e_i) d_j - a_j t^(a+b-e_j) d_i

Each symbol t^a d_i has grade |a| - 1, which makes W_n^+ Z-graded with
g_k = 0 for k < -1.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from src.algebra.polynomial import Polynomial
from src.core.multi_index import MultiIndex, indices_of_size
from src.utils.errors import ArityError

logger = logging.getLogger(__name__)

Symbol = Tuple[MultiIndex, int]


def symbol_grade(symbol: Symbol) -> int:
    return symbol[0].size() - 1


class WittElement:
    """Finite linear combination of symbols t^alpha d_i; immutable."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Tuple[Iterable[int], int], object]] = None):
        self.n = n
        clean: Dict[Symbol, Fraction] = {}
        for (alpha, i), c in (terms or {}).items():
            alpha = alpha if isinstance(alpha, MultiIndex) else MultiIndex(alpha)
            if len(alpha) != n:
                raise ArityError(f"symbol t^{alpha} d_{i + 1} in W_{n}^+")
            if not 0 <= i < n:
                raise ArityError(f"direction {i + 1} outside 1..{n}")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                key = (alpha, i)
                clean[key] = clean.get(key, 0) + c
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "WittElement":
        return cls(n)

    @classmethod
    def symbol(cls, alpha: Iterable[int], i: int, c=1) -> "WittElement":
        alpha = MultiIndex(alpha)
        return cls(len(alpha), {(alpha, i): c})

    @classmethod
    def partial(cls, n: int, i: int) -> "WittElement":
        """d_i = t^0 d_i, spanning g_{-1}."""
        return cls(n, {(MultiIndex.zero(n), i): 1})

    @classmethod
    def euler(cls, n: int) -> "WittElement":
        """omega_n = sum_i t_i d_i."""
        return cls(n, {(MultiIndex.unit(n, i), i): 1 for i in range(n)})

    @classmethod
    def t_d(cls, n: int, i: int, j: int) -> "WittElement":
        """t_i d_j, the preimage of E_ij under g_0 ~ gl_n."""
        return cls(n, {(MultiIndex.unit(n, i), j): 1})

    # -- mapping protocol ---------------------------------------------
    def items(self) -> List[Tuple[Symbol, Fraction]]:
        """Terms in canonical order: lexicographic on alpha, then direction."""
        return sorted(self._terms.items())

    def coefficient(self, alpha, i: int) -> Fraction:
        return self._terms.get((MultiIndex(alpha), i), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> List[int]:
        return sorted({symbol_grade(s) for s in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.grades()) == 1

    def degree(self) -> int:
        """Grade of a nonzero homogeneous element."""
        grades = self.grades()
        if len(grades) != 1:
            raise ValueError(f"element is not homogeneous (grades {grades})")
        return grades[0]

    # -- linear structure ---------------------------------------------
    def _check(self, other: "WittElement") -> None:
        if self.n != other.n:
            raise ArityError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "WittElement") -> "WittElement":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return WittElement(self.n, out)

    def __neg__(self) -> "WittElement":
        return WittElement(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "WittElement") -> "WittElement":
        return self + (-other)

    def __mul__(self, scalar) -> "WittElement":
        scalar = Fraction(scalar)
        return WittElement(self.n, {k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, WittElement) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (alpha, i), c in self.items():
            mono = "*".join(f"t{j + 1}^{a}" for j, a in enumerate(alpha) if a) or "1"
            parts.append(f"{c}*{mono}*d{i + 1}")
        return " + ".join(parts)


def bracket_symbols(a: Symbol, b: Symbol) -> Dict[Symbol, int]:
    """[t^alpha d_i, t^beta d_j] on basis symbols, as integer coefficients."""
    (alpha, i), (beta, j) = a, b
    out: Dict[Symbol, int] = {}
    if beta[i]:
        exps = [x + y for x, y in zip(alpha, beta)]
        exps[i] -= 1
        key = (MultiIndex(exps), j)
        out[key] = out.get(key, 0) + beta[i]
    if alpha[j]:
        exps = [x + y for x, y in zip(alpha, beta)]
        exps[j] -= 1
        key = (MultiIndex(exps), i)
        out[key] = out.get(key, 0) - alpha[j]
    return {k: c for k, c in out.items() if c}


def bracket(x: WittElement, y: WittElement) -> WittElement:
    x._check(y)
    out: Dict[Symbol, Fraction] = {}
    for a, c in x._terms.items():
        for b, d in y._terms.items():
            for key, e in bracket_symbols(a, b).items():
                out[key] = out.get(key, 0) + c * d * e
    return WittElement(x.n, out)


def grade_component(x: WittElement, k: int) -> WittElement:
    return WittElement(x.n, {s: c for s, c in x._terms.items() if symbol_grade(s) == k})


def basis_of_grade(n: int, k: int) -> List[WittElement]:
    """All t^alpha d_i with |alpha| = k + 1 in canonical order; n * C(k+n, n-1) of them."""
    if k < -1:
        return []
    symbols = sorted((alpha, i) for alpha in indices_of_size(n, k + 1) for i in range(n))
    return [WittElement(n, {s: 1}) for s in symbols]


def grade_dimension(n: int, k: int) -> int:
    return n * comb(k + n, n - 1) if k >= -1 else 0


def apply_to_polynomial(x: WittElement, f: Polynomial) -> Polynomial:
    """x(f) = sum c t^alpha df/dt_i: W_n^+ as derivations of the polynomial ring."""
    if x.n != f.n:
        raise ArityError(f"arity mismatch: {x.n} vs {f.n}")
    total = Polynomial(x.n)
    for (alpha, i), c in x._terms.items():
        total = total + Polynomial.monomial(alpha, c) * f.derivative(i)
    return total


def coordinates(x: WittElement, basis: List[WittElement]) -> List[Fraction]:
    """Coordinates of x in a list of distinct basis symbols."""
    index = {}
    for pos, b in enumerate(basis):
        ((sym, _),) = b._terms.items()
        index[sym] = pos
    out = [Fraction(0)] * len(basis)
    for sym, c in x._terms.items():
        if sym not in index:
            raise ValueError(f"{sym} is not in the given basis")
        out[index[sym]] = c
    return out


def ad_matrix(x: WittElement, k: int) -> List[List[Fraction]]:
    """Matrix of ad x : g_k -> g_{k+deg x}; column j is the image of the j-th basis symbol."""
    source = basis_of_grade(x.n, k)
    target = basis_of_grade(x.n, k + x.degree())
    columns = [coordinates(bracket(x, b), target) for b in source]
    return [[col[r] for col in columns] for r in range(len(target))]


# -- the named elements of W_2^+ ---------------------------------------

def w2_named() -> Dict[str, WittElement]:
    """e, i, h, f spanning g_0 and p0..p3, q0, q1 spanning g_1 for n = 2."""
    def s(a1, a2, direction, c=1):
        return WittElement.symbol((a1, a2), direction, c)

    d1, d2 = 0, 1
    return {
        "e": s(1, 0, d2),
        "i": s(1, 0, d1) + s(0, 1, d2),
        "h": s(1, 0, d1) - s(0, 1, d2),
        "f": s(0, 1, d1),
        "p0": s(2, 0, d2),
        "p1": s(1, 1, d2, 2) - s(2, 0, d1),
        "p2": s(0, 2, d2, 2) - s(1, 1, d1, 4),
        "p3": s(0, 2, d1, -6),
        "q0": s(2, 0, d1) + s(1, 1, d2),
        "q1": s(0, 2, d2) + s(1, 1, d1),
    }


G0_NAMES = ("e", "i", "h", "f")
G1_NAMES = ("p0", "p1", "p2", "p3", "q0", "q1")


def g0_coordinates(x: WittElement) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """(a, b, c, d) with x = a e + b i + c h + d f, for x in g_0 of W_2^+."""
    if x.n != 2:
        raise ArityError("the e, i, h, f basis exists for n = 2 only")
    if any(symbol_grade(sym) != 0 for sym in x._terms):
        raise ValueError(f"{x} is not in g_0")
    c11 = x.coefficient((1, 0), 0)
    c12 = x.coefficient((1, 0), 1)
    c21 = x.coefficient((0, 1), 0)
    c22 = x.coefficient((0, 1), 1)
    return c12, (c11 + c22) / 2, (c11 - c22) / 2, c21


def g1_decomposition() -> Dict[str, List[WittElement]]:
    """g_1 = V(3) + V(1) as g_0-modules for n = 2, with highest weight vectors p0 and q0 first."""
    named = w2_named()
    return {
        "V3": [named[k] for k in ("p0", "p1", "p2", "p3")],
        "V1": [named[k] for k in ("q0", "q1")],
    }
