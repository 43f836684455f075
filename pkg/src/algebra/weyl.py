"""
The Weyl algebra K_n^+ = C[t_1..t_n, d_1..d_n] with [d_i, t_j] = delta_ij,
kept in normal order (every t to the left of every d), and its simple
module P_0 = K_n^+ / sum K_n^+ t_i ~ C[d_1..d_n].

On P_0 the element t^beta acts by

    t^beta . d^alpha = (-1)^|beta| beta! binom(alpha, beta) d^(alpha - beta)

which vanishes unless beta <= alpha componentwise.
"""

from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.core.multi_index import MultiIndex, mi_binomial, mi_factorial, mi_sub
from src.utils.errors import ArityError, ZeroVectorError

WeylKey = Tuple[MultiIndex, MultiIndex]


def _check(n1: int, n2: int) -> None:
    if n1 != n2:
        raise ArityError(f"arity mismatch: {n1} vs {n2}")


class WeylElement:
    """sum c t^beta d^gamma in normal order; immutable."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Tuple[Iterable[int], Iterable[int]], object]] = None):
        self.n = n
        clean: Dict[WeylKey, Fraction] = {}
        for (beta, gamma), c in (terms or {}).items():
            beta, gamma = MultiIndex(beta), MultiIndex(gamma)
            if len(beta) != n or len(gamma) != n:
                raise ArityError(f"term t^{beta} d^{gamma} in K_{n}^+")
            key = (beta, gamma)
            clean[key] = clean.get(key, 0) + Fraction(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def monomial(cls, beta: Iterable[int], gamma: Iterable[int], c=1) -> "WeylElement":
        beta = MultiIndex(beta)
        return cls(len(beta), {(beta, MultiIndex(gamma)): c})

    @classmethod
    def t_power(cls, beta: Iterable[int]) -> "WeylElement":
        beta = MultiIndex(beta)
        return cls.monomial(beta, MultiIndex.zero(len(beta)))

    @classmethod
    def d_power(cls, gamma: Iterable[int]) -> "WeylElement":
        gamma = MultiIndex(gamma)
        return cls.monomial(MultiIndex.zero(len(gamma)), gamma)

    @classmethod
    def scalar(cls, n: int, c) -> "WeylElement":
        zero = MultiIndex.zero(n)
        return cls(n, {(zero, zero): c})

    @property
    def terms(self) -> Dict[WeylKey, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[WeylKey, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "WeylElement") -> "WeylElement":
        _check(self.n, other.n)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return WeylElement(self.n, out)

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return weyl_multiply(self, other)
        other = Fraction(other)
        return WeylElement(self.n, {k: c * other for k, c in self._terms.items()})

    def __rmul__(self, scalar):
        return self * scalar

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t^{b}*d^{g}" for (b, g), c in self.items())


def _commute_one_variable(g: int, b: int) -> List[Tuple[int, int, int]]:
    """d^g t^b = sum_k k! C(g,k) C(b,k) t^(b-k) d^(g-k), returned as (coef, b-k, g-k)."""
    return [
        (factorial(k) * comb(g, k) * comb(b, k), b - k, g - k)
        for k in range(min(g, b) + 1)
    ]


def weyl_multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    """Normal-ordered product; each variable's d^g t^b is straightened independently."""
    _check(a.n, b.n)
    out: Dict[WeylKey, Fraction] = {}
    for (beta1, gamma1), c1 in a._terms.items():
        for (beta2, gamma2), c2 in b._terms.items():
            per_var = [_commute_one_variable(g, bb) for g, bb in zip(gamma1, beta2)]
            for choice in product(*per_var):
                coef = c1 * c2
                t_exp, d_exp = [], []
                for var, (k_coef, t_left, d_left) in enumerate(choice):
                    coef *= k_coef
                    t_exp.append(beta1[var] + t_left)
                    d_exp.append(d_left + gamma2[var])
                key = (MultiIndex(t_exp), MultiIndex(d_exp))
                out[key] = out.get(key, 0) + coef
    return WeylElement(a.n, out)


# -- independent rewriting path ---------------------------------------

Letter = Tuple[str, int]


def normal_order_word(n: int, word: Sequence[Letter], t_first: bool = True) -> WeylElement:
    """
    Normal form of a word in the generators ("t", i) / ("d", i) by repeated
    rewriting d_i t_j -> t_j d_i + delta_ij. Each step removes one (d, t)
    inversion, so the rewriting terminates.

    With ``t_first=False`` the rewriting is t_i d_j -> d_j t_i - delta_ij and
    a key (beta, gamma) of the result stands for d^gamma t^beta.
    """
    lead, trail = ("t", "d") if t_first else ("d", "t")
    sign = 1 if t_first else -1
    pending: Dict[Tuple[Letter, ...], Fraction] = {tuple(word): Fraction(1)}
    done: Dict[WeylKey, Fraction] = {}
    while pending:
        w, c = pending.popitem()
        for pos in range(len(w) - 1):
            if w[pos][0] == trail and w[pos + 1][0] == lead:
                swapped = w[:pos] + (w[pos + 1], w[pos]) + w[pos + 2:]
                pending[swapped] = pending.get(swapped, 0) + c
                if w[pos][1] == w[pos + 1][1]:
                    dropped = w[:pos] + w[pos + 2:]
                    pending[dropped] = pending.get(dropped, 0) + sign * c
                break
        else:
            beta, gamma = [0] * n, [0] * n
            for kind, i in w:
                (beta if kind == "t" else gamma)[i] += 1
            key = (MultiIndex(beta), MultiIndex(gamma))
            done[key] = done.get(key, 0) + c
    return WeylElement(n, done)


def word_of(beta: Iterable[int], gamma: Iterable[int]) -> List[Letter]:
    """The word t^beta d^gamma, letter by letter."""
    word: List[Letter] = []
    for i, b in enumerate(beta):
        word.extend([("t", i)] * b)
    for i, g in enumerate(gamma):
        word.extend([("d", i)] * g)
    return word


# -- the module P_0 -----------------------------------------------------

class P0Vector:
    """sum c_alpha dbar^alpha in P_0; immutable."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Iterable[int], object]] = None):
        self.n = n
        clean: Dict[MultiIndex, Fraction] = {}
        for alpha, c in (terms or {}).items():
            alpha = MultiIndex(alpha)
            if len(alpha) != n:
                raise ArityError(f"dbar^{alpha} in P_0 over {n} variables")
            clean[alpha] = clean.get(alpha, 0) + Fraction(c)
        self._terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def one(cls, n: int) -> "P0Vector":
        return cls(n, {MultiIndex.zero(n): 1})

    @classmethod
    def monomial(cls, alpha: Iterable[int], c=1) -> "P0Vector":
        alpha = MultiIndex(alpha)
        return cls(len(alpha), {alpha: c})

    @property
    def terms(self) -> Dict[MultiIndex, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[MultiIndex, Fraction]]:
        return sorted(self._terms.items())

    def support(self) -> List[MultiIndex]:
        return sorted(self._terms)

    def leading_index(self) -> MultiIndex:
        """Lexicographically largest alpha in the support."""
        if not self._terms:
            raise ZeroVectorError("the zero vector has no support")
        return max(self._terms)

    def degree(self) -> int:
        return max((a.size() for a in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "P0Vector") -> "P0Vector":
        _check(self.n, other.n)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return P0Vector(self.n, out)

    def __sub__(self, other: "P0Vector") -> "P0Vector":
        return self + other * -1

    def __mul__(self, scalar) -> "P0Vector":
        scalar = Fraction(scalar)
        return P0Vector(self.n, {k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, P0Vector) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*dbar^{a}" for a, c in self.items())


def t_power_on_dbar(beta: MultiIndex, alpha: MultiIndex) -> Optional[Tuple[Fraction, MultiIndex]]:
    """t^beta . dbar^alpha as (coefficient, alpha - beta), or None when it vanishes."""
    rest = mi_sub(alpha, beta)
    if rest is None:
        return None
    sign = -1 if beta.size() % 2 else 1
    return sign * mi_factorial(beta) * mi_binomial(alpha, beta), rest


def p0_act(a: WeylElement, v: P0Vector) -> P0Vector:
    """t^beta d^gamma . dbar^alpha: d^gamma multiplies first, then the closed t-formula."""
    _check(a.n, v.n)
    out: Dict[MultiIndex, Fraction] = {}
    for (beta, gamma), c in a._terms.items():
        for alpha, d in v._terms.items():
            raised = MultiIndex(x + y for x, y in zip(alpha, gamma))
            hit = t_power_on_dbar(beta, raised)
            if hit is not None:
                coef, rest = hit
                out[rest] = out.get(rest, 0) + c * d * coef
    return P0Vector(a.n, out)


def p0_reach_one(v: P0Vector) -> Tuple[MultiIndex, Fraction]:
    """
    Constructive simplicity of P_0: with beta the lex-largest index of v,
    t^beta v = (-1)^|beta| beta! a_beta 1bar, a nonzero multiple of 1bar.
    """
    beta = v.leading_index()
    c = (-1 if beta.size() % 2 else 1) * mi_factorial(beta) * v._terms[beta]
    reached = p0_act(WeylElement.t_power(beta), v)
    if reached != P0Vector.one(v.n) * c:
        raise ArithmeticError(f"t^{beta} v = {reached}, expected {c} * 1bar")
    return beta, c


def projection_phi(a: WeylElement) -> P0Vector:
    """
    f d^alpha -> f(0) d^alpha on stored terms. Applied to t-left normal forms
    this is not the quotient map (t_1 d_1 = d_1 t_1 - 1 goes to -1bar); see
    quotient_map.
    """
    zero = MultiIndex.zero(a.n)
    return P0Vector(a.n, {gamma: c for (beta, gamma), c in a._terms.items() if beta == zero})


def weyl_of_p0(v: P0Vector) -> WeylElement:
    """The representative sum c d^alpha in K_n^+ of a vector of P_0."""
    zero = MultiIndex.zero(v.n)
    return WeylElement(v.n, {(zero, alpha): c for alpha, c in v._terms.items()})


def reverse_order(a: WeylElement) -> WeylElement:
    """
    a rewritten with every t to the right of every d; a key (beta, gamma) of
    the result stands for d^gamma t^beta. Per variable,
    t^b d^g = sum_k (-1)^k k! C(g,k) C(b,k) d^(g-k) t^(b-k).
    """
    out: Dict[WeylKey, Fraction] = {}
    for (beta, gamma), c in a._terms.items():
        per_var = [_commute_one_variable(g, b) for g, b in zip(gamma, beta)]
        for choice in product(*per_var):
            coef = c
            t_exp, d_exp = [], []
            for k_coef, t_left, d_left in choice:
                k = beta[len(t_exp)] - t_left
                coef *= -k_coef if k % 2 else k_coef
                t_exp.append(t_left)
                d_exp.append(d_left)
            key = (MultiIndex(t_exp), MultiIndex(d_exp))
            out[key] = out.get(key, 0) + coef
    return WeylElement(a.n, out)


def quotient_map(a: WeylElement) -> P0Vector:
    """
    The module map K_n^+ -> P_0, a -> a . 1bar, without the closed t-formula:
    once t sits on the right, sum K_n^+ t_i is exactly the span of the terms
    carrying some t, and projection_phi drops them.
    """
    return projection_phi(reverse_order(a))
