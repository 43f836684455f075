"""
Universal quasi-Whittaker modules M(phi) = Ind_{g>=1}^{g>=0} C w_phi for n = 2.

phi is a character of g_{>=1}; it vanishes on g_{>=2} = [g_{>=1}, g_{>=1}], so
it is fixed by its six values on p0..p3, q0, q1. The PBW basis is
e^a i^b h^c f^d w_phi, stored as the exponent tuple (a, b, c, d).

g_0 acts by left multiplication followed by straightening; g_1 is commuted
through the PBW word until it meets w_phi.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from src.algebra.witt import (
    G0_NAMES,
    G1_NAMES,
    Symbol,
    WittElement,
    basis_of_grade,
    bracket,
    coordinates,
    g0_coordinates,
    symbol_grade,
    w2_named,
)
from src.analysis.linalg import solve_in_span
from src.modules.induced import InducedModule, InducedSource
from src.utils.errors import ArityError, RangeError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int, int, int]
Combination = Dict[Monomial, Fraction]

UNIT: Monomial = (0, 0, 0, 0)


@dataclass(frozen=True)
class WhittakerCharacter:
    """phi on g_1 through its values on p0..p3, q0, q1."""

    p0: Fraction = Fraction(0)
    p1: Fraction = Fraction(0)
    p2: Fraction = Fraction(0)
    p3: Fraction = Fraction(0)
    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)

    def __post_init__(self):
        for name, value in asdict(self).items():
            object.__setattr__(self, name, Fraction(value))

    @classmethod
    def from_mapping(cls, values: Mapping[str, object]) -> "WhittakerCharacter":
        unknown = set(values) - set(G1_NAMES)
        if unknown:
            raise ValueError(f"unknown character entries {sorted(unknown)}")
        return cls(**{k: Fraction(v) for k, v in values.items()})

    def p_values(self) -> List[Fraction]:
        return [self.p0, self.p1, self.p2, self.p3]

    def value(self, name: str) -> Fraction:
        return getattr(self, name)

    def is_zero(self) -> bool:
        return not any(asdict(self).values())

    def to_dict(self) -> Dict[str, str]:
        return {k: str(v) for k, v in asdict(self).items()}


def _named_g1_coordinates() -> Dict[Symbol, Dict[str, Fraction]]:
    """Each g_1 symbol of W_2^+ written in the basis p0..p3, q0, q1."""
    named = w2_named()
    basis = basis_of_grade(2, 1)
    columns = [coordinates(named[name], basis) for name in G1_NAMES]
    out: Dict[Symbol, Dict[str, Fraction]] = {}
    for pos, b in enumerate(basis):
        ((symbol, _),) = b.items()
        target = [Fraction(int(r == pos)) for r in range(len(basis))]
        coeffs = solve_in_span(columns, target)
        out[symbol] = {name: c for name, c in zip(G1_NAMES, coeffs) if c}
    return out


def monomials_up_to(bound: int) -> List[Monomial]:
    out = []
    for d in range(bound + 1):
        for a in range(d, -1, -1):
            for b in range(d - a, -1, -1):
                for c in range(d - a - b, -1, -1):
                    out.append((a, b, c, d - a - b - c))
    return out


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def _add_into(out: Combination, comb: Combination, scale: Fraction) -> None:
    for m, c in comb.items():
        value = out.get(m, 0) + scale * c
        if value:
            out[m] = value
        else:
            out.pop(m, None)


class WhittakerSource(InducedSource):
    """M(phi) as a g_{>=0}-module of level 2."""

    level = 2

    def __init__(self, phi: WhittakerCharacter):
        super().__init__(2)
        self.phi = phi
        named = w2_named()
        self.letters = [named[name] for name in G0_NAMES]
        self._letter_brackets = {
            (a, b): self._in_letters(bracket(self.letters[a], self.letters[b]))
            for a in range(4)
            for b in range(4)
        }
        self._phi_on_symbol = {
            symbol: sum((c * phi.value(name) for name, c in comb.items()), Fraction(0))
            for symbol, comb in _named_g1_coordinates().items()
        }
        self._left: Dict[Tuple[int, Monomial], Combination] = {}
        self._upper: Dict[Tuple[Symbol, Monomial], Combination] = {}

    @staticmethod
    def _in_letters(x: WittElement) -> Dict[int, Fraction]:
        return {k: c for k, c in enumerate(g0_coordinates(x)) if c}

    def phi_of(self, x: WittElement) -> Fraction:
        """phi extended linearly; zero on g_{>=2}."""
        return sum(
            (c * self._phi_on_symbol[s] for s, c in x.items() if symbol_grade(s) == 1),
            Fraction(0),
        )

    def labels(self, source_degree: int) -> List[Monomial]:
        return monomials_up_to(source_degree)

    def label_degree(self, label: Monomial) -> int:
        return monomial_degree(label)

    def is_finite(self) -> bool:
        return False

    # -- g_0: left multiplication ------------------------------------
    def left_multiply(self, letter: int, m: Monomial) -> Combination:
        memo = (letter, m)
        hit = self._left.get(memo)
        if hit is not None:
            return hit
        first = next((k for k in range(4) if m[k]), None)
        if first is None or letter <= first:
            raised = list(m)
            raised[letter] += 1
            out = {tuple(raised): Fraction(1)}
        else:
            rest = list(m)
            rest[first] -= 1
            rest = tuple(rest)
            out: Combination = {}
            for mono, c in self.left_multiply(letter, rest).items():
                _add_into(out, self.left_multiply(first, mono), c)
            for other, c in self._letter_brackets[(letter, first)].items():
                _add_into(out, self.left_multiply(other, rest), c)
        self._left[memo] = out
        return out

    # -- g_1: commute towards w_phi ------------------------------------
    def upper_act(self, symbol: Symbol, m: Monomial) -> Combination:
        memo = (symbol, m)
        hit = self._upper.get(memo)
        if hit is not None:
            return hit
        first = next((k for k in range(4) if m[k]), None)
        out: Combination = {}
        if first is None:
            value = self._phi_on_symbol[symbol]
            if value:
                out[UNIT] = value
        else:
            rest = list(m)
            rest[first] -= 1
            rest = tuple(rest)
            for mono, c in self.upper_act(symbol, rest).items():
                _add_into(out, self.left_multiply(first, mono), c)
            x = WittElement(2, {symbol: 1})
            for inner, c in bracket(x, self.letters[first]).items():
                _add_into(out, self.upper_act(inner, rest), c)
        self._upper[memo] = out
        return out

    def act_symbol(self, symbol: Symbol, label: Monomial) -> Dict[Monomial, Fraction]:
        grade = symbol_grade(symbol)
        if grade < 0:
            raise ValueError("M(phi) is a g_{>=0}-module")
        if grade == 0:
            out: Combination = {}
            x = WittElement(2, {symbol: 1})
            for letter, c in self._in_letters(x).items():
                _add_into(out, self.left_multiply(letter, label), c)
            return out
        if grade == 1:
            return dict(self.upper_act(symbol, label))
        return {}

    def act(self, x: WittElement, v: Combination) -> Combination:
        """x . v for x in g_{>=0} and v a combination of PBW monomials."""
        if x.n != 2:
            raise ArityError("M(phi) is defined for n = 2")
        out: Combination = {}
        for symbol, c in x.items():
            for m, d in v.items():
                _add_into(out, self.act_symbol(symbol, m), c * d)
        return out


class TruncatedWhittaker:
    """M(phi) with its PBW basis cut at monomial degree D."""

    def __init__(self, phi: WhittakerCharacter, degree: int):
        if degree < 1:
            raise RangeError("the Whittaker truncation needs D >= 1")
        self.phi = phi
        self.degree = degree
        self.source = WhittakerSource(phi)
        self.basis = monomials_up_to(degree)

    def slice_dim(self, d: int) -> int:
        return sum(1 for m in self.basis if monomial_degree(m) <= d)

    def act(self, x: WittElement, v: Combination) -> Combination:
        return self.source.act(x, v)

    def matrices(self) -> Dict[str, List[List[Fraction]]]:
        """Matrix of each named element from degree <= D into degree <= D + 1."""
        rows = monomials_up_to(self.degree + 1)
        index = {m: r for r, m in enumerate(rows)}
        out = {}
        for name, x in w2_named().items():
            mat = [[Fraction(0)] * len(self.basis) for _ in rows]
            for col, m in enumerate(self.basis):
                for target, c in self.act(x, {m: Fraction(1)}).items():
                    mat[index[target]][col] = c
            out[name] = mat
        return out


def make_whittaker(phi: WhittakerCharacter, degree: int = 2) -> TruncatedWhittaker:
    return TruncatedWhittaker(phi, degree)


def induce_whittaker(phi: WhittakerCharacter) -> InducedModule:
    """Ind_{g>=0}^g M(phi), the level-2 smooth W_2^+-module."""
    return InducedModule(WhittakerSource(phi), family="whittaker")
