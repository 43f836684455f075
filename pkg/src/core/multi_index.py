"""
Multi-indices alpha in Z_+^n: exponents of monomials t^alpha, partials
d^alpha and PBW basis vectors.

Python tuples already compare lexicographically, which is exactly the
total order used for leading terms.
"""

from math import comb, factorial, prod
from typing import Iterable, Iterator, Optional

from src.core.scalars import Scalar
from src.utils.errors import ArityError


class MultiIndex(tuple):
    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        values = tuple(int(a) for a in exponents)
        if any(a < 0 for a in values):
            raise ValueError(f"negative exponent in {values}")
        return super().__new__(cls, values)

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "MultiIndex":
        """epsilon_i, with i counted from 0."""
        return cls(1 if j == i else 0 for j in range(n))

    @property
    def n(self) -> int:
        return len(self)

    def size(self) -> int:
        return sum(self)

    def __add__(self, other):
        return mi_add(self, other)

    def __sub__(self, other):
        return mi_sub(self, other)

    def le(self, other: "MultiIndex") -> bool:
        """Componentwise comparison beta <= alpha."""
        _check_arity(self, other)
        return all(a <= b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return "(" + ",".join(str(a) for a in self) + ")"

    __str__ = __repr__


def _check_arity(alpha, beta) -> None:
    if len(alpha) != len(beta):
        raise ArityError(f"arity mismatch: {len(alpha)} vs {len(beta)}")


def mi_add(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    _check_arity(alpha, beta)
    return MultiIndex(a + b for a, b in zip(alpha, beta))


def mi_sub(alpha: MultiIndex, beta: MultiIndex) -> Optional[MultiIndex]:
    """alpha - beta, or None when some entry would be negative."""
    _check_arity(alpha, beta)
    diff = tuple(a - b for a, b in zip(alpha, beta))
    if any(d < 0 for d in diff):
        return None
    return MultiIndex(diff)


def mi_binomial(alpha: MultiIndex, beta: MultiIndex) -> Scalar:
    _check_arity(alpha, beta)
    return Scalar(prod(comb(a, b) for a, b in zip(alpha, beta)))


def mi_factorial(alpha: MultiIndex) -> Scalar:
    return Scalar(prod(factorial(a) for a in alpha))


def lex_compare(alpha: MultiIndex, beta: MultiIndex) -> int:
    """1 if alpha > beta, 0 if equal, -1 if alpha < beta (first differing coordinate decides)."""
    _check_arity(alpha, beta)
    for a, b in zip(alpha, beta):
        if a != b:
            return 1 if a > b else -1
    return 0


def indices_of_size(n: int, m: int) -> Iterator[MultiIndex]:
    """All alpha in Z_+^n with |alpha| = m, in descending lexicographic order."""
    if m < 0:
        return
    if n == 0:
        if m == 0:
            yield MultiIndex()
        return
    if n == 1:
        yield MultiIndex((m,))
        return
    for first in range(m, -1, -1):
        for rest in indices_of_size(n - 1, m - first):
            yield MultiIndex((first,) + tuple(rest))


def indices_up_to(n: int, bound: int) -> Iterator[MultiIndex]:
    """All alpha with |alpha| <= bound, grouped by size."""
    for m in range(bound + 1):
        yield from indices_of_size(n, m)
