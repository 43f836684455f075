"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from src.algebra.polynomial import Polynomial
from src.algebra.weyl import P0Vector, WeylElement
from src.algebra.witt import WittElement

coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)


def multi_indices(n: int, max_exp: int = 3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def witt_elements(n: int, max_exp: int = 3, max_terms: int = 3):
    symbols = st.tuples(multi_indices(n, max_exp), st.integers(0, n - 1))
    return st.dictionaries(symbols, coefficients, max_size=max_terms).map(lambda d: WittElement(n, d))


def weyl_elements(n: int, max_exp: int = 2, max_terms: int = 3):
    keys = st.tuples(multi_indices(n, max_exp), multi_indices(n, max_exp))
    return st.dictionaries(keys, coefficients, max_size=max_terms).map(lambda d: WeylElement(n, d))


def p0_vectors(n: int, max_exp: int = 3, max_terms: int = 3):
    return st.dictionaries(multi_indices(n, max_exp), coefficients, max_size=max_terms).map(lambda d: P0Vector(n, d))


def polynomials(n: int, max_exp: int = 4, max_terms: int = 4):
    return st.dictionaries(multi_indices(n, max_exp), coefficients, max_size=max_terms).map(lambda d: Polynomial(n, d))


def module_vectors(module, max_exp: int = 2, max_terms: int = 3, source_degree: int = 0):
    labels = module.labels(source_degree)
    keys = st.tuples(multi_indices(module.n, max_exp), st.sampled_from(labels))
    return st.dictionaries(keys, coefficients, max_size=max_terms).map(module.vector)


def fractions_small():
    return st.fractions(min_value=-4, max_value=4, max_denominator=4)


__all__ = [
    "Fraction",
    "coefficients",
    "multi_indices",
    "witt_elements",
    "weyl_elements",
    "p0_vectors",
    "polynomials",
    "module_vectors",
    "fractions_small",
]
