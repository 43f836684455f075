"""Seeded random samplers for the verification suites."""

import random
from fractions import Fraction
from typing import Hashable, Sequence

from src.algebra.weyl import P0Vector, WeylElement
from src.algebra.witt import WittElement, basis_of_grade
from src.core.multi_index import MultiIndex
from src.modules.base import SmoothModule
from src.modules.vectors import ModuleVector

SMALL_INTS = (-3, -2, -1, 1, 2, 3)


def random_scalar(rng: random.Random) -> Fraction:
    """A nonzero rational, an integer three times out of four."""
    p = rng.choice(SMALL_INTS)
    if rng.random() < 0.75:
        return Fraction(p)
    return Fraction(p, rng.choice((2, 3, 5)))


def random_index(rng: random.Random, n: int, max_size: int) -> MultiIndex:
    exps = [0] * n
    for _ in range(rng.randint(0, max_size)):
        exps[rng.randrange(n)] += 1
    return MultiIndex(exps)


def random_witt(rng: random.Random, n: int, max_size: int, terms: int = 2) -> WittElement:
    out = WittElement.zero(n)
    for _ in range(rng.randint(1, terms)):
        out = out + WittElement.symbol(random_index(rng, n, max_size), rng.randrange(n), random_scalar(rng))
    return out


def random_homogeneous(rng: random.Random, n: int, k: int, terms: int = 2) -> WittElement:
    basis = basis_of_grade(n, k)
    out = WittElement.zero(n)
    for _ in range(rng.randint(1, terms)):
        out = out + rng.choice(basis) * random_scalar(rng)
    return out


def random_weyl(rng: random.Random, n: int, max_degree: int, terms: int = 2) -> WeylElement:
    out = WeylElement(n)
    for _ in range(rng.randint(1, terms)):
        beta = random_index(rng, n, max_degree)
        gamma = random_index(rng, n, max_degree - beta.size())
        out = out + WeylElement.monomial(beta, gamma, random_scalar(rng))
    return out


def random_p0(rng: random.Random, n: int, max_degree: int, terms: int = 3) -> P0Vector:
    """A nonzero vector of P_0."""
    out = P0Vector(n)
    while out.is_zero():
        for _ in range(rng.randint(1, terms)):
            out = out + P0Vector.monomial(random_index(rng, n, max_degree), random_scalar(rng))
    return out


def random_vector(
    rng: random.Random,
    module: SmoothModule,
    max_degree: int,
    labels: Sequence[Hashable],
    terms: int = 3,
) -> ModuleVector:
    out = module.vector()
    for _ in range(rng.randint(1, terms)):
        out = out + module.basis_vector(random_index(rng, module.n, max_degree), rng.choice(list(labels)), random_scalar(rng))
    return out
