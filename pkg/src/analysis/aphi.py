"""
The determinant criterion for M(phi), n = 2.

With phi(q0) = phi(q1) = 0, a degree-one vector (a1 e + a2 i + a3 h + a4 f) w_phi
is a phi-eigenvector of g_{>=1} exactly when A_phi (a1, a2, a3, a4)^T = 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from src.algebra.witt import G0_NAMES, basis_of_grade, w2_named
from src.analysis.linalg import determinant, nullspace, rank
from src.modules.whittaker import UNIT, WhittakerCharacter, make_whittaker
from src.utils.errors import HypothesisError

logger = logging.getLogger(__name__)


def _require_hypothesis(phi: WhittakerCharacter) -> None:
    if phi.q0 or phi.q1:
        raise HypothesisError(f"the criterion needs phi(q0) = phi(q1) = 0, got {phi.q0}, {phi.q1}")


@dataclass(frozen=True)
class AphiMatrix:
    rows: tuple

    @classmethod
    def build(cls, phi: WhittakerCharacter) -> "AphiMatrix":
        p0, p1, p2, p3 = phi.p_values()
        return cls((
            (Fraction(0), -p0, -3 * p0, -p1),
            (-3 * p0, -p1, -p1, -p2),
            (-4 * p1, -p2, p2, -p3),
            (-3 * p2, -p3, 3 * p3, Fraction(0)),
        ))

    def as_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self.rows]

    def det(self) -> Fraction:
        return determinant(self.as_lists())

    def rank(self) -> int:
        return rank(self.as_lists())

    def kernel(self) -> List[List[Fraction]]:
        return nullspace(self.as_lists(), 4)


def aphi_det(phi: WhittakerCharacter) -> Fraction:
    _require_hypothesis(phi)
    return AphiMatrix.build(phi).det()


def quasi_whittaker_vectors_deg1(phi: WhittakerCharacter, degree: int = 2) -> List[List[Fraction]]:
    """
    Basis of the (a1, .., a4) with x . v = phi(x) v for all x in g_1 and g_2,
    v = (a1 e + a2 i + a3 h + a4 f) w_phi, computed by acting in M(phi).
    """
    _require_hypothesis(phi)
    M = make_whittaker(phi, degree)
    named = w2_named()
    vectors = []
    for name in G0_NAMES:
        vectors.append(M.act(named[name], {UNIT: Fraction(1)}))

    rows = {}
    for grade in (1, 2):
        for x in basis_of_grade(2, grade):
            value = M.source.phi_of(x)
            for col, v in enumerate(vectors):
                image = M.act(x, v)
                for m, c in v.items():
                    image[m] = image.get(m, 0) - value * c
                for m, c in image.items():
                    if c:
                        row = rows.setdefault((x, m), [Fraction(0)] * 4)
                        row[col] += c
    kernel = nullspace(list(rows.values()), 4)
    logger.debug("degree-one quasi-Whittaker vectors for %s: %d", phi.to_dict(), len(kernel))
    return kernel
