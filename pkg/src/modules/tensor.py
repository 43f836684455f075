"""
Tensor modules F(P_0, M) = P_0 (x) M for a finite-dimensional gl_n-module M:

    (t^a d_j) o (g (x) v) = ((t^a d_j) g) (x) v + sum_i (d_i(t^a) g) (x) E_ij v

where t^a d_j acts on g in P_0 as an element of the Weyl algebra.
"""

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Optional

import numpy as np

from src.algebra.weyl import t_power_on_dbar
from src.algebra.witt import Symbol
from src.core.multi_index import MultiIndex
from src.modules.base import SmoothModule
from src.modules.vectors import Key
from src.representations.gln import GlnModule, identity
from src.utils.errors import ArityError

logger = logging.getLogger(__name__)


class TensorModule(SmoothModule):
    family = "tensor"
    level = 1

    def __init__(self, M: GlnModule):
        super().__init__(M.n)
        self.M = M
        scalar = M.identity_action()
        self._central = scalar[0, 0] if np.array_equal(scalar, identity(M.dim) * scalar[0, 0]) else None

    def labels(self, source_degree: int = 0) -> List[Hashable]:
        return list(range(self.M.dim))

    def act_symbol(self, symbol: Symbol, key: Key) -> Dict[Key, Fraction]:
        alpha, j = symbol
        gamma, label = key
        out: Dict[Key, Fraction] = {}

        raised = MultiIndex(g + (1 if pos == j else 0) for pos, g in enumerate(gamma))
        hit = t_power_on_dbar(alpha, raised)
        if hit is not None:
            coef, rest = hit
            out[(rest, label)] = coef

        for i, a_i in enumerate(alpha):
            if not a_i:
                continue
            lowered = MultiIndex(a - (1 if pos == i else 0) for pos, a in enumerate(alpha))
            hit = t_power_on_dbar(lowered, gamma)
            if hit is None:
                continue
            coef, rest = hit
            column = self.M.action[i, j][:, label]
            for row, e in enumerate(column):
                if e:
                    target = (rest, row)
                    out[target] = out.get(target, 0) + a_i * coef * e
        return out

    def weight_of(self, key: Key) -> Optional[Fraction]:
        """omega_n acts on dbar^gamma (x) v by c - n - |gamma| when I acts by the scalar c."""
        if self._central is None:
            return None
        return Fraction(self._central) - self.n - key[0].size()

    def descriptor(self) -> dict:
        return {"family": self.family, "n": self.n, "dim": self.M.dim}

    def __repr__(self) -> str:
        return f"TensorModule(n={self.n}, dim={self.M.dim})"


def make_tensor(M: GlnModule) -> TensorModule:
    if M.n < 1:
        raise ArityError("tensor modules need n >= 1")
    return TensorModule(M)
