"""
Finite-dimensional gl_n-modules given by the matrices of the units E_ij.

Matrices are numpy object arrays of Fractions with shape (n, n, dim, dim);
``action[i, j]`` is the matrix of E_ij (indices counted from 0). Under the
isomorphism g_0 ~ gl_n the element t_i d_j goes to E_ij.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.witt import WittElement, basis_of_grade, bracket, coordinates, symbol_grade
from src.analysis.linalg import nullspace
from src.utils.errors import ArityError, ModuleRelationError, RangeError

logger = logging.getLogger(__name__)


def zeros(dim: int) -> np.ndarray:
    return np.full((dim, dim), Fraction(0), dtype=object)


def identity(dim: int) -> np.ndarray:
    out = zeros(dim)
    for k in range(dim):
        out[k, k] = Fraction(1)
    return out


def as_fraction_array(values) -> np.ndarray:
    arr = np.array(values, dtype=object)
    return np.vectorize(Fraction, otypes=[object])(arr) if arr.size else arr


@dataclass(frozen=True)
class RelationViolation:
    """[E_ij, E_kl] differs from delta_jk E_il - delta_li E_kj (indices from 0)."""

    i: int
    j: int
    k: int
    l: int

    def to_dict(self) -> dict:
        return {"violation": [self.i + 1, self.j + 1, self.k + 1, self.l + 1]}


@dataclass(frozen=True)
class RelationCertificate:
    n: int
    dim: int
    checked: int

    def to_dict(self) -> dict:
        return {"certificate": True, "n": self.n, "dim": self.dim, "commutators_checked": self.checked}


class GlnModule:
    """A gl_n representation; relations are verified unless ``validate=False``."""

    def __init__(self, n: int, action, basis_labels: Optional[Sequence[str]] = None, validate: bool = True):
        action = as_fraction_array(action)
        if action.ndim != 4 or action.shape[:2] != (n, n) or action.shape[2] != action.shape[3]:
            raise ArityError(f"expected shape (n, n, dim, dim) with n = {n}, got {action.shape}")
        self.n = n
        self.dim = action.shape[2]
        if self.dim < 1:
            raise RangeError("a gl_n-module needs positive dimension")
        self.action = action
        self.action.setflags(write=False)
        self.basis_labels = list(basis_labels) if basis_labels else [f"v{k + 1}" for k in range(self.dim)]
        if validate:
            result = check_gln_relations(self)
            if isinstance(result, RelationViolation):
                raise ModuleRelationError(f"gl_{n} relation fails at {result.to_dict()['violation']}")

    def E(self, i: int, j: int) -> np.ndarray:
        return self.action[i, j]

    def apply(self, i: int, j: int, v: Sequence[Fraction]) -> List[Fraction]:
        return list(self.action[i, j].dot(np.array(v, dtype=object)))

    def identity_action(self) -> np.ndarray:
        """Matrix of I = sum_i E_ii."""
        return sum((self.action[i, i] for i in range(self.n)), zeros(self.dim))

    def matrix_of(self, x: WittElement) -> np.ndarray:
        """Matrix of x in g_0 acting through t_i d_j -> E_ij."""
        if x.n != self.n:
            raise ArityError(f"arity mismatch: {x.n} vs {self.n}")
        out = zeros(self.dim)
        for (alpha, j), c in x.items():
            if symbol_grade((alpha, j)) != 0:
                raise ValueError(f"{x} is not in g_0")
            i = alpha.index(1)
            out = out + self.action[i, j] * c
        return out

    def __repr__(self) -> str:
        return f"GlnModule(n={self.n}, dim={self.dim})"


def check_gln_relations(M: GlnModule):
    """All n^4 commutators; the first violating (i, j, k, l) or a certificate."""
    n, A = M.n, M.action
    checked = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = A[i, j].dot(A[k, l]) - A[k, l].dot(A[i, j])
                    rhs = zeros(M.dim)
                    if j == k:
                        rhs = rhs + A[i, l]
                    if l == i:
                        rhs = rhs - A[k, j]
                    checked += 1
                    if not np.array_equal(lhs, rhs):
                        return RelationViolation(i, j, k, l)
    return RelationCertificate(n, M.dim, checked)


def wedge_sign_sort(indices: List[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort by bubble passes; sign is (-1)^(number of swaps), 0 on a repeated index."""
    if len(set(indices)) != len(indices):
        return 0, ()
    work = list(indices)
    swaps = 0
    for a in range(len(work)):
        for b in range(len(work) - 1 - a):
            if work[b] > work[b + 1]:
                work[b], work[b + 1] = work[b + 1], work[b]
                swaps += 1
    return (-1 if swaps % 2 else 1), tuple(work)


def wedge_basis(n: int, k: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(n), k))


def exterior_power(n: int, k: int) -> GlnModule:
    """Lambda^k(C^n) on e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik, lex-sorted."""
    if not 0 <= k <= n:
        raise RangeError(f"exterior power k = {k} outside 0..{n}")
    basis = wedge_basis(n, k)
    index = {b: pos for pos, b in enumerate(basis)}
    dim = len(basis)
    action = np.full((n, n, dim, dim), Fraction(0), dtype=object)
    for i in range(n):
        for j in range(n):
            for col, wedge in enumerate(basis):
                # E_ij e_m = delta_jm e_i, applied factor by factor
                for pos, m in enumerate(wedge):
                    if m != j:
                        continue
                    replaced = list(wedge)
                    replaced[pos] = i
                    sign, target = wedge_sign_sort(replaced)
                    if sign:
                        action[i, j, index[target], col] += sign
    labels = ["^".join(f"e{m + 1}" for m in b) or "1" for b in basis]
    return GlnModule(n, action, labels)


def one_dim_module(n: int, b) -> GlnModule:
    """V(0, b): sl_n acts by zero and I by b, so E_ii acts by b / n."""
    b = Fraction(b)
    action = np.full((n, n, 1, 1), Fraction(0), dtype=object)
    for i in range(n):
        action[i, i, 0, 0] = b / n
    return GlnModule(n, action, ["v"])


def tau_twist(M: GlnModule, shift=1) -> GlnModule:
    """M^tau: E_ii acts by E_ii + shift; sl_n is untouched. shift = -1 undoes it."""
    action = np.array(M.action, dtype=object)
    for i in range(M.n):
        action[i, i] = action[i, i] + identity(M.dim) * Fraction(shift)
    return GlnModule(M.n, action, M.basis_labels, validate=False)


def joint_eigenvectors(M: GlnModule, eigenvalues: Sequence) -> List[List[Fraction]]:
    """Basis of the intersection over i of ker(E_ii - lambda_i)."""
    if len(eigenvalues) != M.n:
        raise ArityError(f"{len(eigenvalues)} eigenvalues for gl_{M.n}")
    rows = []
    for i, lam in enumerate(eigenvalues):
        shifted = M.action[i, i] - identity(M.dim) * Fraction(lam)
        rows.extend(list(r) for r in shifted)
    return nullspace(rows, M.dim)


def adjoint_module(n: int, k: int) -> GlnModule:
    """g_k as a g_0-module: E_ij acts by ad(t_i d_j) on the canonical basis of g_k."""
    if k < -1:
        raise RangeError(f"g_{k} is zero")
    basis = basis_of_grade(n, k)
    dim = len(basis)
    action = np.full((n, n, dim, dim), Fraction(0), dtype=object)
    for i in range(n):
        for j in range(n):
            x = WittElement.t_d(n, i, j)
            for col, b in enumerate(basis):
                for row, c in enumerate(coordinates(bracket(x, b), basis)):
                    action[i, j, row, col] = c
    labels = [repr(b) for b in basis]
    return GlnModule(n, action, labels)


def module_from_matrices(n: int, matrices, validate: bool = True) -> GlnModule:
    """Build from the nested list layout ``matrices[i][j] = E_ij`` used by the JSON codec."""
    return GlnModule(n, np.array(matrices, dtype=object), validate=validate)
