"""
Exact linear algebra over Q.

Dense kernels, ranks and determinants go through sympy's DomainMatrix over
QQ. Closure computations instead grow a sparse echelon form one vector at a
time, keyed by arbitrary hashable basis labels.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Row = Sequence[Fraction]
SparseRow = Dict[Hashable, Fraction]


def _to_qq(value) -> object:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows: Sequence[Row], ncols: Optional[int] = None) -> DomainMatrix:
    ncols = len(rows[0]) if rows else (ncols or 0)
    data = [[_to_qq(x) for x in row] for row in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def from_domain_matrix(M: DomainMatrix) -> List[List[Fraction]]:
    return [[_from_qq(x) for x in row] for row in M.to_list()]


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : A x = 0} for A given by its rows, each basis vector of length ncols."""
    if ncols == 0:
        return []
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    kernel = to_domain_matrix(rows, ncols).to_field().nullspace()
    return from_domain_matrix(kernel)


def rank(rows: Sequence[Row]) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    return to_domain_matrix(rows).to_field().rank()


def determinant(rows: Sequence[Row]) -> Fraction:
    if not rows:
        return Fraction(1)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("determinant of a non-square matrix")
    return _from_qq(to_domain_matrix(rows).to_field().det())


def solve_in_span(columns: Sequence[Row], target: Row) -> Optional[List[Fraction]]:
    """Coefficients c with sum c_j columns[j] = target, or None if target is outside the span."""
    if not columns:
        return [] if not any(target) else None
    m = len(target)
    augmented = [[col[r] for col in columns] + [-target[r]] for r in range(m)]
    for vec in nullspace(augmented, len(columns) + 1):
        if vec[-1]:
            return [x / vec[-1] for x in vec[:-1]]
    return None


def span_contains(basis: Sequence[Row], vector: Row) -> bool:
    return solve_in_span(basis, vector) is not None


class SparseEchelon:
    """
    Incrementally built echelon basis of a subspace, rows stored sparsely.

    Each stored row has a distinct pivot, the largest key of its support
    under ``order``; every other stored row has coefficient zero on that
    pivot. ``reduce`` therefore clears the largest pivot present until none
    are left, which terminates because pivots only decrease.
    """

    def __init__(self, order: Callable[[Hashable], Tuple] = lambda key: key):
        self.order = order
        self.rows: Dict[Hashable, SparseRow] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def pivot_of(self, row: SparseRow) -> Hashable:
        return max(row, key=self.order)

    def reduce(self, row: SparseRow) -> SparseRow:
        row = {k: Fraction(c) for k, c in row.items() if c}
        while True:
            hits = [k for k in row if k in self.rows]
            if not hits:
                return row
            key = max(hits, key=self.order)
            factor = row[key]
            for k, c in self.rows[key].items():
                value = row.get(k, 0) - factor * c
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)

    def add(self, row: SparseRow) -> Optional[SparseRow]:
        """Insert row; return its reduced, normalised form when it enlarged the span, else None."""
        residue = self.reduce(row)
        if not residue:
            return None
        pivot = self.pivot_of(residue)
        scale = residue[pivot]
        residue = {k: c / scale for k, c in residue.items()}
        for key, other in self.rows.items():
            c = other.get(pivot)
            if c:
                for k, v in residue.items():
                    value = other.get(k, 0) - c * v
                    if value:
                        other[k] = value
                    else:
                        other.pop(k, None)
        self.rows[pivot] = residue
        return residue

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def pivots(self) -> List[Hashable]:
        return sorted(self.rows, key=self.order)

    def basis(self) -> List[SparseRow]:
        return [dict(self.rows[p]) for p in self.pivots()]

    def extend(self, rows: Iterable[SparseRow]) -> int:
        """Add several rows; return how many enlarged the span."""
        return sum(1 for r in rows if self.add(r) is not None)
