from src.core.scalars import Scalar, to_scalar, format_scalar
from src.core.multi_index import (
    MultiIndex,
    mi_add,
    mi_sub,
    mi_binomial,
    mi_factorial,
    lex_compare,
)

__all__ = [
    "Scalar",
    "to_scalar",
    "format_scalar",
    "MultiIndex",
    "mi_add",
    "mi_sub",
    "mi_binomial",
    "mi_factorial",
    "lex_compare",
]
