"""
Error hierarchy shared by every layer of the toolkit.

The eval dispatcher and the HTTP app report errors as
``{"error": {"type": err.code, "message": str(err)}}``; the CLI maps
``UsageError`` to exit code 2 and every other error to exit code 1.
"""


class WittSmoothError(Exception):
    """Base class for all domain errors."""

    code = "WittSmoothError"

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.code = cls.__name__

    def to_dict(self) -> dict:
        return {"type": self.code, "message": str(self)}


class ArityError(WittSmoothError, ValueError):
    """Operands built over a different number of variables."""


class RangeError(WittSmoothError, ValueError):
    """An integer parameter lies outside its admissible range."""


class ZeroVectorError(WittSmoothError, ValueError):
    """An operation that needs a nonzero vector received zero."""


class FamilyError(WittSmoothError, TypeError):
    """A vector was handed to a module of another family."""


class CapExceeded(WittSmoothError, ArithmeticError):
    """An action result left the degree cap of the current truncation."""

    def __init__(self, height: int, cap: int):
        super().__init__(f"result height {height} exceeds cap {cap}")
        self.height = height
        self.cap = cap


class WindowError(WittSmoothError, ValueError):
    """A truncation window is too small for the requested certificate."""


class HypothesisError(WittSmoothError, ValueError):
    """A character violates the hypothesis of the determinant criterion."""


class ModuleRelationError(WittSmoothError, ValueError):
    """Matrix or source data violating the defining relations of its module."""


class UsageError(WittSmoothError, ValueError):
    """Malformed request, unknown operation or unknown suite."""
