"""
Request schemas for the eval dispatcher and the HTTP surface.

``validate_request`` mirrors a data-quality gate: it returns
``(success, failed_checks)`` instead of raising, so callers choose whether a
malformed request is fatal.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from src.utils.errors import UsageError


class EvalRequest(BaseModel):
    """``{"op": name, "args": {...}}``"""

    op: str = Field(min_length=1)
    args: Dict[str, Any] = Field(default_factory=dict)


class SuiteRequest(BaseModel):
    seed: Optional[int] = None
    degree: Optional[int] = Field(default=None, ge=0)
    grade_cap: Optional[int] = Field(default=None, ge=-1)


def _describe(err: ValidationError) -> List[str]:
    return [f"{'.'.join(str(p) for p in e['loc']) or '<root>'}: {e['msg']}" for e in err.errors()]


def validate_request(payload: Any) -> Tuple[bool, List[str]]:
    """
    Checks a raw JSON payload against ``EvalRequest``.

    Args:
        payload: decoded JSON value.

    Returns:
        (bool, list): success flag and the failed checks.
    """
    try:
        EvalRequest.model_validate(payload)
    except ValidationError as err:
        return False, _describe(err)
    return True, []


def parse_request(payload: Any) -> EvalRequest:
    ok, failures = validate_request(payload)
    if not ok:
        raise UsageError(f"malformed request: {'; '.join(failures)}")
    return EvalRequest.model_validate(payload)
