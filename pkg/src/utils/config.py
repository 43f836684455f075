"""
Runtime configuration.

Precedence: explicit overrides (CLI flags, HTTP query) > environment
variables > ``.env`` file > defaults below.
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

DEFAULT_SEED = 20240917

# name in Settings -> environment variable
ENV_VARS = {
    "seed": "WITT_SMOOTH_SEED",
    "degree": "WITT_SMOOTH_DEGREE",
    "grade_cap": "WITT_SMOOTH_GRADE_CAP",
    "source_degree": "WITT_SMOOTH_SOURCE_DEGREE",
    "log_level": "WITT_SMOOTH_LOG_LEVEL",
    "log_file": "WITT_SMOOTH_LOG_FILE",
    "mlflow_uri": "MLFLOW_TRACKING_URI",
}


class Settings(BaseModel):
    seed: int = DEFAULT_SEED
    degree: int = Field(default=4, ge=0)
    grade_cap: Optional[int] = Field(default=None, ge=-1)
    source_degree: int = Field(default=2, ge=0)
    log_level: str = "INFO"
    log_file: Optional[str] = None
    mlflow_uri: Optional[str] = None
    experiment: str = "witt-smooth-suites"


def load_settings(**overrides) -> Settings:
    """Build Settings from the environment, then apply non-None overrides."""
    load_dotenv(override=False)
    values = {}
    for name, var in ENV_VARS.items():
        raw = os.environ.get(var)
        if raw not in (None, ""):
            values[name] = raw
    values.update({k: v for k, v in overrides.items() if v is not None})
    return Settings(**values)
