"""
HTTP SURFACE
============

FastAPI wrapper around the eval dispatcher and the verification suites.

- ``GET /``              health check
- ``POST /eval``         ``{"op": ..., "args": {...}}`` -> ``{"result": ...}`` or ``{"error": {...}}``
- ``POST /suite/{name}`` runs one suite, optional ``seed`` / ``degree`` / ``grade_cap``

Serve with ``uvicorn src.app.main:app``.
"""

from typing import Optional

from fastapi import FastAPI

from src.serving.evaluate import handle_request
from src.utils.config import load_settings
from src.utils.errors import WittSmoothError
from src.utils.utils import setup_logger
from src.utils.validate_data import EvalRequest, SuiteRequest
from src.verification.suites import run_suite

settings = load_settings()
logger = setup_logger("src.app", settings.log_file, settings.log_level)

app = FastAPI(
    title="Witt Smooth Modules API",
    description="Exact computations with W_n^+ and its smooth modules",
    version="1.0.0",
)


# === HEALTH CHECK ENDPOINT ===
@app.get("/")
def root():
    return {"status": "ok"}


# === EVAL ENDPOINT ===
@app.post("/eval")
def post_eval(request: EvalRequest):
    return handle_request(request.model_dump(), settings)


# === SUITE ENDPOINT ===
@app.post("/suite/{name}")
def post_suite(name: str, request: Optional[SuiteRequest] = None):
    request = request or SuiteRequest()
    try:
        report = run_suite(
            name,
            request.seed if request.seed is not None else settings.seed,
            request.degree,
            request.grade_cap,
        )
    except WittSmoothError as e:
        return {"error": e.to_dict()}
    return report.to_dict()
