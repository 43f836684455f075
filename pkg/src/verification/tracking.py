"""
MLflow run tracking for suite reports.

One run per suite: params (suite, seed, window), metrics (checks passed and
failed, wall time) and the JSON report as the artifact ``suite_report.json``.
Tracking problems are logged and swallowed; they never change a suite verdict.
"""

import logging
import os

import mlflow

from src.utils.config import Settings
from src.verification.report import SuiteReport

logger = logging.getLogger(__name__)


def tracking_uri(settings: Settings) -> str:
    return settings.mlflow_uri or f"file://{os.path.abspath('mlruns')}"


def track_report(report: SuiteReport, settings: Settings) -> bool:
    """Logs one report; returns whether MLflow accepted it."""
    try:
        mlflow.set_tracking_uri(tracking_uri(settings))
        mlflow.set_experiment(settings.experiment)
        with mlflow.start_run(run_name=f"suite-{report.suite}"):
            mlflow.log_param("suite", report.suite)
            mlflow.log_param("seed", report.seed)
            for key, value in report.window.items():
                mlflow.log_param(f"window_{key}", value)
            mlflow.log_metric("checks_passed", len(report.checks) - len(report.failed))
            mlflow.log_metric("checks_failed", len(report.failed))
            if report.wall_time is not None:
                mlflow.log_metric("wall_time", report.wall_time)
            mlflow.log_dict(report.to_dict(), "suite_report.json")
    except Exception as exc:
        logger.warning("MLflow tracking failed for suite %s: %s", report.suite, exc)
        return False
    logger.info("suite %s logged to %s", report.suite, tracking_uri(settings))
    return True
