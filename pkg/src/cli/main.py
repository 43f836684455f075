"""
Command-line front end.

Every subcommand reads one JSON document (a file path, or stdin when the path
is omitted or "-"), runs the matching eval operation and writes the JSON
result to stdout. ``suite`` runs a named verification suite instead.

Exit codes: 0 pass, 1 check failure or domain error, 2 usage error.
"""

import argparse
import logging
from typing import Any, Dict, List, Optional

from src.data.load_data import dump_data, load_data
from src.serving.evaluate import evaluate, handle_request
from src.utils.config import load_settings
from src.utils.errors import UsageError, WittSmoothError
from src.utils.utils import setup_logger
from src.verification.suites import SUITES, run_suite
from src.verification.tracking import track_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# subcommand -> (eval operation, names of a two-element list input)
SUBCOMMANDS = {
    "bracket": ("bracket", ("x", "y")),
    "weyl-mul": ("weyl_multiply", ("a", "b")),
    "gln-check": ("check_gln_relations", None),
    "act": ("act", None),
    "induce": ("induce", None),
    "quotient-dims": ("quotient_graded_dims", None),
    "height": ("height", None),
    "annihilator": ("annihilator_space", None),
    "cyclicity": ("cyclicity_certificate", None),
    "orbit": ("local_finiteness_orbit", None),
    "aphi-det": ("aphi_det", None),
    "intertwine": ("intertwiner_check", None),
}

WINDOWED = {"height", "annihilator", "cyclicity", "orbit", "quotient-dims", "intertwine", "induce"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="witt-smooth", description="Exact computations with smooth W_n^+-modules")
    parser.add_argument("--n", type=int, default=None, help="arity, when the input does not state it")
    parser.add_argument("--degree", type=int, default=None, help="window degree bound D")
    parser.add_argument("--grade-cap", type=int, default=None, help="acting grade cap K (default D + level)")
    parser.add_argument("--seed", type=int, default=None, help="suite seed (env WITT_SMOOTH_SEED)")
    parser.add_argument("--json", action="store_true", help="machine-readable JSON for suite reports")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--log-file", default=None)
    parser.add_argument("--output", "-o", default=None, help="write the result here instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-", help="JSON input file, '-' for stdin")
    p = sub.add_parser("eval", help='run {"op": ..., "args": {...}}')
    p.add_argument("input", nargs="?", default="-")
    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("name", help=f"one of {', '.join(sorted(SUITES))}, or 'all'")
    p.add_argument("--track", action="store_true", help="log the report to MLflow")
    return parser


def _arguments(command: str, payload: Any, cli: argparse.Namespace) -> Dict[str, Any]:
    _, pair = SUBCOMMANDS[command]
    if pair is not None and isinstance(payload, list):
        if len(payload) != 2:
            raise UsageError(f"{command} reads exactly two objects")
        payload = dict(zip(pair, payload))
    if command == "gln-check":
        payload = {"module": payload}
    elif command == "aphi-det" and isinstance(payload, dict) and "phi" not in payload:
        payload = {"phi": payload}
    if not isinstance(payload, dict):
        raise UsageError(f"{command} expects a JSON object")
    args = dict(payload)
    if cli.n is not None:
        args.setdefault("n", cli.n)
    if command in WINDOWED:
        if cli.degree is not None:
            args.setdefault("degree", cli.degree)
        if cli.grade_cap is not None:
            args.setdefault("grade_cap", cli.grade_cap)
    return args


def _failed(result: Any) -> bool:
    """Negative certificates map to exit code 1."""
    if not isinstance(result, dict):
        return False
    return (
        "violation" in result
        or result.get("certificate") is False
        or result.get("within_bound") is False
    )


def _run_suites(cli: argparse.Namespace, settings) -> int:
    names = sorted(SUITES) if cli.name == "all" else [cli.name]
    reports = [run_suite(name, settings.seed, cli.degree, cli.grade_cap) for name in names]
    if cli.track:
        for report in reports:
            track_report(report, settings)
    if cli.json:
        dump_data([r.to_dict() for r in reports] if cli.name == "all" else reports[0].to_dict(), cli.output)
    else:
        print("\n\n".join(r.render() for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    cli = parser.parse_args(argv)
    settings = load_settings(
        seed=cli.seed,
        degree=cli.degree,
        grade_cap=cli.grade_cap,
        log_level=cli.log_level,
        log_file=cli.log_file,
    )
    logger = setup_logger("src", settings.log_file, settings.log_level)
    logging.getLogger("src").propagate = False

    try:
        if cli.command == "suite":
            return _run_suites(cli, settings)
        payload = load_data(cli.input)
        if cli.command == "eval":
            response = handle_request(payload, settings)
            dump_data(response, cli.output)
            if "error" in response:
                return EXIT_USAGE if response["error"]["type"] == UsageError.code else EXIT_FAIL
            return EXIT_FAIL if _failed(response["result"]) else EXIT_OK
        op, _ = SUBCOMMANDS[cli.command]
        result = evaluate(op, _arguments(cli.command, payload, cli), settings)
        dump_data(result, cli.output)
        return EXIT_FAIL if _failed(result) else EXIT_OK
    except UsageError as err:
        logger.error("%s", err)
        dump_data({"error": err.to_dict()}, cli.output)
        return EXIT_USAGE
    except FileNotFoundError as err:
        logger.error("%s", err)
        return EXIT_USAGE
    except WittSmoothError as err:
        logger.error("%s", err)
        dump_data({"error": err.to_dict()}, cli.output)
        return EXIT_FAIL
    except (ValueError, TypeError, LookupError) as err:
        logger.error("%s", err)
        dump_data({"error": {"type": type(err).__name__, "message": str(err)}}, cli.output)
        return EXIT_FAIL
