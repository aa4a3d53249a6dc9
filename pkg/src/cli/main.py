"""
EHLCP command line
check | solve | analyze | degree | fuzz with JSON or aligned text reports
"""

import argparse
import json
import os
import sys
from typing import Any, Dict, List, Optional, Sequence, Union

from loguru import logger

from analysis import analyze
from config.settings import load_config
from exactmath import det, inverse
from harness import SUITES, ExportManager, run_suite
from matclass import classify
from model import Instance, MatrixTuple, dumps, instance_from_dict, matrix_tuple_from_dict, to_jsonable
from solver import degree, solve_all, solve_newton
from utils import configure_logging, set_thread_cap
from utils.errors import (
    ConfigurationError, DegreeUndefinedError, DimensionError, EhlcpError, InputFormatError,
    InvalidInstanceError, UnknownSuiteError
)
from wprops import column_w_diag_probe, tuple_properties

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

COMMANDS = ["check", "solve", "analyze", "degree", "fuzz"]


def parse_input(path_or_text: str) -> Union[MatrixTuple, Instance]:
    """
    Parse a file path or inline JSON into a MatrixTuple or, when "q" is present, an Instance

    Raises:
        InputFormatError: missing or unreadable file, malformed JSON or schema violation
        DimensionError: inconsistent shapes
        InvalidInstanceError: non-positive d
    """
    if os.path.exists(path_or_text):
        try:
            with open(path_or_text, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise InputFormatError(f"Cannot read input file {path_or_text}: {e}") from e
    elif path_or_text.lstrip()[:1] in ("{", "["):
        text = path_or_text
    else:
        raise InputFormatError(f"No such input file: {path_or_text}")

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"Malformed JSON: {e}") from e

    if isinstance(doc, dict) and "q" in doc:
        return instance_from_dict(doc)
    return matrix_tuple_from_dict(doc)


def _nonneg_int(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ehlcp", description="Extended horizontal LCP toolkit")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="JSON file path or inline JSON")
    parser.add_argument("--format", default=None, choices=["json", "text"])
    parser.add_argument("--seed", type=_nonneg_int, default=None)
    parser.add_argument("--trials", type=_nonneg_int, default=None)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--suite", action="append", default=None, help="Suite id (repeatable); default all")
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--max-iter", type=int, default=None)
    parser.add_argument("--newton", action="store_true", help="Also run the Newton solver (solve)")
    parser.add_argument("--export", default=None, help="Directory for JSON/CSV suite exports (fuzz)")
    parser.add_argument("--config", default=None, help="YAML or JSON configuration override")
    parser.add_argument("--verbose", action="store_true")
    return parser


def _is_nested(value: Any) -> bool:
    if isinstance(value, dict):
        return bool(value)
    if isinstance(value, list):
        return any(isinstance(v, dict) or (isinstance(v, list) and any(isinstance(w, (dict, list)) for w in v))
                   for v in value)
    return False


def render_text(value: Any, indent: int = 0) -> List[str]:
    """Aligned human-readable rendering of a JSON-ready value; scalars, vectors and matrices stay inline"""
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        width = max((len(str(key)) for key in value), default=0)
        for key in sorted(value):
            item = value[key]
            if _is_nested(item):
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}{str(key).ljust(width)} : {json.dumps(item)}")
        return lines
    if _is_nested(value):
        lines = []
        for index, item in enumerate(value):
            lines.append(f"{pad}- [{index}]")
            lines.extend(render_text(item, indent + 1))
        return lines
    return [f"{pad}{json.dumps(value)}"]


def _require_input(args) -> Union[MatrixTuple, Instance]:
    if not args.input:
        raise InputFormatError(f"'{args.command}' needs --input")
    return parse_input(args.input)


def _require_instance(args) -> Instance:
    parsed = _require_input(args)
    if not isinstance(parsed, Instance):
        raise InputFormatError(f"'{args.command}' needs an instance (include \"q\" and \"d\")")
    return parsed


def _cmd_check(args, config) -> Dict[str, Any]:
    parsed = _require_input(args)
    c = parsed.c if isinstance(parsed, Instance) else parsed
    report: Dict[str, Any] = {
        "seed": args.seed,
        "verdicts": {name: v.to_dict()
                     for name, v in tuple_properties(c, config["properties"]["w0_eps_grid"]).items()},
        "diag_probe": column_w_diag_probe(c, config["properties"]["diag_probe_trials"], args.seed).to_dict(),
    }
    if det(c.c0) == 0:
        report["normalized_classes"] = "C0 is singular"
    else:
        c0_inv = inverse(c.c0)
        report["normalized_classes"] = [classify(c0_inv @ ci).to_dict() for ci in c.trailing]
    return report


def _cmd_solve(args, config) -> Dict[str, Any]:
    inst = _require_instance(args)
    report = {"seed": args.seed, "solution_set": solve_all(inst).to_dict()}
    if args.newton:
        result = solve_newton(inst, tol=args.tol, max_iter=args.max_iter, config=config["solver"])
        report["newton"] = result.to_dict()
    return report


def _cmd_analyze(args, config) -> Dict[str, Any]:
    inst = _require_instance(args)
    return {"seed": args.seed, "analysis": analyze(solve_all(inst)).to_dict()}


def _cmd_degree(args, config) -> Dict[str, Any]:
    parsed = _require_input(args)
    c, d = (parsed.c, parsed.d) if isinstance(parsed, Instance) else (parsed, None)
    try:
        result = degree(c, d, rng_seed=args.seed, retry_limit=config["solver"]["degree_retry_limit"],
                        target_denominator=config["solver"]["degree_target_denominator"])
    except DegreeUndefinedError as e:
        return {"seed": args.seed, "degree": "undefined", "reason": e.reason}
    return {"seed": args.seed, "degree": result.to_dict()}


def _cmd_fuzz(args, config) -> Dict[str, Any]:
    suite_ids = args.suite or list(SUITES)
    for suite_id in suite_ids:
        if suite_id not in SUITES:
            raise UnknownSuiteError(f"Unknown suite: {suite_id} (known: {', '.join(SUITES)})")
    harness = config["harness"]
    sizes = None
    if args.n is not None or args.k is not None:
        sizes = [[args.n or 2, args.k or 1]]
    reports = [run_suite(suite_id, trials=args.trials, sizes=sizes, seed=args.seed, settings=harness)
               for suite_id in suite_ids]
    if args.export:
        exporter = ExportManager(args.export)
        exporter.export_to_json(reports)
        exporter.export_to_csv(reports)
    return {"seed": args.seed, "suites": [r.to_dict() for r in reports],
            "failed": any(not r.ok for r in reports)}


HANDLERS = {
    "check": _cmd_check,
    "solve": _cmd_solve,
    "analyze": _cmd_analyze,
    "degree": _cmd_degree,
    "fuzz": _cmd_fuzz,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Command-line arguments (without the program name)

    Returns:
        0 on success, 1 on suite failure or solver error, 2 on input error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else EXIT_OK

    try:
        config = load_config(args.config)
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    configure_logging(config, "DEBUG" if args.verbose else None)
    set_thread_cap(config["parallel"]["threads"])
    if args.seed is None:
        args.seed = config["harness"]["default_seed"]
    output_format = args.format or config["output"]["format"]

    try:
        report = HANDLERS[args.command](args, config)
    except (InputFormatError, DimensionError, InvalidInstanceError, UnknownSuiteError, ValueError) as e:
        logger.error(f"Input error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except EhlcpError as e:
        logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE

    report = {"command": args.command, **to_jsonable(report)}
    if output_format == "json":
        print(dumps(report))
    else:
        print("\n".join(render_text(report)))
    return EXIT_FAILURE if report.get("failed") else EXIT_OK


def main():
    """Console entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
