"""
colour-vertex command line
--------------------------

Usage examples:

# --- Domain-wall partition function, every method cross-checked ---
echo '{"xs": [2, 3], "ys": [0, 1]}' | colour-vertex dwpf --input -

# --- Acceptance suite ---
colour-vertex verify --suite lemma1 --max-size 3 --rank 2

Exit status: 0 on success, 1 when two methods (or a suite case) disagree, 2 on
malformed input or a pole.
"""

import argparse
import logging
import time
from typing import Sequence

from colour_vertex.config import EngineConfig, Method
from colour_vertex.controller.engine_controller import EXIT_INPUT, EngineController
from colour_vertex.errors import InputError
from colour_vertex.utils.utils import load_document, write_report

log = logging.getLogger(__name__)

VERBS = (
    "ybe-check",
    "dwpf",
    "pdwpf",
    "scalar-product",
    "slavnov",
    "ik-sum",
    "coloured",
    "bethe-solve",
    "a2",
    "limit",
    "lattice",
    "verify",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colour-vertex",
        description="Exact partition functions and determinant checks for A_n vertex models.",
    )
    parser.add_argument("verb", choices=VERBS, help="Computation or verification to run.")
    parser.add_argument("--input", "-i", default=None, help="JSON input document, '-' for stdin.")
    parser.add_argument("--output", "-o", default="-", help="Report destination, '-' for stdout.")
    parser.add_argument("--precision-bits", type=int, default=None, help="Float working precision (default 256).")
    parser.add_argument("--seed", type=int, default=None, help="Seed for solver restarts and suite sampling.")
    parser.add_argument(
        "--sample-retries",
        type=int,
        default=None,
        help="Fresh sample points tried by exact limits before 'sample point collision' (default 64).",
    )
    parser.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=None,
        help="Evaluator; defaults to the input's 'method' field, then 'all'.",
    )
    parser.add_argument("--timing", action="store_true", help="Add wall-clock seconds to the report.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr; repeat for debug.")

    suite = parser.add_argument_group("verify options")
    suite.add_argument("--suite", default=None, help="Suite identifier or 'all'.")
    suite.add_argument("--max-size", type=int, default=None)
    suite.add_argument("--rank", type=int, default=None)
    suite.add_argument("--samples", type=int, default=None)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _payload(args: argparse.Namespace) -> dict:
    if args.input is None and args.verb != "verify":
        raise InputError(f"The {args.verb} verb needs --input")
    payload = load_document(args.input) if args.input is not None else {}
    if not isinstance(payload, dict):
        raise InputError(f"Input must be a JSON object, got {type(payload).__name__}")
    if args.verb == "verify":
        for name in ("suite", "max_size", "rank", "samples"):
            value = getattr(args, name)
            if value is not None:
                payload[name] = value
    return payload


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = EngineConfig.from_namespace(args)
        payload = _payload(args)
    except (InputError, ValueError) as exc:
        write_report({"status": "error", "verb": args.verb, "error": "InputError", "message": str(exc)}, args.output)
        return EXIT_INPUT

    controller = EngineController(config)
    started = time.perf_counter()
    code, report = controller.run(args.verb, payload, args.method)
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - started, 6)
    log.info("%s finished with exit status %d", args.verb, code)
    write_report(report, args.output)
    return code
