import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from .harness import ConfigError, Harness, RUN_CHECK_IDS, Suite
from .harness import parse_config
from .modulus import assemble_time_modulus

# argparse dest to the dotted config key it overrides
OVERRIDES: Dict[str, str] = {"suite": "suite",
                             "seed": "seed",
                             "out": "output_dir",
                             "nu": "pde.nu",
                             "mu": "pde.mu",
                             "alpha": "pde.alpha",
                             "lam": "pde.lambda",
                             "p": "pde.p",
                             "dim": "grid.dim",
                             "n": "grid.n",
                             "L": "grid.L",
                             "dt": "run.dt",
                             "t_end": "run.t_end"}

SUBCOMMANDS = {"verify": "run the configured (or --suite) check suite",
               "run": "evolve the configured data and check the bound",
               "picard": "run the Picard construction checks",
               "constants": "print the theory constants of the data"}


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", type=Path, default=None)
    parser.add_argument("--suite", choices=[suite.value for suite in Suite])
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out")
    parser.add_argument("--nu", type=float)
    parser.add_argument("--mu", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--lambda", dest="lam", type=float)
    parser.add_argument("--p", type=float)
    parser.add_argument("--dim", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--L", type=float)
    parser.add_argument("--dt", type=float)
    parser.add_argument("--t-end", dest="t_end", type=float)
    parser.add_argument("--log-level", default="INFO",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR",
                                 "CRITICAL"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mms_solver_pkg",
        description="Solver and verification suite for the modified"
                    " Hamilton-Jacobi equation with fractional"
                    " anti-dissipation")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in SUBCOMMANDS.items():
        _add_common(subparsers.add_parser(name, help=help_text))
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parses flags, runs the subcommand, and returns the exit status

    0 if every check passed, 1 if any failed, 2 for a bad config"""

    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(asctime)s %(levelname)s %(message)s")

    overrides: Dict[str, Any] = {key: getattr(args, dest)
                                 for dest, key in OVERRIDES.items()}
    try:
        config = parse_config(args.config, overrides)
    except ConfigError as e:
        logging.critical(f"Invalid configuration: {e}")
        return 2

    if args.command == "constants":
        tm = assemble_time_modulus(config.initial_field(), config.params)
        print(tm.constants.dumps_yaml())
        return 0

    harness = Harness(config)
    if args.command == "picard":
        result = harness.run(Suite.PICARD)
    elif args.command == "run":
        result = harness.run(check_ids=RUN_CHECK_IDS)
    else:
        result = harness.run()
    logging.info(f"{len(result) - len(result.failed)}/{len(result)} checks"
                 f" passed, reports in {config.output_dir}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
