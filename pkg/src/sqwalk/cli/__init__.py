"""Command-line front end: ``sqwalk {search,sweep,verify,spectrum}``.

Exit codes: 0 on success, 1 when a run or a verification fails, 2 on usage errors.
"""

import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError

from .._client import Simulator
from .._core.exceptions import SQWalkError, TimeLimitError
from ..search import SearchTrace
from ..types import ExperimentConfig
from ..utils import format_json, setup_logging, write_json

log: logging.Logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _pair(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected two facet indices i,j, got {text!r}")
    return values[0], values[1]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="Complex dimension (sphere of dimension n).")
    common.add_argument(
        "--n-list", type=_int_list, help="Comma-separated dimensions for a sweep."
    )
    common.add_argument(
        "--marked",
        type=_pair,
        default=(0, 1),
        help="Marked face as two 0-based facet indices i,j (default: 0,1).",
    )
    common.add_argument("--t-max", type=int, help="Number of walk steps.")
    common.add_argument("--out", help="Output file (CSV for search, JSON otherwise).")
    common.add_argument("--workers", type=int, help="Sweep thread-pool size.")
    common.add_argument(
        "--complex", dest="complex_path", help="Facet-list JSON file for verify."
    )
    common.add_argument(
        "--log-level", choices=["debug", "info", "warning", "error"], help="Logging level."
    )

    parser = argparse.ArgumentParser(
        prog="sqwalk", description="Simplicial quantum walk experiments."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("search", parents=[common], help="Run one marked-face search.")
    sub.add_parser("sweep", parents=[common], help="Fit t_f against n+2 over an n-list.")
    sub.add_parser("verify", parents=[common], help="Run the equivalence and eigen checks.")
    sub.add_parser("spectrum", parents=[common], help="Report the discriminant spectrum.")
    return parser


def parse_config(args: argparse.Namespace) -> ExperimentConfig:
    return ExperimentConfig(
        subcommand=args.subcommand,
        n=args.n,
        n_list=args.n_list,
        marked=args.marked,
        t_max=args.t_max,
        out=args.out,
        workers=args.workers,
        complex_path=args.complex_path,
    )


def write_trace_csv(path: Union[str, Path], trace: SearchTrace) -> None:
    """A ``# n=...,N=...,marked=i:j,t_f=...`` line, the ``t,p_f`` header, one row per step."""
    i, j = trace.marked
    t_f = "none" if trace.t_f is None else str(trace.t_f)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        handle.write(f"# n={trace.n},N={trace.num_faces},marked={i}:{j},t_f={t_f}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["t", "p_f"])
        for t, p in enumerate(trace.probabilities):
            writer.writerow([t, repr(float(p))])


def _emit(model: BaseModel, out: Optional[str]) -> None:
    payload = model.model_dump(mode="json")
    if out is not None:
        write_json(out, payload)
    print(format_json(payload))


def cmd_search(simulator: Simulator, config: ExperimentConfig) -> int:
    assert config.n is not None
    try:
        trace, summary = simulator.searches.run(config.n, config.marked, config.t_max)
    except TimeLimitError as exc:
        if config.out is not None:
            write_trace_csv(config.out, exc.trace)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if config.out is not None:
        write_trace_csv(config.out, trace)
        _emit(summary, str(Path(config.out).with_suffix(".json")))
    else:
        _emit(summary, None)
    return EXIT_OK


def cmd_sweep(simulator: Simulator, config: ExperimentConfig) -> int:
    assert config.n_list is not None
    _emit(simulator.searches.sweep(config.n_list, config.marked), config.out)
    return EXIT_OK


def cmd_verify(simulator: Simulator, config: ExperimentConfig) -> int:
    if config.complex_path is not None:
        complex_ = simulator.complexes.load(config.complex_path)
        report = simulator.verifications.run_complex(complex_)
    else:
        assert config.n is not None
        report = simulator.verifications.run(config.n)
    _emit(report, config.out)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_spectrum(simulator: Simulator, config: ExperimentConfig) -> int:
    assert config.n is not None
    _emit(simulator.spectra.report(config.n), config.out)
    return EXIT_OK


COMMANDS: dict[str, Callable[[Simulator, ExperimentConfig], int]] = {
    "search": cmd_search,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level is not None:
        setup_logging(args.log_level)
    try:
        config = parse_config(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        with Simulator(workers=config.workers) as simulator:
            return COMMANDS[config.subcommand](simulator, config)
    except SQWalkError as exc:
        log.debug("Command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
