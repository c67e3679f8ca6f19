"""Command line interface: run / sweep / plot / selftest."""

from __future__ import annotations

import argparse
import sys

from . import harness
from .scenario import ScenarioError, load_scenario


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenbounds",
        description="Evaluate eigenvalue bounds for 1D Schrodinger operators "
        "with complex potentials on random ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario and write report artifacts")
    p_run.add_argument("scenario", help="scenario file (flat key = value format)")
    p_run.add_argument("--output", help="output directory override")

    p_sweep = sub.add_parser("sweep", help="tabulate implied constants along one axis")
    p_sweep.add_argument("scenario")
    p_sweep.add_argument("--axis", required=True, choices=harness.SWEEP_AXES)
    p_sweep.add_argument("--output", help="output directory override")

    p_plot = sub.add_parser("plot", help="regenerate SVG figures from reports.json")
    p_plot.add_argument("reports", help="path to a reports.json file")
    p_plot.add_argument("--output", required=True, help="directory for the figures")
    p_plot.add_argument("--split-constant", type=float, default=1.0)

    sub.add_parser("selftest", help="run the built-in fixture suite")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return harness.run(load_scenario(args.scenario), args.output)
        if args.command == "sweep":
            return harness.sweep(load_scenario(args.scenario), args.axis, args.output)
        if args.command == "plot":
            written = harness.plot_from_json(args.reports, args.output, args.split_constant)
            for path in written:
                print(path)
            return 0
        return harness.selftest()
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
