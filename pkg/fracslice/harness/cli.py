"""Command line entry point: ``fracslice run|run-all|list``.

Exit codes: 0 when every scenario passes, 1 when any fails, 2 for
configuration or usage errors.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import logging
import os
import sys

from fracslice.error_message import ConfigError, UnknownScenarioError
from fracslice.harness.config import RunConfig, TOLERANCE_PREFIX
from fracslice.harness.reports import combined_csv, combined_json, summary
from fracslice.harness.scenarios import SCENARIOS, check_tolerances, run_all, run_scenario

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _tolerance_pair(text):
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError("expected KEY=VAL, got {!r}".format(text))
    return key.strip(), value.strip()


def _add_run_arguments(parser):
    parser.add_argument("--config", dest="config", help="path to a key = value config file")
    parser.add_argument("--seed", dest="seed", type=int, help="random seed")
    parser.add_argument("--quad-order", dest="quad_order", type=int, help="quadrature nodes")
    parser.add_argument(
        "--tolerance",
        dest="tolerance",
        action="append",
        type=_tolerance_pair,
        default=[],
        metavar="KEY=VAL",
        help="tolerance override for the scenario KEY",
    )
    parser.add_argument("--out", dest="out", help="path of the report file")
    parser.add_argument("--format", dest="format", choices=("csv", "json"), help="report format")
    parser.add_argument("--logfile", dest="logfile", help="path to the log file")
    parser.add_argument("--verbose", dest="verbose", action="store_true", help="debug logging")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fracslice", description="fractional slice monogenic verification harness"
    )
    commands = parser.add_subparsers(dest="command")
    commands.required = True
    run = commands.add_parser("run", help="run one scenario")
    run.add_argument("--scenario", dest="scenario", required=True, help="scenario name")
    _add_run_arguments(run)
    run_every = commands.add_parser("run-all", help="run every scenario")
    _add_run_arguments(run_every)
    commands.add_parser("list", help="list the scenarios")
    return parser


def _overrides(args):
    overrides = {}
    for key in ("seed", "quad_order", "out", "format"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = value
    for name, value in args.tolerance:
        overrides[TOLERANCE_PREFIX + name] = value
    return overrides


def _configure_logging(args):
    level = logging.DEBUG if args.verbose else logging.INFO
    if args.logfile:
        directory = os.path.split(args.logfile)[0]
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        logging.basicConfig(filename=args.logfile, level=level)
    else:
        logging.basicConfig(level=level if args.verbose else logging.WARNING)


def _write(reports, run, single):
    fmt = run["format"]
    out = run["out"] or None
    if fmt == "json":
        text = reports[0].to_json(out) if single else combined_json(reports, out)
    else:
        text = reports[0].to_csv(out) if single else combined_csv(reports, out)
    if out is None:
        sys.stdout.write(text)


def _list():
    width = max(len(name) for name in SCENARIOS)
    for name, scenario in SCENARIOS.items():
        print("{}  {} [{}]".format(name.ljust(width), scenario.topic, scenario.anchor))
    return EXIT_PASS


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "list":
        return _list()
    _configure_logging(args)
    try:
        run = RunConfig.from_file(args.config, _overrides(args))
        check_tolerances(run)
        if args.command == "run":
            reports = [run_scenario(args.scenario, run)]
        else:
            reports = run_all(run)
    except (ConfigError, UnknownScenarioError) as err:
        sys.stderr.write("fracslice: error: {}\n".format(err))
        return EXIT_USAGE
    _write(reports, run, args.command == "run")
    if args.command == "run-all":
        table = summary(reports)
        stream = sys.stderr if not run["out"] else sys.stdout
        stream.write(table.to_string(index=False) + "\n")
    return EXIT_PASS if all(report.verdict for report in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
