#!/usr/bin/env python3
"""
edfn - edit distance functions of hereditary properties via colored
regularity graphs. Main entry point: parses the command line and dispatches
to the command handlers.
"""

import argparse
import logging
import sys

from config.constants import (
    CACHE_DIR, DEFAULT_GRID_POINTS, DEFAULT_THREADS, EXIT_USAGE_ERROR, LOG_LEVEL, CatalogSide,
)
from utils.version import VERSION

logger = logging.getLogger("edfn")


def configure_logging(verbose: bool):
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        level=logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.INFO),
        stream=sys.stderr,
    )


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    common.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="worker threads (speed only)")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--exact", action="store_true", help="rational arithmetic; p must be num/den")
    return common


def _catalog_flags(parser: argparse.ArgumentParser, grid: bool = False):
    parser.add_argument("--spec", help="property spec JSON")
    parser.add_argument("--catalog", help="catalog JSON written by `enumerate`")
    parser.add_argument("--max-white", type=int, default=2)
    parser.add_argument("--max-black", type=int, default=4)
    parser.add_argument("--side", choices=[s.value for s in CatalogSide], default=CatalogSide.ZERO_CORE.value)
    parser.add_argument("--paths", type=int, default=None, help="use {K(1,0)} and gray paths P_1..P_n instead")
    parser.add_argument("--no-cache", action="store_true", help=f"skip the catalog cache ({CACHE_DIR})")
    if grid:
        parser.add_argument("--grid", type=int, default=DEFAULT_GRID_POINTS, help="number of grid points")
        parser.add_argument("--upper", default="1/2", help="right end of the grid")


def build_parser() -> argparse.ArgumentParser:
    from handlers import command_handlers as h

    parser = argparse.ArgumentParser(prog="edfn", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"edfn {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    cmd = sub.add_parser("g-value", parents=[common], help="g_K(p) with a minimizer")
    cmd.add_argument("--crg", required=True)
    cmd.add_argument("--p", required=True)
    cmd.set_defaults(handler=h.g_value_command)

    cmd = sub.add_parser("core-check", parents=[common], help="is K p-core")
    cmd.add_argument("--crg", required=True)
    cmd.add_argument("--p", required=True)
    cmd.set_defaults(handler=h.core_check_command)

    cmd = sub.add_parser("embed", parents=[common], help="F -> K for a graph or a family")
    cmd.add_argument("--crg", required=True)
    target = cmd.add_mutually_exclusive_group(required=True)
    target.add_argument("--graph", help="graph6 string")
    target.add_argument("--spec", help="property spec JSON")
    cmd.set_defaults(handler=h.embed_command)

    cmd = sub.add_parser("enumerate", parents=[common], help="catalog of core CRGs avoiding the family")
    _catalog_flags(cmd)
    cmd.add_argument("--p-core", default=None, help="keep only p-core entries")
    cmd.set_defaults(handler=h.enumerate_command)

    cmd = sub.add_parser("envelope", parents=[common], help="lower envelope of g_K over a catalog")
    _catalog_flags(cmd, grid=True)
    cmd.add_argument("--json", default=None, help="also write the curve with changepoints as JSON")
    cmd.set_defaults(handler=h.envelope_command)

    cmd = sub.add_parser("q-curve", parents=[common], help="envelope over chi-1 white vertices")
    cmd.add_argument("--spec", required=True)
    cmd.add_argument("--max-black", type=int, default=4)
    cmd.add_argument("--grid", type=int, default=DEFAULT_GRID_POINTS)
    cmd.add_argument("--upper", default="1/2")
    cmd.add_argument("--json", default=None)
    cmd.set_defaults(handler=h.q_curve_command)

    cmd = sub.add_parser("pathbound", parents=[common], help="white joins of gray paths at p=1/4")
    cmd.add_argument("--max-total", type=int, default=6)
    cmd.add_argument("--upper-n", default=None, help="comma-separated path lengths for the uniform bound")
    cmd.add_argument("--p", default="0.3")
    cmd.set_defaults(handler=h.pathbound_command)

    cmd = sub.add_parser("probe", parents=[common], help="attainers along a sequence approaching p")
    _catalog_flags(cmd)
    cmd.add_argument("--target", required=True)
    cmd.add_argument("--approach", required=True, help="comma-separated p values")
    cmd.set_defaults(handler=h.probe_command)

    cmd = sub.add_parser("symmetry", parents=[common], help="envelope at p against the complement at 1-p")
    _catalog_flags(cmd, grid=True)
    cmd.set_defaults(handler=h.symmetry_command)

    cmd = sub.add_parser("slope-demo", parents=[common], help="envelope(p)/p at small p")
    _catalog_flags(cmd)
    cmd.add_argument("--probes", default="0.001,0.01,0.05")
    cmd.add_argument("--zero-regularity", action="store_true", help="compare the envelope with q at each probe")
    cmd.set_defaults(handler=h.slope_demo_command)

    cmd = sub.add_parser("dist-exact", parents=[common], help="exhaustive edit distance at toy scale")
    cmd.add_argument("--spec", required=True)
    cmd.add_argument("--graph", default=None, help="graph6 string; otherwise --n and --p")
    cmd.add_argument("--n", type=int, default=5)
    cmd.add_argument("--p", default="1/2")
    cmd.set_defaults(handler=h.dist_exact_command)

    cmd = sub.add_parser("blowup-degree", parents=[common], help="max p-degree of K[mu,n] against g")
    cmd.add_argument("--crg", required=True)
    cmd.add_argument("--p", required=True)
    cmd.add_argument("--sizes", default="100,1000,10000")
    cmd.set_defaults(handler=h.blowup_degree_command)

    cmd = sub.add_parser("chi", parents=[common], help="chromatic and clique-cover numbers")
    target = cmd.add_mutually_exclusive_group(required=True)
    target.add_argument("--graph")
    target.add_argument("--spec")
    cmd.set_defaults(handler=h.chi_command)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE_ERROR if e.code else 0
    configure_logging(args.verbose)
    logger.debug(f"edfn {VERSION}: {args.command}")
    return args.handler(args)


def main():
    """Main entry point for the command line."""
    sys.exit(run())


if __name__ == "__main__":
    main()
