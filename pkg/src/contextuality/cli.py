"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 invalid mathematical object,
4 dimension mismatch, 5 internal limit exceeded.
"""

import argparse
import logging
import sys
from dataclasses import replace

from . import __version__
from .config import DEFAULT_TOLS
from .errors import ContextualityError, ParseError
from .fileformats import format_ray_file, load_rays, load_state
from .report import (
    CSV_COLUMNS,
    RENDERERS,
    bounds_section,
    new_document,
    scenario_section,
    sig12,
    state_entry,
)
from .hiddenvars import nc_bound_correlation
from .scenario import build_graph, independence_number
from .witness import prior_information, run_test

RAYS_HELP = "ray file, or @paper for the bundled nine-ray set"


def _tols(args):
    return replace(DEFAULT_TOLS, orthogonality=args.tol)


def _scenario(args):
    tols = _tols(args)
    rays = load_rays(args.rays, tols, auto_normalize=args.auto_normalize)
    return tols, rays, build_graph(rays, tols.orthogonality)


def cmd_verify(args):
    tols, rays, graph = _scenario(args)
    doc = new_document(tols)
    doc["scenario"] = scenario_section(rays, graph)
    return doc


def cmd_bounds(args):
    tols, rays, graph = _scenario(args)
    doc = new_document(tols)
    doc["scenario"] = scenario_section(rays, graph)
    doc["bounds"] = bounds_section(rays, graph, tols)
    return doc


def cmd_test(args):
    if args.emit_rays and not args.align:
        raise ParseError("--emit-rays requires --align")
    if args.emit_rays and len(args.states) != 1:
        raise ParseError("--emit-rays takes exactly one state file")
    tols, rays, graph = _scenario(args)
    states = [load_state(path, tols) for path in args.states]
    alpha, _ = independence_number(graph)
    bounds = (alpha, nc_bound_correlation(graph)[0])

    doc = new_document(tols)
    doc["scenario"] = scenario_section(rays, graph)
    doc["bounds"] = bounds_section(rays, graph, tols)
    doc["states"] = []
    for path, rho in zip(args.states, states):
        report = run_test(rho, rays, aligned=args.align, tols=tols, graph=graph, bounds=bounds)
        ray_text = None
        if report.alignment is not None:
            ray_text = format_ray_file(report.alignment.rotated_rays, f"rays aligned to {path}")
            if args.emit_rays:
                with open(args.emit_rays, "w") as fh:
                    fh.write(ray_text)
        doc["states"].append(state_entry(path, report, ray_text))
    return doc


def cmd_eta(args):
    rho = load_state(args.state, DEFAULT_TOLS)
    doc = new_document(DEFAULT_TOLS)
    doc["eta"] = {"state": args.state, "eta": sig12(prior_information(rho)), "unit": doc["entropy_unit"]}
    return doc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="contextuality",
        description="Nine-ray qutrit contextuality test: graph checks, bounds, state tests.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rays=True, formats=("text", "machine")):
        if rays:
            p.add_argument("rays", help=RAYS_HELP)
            p.add_argument("--tol", type=float, default=DEFAULT_TOLS.orthogonality,
                           help="orthogonality tolerance on |<i|j>| (default %(default)g)")
            p.add_argument("--auto-normalize", action="store_true",
                           help="rescale rays whose norm is off by less than 1e-3 (logs a warning)")
        p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("verify", help="check normalization and print the orthogonality graph")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="noncontextual bounds and witness spectrum")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser(
        "test",
        help="evaluate both inequality forms on one or more states",
        epilog="csv columns, in order: " + ",".join(CSV_COLUMNS),
    )
    common(p, formats=("text", "machine", "csv"))
    p.add_argument("states", nargs="+", help="state file(s)")
    p.add_argument("--align", action="store_true", help="rotate the rays onto each state's eigenbasis first")
    p.add_argument("--emit-rays", metavar="PATH", help="with --align, also write the rotated rays to PATH")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("eta", help="prior information log2(d) - S(rho), in bits")
    common(p, rays=False)
    p.add_argument("state", help="state file")
    p.set_defaults(func=cmd_eta)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return 2
    try:
        doc = args.func(args)
    except ContextualityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ParseError.exit_code
    sys.stdout.write(RENDERERS[args.format](doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
