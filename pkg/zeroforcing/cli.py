# -*- coding: utf-8 -*-
"""
Command line surface.

    zeroforcing build johnson -n 5 -k 2 -S 0
    zeroforcing zf grassmann -n 4 -k 2 -q 2 -S 1 --mode exact
    zeroforcing construct kneser -n 7 -k 2 -t 0 --verify
    zeroforcing nullity -n 3 -q 3
    zeroforcing --replay report.json

Every command prints a JSON report. Exit codes: 0 success, 1 internal
error, 2 violated hypothesis, 3 cap exceeded or sizing error.
"""
import argparse
import json
import logging
import sys

from .baseapi import Error, CapExceededError, HypothesisError, SizingError
from .FamilySpec import ALIASES, FamilySpec
from .Forcing import VARIANTS
from .GraphFile import read_vertex_set
from .Grundy import Z_GRUNDY
from .Manager import Manager, ZF_MODES, CONSTRUCTIONS, CLOSURE

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_HYPOTHESIS = 2
EXIT_CAP = 3

log = logging.getLogger(__name__)


def _family_args(parser, family_required=True):
    if family_required:
        parser.add_argument("family", choices=sorted(ALIASES))
    else:
        parser.add_argument("family", nargs="?", choices=sorted(ALIASES))
    parser.add_argument("-n", type=int)
    parser.add_argument("-k", type=int)
    parser.add_argument("-q", type=int)
    parser.add_argument("-S", type=int, nargs="+",
                        help="allowed intersection sizes or dimensions")
    parser.add_argument("-t", type=int,
                        help="shorthand for -S 0 1 .. t")


def _graph_args(parser):
    _family_args(parser, family_required=False)
    parser.add_argument("--graph", metavar="PATH",
                        help="graph cache or edge list instead of a family")


def _spec_from(args):
    S = args.S
    if S is None and args.t is not None:
        S = list(range(args.t + 1))
    return FamilySpec(args.family, args.n, k=args.k, q=args.q, S=S)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zeroforcing", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="debug logging")
    parser.add_argument("--report", metavar="PATH",
                        help="also write the JSON report to PATH")
    parser.add_argument("--replay", metavar="REPORT",
                        help="re-verify every certificate of a report")
    parser.add_argument("--max-seconds", type=float,
                        help="exact search time limit")
    parser.add_argument("--workers", type=int,
                        help="exact search worker processes")
    parser.add_argument("--search-cap", type=int,
                        help="largest graph for exact search")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("build", help="build and cache a family graph")
    _family_args(p)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("metrics", help="diameter and girth")
    _graph_args(p)
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--girth", action="store_true")
    p.add_argument("--check-formula", action="store_true")
    p.add_argument("--walk", type=int, nargs=2, metavar=("V", "W"),
                   help="walk certificate between two vertex ids")

    p = sub.add_parser("zf", help="zero forcing")
    _graph_args(p)
    p.add_argument("--mode", choices=ZF_MODES, default=CLOSURE)
    p.add_argument("--set", dest="vertex_set", metavar="FILE",
                   help="JSON vertex set (labels or ids)")
    p.add_argument("--complement", action="store_true",
                   help="the set is white, start from its complement")
    p.add_argument("--variant", default="plain",
                   choices=VARIANTS + ("grundy", "z"))
    p.add_argument("--lower-hint", type=int)
    p.add_argument("--upper-hint", type=int)

    p = sub.add_parser("construct", help="explicit leader sets")
    p.add_argument("name", choices=CONSTRUCTIONS)
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("-q", type=int)
    p.add_argument("-S", type=int, nargs="+")
    p.add_argument("-t", type=int)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("nullity", help="GF(2) nullity of B_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-q", type=int, required=True)

    p = sub.add_parser("sweep", help="run a parameter grid")
    p.add_argument("config", help="JSON sweep configuration")
    p.add_argument("--out", metavar="PATH", help=".csv or .json table")

    p = sub.add_parser("heuristic-kneser",
                       help="seeded greedy search on J_{0..t}(n,k)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--attempts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _manager(args):
    overrides = {}
    if args.max_seconds is not None:
        overrides["max_seconds"] = args.max_seconds
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.search_cap is not None:
        overrides["search_cap"] = args.search_cap
    return Manager(**overrides)


def _graph(manager, args):
    if args.graph:
        return manager.get_graph(path=args.graph)
    if not args.family:
        raise HypothesisError("give a family or --graph")
    return manager.get_graph(_spec_from(args))


def run(args):
    """Dispatches parsed arguments; returns a Report or a list of rows."""
    manager = _manager(args)
    if args.replay:
        return manager.replay(args.replay)

    if args.command == "build":
        return manager.build(_spec_from(args), out=args.out)
    if args.command == "metrics":
        both = not args.diameter and not args.girth
        return manager.metrics(_graph(manager, args),
                               with_diameter=args.diameter or both,
                               with_girth=args.girth or both,
                               check_formula=args.check_formula,
                               walk_pair=args.walk)
    if args.command == "zf":
        graph = _graph(manager, args)
        vertices = read_vertex_set(args.vertex_set, graph) \
            if args.vertex_set else None
        variant = Z_GRUNDY if args.variant == "z" else args.variant
        return manager.zf(graph, mode=args.mode, vertices=vertices,
                          complement=args.complement, variant=variant,
                          lower_hint=args.lower_hint,
                          upper_hint=args.upper_hint)
    if args.command == "construct":
        return manager.construct(args.name, verify=args.verify, n=args.n,
                                 k=args.k, q=args.q, t=args.t, S=args.S)
    if args.command == "nullity":
        return manager.nullity(args.n, args.q)
    if args.command == "sweep":
        return manager.sweep(args.config, out=args.out)
    if args.command == "heuristic-kneser":
        return manager.heuristic_kneser(args.n, args.k, args.t,
                                        attempts=args.attempts,
                                        seed=args.seed)
    raise HypothesisError("no command given")


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(name)s %(levelname)s %(message)s")

    try:
        result = run(args)
    except HypothesisError as e:
        log.error("hypothesis violated: %s", e)
        return EXIT_HYPOTHESIS
    except (SizingError, CapExceededError) as e:
        log.error("cap exceeded: %s", e)
        return EXIT_CAP
    except Error as e:
        log.error("%s: %s", e.__class__.__name__, e)
        return EXIT_INTERNAL
    except Exception:
        log.exception("internal error")
        return EXIT_INTERNAL

    if isinstance(result, list):
        stdout.write(json.dumps(result, indent=1) + "\n")
        return EXIT_OK

    text = result.to_json()
    stdout.write(text + "\n")
    if args.report:
        result.save(args.report)
    return EXIT_CAP if result.capped else EXIT_OK
