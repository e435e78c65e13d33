"""Command-line front end.

Exit codes: 0 success (including "preserved"), 1 counterexample found or
inconsistency detected, 2 usage, parse or domain error, 3 vertex cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import report as rjson
from .chordal import chordless_cycle, maximal_cliques, maximum_cardinality_search, perfect_clique_ordering
from .errors import CapacityError, ChordpowError
from .graph import DEFAULT_VERTEX_CAP, FamilySpec, format_edge_list, generate, parse_graph_file
from .hsets import KINDS, critical_exponent_chordal, hset
from .matrices import PowerMap, format_matrix
from .verifier import (SampleConfig, cross_check, falsify_verdict,
                       probe_hset, replay, verdict_to_dict)

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", metavar="NAME:PARAMS",
                     help="inline family, e.g. band:8,3 or complete_bipartite:3,3")
    src.add_argument("--graph", metavar="FILE", help="edge-list file ('p n m' then 'e i j' lines)")


def _add_sampling(p, trials):
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--trials", type=int, default=trials, help=f"random cone samples (default {trials})")
    p.add_argument("--tol", type=float, default=None,
                   help="PSD tolerance (default 1e-9 * max(1, max |entry|))")


def _add_common(p):
    p.add_argument("--output", "-o", metavar="FILE", help="also write the output to FILE")
    p.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP,
                   help=f"vertex cap for exponential searches (default {DEFAULT_VERTEX_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chordpow",
                     description="Entrywise powers preserving positivity on sparse PSD cones.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a family graph in edge-list format")
    p.add_argument("--family", required=True, metavar="NAME:PARAMS")
    p.add_argument("--output", "-o", metavar="FILE")

    p = sub.add_parser("chordal", help="chordality test with ordering or chordless-cycle certificate")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("cliques", help="maximal cliques and, for chordal graphs, a perfect ordering")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("ce", help="critical exponent and power sets of a chordal graph")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("hset", help="power-preserving exponent sets (exact or bounded) for any graph")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("probe", help="empirical critical exponent on a grid of exponents")
    _add_graph_source(p)
    _add_sampling(p, 200)
    _add_common(p)
    p.add_argument("--grid", help="'start:stop:step' or comma list (default 0.25 steps up to n-2)")
    p.add_argument("--kind", action="append", choices=list(KINDS) + ["odd_psi", "even_phi"],
                   help="power kind to probe; repeatable (default all)")
    p.add_argument("--cross-check", action="store_true",
                   help="exit 1 when a counterexample contradicts the closed form")

    p = sub.add_parser("falsify", help="search for a counterexample to one power")
    _add_graph_source(p)
    _add_sampling(p, 1000)
    _add_common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--kind", default="plain", choices=list(KINDS) + ["odd_psi", "even_phi"])

    p = sub.add_parser("crosscheck", help="confront closed-form sets with the falsifier")
    _add_graph_source(p)
    _add_sampling(p, 200)
    _add_common(p)

    p = sub.add_parser("replay", help="re-check a serialised falsify verdict")
    p.add_argument("file", help="JSON written by 'falsify'")
    p.add_argument("--output", "-o", metavar="FILE")
    return parser


def parse_grid(text: str) -> List[float]:
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise _UsageError("grid range must be start:stop:step")
        start, stop, step = (float(x) for x in parts)
        if step <= 0 or stop < start:
            raise _UsageError("grid needs step > 0 and stop >= start")
        count = int(round((stop - start) / step))
        return [round(start + k * step, 12) for k in range(count + 1)]
    return [float(x) for x in text.split(",") if x.strip()]


def _load_graph(args):
    if args.family:
        return generate(FamilySpec.parse(args.family))
    return parse_graph_file(args.graph)


def _cfg(args):
    return SampleConfig(seed=args.seed, trials=args.trials)


def _emit(args, payload, text: Optional[str] = None):
    out = text if text is not None else rjson.dumps(payload)
    sys.stdout.write(out)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)


def _run(args) -> int:
    verb = args.verb
    if verb == "gen":
        _emit(args, None, format_edge_list(generate(FamilySpec.parse(args.family))))
        return EXIT_OK
    if verb == "replay":
        with open(args.file, encoding="utf-8") as fh:
            data = rjson.loads(fh.read())
        res = replay(data)
        payload = {
            "claimed_counterexample": res.claimed,
            "reproduced": res.reproduced,
            "in_cone": res.in_cone,
            "min_eigenvalue": None if res.powered is None else res.powered.min_eigenvalue,
            "tolerance": None if res.powered is None else res.powered.tolerance_used,
        }
        _emit(args, payload)
        if not res.claimed:
            return EXIT_OK
        return EXIT_FOUND if res.reproduced else EXIT_USAGE

    g = _load_graph(args)
    if verb == "chordal":
        mcs = maximum_cardinality_search(g)
        cyc = chordless_cycle(g)
        _emit(args, {
            "n": g.n,
            "chordal": mcs.is_chordal,
            "mcs_order": list(mcs.order),
            "peo": list(mcs.peo) if mcs.is_chordal else None,
            "chordless_cycle": None if cyc is None else list(cyc),
        })
        return EXIT_OK
    if verb == "cliques":
        cl = maximal_cliques(g, cap=args.vertex_cap)
        payload = {"n": g.n, "cliques": [list(c) for c in cl], "perfect_ordering": None}
        if maximum_cardinality_search(g).is_chordal:
            o = perfect_clique_ordering(g)
            payload["perfect_ordering"] = {
                "cliques": [sorted(c) for c in o.cliques],
                "separators": [sorted(s) for s in o.separators],
                "residuals": [sorted(r) for r in o.residuals],
            }
        _emit(args, payload)
        return EXIT_OK
    if verb == "ce":
        _emit(args, critical_exponent_chordal(g).to_dict())
        return EXIT_OK
    if verb == "hset":
        _emit(args, hset(g, cap=args.vertex_cap).to_dict())
        return EXIT_OK
    if verb == "falsify":
        v = falsify_verdict(g, PowerMap(args.kind, args.alpha), args.trials, _cfg(args), args.tol)
        _emit(args, verdict_to_dict(v, g))
        return EXIT_OK if v.preserved else EXIT_FOUND
    if verb == "probe":
        alphas = parse_grid(args.grid) if args.grid else None
        kinds = args.kind or list(KINDS)
        rep = probe_hset(g, alphas, _cfg(args), kinds, args.cross_check, args.tol)
        payload = {
            "trials": rep.trials,
            "rows": [{"alpha": r.alpha, "kind": r.kind, "preserved": r.preserved, "source": r.source}
                     for r in rep.rows],
            "empirical_ce": rep.empirical_ce,
            "closed_form": None if rep.closed_form is None else rep.closed_form.to_dict(),
            "disagreements": list(rep.disagreements),
            "warnings": list(rep.warnings),
        }
        _emit(args, payload)
        return EXIT_FOUND if (args.cross_check and rep.disagreements) else EXIT_OK
    if verb == "crosscheck":
        rep = cross_check(g, _cfg(args), args.tol)
        payload = {
            "consistent": rep.consistent,
            "trials": args.trials,
            "report": rep.report.to_dict(),
            "checks": [{"kind": c.kind, "alpha": c.alpha, "expect": c.expect,
                        "preserved": c.preserved, "ok": c.ok, "source": c.source} for c in rep.checks],
            "failures": [{"kind": c.kind, "alpha": c.alpha, "expect": c.expect, "source": c.source,
                          "matrix": None if c.matrix is None else format_matrix(c.matrix)}
                         for c in rep.failures],
        }
        _emit(args, payload)
        return EXIT_OK if rep.consistent else EXIT_FOUND
    raise _UsageError(f"unknown verb {verb}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"chordpow: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ChordpowError, OSError, ValueError) as exc:
        print(f"chordpow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
