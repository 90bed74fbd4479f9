"""Command-line front end.

Examples::

    cubicspan smooth --surface "q=7^1; F=1,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,1,0,0,1"
    cubicspan span --surface "..." --point 1:6:0:0 --point 0:1:0:6
    cubicspan census-f3 --interpretation printed --format table
    cubicspan verify-theorem --q 7 --samples 100 --seed 1

Exit status: 0 on success, 1 when a run reports a counterexample, 2 on usage
errors (bad flags, malformed or singular surfaces).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census
from .proj import GeometryError, Point
from .span import generator_report, span_tables
from .surface import (
    SurfaceError,
    classify_point,
    is_smooth,
    k_lines_on_surface,
    parse_surface,
    strict_smooth,
    surface_points,
)

VERBS = (
    "classify",
    "lines",
    "span",
    "generators",
    "smooth",
    "census-f2",
    "census-f3",
    "census-f3-superset",
    "verify-theorem",
    "lemma-suite",
)
SURFACE_VERBS = {"classify", "lines", "span", "generators", "smooth"}
NEEDS_SMOOTH = {"classify", "span", "generators"}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicspan", description="Secant and tangent spans on cubic surfaces over finite fields.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("--q", type=int, help="field order for sampled runs")
    ap.add_argument("--surface", help='inline surface string "q=<p>^<k>; F=<20 codes>"')
    ap.add_argument("--in", dest="infile", metavar="FILE", help="file with one surface string per line")
    ap.add_argument("--point", action="append", default=[], metavar="a:b:c:d", help="point on the surface (repeatable)")
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--checkpoint", metavar="FILE")
    ap.add_argument("--format", choices=("json", "table"), default="json")
    ap.add_argument("--strict-smooth", action="store_true", help="also search for singular points over extensions")
    ap.add_argument("--interpretation", choices=("printed", "eYW"), default="eYW")
    return ap


def _surfaces(args):
    if args.surface and args.infile:
        raise UsageError("give either --surface or --in, not both")
    if args.surface:
        texts = [args.surface]
    elif args.infile:
        try:
            with open(args.infile) as fh:
                texts = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError(f"{args.verb} needs --surface or --in")
    try:
        return [parse_surface(t) for t in texts]
    except (SurfaceError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _points(S, args):
    try:
        return [Point.parse(S.field, p) for p in args.point]
    except (GeometryError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _smooth_ok(S, args) -> bool:
    return strict_smooth(S) if args.strict_smooth else is_smooth(S)


def _classify(S, args) -> dict:
    pts = _points(S, args) or surface_points(S)
    out = []
    for P in pts:
        try:
            c = classify_point(S, P.coords)
        except SurfaceError as exc:
            raise UsageError(str(exc)) from exc
        out.append(
            {
                "point": str(P),
                "kind": c.kind.value,
                "asymptotic_directions": [str(d) for d in c.asymptotic_dirs],
                "quadratic": list(c.quadratic),
            }
        )
    return {"surface": str(S), "points": out}


def _lines(S, args) -> dict:
    lines = k_lines_on_surface(S)
    return {"surface": str(S), "count": len(lines), "lines": [str(L) for L in lines]}


def _span(S, args) -> dict:
    pts = _points(S, args)
    if not pts:
        raise UsageError("span needs at least one --point")
    t = span_tables(S)
    try:
        seeds = [t.index_of(P.coords) for P in pts]
    except SurfaceError as exc:
        raise UsageError(str(exc)) from exc
    mask = t.closure_mask(seeds, stop_when_full=False)
    members = sorted(str(t.point(i)) for i in range(t.n) if mask[i])
    return {
        "surface": str(S),
        "seeds": [str(P) for P in pts],
        "size": len(members),
        "n_points": t.n,
        "generates": len(members) == t.n,
        "members": members,
    }


def _generators(S, args) -> dict:
    return json.loads(generator_report(S).to_json())


def _smooth(S, args) -> dict:
    out = {"surface": str(S), "smooth": is_smooth(S)}
    if args.strict_smooth:
        out["strict_smooth"] = strict_smooth(S)
    return out


SURFACE_OPS = {
    "classify": _classify,
    "lines": _lines,
    "span": _span,
    "generators": _generators,
    "smooth": _smooth,
}


def _census(args) -> census.CensusReport:
    v = args.verb
    if v == "census-f2":
        return census.census_f2(args.workers, args.checkpoint)
    if v == "census-f3":
        return census.census_f3_family(args.interpretation, args.workers, args.checkpoint)
    if v == "census-f3-superset":
        return census.census_f3_superset(args.workers, args.checkpoint)
    if args.q is None:
        raise UsageError(f"{v} needs --q")
    try:
        if v == "verify-theorem":
            return census.verify_main_theorem(args.q, args.samples, args.seed, args.workers)
        return census.lemma_suite(args.q, args.samples, args.seed, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _table(obj, indent: str = "") -> str:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}-")
                lines.append(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}- {v}")
    else:
        lines.append(f"{indent}{obj}")
    return "\n".join(lines)


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        out.write(_table(obj) + "\n")


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb in SURFACE_VERBS:
            results = []
            for S in _surfaces(args):
                if args.verb in NEEDS_SMOOTH and not _smooth_ok(S, args):
                    raise UsageError(f"{args.verb} needs a smooth surface: {S}")
                results.append(SURFACE_OPS[args.verb](S, args))
            _emit(results[0] if len(results) == 1 else results, args.format, out)
            return 0
        rep = _census(args)
    except UsageError as exc:
        print(f"cubicspan: error: {exc}", file=sys.stderr)
        return 2
    _emit(rep.to_dict(), args.format, out)
    return 1 if rep.counterexamples else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
