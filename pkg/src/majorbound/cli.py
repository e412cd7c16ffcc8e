"""Command-line front end.

    majorbound bound  --spectrum 0.5,0.3,0.2 --f vn --m 1 --eps 0.3
    majorbound rank   --spectrum "gibbs N=1" --eps 0.1
    majorbound figure fig1 --output fig1.csv
    majorbound verify --spectrum 0.5,0.3,0.2 --m 1 --eps 0.2 --set both

Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence, TextIO

from . import spectrum as sp
from .bounds import gap_bound, mr_hat
from .entropy import parse_functional
from .gibbs import DEFAULT_GRIDS, Grid, figure_csv
from .oracle import SETS, SearchBudget, candidates, verify_dominance, worst_gap
from .spectrum import MajorboundError, Spectrum


def load_spectrum(source: str) -> Spectrum:
    """Inline comma list, ``gibbs N=<x>``, ``geometric q=<x>`` or a file path."""
    text = source.strip()
    head = text.split()[0].lower() if text else ""
    if head in ("gibbs", "geometric") or not os.path.exists(text):
        return sp.parse_spectrum(text)
    with open(text, encoding="utf-8") as fh:
        return sp.parse_spectrum(fh.read())


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majorbound", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="bound on f(rho) - f(sigma) and the extremal state")
    b.add_argument("--spectrum", required=True)
    b.add_argument("--f", default="vn", help="vn, renyi:<alpha> or tsallis:<alpha>")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--eps", type=float, default=1.0)

    r = sub.add_parser("rank", help="upper bound on the eps-sufficient majorization rank")
    r.add_argument("--spectrum", required=True)
    r.add_argument("--eps", type=float, required=True)

    f = sub.add_parser("figure", help="CSV data of the Gibbs-state figures")
    f.add_argument("which", choices=sorted(DEFAULT_GRIDS))
    f.add_argument("--output", help="write CSV here instead of stdout")
    f.add_argument("--points", type=int)
    f.add_argument("--eps-min", type=float)
    f.add_argument("--eps-max", type=float)

    v = sub.add_parser("verify", help="brute-force check of the bound and of dominance")
    v.add_argument("--spectrum", required=True)
    v.add_argument("--f", action="append", help="functional(s) to check; repeatable (default vn)")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--eps", type=float, required=True)
    v.add_argument("--set", choices=["tset", "pset", "both"], default="both")
    v.add_argument("--mode", choices=["grid", "random", "refine"], default="grid")
    v.add_argument("--resolution", type=int, default=50)
    v.add_argument("--samples", type=int, default=2000)
    v.add_argument("--passes", type=int, default=3)
    v.add_argument("--seed", type=_u64, default=0)
    v.add_argument("--max-support", type=int)
    v.add_argument("--json", help="write the full reports as JSON to this path")
    return parser


def _cmd_bound(args, out: TextIO) -> int:
    s = load_spectrum(args.spectrum)
    f = parse_functional(args.f)
    res = gap_bound(f, s, args.m, args.eps)
    out.write(f"value {sp.format_number(res.value)}\n")
    out.write(f"case {res.case}\n")
    if res.case.ell is not None:
        out.write(f"ell {res.case.ell}\n")
    out.write(f"extremal {sp.format_spectrum(res.extremal.sorted())}\n")
    return 0


def _cmd_rank(args, out: TextIO) -> int:
    s = load_spectrum(args.spectrum)
    value = mr_hat(s, args.eps)
    out.write(("inf" if value == math.inf else str(int(value))) + "\n")
    return 0


def _cmd_figure(args, out: TextIO) -> int:
    grid = DEFAULT_GRIDS[args.which]
    if args.points is not None or args.eps_min is not None or args.eps_max is not None:
        grid = Grid(
            args.eps_min if args.eps_min is not None else grid.lo,
            args.eps_max if args.eps_max is not None else grid.hi,
            args.points if args.points is not None else grid.points,
            grid.log,
        )
    text = figure_csv(args.which, grid)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    s = load_spectrum(args.spectrum)
    fs = [parse_functional(x) for x in (args.f or ["vn"])]
    budget = SearchBudget(
        mode=args.mode,
        resolution=args.resolution,
        samples=args.samples,
        seed=args.seed,
        passes=args.passes,
        max_support=args.max_support,
    )
    sets = SETS if args.set == "both" else (args.set,)
    cands = {w: candidates(s, args.m, args.eps, budget, w) for w in sets}
    reports = [worst_gap(f, s, args.m, args.eps, budget, w, cands[w]) for w in sets for f in fs]
    reports.append(verify_dominance(s, args.m, args.eps, budget, sets, cands))
    for rep in reports:
        label = rep.params.get("f", "")
        out.write(f"{rep.summary()} set={rep.params['set']}{' f=' + label if label else ''}\n")
    if args.json:
        import json

        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2, sort_keys=True)
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {"bound": _cmd_bound, "rank": _cmd_rank, "figure": _cmd_figure, "verify": _cmd_verify}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        sp.set_tolerance()
    except ValueError as exc:
        sys.stderr.write(f"majorbound: {exc}\n")
        return 2
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (MajorboundError, ValueError, OSError) as exc:
        sys.stderr.write(f"majorbound: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
