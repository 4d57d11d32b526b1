"""Command-line interface: ``simplederiv {classify,pfrak,darboux,grid,selftest}``.

Exit codes: 0 simple / success, 1 not simple, 2 usage error,
3 verification or self-test failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .decider import BinomialDerivationSpec, Verdict, decide, verify_witness
from .deriv import Derivation
from .exprio import (
    PolyParseError,
    format_poly,
    format_rational,
    format_upoly,
    parse_poly,
    parse_rational,
    parse_upoly,
)
from .oracle import MODES, SearchConfig, darboux_search
from .pfrak import pfrak

EXIT_SIMPLE = 0
EXIT_NOT_SIMPLE = 1
EXIT_USAGE = 2
EXIT_FAILURE = 3

GRID_CELL_CAP = 10**6
CSV_COLUMNS = (
    "r", "t1", "s1", "t2", "s2", "c1", "c2",
    "verdict", "rule", "witness_kind", "witness_f", "witness_lambda", "verified",
)
JOBS_ENV = "SIMPLEDERIV_JOBS"


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except PolyParseError as exc:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}: {exc}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid non-negative integer {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"invalid non-negative integer {text!r}")
    return v


def _range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        lo_v = int(lo)
        hi_v = int(hi) if sep else lo_v
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use LO:HI or N")
    if lo_v < 0 or hi_v < lo_v:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return lo_v, hi_v


def _coeff_set(text: str) -> List[Fraction]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("coefficient set must not be empty")
    return sorted({_rational(t) for t in items})


def _poly_arg(text: str):
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}")


# --- classify -----------------------------------------------------------------


def _spec_from_args(args) -> BinomialDerivationSpec:
    return BinomialDerivationSpec(args.r, args.t1, args.s1, args.t2, args.s2, args.c1, args.c2)


def _verify_text(verdict: Verdict) -> str:
    if verdict.simple or verdict.witness is None:
        return "n/a"
    return "PASS" if verify_witness(verdict.spec, verdict.witness) else "FAIL"


def cmd_classify(args, out) -> int:
    verdict = decide(_spec_from_args(args), hunt=args.hunt)
    verification = _verify_text(verdict) if args.verify else None
    if args.json:
        payload = verdict.to_dict()
        if verification is not None:
            payload["verification"] = verification
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"verdict: {verdict.outcome}\n")
        out.write(f"rule: {verdict.rule}\n")
        out.write("trace:\n")
        for line in verdict.rule_trace:
            out.write(f"  {line}\n")
        kind, f_text, lam_text = verdict.witness_text()
        if kind:
            out.write(f"witness: {kind}\n")
            if kind == "DarbouxElement":
                out.write(f"  f = {f_text}\n  lambda = {lam_text}\n")
            elif kind.startswith("StableIdeal"):
                out.write(f"  ideal = ({f_text.replace(';', ',')})\n")
            else:
                w = verdict.witness
                out.write(f"  p({format_upoly(w.trace.a)}, {format_upoly(w.trace.b)}) = 0\n")
        if verification is not None:
            out.write(f"verification: {verification}\n")
    if verification == "FAIL":
        return EXIT_FAILURE
    return EXIT_SIMPLE if verdict.simple else EXIT_NOT_SIMPLE


# --- pfrak --------------------------------------------------------------------


def cmd_pfrak(args, out) -> int:
    try:
        a = parse_upoly(args.a)
        b = parse_upoly(args.b)
    except PolyParseError as exc:
        raise UsageError(str(exc))
    if a.is_zero():
        raise UsageError("--a must be a nonzero polynomial")
    p, trace = pfrak(a, b)
    if args.trace:
        for i, (q, r) in enumerate(trace.steps, start=1):
            out.write(f"q{i} = {format_upoly(q)}    r{i} = {format_upoly(r)}\n")
    out.write(format_upoly(p) + "\n")
    return 0


# --- darboux --------------------------------------------------------------------


def cmd_darboux(args, out) -> int:
    d = Derivation(_poly_arg(args.dx), _poly_arg(args.dy))
    cfg = SearchConfig(
        args.max_degx, args.max_degy,
        lambda_bound_x=args.lambda_degx, lambda_bound_y=args.lambda_degy, mode=args.mode,
    )
    certs = darboux_search(d, cfg)
    if not certs:
        out.write("none found within bounds\n")
    for c in certs:
        out.write(f"f = {format_poly(c.f)}    lambda = {format_poly(c.lam)}\n")
    return 0


# --- grid -----------------------------------------------------------------------


def grid_cells(args) -> List[Tuple]:
    ranges = [range(lo, hi + 1) for lo, hi in (args.r, args.t1, args.s1, args.t2, args.s2)]
    total = 1
    for rg in ranges:
        total *= len(rg)
    total *= len(args.c1) * len(args.c2)
    if total > GRID_CELL_CAP:
        raise UsageError(f"grid has {total} cells, above the cap of {GRID_CELL_CAP}")
    return list(itertools.product(*ranges, args.c1, args.c2))


def grid_row(cell: Tuple, verify: bool) -> Tuple[str, ...]:
    spec = BinomialDerivationSpec(*cell)
    verdict = decide(spec)
    kind, f_text, lam_text = verdict.witness_text()
    verified = _verify_text(verdict) if verify else ""
    if verified == "n/a":
        verified = ""
    r, t1, s1, t2, s2, c1, c2 = cell
    return (
        str(r), str(t1), str(s1), str(t2), str(s2), format_rational(c1), format_rational(c2),
        verdict.outcome, verdict.rule, kind, f_text, lam_text, verified,
    )


def _grid_row_star(job):
    return grid_row(*job)


def render_grid(cells: Sequence[Tuple], verify: bool, jobs: int = 1) -> str:
    work = [(c, verify) for c in cells]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_grid_row_star, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        rows = [grid_row(*w) for w in work]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".grid-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_grid(args, out) -> int:
    cells = grid_cells(args)
    jobs = args.jobs
    if jobs is None:
        try:
            jobs = int(os.environ.get(JOBS_ENV, "1"))
        except ValueError:
            raise UsageError(f"{JOBS_ENV} must be an integer")
    text = render_grid(cells, args.verify, max(1, jobs))
    _write_atomic(args.output, text)
    failed = text.count(",FAIL\n")
    out.write(f"wrote {len(cells)} rows to {args.output}\n")
    if args.verify and failed:
        out.write(f"{failed} witnesses failed verification\n")
        return EXIT_FAILURE
    return 0


# --- selftest --------------------------------------------------------------------


def cmd_selftest(args, out) -> int:
    from . import selftest
    from .pfrak import injected_fault

    if args.inject_fault:
        with injected_fault():
            results = selftest.run_all()
    else:
        results = selftest.run_all()
    total = 0
    ok = True
    for res in results:
        total += res.count
        status = "ok" if res.ok else "FAIL"
        out.write(f"{res.name}: {res.count} checks {status}\n")
        if not res.ok:
            ok = False
            out.write(f"  counterexample: {res.failure}\n")
    out.write(f"total: {total} checks, {'all passed' if ok else 'FAILURES'}\n")
    return 0 if ok else EXIT_FAILURE


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplederiv",
        description="Decide simplicity of binomial derivations of Q[x, y] with checkable witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy")
    for name in ("r", "t1", "s1", "t2", "s2"):
        p.add_argument(f"--{name}", type=_nonneg, required=True)
    p.add_argument("--c1", type=_rational, required=True, help="rational, e.g. 3 or -1/2")
    p.add_argument("--c2", type=_rational, required=True)
    p.add_argument("--verify", action="store_true", help="re-check the witness")
    p.add_argument("--json", action="store_true", help="print the verdict as JSON")
    p.add_argument("--hunt", action="store_true",
                   help="search for a concrete Darboux element when only the criterion fails")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pfrak", help="compute p(a, b) for a, b in Q[x]")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--trace", action="store_true", help="print every (q_i, r_i) row")
    p.set_defaults(func=cmd_pfrak)

    p = sub.add_parser("darboux", help="bounded search for Darboux elements")
    p.add_argument("--dx", required=True, help="image of x")
    p.add_argument("--dy", required=True, help="image of y")
    p.add_argument("--max-degx", type=_nonneg, default=3)
    p.add_argument("--max-degy", type=_nonneg, default=3)
    p.add_argument("--lambda-degx", type=_nonneg, default=None)
    p.add_argument("--lambda-degy", type=_nonneg, default=None)
    p.add_argument("--mode", choices=MODES, default="both")
    p.set_defaults(func=cmd_darboux)

    p = sub.add_parser("grid", help="classify every cell of a parameter grid into CSV")
    for name in ("r", "t1", "s1", "t2", "s2"):
        p.add_argument(f"--{name}", type=_range, required=True, metavar="LO:HI")
    p.add_argument("--c1", type=_coeff_set, required=True, metavar="C,C,...")
    p.add_argument("--c2", type=_coeff_set, required=True, metavar="C,C,...")
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("selftest", help="run the built-in property suites")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"simplederiv: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
