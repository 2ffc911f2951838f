"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 bad input or unmet precondition,
64 usage error (unknown or conflicting flags).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import conjecture as cj
from .engine import alpha_lower_bound, format_trace, tau_upper_bound
from .errors import FatPointsError, InternalError, InvalidArgument
from .expected import alpha_c, tau_c
from .figures import FORMATS, figure_dataset
from .formulas import FORMULAS
from .lattice import MultiplicitySequence, SpecializationConfig, isqrt
from .oracle import OracleConfig, oracle_alpha, oracle_hilbert, oracle_tau

EXIT_OK, EXIT_INTERNAL, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 64
# the full algorithm grid is skipped in `compare` above this many points
COMPARE_ALGORITHM_MAX_N = 60


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(text), int(text)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def _mvec(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _jobs(value: int | None) -> int:
    if value is None:
        env = os.environ.get("FATPOINTS_JOBS")
        if env:
            try:
                value = int(env)
            except ValueError:
                raise InvalidArgument(f"FATPOINTS_JOBS must be an integer, got {env!r}") from None
        else:
            value = os.cpu_count() or 1
    if value < 1:
        raise InvalidArgument(f"--jobs must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fatpoints", description="Bounds on alpha and tau for fat points in the plane.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bound", help="certify alpha/tau bounds for one specialization")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int)
    b.add_argument("--mvec", type=_mvec, help="comma-separated multiplicities, overrides --m")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--method", choices=cj.METHODS, default="algorithm")
    b.add_argument("--which", choices=("alpha", "tau", "both"), default="both")
    b.add_argument("--trace", action="store_true")

    v = sub.add_parser("verify", help="check the conjecture for (n, m) with the available criteria")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--kind", choices=("hilbert", "nagata", "resolution"), default="hilbert")

    s = sub.add_parser("search", help="best bounds over a (d, r) grid")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--d-range", type=_int_range)
    s.add_argument("--r-range", type=_int_range)
    s.add_argument("--methods", default="algorithm,thm-a,thm-b,thm-c")
    s.add_argument("--jobs", type=int)

    f = sub.add_parser("figure", help="coverage dataset for figure k")
    f.add_argument("--k", type=int, choices=(1, 2, 3, 4), required=True)
    f.add_argument("--topn", type=int, default=220)
    f.add_argument("--topm", type=int, default=220)
    f.add_argument("--format", choices=tuple(FORMATS), default="plt")
    f.add_argument("--jobs", type=int)

    o = sub.add_parser("oracle", help="random-point rank computation over F_p")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--t", type=int)
    o.add_argument("--prime", type=int, default=2**31 - 1)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--trials", type=int, default=3)

    c = sub.add_parser("compare", help="this tool's bounds next to the conjectural and quoted values")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    return p


def _sequence(args) -> MultiplicitySequence:
    if args.mvec is not None:
        if len(args.mvec) != args.n:
            raise InvalidArgument(f"--mvec has {len(args.mvec)} entries but --n is {args.n}")
        return MultiplicitySequence(args.mvec)
    if args.m is None:
        raise UsageError("fatpoints bound: error: one of --m or --mvec is required")
    return MultiplicitySequence.uniform(args.n, args.m)


def _cmd_bound(args, out) -> None:
    cfg = SpecializationConfig(args.n, args.d, args.r)
    mseq = _sequence(args)
    parts, traces = [], []
    if args.method == "algorithm":
        if args.which in ("alpha", "both"):
            cert = alpha_lower_bound(mseq, cfg)
            parts.append(str(cert))
            traces.append(("alpha", cert))
        if args.which in ("tau", "both"):
            cert = tau_upper_bound(mseq, cfg)
            parts.append(str(cert))
            traces.append(("tau", cert))
    else:
        fa, ft = FORMULAS[args.method]
        if args.which in ("alpha", "both"):
            if fa is None:
                raise InvalidArgument(f"{args.method} gives no alpha bound")
            parts.append(f"alpha>={fa(mseq, cfg)}")
        if args.which in ("tau", "both"):
            if ft is None:
                raise InvalidArgument(f"{args.method} gives no tau bound")
            parts.append(f"tau<={ft(mseq, cfg)}")
    print(" ".join(parts), file=out)
    if args.trace:
        if not traces:
            print("(no trace: closed-form method)", file=out)
        for name, cert in traces:
            print(f"# {name} trace at t={cert.t_witness}", file=out)
            if cert.trace:
                print(format_trace(cert.trace), file=out)


def _witness(w) -> str:
    if w is None:
        return "none"
    if w.d is None:
        return f"{w.value} ({w.method})"
    return f"{w.value} (d={w.d}, r={w.r}, {w.method})"


def _cmd_verify(args, out) -> None:
    n, m = args.n, args.m
    if args.kind == "hilbert":
        v = cj.verify_hilbert(n, m)
        print(f"hilbert {'verified' if v.verified else 'not-verified'}", file=out)
        print(f"alpha>= {_witness(v.alpha)}", file=out)
        print(f"tau<= {_witness(v.tau)}", file=out)
    elif args.kind == "nagata":
        verdict = cj.nagata_check(n, m)
        print(f"nagata {verdict}", file=out)
        print(f"small-m criterion {'holds' if cj.nagata_small_m(n, m) else 'fails'}", file=out)
    else:
        hit = cj.resolution_cases(n, m)
        if hit is None:
            print("resolution not-covered", file=out)
        else:
            print(f"resolution {hit.case}", file=out)
        print(f"conjectural {cj.conjectural_resolution(n, m)}", file=out)


def _search_one(n: int, m: int, d: int, r_range, methods) -> cj.BestBounds:
    return cj.best_bounds(n, m, (d, d), r_range, methods)


def _cmd_search(args, out) -> None:
    n, m = args.n, args.m
    methods = tuple(x.strip() for x in args.methods.split(",") if x.strip())
    d_lo, d_hi = args.d_range or (1, isqrt(n) + 2)
    if d_lo > d_hi:
        raise InvalidArgument(f"empty d range {d_lo}..{d_hi}")
    r_range = args.r_range
    jobs = min(_jobs(args.jobs), d_hi - d_lo + 1)
    ds = list(range(d_lo, d_hi + 1))
    # one task per d; merged in d order so the tie-break matches a serial run
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_one, [n] * len(ds), [m] * len(ds), ds, [r_range] * len(ds), [methods] * len(ds)))
    else:
        parts = [_search_one(n, m, d, r_range, methods) for d in ds]
    best = cj.merge_best(parts)
    print(f"alpha>= {_witness(best.alpha)}", file=out)
    print(f"tau<= {_witness(best.tau)}", file=out)


def _cmd_figure(args, out) -> None:
    _jobs(args.jobs)  # validated; the scan is fast enough to stay serial
    runs = figure_dataset(args.k, args.topn, args.topm)
    out.write(FORMATS[args.format](runs))


def _cmd_oracle(args, out) -> None:
    cfg = OracleConfig(prime=args.prime, seed=args.seed, trials=args.trials)
    if args.t is not None:
        print(f"h({args.t})={oracle_hilbert(args.n, [args.m] * args.n, args.t, cfg)}", file=out)
        return
    print(f"alpha={oracle_alpha(args.n, args.m, cfg)} tau={oracle_tau(args.n, args.m, cfg)}", file=out)


def _cmd_compare(args, out) -> None:
    n, m = args.n, args.m
    print(f"alpha_c={alpha_c(n, m)} tau_c={tau_c(n, m)}", file=out)
    best = cj.best_bounds(n, m, methods=("thm-a", "thm-b", "thm-c"))
    print(f"closed-form alpha>= {_witness(best.alpha)}", file=out)
    print(f"closed-form tau<= {_witness(best.tau)}", file=out)
    if n <= COMPARE_ALGORITHM_MAX_N:
        best = cj.best_bounds(n, m, methods=("algorithm",))
        print(f"algorithm alpha>= {_witness(best.alpha)}", file=out)
        print(f"algorithm tau<= {_witness(best.tau)}", file=out)
    print(f"floor(m sqrt(n))+1={isqrt(m * m * n) + 1}", file=out)
    for kind, source, value in cj.LITERATURE_BOUNDS.get((n, m), []):
        op = ">=" if kind == "alpha" else "<="
        print(f"{source}: {kind}{op}{value}", file=out)


COMMANDS = {
    "bound": _cmd_bound,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "figure": _cmd_figure,
    "oracle": _cmd_oracle,
    "compare": _cmd_compare,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args, out)
    except UsageError as e:
        print(e, file=err)
        return EXIT_USAGE
    except InternalError as e:
        print(f"internal error: {e}", file=err)
        return EXIT_INTERNAL
    except FatPointsError as e:
        print(f"error: {e}", file=err)
        return EXIT_PRECONDITION
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
