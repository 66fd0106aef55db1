"""Command-line interface.

Subcommands:

* ``stat``      -- footrule and inversion count of one permutation
* ``enumerate`` -- weight-enumerator sequences by any algorithm
* ``moments``   -- exact moment values over a range of n
* ``fit``       -- fitted closed-form moment formula with its threshold
* ``limits``    -- scaled-moment limits (normal / binormal targets)
* ``verify``    -- the full regression suite; exit 1 on any failure
* ``bench``     -- wall-clock timing table, CSV

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
All behavior is controlled by flags; output is byte-deterministic for a
fixed command line (bench timings excepted).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction

from . import enumerators, formulas
from .algebra import fraction_to_str
from .moments import (binormal_moment, central_moment, mean_of_poly,
                      mixed_central_moment, scaled_mixed_moment_limit,
                      scaled_moment_limit)
from .perms import (BRUTE_FORCE_MAX, CapExceeded, brute_footrule_poly,
                    brute_joint_poly, footrule, inversions, parse_permutation)

_ALGORITHMS = ("brute", "subset", "motzkin", "cf")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _footrule_series(algorithm: str, n_max: int):
    if algorithm == "brute":
        return [brute_footrule_poly(n) for n in range(1, n_max + 1)]
    if algorithm == "subset":
        return [enumerators.subset_footrule_poly(n) for n in range(1, n_max + 1)]
    if algorithm == "motzkin":
        return enumerators.motzkin_footrule_series(n_max)
    if algorithm == "cf":
        return enumerators.contfrac_footrule_series(n_max)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _joint_series(algorithm: str, n_max: int):
    if algorithm == "brute":
        return [brute_joint_poly(n) for n in range(1, n_max + 1)]
    if algorithm == "subset":
        return [enumerators.subset_joint_poly(n) for n in range(1, n_max + 1)]
    if algorithm == "motzkin":
        return enumerators.motzkin_joint_series(n_max)
    raise ValueError(f"algorithm {algorithm!r} does not produce joint enumerators")


def cmd_stat(args: argparse.Namespace) -> int:
    perm = parse_permutation(args.perm)
    _emit(f"footrule={footrule(perm)} inversions={inversions(perm)}\n", args.out)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else args.n
    if n_max is None:
        raise ValueError("enumerate needs --n or --n-max")
    if n_max < 1:
        raise ValueError("n must be >= 1")
    if args.stat == "footrule":
        entries = _footrule_series(args.algo, n_max)
    elif args.stat == "joint":
        entries = _joint_series(args.algo, n_max)
    else:  # inv: closed form, no algorithm choice
        entries = [enumerators.netto_poly(n) for n in range(1, n_max + 1)]
    if args.n is not None:
        entries = entries[args.n - 1:args.n]
    algorithm = args.algo if args.stat != "inv" else "netto"

    if args.format == "json":
        envelope = enumerators.series_envelope(args.stat, algorithm, entries)
        if args.n is not None:
            envelope["n_max"] = args.n
        text = json.dumps(envelope, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["n,polynomial"]
        start = args.n if args.n is not None else 1
        for i, poly in enumerate(entries, start):
            lines.append(f"{i},{poly.to_text()}")
        text = "\n".join(lines) + "\n"
    else:
        text = "\n".join(p.to_text() for p in entries) + "\n"
    _emit(text, args.out)
    return 0


def _moment_rows(args: argparse.Namespace) -> list[tuple[int, Fraction]]:
    n_max = args.n_max or 12
    r, s = args.r, args.s
    if args.stat == "joint":
        if s is None:
            raise ValueError("joint moments need --r and --s")
        polys = _joint_series(args.algo, n_max)
        return [(n, mixed_central_moment(polys[n - 1], math.factorial(n), r, s))
                for n in range(1, n_max + 1)]
    if args.stat == "inv":
        polys = [enumerators.netto_poly(n) for n in range(1, n_max + 1)]
    else:
        polys = _footrule_series(args.algo, n_max)
    rows = []
    for n in range(1, n_max + 1):
        count = math.factorial(n)
        value = (mean_of_poly(polys[n - 1], count) if r == 1
                 else central_moment(polys[n - 1], count, r))
        rows.append((n, value))
    return rows


def cmd_moments(args: argparse.Namespace) -> int:
    if args.r is None:
        raise ValueError("moments needs --r")
    rows = _moment_rows(args)
    if args.format == "json":
        obj = {"statistic": args.stat, "r": args.r, "s": args.s,
               "values": [[n, fraction_to_str(v)] for n, v in rows]}
        text = json.dumps(obj, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["n,value"] + [f"{n},{fraction_to_str(v)}" for n, v in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(f"n={n}: {v}\n" for n, v in rows)
    _emit(text, args.out)
    return 0


def _fit_for(args: argparse.Namespace) -> formulas.FittedFormula:
    r, s = args.r, args.s
    if args.stat == "joint":
        if s is None:
            raise ValueError("joint fits need --r and --s")
        total = r + s
        hi = formulas.window_hi(total, 3 * total // 2, formulas.BI_DATA_CAP)
        bipolys = enumerators.motzkin_joint_series(hi)
        tables = formulas.mixed_moment_tables(bipolys, total, hi)
        return formulas.fit_mixed_formula(r, s, tables[(r, s)])
    if args.stat == "inv":
        bound = 2 if r == 1 else 3 * r // 2
        hi = formulas.window_hi(r, bound, formulas.UNI_DATA_CAP)
        data = formulas.inversion_moment_data(r, hi)
        return (formulas.fit_mean_formula(data, "inv") if r == 1
                else formulas.fit_moment_formula(r, data, "inv"))
    bound = 2 if r == 1 else 3 * r // 2
    hi = formulas.window_hi(r, bound, formulas.UNI_DATA_CAP)
    polys = enumerators.motzkin_footrule_series(hi)
    data = formulas.footrule_moment_data(r, polys, hi)
    return (formulas.fit_mean_formula(data) if r == 1
            else formulas.fit_moment_formula(r, data))


def cmd_fit(args: argparse.Namespace) -> int:
    if args.r is None:
        raise ValueError("fit needs --r")
    fit = _fit_for(args)
    if args.format == "json":
        text = json.dumps(fit.to_json_obj(), indent=2) + "\n"
    elif args.format == "csv":
        text = ("statistic,r,s,valid_from,formula\n"
                f"{fit.statistic},{fit.r},{'' if fit.s is None else fit.s},"
                f"{fit.valid_from},{fit.formula.to_text()}\n")
    else:
        orders = f"r={fit.r}" + ("" if fit.s is None else f" s={fit.s}")
        text = (f"{fit.statistic} moment {orders}: {fit.formula.to_text()}\n"
                f"valid from n={fit.valid_from} "
                f"(window {fit.fit_window[0]}..{fit.fit_window[1]}, "
                f"{fit.guard_count} guards)\n")
    _emit(text, args.out)
    return 0


def _joint_limit_rows(max_total: int) -> list[tuple[int, int, "object", "object"]]:
    """(r, s, scaled mixed limit, binormal target) for all r + s <= max_total."""
    hi = max(formulas.window_hi(t, 3 * t // 2, formulas.BI_DATA_CAP)
             for t in range(max_total + 1))
    bipolys = enumerators.motzkin_joint_series(hi)
    tables = formulas.mixed_moment_tables(bipolys, max_total, hi)
    fits = {}
    for total in range(max_total + 1):
        for r in range(total + 1):
            s = total - r
            window = formulas.window_hi(total, 3 * total // 2,
                                        formulas.BI_DATA_CAP)
            fits[(r, s)] = formulas.fit_mixed_formula(
                r, s, [d for d in tables[(r, s)] if d[0] <= window])
    lead = {}
    if max_total >= 2:
        lead = {"lc_inv_var": fits[(2, 0)].formula.leading_coefficient,
                "lc_foot_var": fits[(0, 2)].formula.leading_coefficient}
    rows = []
    for total in range(max_total + 1):
        for r in range(total + 1):
            s = total - r
            limit = scaled_mixed_moment_limit(fits[(r, s)].formula, r, s, **lead)
            rows.append((r, s, limit, binormal_moment(r, s)))
    return rows


def cmd_limits(args: argparse.Namespace) -> int:
    if args.stat == "joint":
        rows = _joint_limit_rows(args.max_total or 8)
        if args.format == "json":
            obj = {"statistic": "joint",
                   "limits": [{"r": r, "s": s, "limit": lim.to_json_obj(),
                               "target": tgt.to_json_obj()}
                              for r, s, lim, tgt in rows]}
            text = json.dumps(obj, indent=2) + "\n"
        elif args.format == "csv":
            text = "\n".join(["r,s,limit,binormal"]
                             + [f"{r},{s},{lim.to_text()},{tgt.to_text()}"
                                for r, s, lim, tgt in rows]) + "\n"
        else:
            text = "".join(f"r={r} s={s}: limit={lim.to_text()} "
                           f"target={tgt.to_text()}\n"
                           for r, s, lim, tgt in rows)
        _emit(text, args.out)
        return 0

    max_moment = args.max_moment or 10
    hi = formulas.window_hi(max_moment, 3 * max_moment // 2,
                            formulas.UNI_DATA_CAP)
    if args.stat == "inv":
        def data_for(r: int):
            return formulas.inversion_moment_data(r, hi)
    else:
        polys = enumerators.motzkin_footrule_series(hi)

        def data_for(r: int):
            return formulas.footrule_moment_data(r, polys, hi)
    m2 = formulas.fit_moment_formula(2, data_for(2), args.stat).formula
    rows = []
    for r in range(3, max_moment + 1):
        mr = formulas.fit_moment_formula(r, data_for(r), args.stat).formula
        rows.append((r, scaled_moment_limit(mr, m2, r),
                     Fraction(formulas.normal_moment(r))))
    if args.format == "json":
        obj = {"statistic": args.stat,
               "limits": [{"r": r, "limit": fraction_to_str(lim),
                           "target": fraction_to_str(tgt)}
                          for r, lim, tgt in rows]}
        text = json.dumps(obj, indent=2) + "\n"
    elif args.format == "csv":
        text = "\n".join(["r,limit,normal"]
                         + [f"{r},{lim},{tgt}" for r, lim, tgt in rows]) + "\n"
    else:
        text = "".join(f"r={r}: limit={lim} target={tgt}\n"
                       for r, lim, tgt in rows)
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = formulas.run_verification(max_moment=args.max_moment or 10,
                                       max_total=args.max_total
                                       if args.max_total is not None else 8,
                                       corrupt=args.corrupt_reference)
    if args.format == "json":
        text = report.to_json() + "\n"
    else:
        text = report.to_table() + "\n"
    _emit(text, args.out)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        print(f"FAILED: {names}", file=sys.stderr)
        return 1
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    n_max = args.n_max or 9
    algorithms = [args.algo] if args.algo else list(_ALGORITHMS)
    caps = {"brute": BRUTE_FORCE_MAX,
            "subset": enumerators.SUBSET_FOOTRULE_MAX}
    lines = ["algorithm,n,seconds,note"]
    for algo in algorithms:
        top = min(n_max, caps.get(algo, n_max))
        for n in range(1, top + 1):
            start = time.perf_counter()
            if algo == "brute":
                brute_footrule_poly(n)
            elif algo == "subset":
                enumerators.subset_footrule_poly(n)
            elif algo == "motzkin":
                enumerators.motzkin_footrule_series(n)
            else:
                enumerators.contfrac_footrule_series(n)
            elapsed = time.perf_counter() - start
            note = ""
            if algo == "brute":
                note = f"{n}! permutations"
            elif algo == "subset" and n >= 17:
                note = f"memo holds 2^{n} packed polynomials"
            lines.append(f"{algo},{n},{elapsed:.6f},{note}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="footrule",
        description="Exact footrule/inversion distributions, moments, "
                    "fitted formulas, and normality checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, algo: bool = False) -> None:
        p.add_argument("--format", choices=("plain", "json", "csv"),
                       default="plain")
        p.add_argument("--out", metavar="PATH", default=None)
        if algo:
            p.add_argument("--algo", choices=_ALGORITHMS, default="motzkin")

    p = sub.add_parser("stat", help="statistics of one permutation")
    p.add_argument("perm", help='permutation text, e.g. "[3,1,2]"')
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("enumerate", help="weight-enumerator sequences")
    p.add_argument("--stat", choices=("footrule", "joint", "inv"),
                   default="footrule")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, default=None)
    group.add_argument("--n-max", type=int, default=None)
    common(p, algo=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("moments", help="exact moment values")
    p.add_argument("--stat", choices=("footrule", "joint", "inv"),
                   default="footrule")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    common(p, algo=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("fit", help="fit a closed-form moment formula")
    p.add_argument("--stat", choices=("footrule", "joint", "inv"),
                   default="footrule")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("limits", help="scaled-moment limits")
    p.add_argument("--stat", choices=("footrule", "joint", "inv"),
                   default="footrule")
    p.add_argument("--max-moment", type=int, default=None)
    p.add_argument("--max-total", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("verify", help="run the full regression suite")
    p.add_argument("--max-moment", type=int, default=None)
    p.add_argument("--max-total", type=int, default=None)
    p.add_argument("--corrupt-reference", action="store_true",
                   help="testing aid: corrupt one transcribed formula so "
                        "the failure path can be exercised")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="wall-clock timing table (CSV)")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--algo", choices=_ALGORITHMS, default=None)
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CapExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
