"""Command-line front-end: reproducible experiments with CSV output.

One executable, subcommand style.  Every report starts with a ``# config:``
line echoing the resolved options as sorted JSON, so identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 identity or
tolerance failure, 2 configuration error.  Scans may run on a thread pool
(SPOSCHUR_THREADS); rows are gathered and sorted before writing, so the
output does not depend on scheduling.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import asymptotics, toeplitz_hankel
from .errors import SposchurError
from .identities import (
    cauchy_check,
    expansion_cross_check,
    jacobi_trudi_cross_check,
    omega_duality_check,
)
from .kernels import (
    KernelConfig,
    SymbolF,
    kernel_bessel_with_error,
    kernel_contour_with_error,
    kernel_fourier_with_error,
)
from .measures import MeasureSpec, correlation_bruteforce, plancherel_measure
from .specializations import Specialization
from .toeplitz_hankel import FredholmConfig, Symbol, bo_check, szego_normalized_det

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SPOSCHUR_THREADS", "1")))
    except ValueError:
        return 1


def _parse_int_range(text: str) -> list[int]:
    """'2:8' -> [2..8]; '3' -> [3]; '1,4,9' -> [1, 4, 9]."""
    if "," in text:
        return [int(t) for t in text.split(",")]
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _parse_float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",")]


def _parse_grid(text: str) -> list[float]:
    """'-2:2:1' -> [-2, -1, 0, 1, 2]; or a comma list."""
    if ":" in text:
        lo, hi, step = (float(t) for t in text.split(":"))
        n = int(round((hi - lo) / step))
        return [lo + i * step for i in range(n + 1)]
    return _parse_float_list(text)


def _parse_point_sets(text: str) -> list[list[int]]:
    """'0;0,1;-2,2' -> [[0], [0, 1], [-2, 2]]."""
    return [[int(t) for t in part.split(",")] for part in text.split(";") if part]


def _load_measure(args) -> MeasureSpec:
    if args.measure:
        doc = args.measure
        if os.path.exists(doc):
            with open(doc) as fh:
                doc = fh.read()
        return MeasureSpec.from_json(json.loads(doc))
    if args.theta is None:
        raise ValueError("either --measure or --theta is required")
    return plancherel_measure(args.family, args.theta)


def _emit(args, config: dict, header: list[str], rows: list[tuple]) -> None:
    lines = ["# config: " + json.dumps(config, sort_keys=True)]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _map(fn, items):
    n = _threads()
    if n == 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _random_rational_pair(rng: random.Random, kmax: int = 3):
    def rho():
        return Specialization.from_powersums(
            {
                k: Fraction(rng.choice([n for n in range(-3, 4) if n]), rng.randint(1, 4))
                for k in range(1, kmax + 1)
            }
        )

    return rho(), rho()


def cmd_verify_identities(args) -> int:
    config = {
        "command": "verify-identities",
        "degree": args.degree,
        "trials": args.trials,
        "seed": args.seed,
    }
    rng = random.Random(args.seed)
    rows: list[tuple] = []
    ok = True

    def record(name: str, degree: int, passed: bool):
        nonlocal ok
        ok = ok and passed
        rows.append((name, degree, "PASS" if passed else "FAIL"))

    d = args.degree
    for trial in range(args.trials):
        rp, rm = _random_rational_pair(rng)
        for family in ("sp", "o", "sp-dual", "o-dual"):
            record(f"cauchy-{family}-trial{trial}", d, cauchy_check(family, rp, rm, d))
    x = Specialization.from_bc_alphabet([Fraction(1, 2), Fraction(2, 5)])
    y = Specialization.from_alphabet([Fraction(1, 3), Fraction(1, 7)])
    dual_deg = min(d, 6)
    record(
        "dual-cauchy-alphabet-sp", dual_deg,
        cauchy_check("sp-dual", x, y, dual_deg, weight_plus=0),
    )
    record(
        "dual-cauchy-alphabet-o", dual_deg,
        cauchy_check("o-dual", x, y, dual_deg, weight_plus=0),
    )
    rho, _ = _random_rational_pair(rng)
    size_cap = min(d, 6)
    record("jacobi-trudi-h-vs-e", size_cap, jacobi_trudi_cross_check(rho, size_cap))
    record("skew-expansion-forms", size_cap, expansion_cross_check(rho, size_cap))
    record("omega-duality", size_cap, omega_duality_check(rho, size_cap))
    gessel_deg = min(d, 8)
    sym_pl = Symbol.plancherel(Fraction(1, 2))
    sym_rand = Symbol(*_random_rational_pair(rng))
    for label, sym in (("plancherel", sym_pl), ("random", sym_rand)):
        for which in ("D1", "D2", "D3", "D4"):
            for size in (1, 2, 3):
                record(
                    f"gessel-{which}-{label}-n{size}",
                    gessel_deg,
                    toeplitz_hankel.gessel_check(sym, which, size, gessel_deg),
                )
    _emit(args, config, ["identity", "degree", "status"], rows)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_kernel(args) -> int:
    reps = args.rep.split(",")
    lo, hi = (int(t) for t in args.range.split(":"))
    config = {
        "command": "kernel-eval",
        "family": args.family,
        "rep": args.rep,
        "theta": args.theta,
        "range": args.range,
        "radii": args.radii,
    }
    r_z, r_w = (float(t) for t in args.radii.split(","))
    cfg = KernelConfig(r_z=r_z, r_w=r_w)
    F = SymbolF.plancherel(args.theta)
    tasks = [
        (rep, a, b)
        for rep in reps
        for a in range(lo, hi + 1)
        for b in range(lo, hi + 1)
    ]

    def run(task):
        rep, a, b = task
        if rep == "contour":
            val, err = kernel_contour_with_error(cfg, F, args.family, a, b)
        elif rep == "bessel":
            val, err = kernel_bessel_with_error(args.theta, args.family, a, b)
        elif rep == "fourier":
            val, err = kernel_fourier_with_error(F, args.family, a, b)
        else:
            raise ValueError(f"unknown representation {rep!r}")
        return (args.family, rep, a, b, val, err)

    rows = sorted(_map(run, tasks), key=lambda r: (r[1], r[2], r[3]))
    _emit(args, config, ["family", "representation", "a", "b", "value", "est_error"], rows)
    return EXIT_OK


def cmd_correlations(args) -> int:
    spec = _load_measure(args)
    point_sets = _parse_point_sets(args.points)
    config = {
        "command": "correlations",
        "family": spec.family,
        "theta": args.theta,
        "points": args.points,
        "tol": args.tol,
    }

    def run(pts):
        res = correlation_bruteforce(spec, pts, tol=args.tol)
        return (";".join(str(p) for p in pts), res.cutoff, res.value, res.tail_estimate)

    rows = _map(run, point_sets)
    _emit(args, config, ["points", "cutoff", "value", "est_tail"], rows)
    return EXIT_OK


def _load_symbol(args) -> Symbol:
    if args.symbol:
        doc = args.symbol
        if os.path.exists(doc):
            with open(doc) as fh:
                doc = fh.read()
        parsed = json.loads(doc)
        return Symbol(
            Specialization.from_json(parsed["rho_plus"]),
            Specialization.from_json(parsed["rho_minus"]),
        )
    if args.theta is None:
        raise ValueError("either --symbol or --theta is required")
    return Symbol.plancherel(args.theta)


def cmd_th_dets(args) -> int:
    sym = _load_symbol(args)
    sizes = _parse_int_range(args.sizes)
    whichs = args.which.split(",")
    config = {
        "command": "th-dets",
        "which": args.which,
        "theta": args.theta,
        "sizes": args.sizes,
    }

    def run(task):
        which, n = task
        val, target = szego_normalized_det(sym, which, n)
        return (which, n, val, target, val - target, 0.0)

    rows = _map(run, [(w, n) for w in whichs for n in sizes])
    _emit(args, config, ["family", "n_or_m", "lhs", "rhs", "gap", "tail_bound"], rows)
    return EXIT_OK


def cmd_bo(args) -> int:
    sym = _load_symbol(args)
    ms = _parse_int_range(args.m)
    families = args.family.split(",")
    config = {
        "command": "bo-check",
        "family": args.family,
        "theta": args.theta,
        "m": args.m,
        "tol": args.tol,
    }
    fred = FredholmConfig(tail_tol=min(1e-10, args.tol / 10))

    def run(task):
        family, m = task
        res = bo_check(sym, family, m, fred)
        return (family, m, res.lhs, res.rhs, res.gap, res.tail_bound)

    rows = _map(run, [(f, m) for f in families for m in ms])
    _emit(args, config, ["family", "n_or_m", "lhs", "rhs", "gap", "tail_bound"], rows)
    worst = max(abs(r[4]) for r in rows) if rows else 0.0
    return EXIT_OK if worst <= args.tol else EXIT_CHECK_FAILED


def cmd_bulk(args) -> int:
    thetas = _parse_float_list(args.theta)
    offsets = [int(v) for v in _parse_grid(args.offsets)]
    config = {
        "command": "bulk-scan",
        "family": args.family,
        "theta": args.theta,
        "alpha": args.alpha,
        "offsets": args.offsets,
    }
    rows = [
        (r.theta, r.x, r.y, r.discrete, r.limit, r.abs_error)
        for r in asymptotics.bulk_scan(args.family, thetas, args.alpha, offsets)
    ]
    _emit(args, config, ["theta", "x", "y", "discrete", "limit", "abs_error"], rows)
    return EXIT_OK


def cmd_edge(args) -> int:
    thetas = _parse_float_list(args.theta)
    grid = _parse_grid(args.grid)
    config = {
        "command": "edge-scan",
        "family": args.family,
        "theta": args.theta,
        "grid": args.grid,
    }
    rows = [
        (r.theta, r.x, r.y, r.discrete, r.limit, r.abs_error)
        for r in asymptotics.edge_scan(args.family, thetas, grid)
    ]
    _emit(args, config, ["theta", "x", "y", "discrete", "limit", "abs_error"], rows)
    return EXIT_OK


def cmd_tw(args) -> int:
    svals = _parse_grid(args.s)
    config = {
        "command": "tw-cdf",
        "sign": args.sign,
        "s": args.s,
        "theta": args.theta,
    }
    family = "sp" if args.sign == "+" else "o"

    def run(s):
        lim = asymptotics.tw_2to1_cdf(args.sign, s)
        if args.theta is not None:
            disc = asymptotics.edge_cdf_discrete(family, args.theta, s)
            lim_eff = asymptotics.tw_2to1_cdf(
                args.sign, asymptotics.edge_cdf_effective_s(family, args.theta, s)
            )
            return (s, 0.0, 0.0, disc, lim, abs(disc - lim_eff))
        return (s, 0.0, 0.0, "", lim, "")

    rows = _map(run, svals)
    _emit(args, config, ["s", "x", "y", "discrete", "limit", "abs_error"], rows)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sposchur",
        description="symplectic/orthogonal Schur measures: identities, kernels, determinants, asymptotics",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-identities", help="exact graded identity suites")
    v.add_argument("--degree", type=int, default=8)
    v.add_argument("--trials", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(fn=cmd_verify_identities)

    k = sub.add_parser("kernel-eval", help="kernel values in chosen representations")
    k.add_argument("--family", choices=["sp", "o"], default="sp")
    k.add_argument("--rep", default="contour,bessel")
    k.add_argument("--theta", type=float, required=True)
    k.add_argument("--range", default="-5:5")
    k.add_argument("--radii", default="1.2,0.8")
    k.set_defaults(fn=cmd_kernel)

    c = sub.add_parser("correlations", help="brute-force correlation oracle reports")
    c.add_argument("--family", choices=["sp", "o", "sp-dual", "o-dual"], default="sp")
    c.add_argument("--theta", type=float)
    c.add_argument("--measure", help="measure JSON (inline or file path)")
    c.add_argument("--points", required=True, help="semicolon-separated point sets")
    c.add_argument("--tol", type=float, default=1e-8)
    c.set_defaults(fn=cmd_correlations)

    t = sub.add_parser("th-dets", help="Toeplitz+Hankel determinants vs Szego limits")
    t.add_argument("--which", default="D1,D2,D3,D4")
    t.add_argument("--theta", type=float)
    t.add_argument("--symbol", help="symbol JSON {rho_plus, rho_minus}")
    t.add_argument("--sizes", default="2:12")
    t.set_defaults(fn=cmd_th_dets)

    b = sub.add_parser("bo-check", help="Borodin-Okounkov determinant comparison")
    b.add_argument("--family", default="sp,o")
    b.add_argument("--theta", type=float)
    b.add_argument("--symbol")
    b.add_argument("--m", default="2:8")
    b.add_argument("--tol", type=float, default=1e-8)
    b.set_defaults(fn=cmd_bo)

    bu = sub.add_parser("bulk-scan", help="bulk scan against the discrete sine kernel")
    bu.add_argument("--family", choices=["sp", "o"], default="sp")
    bu.add_argument("--theta", default="50,200,800")
    bu.add_argument("--alpha", type=float, default=0.0)
    bu.add_argument("--offsets", default="-3:3:1")
    bu.set_defaults(fn=cmd_bulk)

    e = sub.add_parser("edge-scan", help="edge scan against the Airy 2->1 kernels")
    e.add_argument("--family", choices=["sp", "o"], default="sp")
    e.add_argument("--theta", default="50,200,800")
    e.add_argument("--grid", default="-2:2:1")
    e.set_defaults(fn=cmd_edge)

    tw = sub.add_parser("tw-cdf", help="Tracy-Widom 2->1 distributions")
    tw.add_argument("--sign", choices=["+", "-"], default="+")
    tw.add_argument("--s", default="-6:4:0.5")
    tw.add_argument("--theta", type=float)
    tw.set_defaults(fn=cmd_tw)

    for sp in sub.choices.values():
        sp.add_argument("--output", help="write the report to this path")
        sp.add_argument("--config", help="JSON file of option defaults; flags override")
    return p


def _apply_config_file(args, argv: list[str]) -> None:
    """Fill options from a JSON config file; explicit flags win."""
    if not getattr(args, "config", None):
        return
    with open(args.config) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("config file must hold a JSON object")
    given = set()
    for tok in argv:
        if tok.startswith("--"):
            given.add(tok[2:].split("=", 1)[0].replace("-", "_"))
    for key, value in doc.items():
        attr = key.replace("-", "_")
        if attr in ("config", "output", "command"):
            continue
        if not hasattr(args, attr):
            raise ValueError(f"config key {key!r} unknown for this command")
        if attr not in given:
            setattr(args, attr, value)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses its own exit codes
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        from .kernels import reset_numeric_caches

        _apply_config_file(args, argv)
        reset_numeric_caches()  # identical config must give identical bytes
        return args.fn(args)
    except (SposchurError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
