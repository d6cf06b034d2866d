"""Command-line front end.

Every subcommand writes a machine-readable report (JSON by default, CSV with
--format csv) to stdout.  Exit codes: 0 success, 1 oracle mismatch in
verify-landau/report, 2 validation error, 64 unknown subcommand.  Rationals
are serialized as "a/b" strings so exact-mode output is byte-stable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from numbers import Rational
from pathlib import Path

from . import ktheory, landau, oracle
from .nct import NCTElement, SkewMatrix, adjoint, cyclic_2cocycle, derivation, star_product, trace
from .orbifold import OrbifoldCoverData, cover_report

KNOWN_COMMANDS = (
    "spectrum",
    "index",
    "trace-range",
    "higher-trace-range",
    "chern",
    "nct",
    "verify-landau",
    "report",
)


def _parse_theta(text: str, exact: bool):
    text = text.strip()
    if "/" in text:
        return Fraction(text)
    try:
        return Fraction(int(text))
    except ValueError:
        pass
    if exact:
        return Fraction(text)
    return float(text)


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _scalar_pair(c):
    """(re, im) JSON pair for an algebra coefficient, exact when possible."""
    if isinstance(c, Rational):
        return {"re": str(Fraction(c)), "im": "0"}
    pair = c.real_imag_exact() if hasattr(c, "real_imag_exact") else None
    if pair is not None:
        return {"re": str(pair[0]), "im": str(pair[1])}
    z = complex(c)
    return {"re": z.real, "im": z.imag}


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_theta_file(path) -> SkewMatrix:
    return SkewMatrix.from_json(_load_json(path))


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_spectrum(args) -> int:
    s = landau.SurfaceField(args.genus, _parse_theta(args.theta, args.exact))
    report = landau.spectrum_report(s)
    if args.format == "csv":
        sys.stdout.write(landau.report_to_csv(report))
    else:
        _emit_json(landau.report_to_json(report))
    return 0


def cmd_index(args) -> int:
    s = landau.SurfaceField(args.genus, _parse_theta(args.theta, args.exact))
    if args.q is not None:
        bundle = landau.canonical_power_bundle(s, args.q)
    elif args.deg is not None:
        bundle = landau.BundleData(_parse_theta(args.deg, args.exact), args.rank)
    else:
        raise ValueError("index needs either --q or --deg")
    value = landau.l2_index(s, bundle)
    row = {
        "g": s.g,
        "theta": landau._scalar_json(s.theta),
        "deg": landau._scalar_json(bundle.deg),
        "rank": bundle.rank,
        "index": landau._scalar_json(value),
    }
    if args.format == "csv":
        sys.stdout.write("g,theta,deg,rank,index\n")
        sys.stdout.write(",".join(str(row[k]) for k in ("g", "theta", "deg", "rank", "index")) + "\n")
    else:
        _emit_json(row)
    return 0


def _emit_generators(gens, fmt) -> int:
    if fmt == "csv":
        sys.stdout.write("subset,value,tag\n")
        for g in gens:
            subset = " ".join(str(i) for i in g.subset)
            value = str(Fraction(g.value)) if isinstance(g.value, Rational) else repr(float(g.value))
            sys.stdout.write(f"{subset},{value},{g.tag}\n")
    else:
        _emit_json(ktheory.generators_to_json(gens))
    return 0


def cmd_trace_range(args) -> int:
    theta = _load_theta_file(args.theta_file)
    return _emit_generators(ktheory.trace_range_generators(theta), args.format)


def cmd_higher_trace_range(args) -> int:
    theta = _load_theta_file(args.theta_file)
    return _emit_generators(ktheory.higher_trace_range_generators(theta), args.format)


def cmd_chern(args) -> int:
    orbits = tuple(int(x) for x in args.orbits.split(",") if x.strip()) if args.orbits else ()
    data = OrbifoldCoverData(args.g_cover, args.group_order, orbits)
    rep = cover_report(data)
    if args.format == "csv":
        keys = ("base_genus", "n_points", "n_orbits", "chern", "cover_identity_check", "hyperbolic")
        sys.stdout.write(",".join(keys) + "\n")
        sys.stdout.write(",".join(str(rep[k]).lower() if isinstance(rep[k], bool) else str(rep[k]) for k in keys) + "\n")
    else:
        _emit_json(rep)
    return 0


def cmd_nct(args) -> int:
    op = args.op
    needs_theta = op in ("star", "adjoint", "cocycle")
    if needs_theta and not args.theta_file:
        raise ValueError(f"nct {op} needs --theta-file")
    theta = _load_theta_file(args.theta_file) if needs_theta else None
    elements = [NCTElement.from_json(_load_json(path)) for path in args.files]

    def expect(count):
        if len(elements) != count:
            raise ValueError(f"nct {op} expects {count} element file(s), got {len(elements)}")

    if op == "star":
        expect(2)
        result = star_product(elements[0], elements[1], theta)
    elif op == "adjoint":
        expect(1)
        result = adjoint(elements[0], theta)
    elif op == "trace":
        expect(1)
        _emit_json(_scalar_pair(trace(elements[0])))
        return 0
    elif op == "derive":
        expect(1)
        if args.j is None:
            raise ValueError("nct derive needs --j (derivation index, 1-based)")
        result = derivation(args.j, elements[0])
    else:  # cocycle
        expect(3)
        value = cyclic_2cocycle(elements[0], elements[1], elements[2], theta)
        _emit_json({"re": value.real, "im": value.imag})
        return 0
    if args.format == "csv":
        sys.stdout.write("n,re,im\n")
        for term in result.to_json()["terms"]:
            n = " ".join(str(x) for x in term["n"])
            sys.stdout.write(f"{n},{term['re']},{term['im']}\n")
    else:
        _emit_json(result.to_json())
    return 0


def _resolve_beta(args) -> float:
    if args.beta is not None:
        return float(args.beta)
    if args.genus is not None and args.theta is not None:
        s = landau.SurfaceField(args.genus, _parse_theta(args.theta, False))
        return float(oracle.rescale_to_unit_curvature(s))
    raise ValueError("verify-landau needs --beta or both --genus and --theta")


def _default_q_max(beta: float) -> int:
    # largest q with q < beta - 1/2
    return math.ceil(beta - 0.5) - 1


def _print_failure_table(result) -> None:
    print("oracle mismatch:", file=sys.stderr)
    print("q,ell,numeric,analytic,rel_error,below_edge", file=sys.stderr)
    for b in result.failures:
        print(
            f"{b.q},{b.ell},{b.numeric!r},{b.analytic!r},{b.rel_error!r},"
            f"{str(b.below_edge).lower()}",
            file=sys.stderr,
        )


def cmd_verify_landau(args) -> int:
    beta = _resolve_beta(args)
    q_max = args.q_max if args.q_max is not None else _default_q_max(beta)
    result = oracle.landau_levels_numeric(
        beta,
        q_max,
        ell_range=(args.ell_min, args.ell_max),
        r_max=args.rmax,
        grid_points=args.grid,
    )
    if args.format == "csv":
        sys.stdout.write(oracle.result_to_csv(result))
    else:
        _emit_json(oracle.result_to_json(result))
    if not result.all_matched:
        _print_failure_table(result)
        return 1
    return 0


def cmd_report(args) -> int:
    from . import figures  # deferred: pulls in matplotlib

    s = landau.SurfaceField(args.genus, _parse_theta(args.theta, args.exact))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    spectrum = landau.spectrum_report(s)
    (out / "spectrum.csv").write_text(landau.report_to_csv(spectrum), encoding="utf-8")
    (out / "spectrum.json").write_text(
        json.dumps(landau.report_to_json(spectrum), indent=2) + "\n", encoding="utf-8"
    )
    files = ["spectrum.csv", "spectrum.json"]
    if spectrum.levels:
        figures.save_spectrum_figure(spectrum, out / "spectrum.png")
        files.append("spectrum.png")
    all_matched = True
    if spectrum.m > 0:
        beta = float(oracle.rescale_to_unit_curvature(s))
        q_max = args.q_max if args.q_max is not None else spectrum.m - 1
        result = oracle.landau_levels_numeric(
            beta,
            q_max,
            ell_range=(args.ell_min, args.ell_max),
            r_max=args.rmax,
            grid_points=args.grid,
        )
        (out / "oracle.csv").write_text(oracle.result_to_csv(result), encoding="utf-8")
        (out / "oracle.json").write_text(
            json.dumps(oracle.result_to_json(result), indent=2) + "\n", encoding="utf-8"
        )
        figures.save_oracle_figure(result, out / "oracle.png")
        files.extend(["oracle.csv", "oracle.json", "oracle.png"])
        all_matched = result.all_matched
        if not all_matched:
            _print_failure_table(result)
    _emit_json({"out_dir": str(out), "files": files, "all_matched": all_matched})
    return 0 if all_matched else 1


# ---------------------------------------------------------------------------
# parser


def _add_format(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")


def _add_exact(p):
    p.add_argument("--exact", action="store_true", help="parse decimal inputs as exact rationals")


def _add_oracle_params(p):
    p.add_argument("--q-max", type=int, default=None)
    p.add_argument("--ell-min", type=int, default=oracle.DEFAULT_ELL_RANGE[0])
    p.add_argument("--ell-max", type=int, default=oracle.DEFAULT_ELL_RANGE[1])
    p.add_argument("--grid", type=int, default=oracle.DEFAULT_GRID_POINTS)
    p.add_argument("--rmax", type=float, default=oracle.DEFAULT_R_MAX)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlandau",
        description="Landau levels on hyperbolic surfaces and the noncommutative torus",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("spectrum", help="certified Landau levels for (genus, theta)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--theta", required=True, help='field strength: "a/b", integer, or float')
    _add_format(p)
    _add_exact(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("index", help="L2 Riemann-Roch index for a bundle")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--deg", default=None)
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--q", type=int, default=None, help="use the bundle K^{-q} instead of --deg")
    _add_format(p)
    _add_exact(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("trace-range", help="K-theory trace-range generators")
    p.add_argument("--theta-file", required=True)
    _add_format(p)
    _add_exact(p)
    p.set_defaults(func=cmd_trace_range)

    p = sub.add_parser("higher-trace-range", help="higher-trace range generators")
    p.add_argument("--theta-file", required=True)
    _add_format(p)
    _add_exact(p)
    p.set_defaults(func=cmd_higher_trace_range)

    p = sub.add_parser("chern", help="orbifold Chern number from cover data")
    p.add_argument("--g-cover", type=int, required=True)
    p.add_argument("--group-order", type=int, required=True)
    p.add_argument("--orbits", default="", help="comma-separated orbit isotropy orders")
    _add_format(p)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("nct", help="twisted group algebra operations on element files")
    p.add_argument("op", choices=("star", "adjoint", "trace", "derive", "cocycle"))
    p.add_argument("files", nargs="*", help="element JSON files")
    p.add_argument("--theta-file", default=None)
    p.add_argument("--j", type=int, default=None, help="derivation index (1-based)")
    _add_format(p)
    p.set_defaults(func=cmd_nct)

    p = sub.add_parser("verify-landau", help="radial eigensolver vs closed-form levels")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--theta", default=None)
    _add_oracle_params(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify_landau)

    p = sub.add_parser("report", help="write spectrum + oracle tables and figures to a directory")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--out", required=True)
    _add_oracle_params(p)
    _add_exact(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith("-") and argv[0] not in KNOWN_COMMANDS:
        print(f"unknown subcommand: {argv[0]!r}", file=sys.stderr)
        return 64
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
