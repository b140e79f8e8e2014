"""Command-line front end: ``linvar <command> [options]``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .classify import CSV_COLUMNS, classify_twist, scan
from .deformation import (
    PRINTED_MIDDLE_ENTRY,
    ExceptionalDirectionError,
    build_family,
    extract_cocycle,
    printed_scalar,
    slope,
    summand_coordinates,
)
from .gl2rep import isotypic_decompose, sym_power_matrix
from .kernel import Matrix, ParseError, SymExpr, parse
from .kernel.symbols import SHORT_NAMES, short_name_table
from .presets import PresetError, load_preset
from .solver import DERIVATIONS, DerivationReport, InconsistentSystemError

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2

ALIASES = {short: long for long, short in SHORT_NAMES.items()}

# Reference display of the symmetric cube of [[chi^(k-1)/delta, phi], [0, delta]],
# with chi standing for chi^(k-1).
SYM3_DISPLAY = (
    ("chi^3*delta^-3", "3*chi^2*phi/delta^2", "3*chi*phi^2/delta", "phi^3"),
    ("0", "chi^2*delta^-1", "2*chi*phi", "delta*phi^2"),
    ("0", "0", "chi*delta", "delta^2*phi"),
    ("0", "0", "0", "delta^3"),
)


class UsageError(Exception):
    pass


def _fmt(e: SymExpr, fmt: str) -> str:
    if fmt == "latex":
        return e.latex()
    if fmt == "text":
        return e.short()
    return str(e)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


# commands -----------------------------------------------------------------

def cmd_verify_sym3(args) -> tuple[int, str]:
    chi, delta, phi = (SymExpr.sym(s) for s in ("chi", "delta", "phi"))
    got = sym_power_matrix(Matrix([[chi / delta, phi], [SymExpr.const(0), delta]]), 3)
    expected = Matrix([[parse(x) for x in row] for row in SYM3_DISPLAY])
    ok = got == expected
    if args.format == "json":
        out = _dump_json({
            "command": "verify-sym3-matrix",
            "match": ok,
            "matrix": [[str(x) for x in r] for r in got.rows],
            "expected": [[str(x) for x in r] for r in expected.rows],
        })
    else:
        lines = [" & ".join(_fmt(x, args.format) for x in r) for r in got.rows]
        sep = " \\\\\n" if args.format == "latex" else "\n"
        out = sep.join(lines) + "\n" + ("MATCH" if ok else "MISMATCH") + "\n"
    return (EXIT_OK if ok else EXIT_VERIFY), out


def cmd_decompose(args) -> tuple[int, str]:
    if args.m < 0:
        raise UsageError("m must be non-negative")
    dec = isotypic_decompose(args.m)
    dims = dec.dimensions()
    ok = dims == [2 * i + 1 for i in range(args.m + 1)] and sum(dims) == (args.m + 1) ** 2
    if args.format == "json":
        payload = dec.to_json(with_projectors=False)
        payload = {"command": "decompose", "ok": ok, **payload}
        return (EXIT_OK if ok else EXIT_VERIFY), _dump_json(payload)
    out = [f"m = {args.m}", f"dimensions = {dims}", f"total = {sum(dims)}"]
    return (EXIT_OK if ok else EXIT_VERIFY), "\n".join(out) + "\n"


def cmd_dump_projectors(args) -> tuple[int, str]:
    if args.m < 0:
        raise UsageError("m must be non-negative")
    return EXIT_OK, _dump_json(isotypic_decompose(args.m).to_json(with_projectors=True))


def _report_json(r: DerivationReport) -> dict:
    return {
        "command": "derive",
        "target": r.target,
        "ok": r.ok,
        "solved_for": r.solved_for,
        "solution": str(r.solution),
        "solution_short": r.solution.short(),
        "free_parameters": list(r.free),
        "system": {
            "unknowns": list(r.system.unknowns),
            "equations": [str(e) for e in r.system.equations],
        },
        "residuals": [str(x) for x in r.residuals],
        "witnesses": [
            {
                "name": w.name,
                "statement": w.statement,
                "residual": str(w.residual),
                "holds": w.holds,
                "required": w.required,
            }
            for w in r.witnesses
        ],
        "extras": {k: str(v) for k, v in r.extras.items()},
    }


def cmd_derive(args, preset) -> tuple[int, str]:
    report = DERIVATIONS[args.target](preset)
    code = EXIT_OK if report.ok else EXIT_VERIFY
    if args.format == "json":
        return code, _dump_json(_report_json(report))
    if args.format == "latex":
        lhs = r"\mathcal{L}_2" if report.solved_for == "L2" else r"\mathcal{L}"
        lines = [f"{lhs} = {report.solution.latex()}"]
    else:
        lines = [f"{report.solved_for} = {report.solution.short()}"]
        for w in report.witnesses:
            status = "ok" if w.holds else ("FAILED" if w.required else "does not hold")
            lines.append(f"# {w.name}: {status}")
    if not report.ok:
        lines.append(f"# verification failed: {report.first_failure()}")
    return code, "\n".join(lines) + "\n"


def _parse_delta(text: str | None) -> SymExpr:
    if text is None:
        return SymExpr.sym("Delta")
    try:
        return parse(text, ALIASES)
    except (ParseError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse --delta {text!r}") from exc


def cmd_coords(args, preset) -> tuple[int, str]:
    if not 0 <= args.summand <= 3:
        raise UsageError("summand must be in 0..3 for End(Sym^3)")
    delta = _parse_delta(args.delta)
    cocycle = extract_cocycle(build_family(preset), delta)
    pairs = summand_coordinates(cocycle, args.summand)
    i = args.summand
    w0 = pairs[i]
    scalar = printed_scalar(i) if i in PRINTED_MIDDLE_ENTRY else None
    try:
        slope_value = slope(w0)
        exceptional = False
    except ExceptionalDirectionError:
        slope_value = None
        exceptional = True
    if args.format == "json":
        payload = {
            "command": "coords",
            "summand": i,
            "delta": str(delta),
            "positions": [
                {
                    "position": p.position,
                    "weight": p.weight,
                    "first": str(p.first),
                    "second": str(p.second),
                    **({"printed_scalar": str(SymExpr.const(scalar))} if p.weight == 0 and scalar is not None else {}),
                }
                for p in pairs
            ],
            "exceptional_direction": exceptional,
            "slope": None if slope_value is None else str(slope_value),
        }
        return EXIT_OK, _dump_json(payload)
    f = args.format
    lines = [f"summand {i}, Delta = {_fmt(delta, f)}"]
    if scalar is not None:
        lines.append(f"scalar to printed normalization = {SymExpr.const(scalar)}")
        lines.append(f"first = {_fmt(w0.first / scalar, f)}")
        lines.append(f"second = {_fmt(w0.second / scalar, f)}")
    else:
        lines.append(f"first = {_fmt(w0.first, f)}")
        lines.append(f"second = {_fmt(w0.second, f)}")
    if exceptional:
        lines.append("exceptional direction: first coordinate is 0, no slope")
    else:
        lines.append(f"slope = {_fmt(slope_value, f)}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_classify(args) -> tuple[int, str]:
    if args.k < 2 or args.n < 0:
        raise UsageError("need n >= 0 and k >= 2")
    if args.scan:
        results = scan(args.n, args.k)
    elif args.r is not None:
        results = [classify_twist(args.n, args.k, args.r)]
    else:
        raise UsageError("classify needs --r <int> or --scan")
    rows = [c.row() for c in results]
    if args.format == "json":
        for row, c in zip(rows, results):
            row["tate_dual_r"] = c.tate_dual_r
        return EXIT_OK, _dump_json({"command": "classify", "rows": rows})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()})
    return EXIT_OK, buf.getvalue()


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex", "text"), default="json")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("--preset", type=Path, help="family preset file (JSON); default: packaged family")

    parser = argparse.ArgumentParser(
        prog="linvar",
        description="Exact derivations of symmetric-power L-invariant formulas.",
        epilog=f"Short symbol names in text output: {short_name_table()}.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-sym3-matrix", parents=[common], help="check the symmetric cube matrix")
    p = sub.add_parser("decompose", parents=[common], help="isotypic decomposition of End(Sym^m)")
    p.add_argument("m", type=int)
    p = sub.add_parser("derive", parents=[common], help="derive an L-invariant formula")
    p.add_argument("target", choices=tuple(DERIVATIONS))
    p = sub.add_parser("coords", parents=[common], help="canonical coordinates of a projected cocycle")
    p.add_argument("summand", type=int)
    p.add_argument("--delta", help="rational (1/3) or expression in D/Delta; default symbolic")
    p = sub.add_parser("classify", parents=[common], help="critical/exceptional twist classifier")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--r", type=int)
    g.add_argument("--scan", action="store_true")
    p = sub.add_parser("dump-projectors", parents=[common], help="JSON dump of ladders and projectors")
    p.add_argument("m", type=int)
    return parser


def dispatch(args: argparse.Namespace) -> tuple[int, str]:
    """Execute parsed arguments; returns (exit code, report text)."""
    preset = load_preset(args.preset) if args.preset else None
    if args.command == "verify-sym3-matrix":
        return cmd_verify_sym3(args)
    if args.command == "decompose":
        return cmd_decompose(args)
    if args.command == "dump-projectors":
        return cmd_dump_projectors(args)
    if args.command == "derive":
        return cmd_derive(args, preset)
    if args.command == "coords":
        return cmd_coords(args, preset)
    return cmd_classify(args)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse usage errors / --help
        return int(exc.code or 0)
    try:
        code, text = dispatch(args)
    except (UsageError, PresetError) as exc:
        print(f"linvar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistentSystemError as exc:
        print(f"linvar: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
