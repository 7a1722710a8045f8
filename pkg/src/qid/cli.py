"""Command-line driver: single checks, parameter sweeps, tables, interpolation.

Exit status: 0 when every instance verified, 1 when any was refuted, 2 for
usage errors, malformed inputs, or internal failures.  The json-lines format
is the machine interface; records are self-contained and bit-exact (all
coefficients serialized as exact integer/rational strings, lowest degree
first).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .algebra import Polynomial, RationalFunction
from .identities import (
    GridProof,
    IdentityParams,
    IdentityReport,
    ParameterError,
    verify_dilcher,
    verify_eq8_x1,
    verify_newton_lagrange_eq7,
    verify_power_sum,
    verify_prodinger,
    verify_proposition1,
    verify_uchimura,
    verify_uchimura_generalized,
    verify_van_hamme,
)
from .interpolation import (
    Alphabet,
    DuplicatePoint,
    lagrange_interpolant,
    newton_interpolant,
    newton_table,
)

CLI_IDENTITIES = {
    "van-hamme": "van_hamme",
    "uchimura": "uchimura",
    "dilcher": "dilcher",
    "prodinger": "prodinger",
    "proposition1": "proposition1_general",
    "uchimura-generalized": "uchimura_generalized_y",
    "newton-lagrange-eq7": "newton_lagrange_eq7",
    "eq8-x1": "eq8_x1",
    "power-sum-l5": "power_sum_L5",
}


class InputFileError(ValueError):
    """Malformed point or value file; message names the offending line."""


# ---------------------------------------------------------------------------
# Exact serialization.
# ---------------------------------------------------------------------------

def _coeff_str(c):
    return str(c)


def _coeff_from_str(s):
    return Fraction(s)


def ratfunc_to_obj(value):
    """Exact json object for a rational value: Q(q) element or plain rational."""
    if value is None:
        return None
    if isinstance(value, RationalFunction):
        return {
            "num": [_coeff_str(c) for c in value.num.coeffs],
            "den": [_coeff_str(c) for c in value.den.coeffs],
        }
    return {"num": [_coeff_str(Fraction(value))], "den": ["1"]}


def ratfunc_from_obj(obj):
    if obj is None:
        return None
    num = Polynomial([_coeff_from_str(s) for s in obj["num"]])
    den = Polynomial([_coeff_from_str(s) for s in obj["den"]])
    return RationalFunction(num, den)


def report_to_record(report):
    params = report.params
    record = {
        "identity": params.identity_id,
        "params": {
            k: v
            for k, v in (("n", params.n), ("m", params.m), ("M", params.M))
            if v is not None
        },
        "status": report.status,
        "elapsed_ms": report.elapsed_ms,
    }
    if params.specialization:
        record["params"]["specialization"] = [
            [sym, str(val)] for sym, val in params.specialization
        ]
    if report.grid is not None:
        record["grid"] = {
            "free_symbols": list(report.grid.free_symbols),
            "bounds": dict(report.grid.degree_bounds),
            "samples": {s: [str(v) for v in vs] for s, vs in report.grid.sample_points.items()},
            "pole_rejections": report.grid.pole_rejections,
            "evaluations": report.grid.evaluations,
            "disagreements": [
                [[sym, str(val)] for sym, val in row]
                for row in report.grid.disagreements
            ],
        }
    else:
        record["lhs"] = ratfunc_to_obj(report.lhs_canonical)
        record["rhs"] = ratfunc_to_obj(report.rhs_canonical)
    if report.note:
        record["note"] = report.note
    return record


def record_to_report(record):
    p = record.get("params", {})
    spec = tuple(
        (sym, Fraction(val)) for sym, val in p.get("specialization", [])
    )
    params = IdentityParams(
        record["identity"], n=p.get("n"), m=p.get("m"), M=p.get("M"),
        specialization=spec,
    )
    grid = None
    lhs = rhs = None
    if "grid" in record:
        g = record["grid"]
        grid = GridProof(
            free_symbols=tuple(g["free_symbols"]),
            degree_bounds=dict(g["bounds"]),
            sample_points={s: tuple(int(v) for v in vs) for s, vs in g["samples"].items()},
            pole_rejections=g["pole_rejections"],
            evaluations=g["evaluations"],
            disagreements=tuple(
                tuple((sym, Fraction(val)) for sym, val in row)
                for row in g["disagreements"]
            ),
        )
    else:
        lhs = ratfunc_from_obj(record.get("lhs"))
        rhs = ratfunc_from_obj(record.get("rhs"))
    return IdentityReport(
        params=params,
        status=record["status"],
        lhs_canonical=lhs,
        rhs_canonical=rhs,
        grid=grid,
        witness=grid.disagreements if grid else (),
        elapsed_ms=record["elapsed_ms"],
        note=record.get("note", ""),
    )


def emit_json_line(report, out):
    out.write(json.dumps(report_to_record(report), separators=(",", ":")) + "\n")


_CSV_FIELDS = ["identity", "n", "m", "M", "status", "elapsed_ms", "lhs", "rhs", "note"]


def emit_csv_row(report, writer):
    record = report_to_record(report)
    params = record["params"]
    writer.writerow(
        {
            "identity": record["identity"],
            "n": params.get("n", ""),
            "m": params.get("m", ""),
            "M": params.get("M", ""),
            "status": record["status"],
            "elapsed_ms": f"{record['elapsed_ms']:.3f}",
            "lhs": json.dumps(record.get("lhs")) if record.get("lhs") else "",
            "rhs": json.dumps(record.get("rhs")) if record.get("rhs") else "",
            "note": record.get("note", ""),
        }
    )


def emit_human(report, out):
    params = report.params
    bits = [f"n={params.n}"]
    if params.m is not None:
        bits.append(f"m={params.m}")
    if params.M is not None:
        bits.append(f"M={params.M}")
    line = f"{report.status:9s} {params.identity_id} {' '.join(bits)} ({report.elapsed_ms:.1f} ms)"
    if report.grid is not None:
        line += (
            f" grid[{','.join(report.grid.free_symbols)}]"
            f" evals={report.grid.evaluations}"
            f" rejections={report.grid.pole_rejections}"
        )
    if report.note:
        line += f"  [{report.note}]"
    out.write(line + "\n")


# ---------------------------------------------------------------------------
# Point-file ingestion.
# ---------------------------------------------------------------------------

def _parse_field_element(text, path, lineno):
    text = text.strip()
    try:
        if "[" in text:
            # rational function: [c0,c1,...]/[d0,d1,...], lowest degree first
            num_part, _, den_part = text.partition("/[")
            num_part = num_part.strip()
            if not (num_part.startswith("[") and num_part.endswith("]")):
                raise ValueError("expected [coeffs] or [coeffs]/[coeffs]")
            num = [Fraction(t) for t in num_part[1:-1].split(",") if t.strip()]
            if den_part:
                if not den_part.endswith("]"):
                    raise ValueError("unterminated denominator coefficient list")
                den = [Fraction(t) for t in den_part[:-1].split(",") if t.strip()]
            else:
                den = [Fraction(1)]
            return RationalFunction(Polynomial(num), Polynomial(den))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFileError(f"{path}:{lineno}: cannot parse {text!r}: {exc}") from exc


def load_field_elements(path):
    """One field element per line; blank lines and '#' comments ignored.

    Returns a list of (lineno, value) pairs so callers can attribute
    duplicate-point errors to their source lines.
    """
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            entries.append((lineno, _parse_field_element(line, path, lineno)))
    return entries


def ingest_points(path):
    """Build an Alphabet from a point file, preserving order."""
    entries = load_field_elements(path)
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if entries[i][1] == entries[j][1]:
                raise DuplicatePoint(
                    f"{path}: duplicate point at lines {entries[i][0]} and {entries[j][0]}"
                )
    return Alphabet([v for _, v in entries])


def default_alphabet(n):
    """Deterministic distinct rational points 2, 3, ..., n+1 (avoids 1)."""
    return Alphabet([Fraction(k) for k in range(2, n + 2)])


# ---------------------------------------------------------------------------
# Instance construction and execution.
# ---------------------------------------------------------------------------

def parse_range(text):
    """'A' or 'A..B' as an inclusive integer range."""
    lo, sep, hi = text.partition("..")
    try:
        lo_val = int(lo)
        hi_val = int(hi) if sep else lo_val
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: {exc}") from exc
    if hi_val < lo_val:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo_val, hi_val + 1)


def run_instance(spec):
    """Execute one (identity, kwargs) instance; the sweep worker entry point."""
    kind, kwargs = spec
    if kind == "van_hamme":
        return verify_van_hamme(kwargs["n"])
    if kind == "uchimura":
        return verify_uchimura(kwargs["n"], kwargs["m"])
    if kind == "dilcher":
        return verify_dilcher(kwargs["n"], kwargs["m"])
    if kind == "prodinger":
        return verify_prodinger(kwargs["n"], kwargs["M"])
    if kind == "proposition1_general":
        return verify_proposition1(kwargs["n"], kwargs["m"], kwargs.get("values"))
    if kind == "uchimura_generalized_y":
        return verify_uchimura_generalized(kwargs["n"])
    if kind == "newton_lagrange_eq7":
        return verify_newton_lagrange_eq7(
            kwargs.get("alphabet") or default_alphabet(kwargs["n"]),
            kwargs.get("at", Fraction(1)),
        )
    if kind == "eq8_x1":
        return verify_eq8_x1(kwargs.get("alphabet") or default_alphabet(kwargs["n"]))
    if kind == "power_sum_L5":
        return verify_power_sum(
            kwargs.get("alphabet") or default_alphabet(kwargs["n"]), kwargs["m"]
        )
    raise ParameterError(f"unknown identity {kind!r}")


def _instance_sort_key(spec):
    kind, kwargs = spec
    return (
        kind,
        kwargs.get("n") or 0,
        kwargs.get("m") if kwargs.get("m") is not None else -1,
        kwargs.get("M") if kwargs.get("M") is not None else -1,
    )


def execute_instances(instances, parallelism=1):
    """Run instances, preserving deterministic parameter order in the output."""
    ordered = sorted(instances, key=_instance_sort_key)
    if parallelism <= 1 or len(ordered) <= 1:
        return [run_instance(spec) for spec in ordered]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(run_instance, ordered, chunksize=1))


def build_instances(identity, args):
    """Expand CLI ranges into concrete instances for one identity."""
    instances = []
    n_range = args.n or parse_range("1..8")
    if identity == "van_hamme":
        return [("van_hamme", {"n": n}) for n in n_range]
    if identity == "uchimura":
        m_range = args.m or parse_range("0..10")
        return [("uchimura", {"n": n, "m": m}) for n in n_range for m in m_range]
    if identity == "dilcher":
        m_range = args.m or parse_range("1..6")
        return [("dilcher", {"n": n, "m": m}) for n in n_range for m in m_range]
    if identity == "prodinger":
        for n in n_range:
            m_values = args.M if args.M is not None else range(0, n + 1)
            for M in m_values:
                if M > n:
                    raise ParameterError(f"prodinger requires M <= n, got M={M} n={n}")
                instances.append(("prodinger", {"n": n, "M": M}))
        return instances
    if identity == "proposition1_general":
        for n in n_range:
            m_values = args.m if args.m is not None else range(n - 1, n + 5)
            for m in m_values:
                if m < n - 1:
                    continue
                kwargs = {"n": n, "m": m}
                if getattr(args, "values", None):
                    kwargs["values"] = args.values
                instances.append(("proposition1_general", kwargs))
        return instances
    if identity == "uchimura_generalized_y":
        return [("uchimura_generalized_y", {"n": n}) for n in n_range]
    if identity in ("newton_lagrange_eq7", "eq8_x1"):
        alphabet = ingest_points(args.points) if getattr(args, "points", None) else None
        out = []
        for n in n_range if alphabet is None else [len(alphabet)]:
            kwargs = {"n": n, "alphabet": alphabet}
            if identity == "newton_lagrange_eq7":
                kwargs["at"] = getattr(args, "at", None) or Fraction(1)
            out.append((identity, kwargs))
        return out
    if identity == "power_sum_L5":
        alphabet = ingest_points(args.points) if getattr(args, "points", None) else None
        m_range = args.m or parse_range("0..10")
        sizes = [len(alphabet)] if alphabet is not None else list(n_range)
        return [
            ("power_sum_L5", {"n": n, "m": m, "alphabet": alphabet})
            for n in sizes
            for m in m_range
        ]
    raise ParameterError(f"unknown identity {identity!r}")


def sweep_instances(quick=False):
    """The full verification matrix, or the reduced (n <= 8) quick variant."""
    out = []
    out += [("van_hamme", {"n": n}) for n in range(1, 9 if quick else 31)]
    out += [
        ("uchimura", {"n": n, "m": m})
        for n in range(1, 9 if quick else 16)
        for m in range(0, (6 if quick else 11))
    ]
    out += [
        ("dilcher", {"n": n, "m": m})
        for n in range(1, 9 if quick else 13)
        for m in range(1, (5 if quick else 7))
    ]
    out += [
        ("prodinger", {"n": n, "M": M})
        for n in range(1, 9 if quick else 13)
        for M in range(0, n + 1)
    ]
    out += [
        ("proposition1_general", {"n": n, "m": m})
        for n in range(1, (5 if quick else 9))
        for m in range(n - 1, n + 5)
    ]
    out += [("uchimura_generalized_y", {"n": n}) for n in range(1, 9 if quick else 9)]
    out += [
        ("power_sum_L5", {"n": n, "m": m})
        for n in range(1, 7)
        for m in range(0, 11)
    ]
    out += [("newton_lagrange_eq7", {"n": n}) for n in range(1, 7)]
    out += [("eq8_x1", {"n": n}) for n in range(1, 7)]
    return out


def emit_reports(reports, fmt, out):
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=_CSV_FIELDS)
        writer.writeheader()
        for r in reports:
            emit_csv_row(r, writer)
        return
    for r in reports:
        if fmt == "json-lines":
            emit_json_line(r, out)
        else:
            emit_human(r, out)


def _resolve_parallelism(flag_value):
    if flag_value is not None:
        return max(1, flag_value)
    env = os.environ.get("QID_PARALLELISM")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ParameterError(f"QID_PARALLELISM must be an integer, got {env!r}")
    return 1


def exit_code_for(reports):
    if any(r.status == "error" for r in reports):
        return 2
    if any(r.status == "refuted" for r in reports):
        return 1
    return 0


# ---------------------------------------------------------------------------
# Subcommand implementations.
# ---------------------------------------------------------------------------

def cmd_verify(args, out):
    identity = CLI_IDENTITIES[args.identity]
    instances = build_instances(identity, args)
    reports = execute_instances(instances, _resolve_parallelism(args.parallelism))
    emit_reports(reports, args.format, out)
    return exit_code_for(reports)


def cmd_sweep(args, out):
    if args.target != "all":
        raise ParameterError(f"unknown sweep target {args.target!r}")
    instances = sweep_instances(quick=args.quick)
    reports = execute_instances(instances, _resolve_parallelism(args.parallelism))
    emit_reports(reports, args.format, out)
    summary = {"verified": 0, "refuted": 0, "error": 0}
    for r in reports:
        summary[r.status] += 1
    print(
        f"sweep: {summary['verified']} verified, {summary['refuted']} refuted, "
        f"{summary['error']} errors",
        file=sys.stderr,
    )
    return exit_code_for(reports)


def cmd_table(args, out):
    identity = CLI_IDENTITIES[args.identity]
    instances = build_instances(identity, args)
    reports = execute_instances(instances, _resolve_parallelism(args.parallelism))
    for report in reports:
        params = report.params
        out.write(f"# {params.identity_id} n={params.n} m={params.m} M={params.M}\n")
        out.write(f"status: {report.status}\n")
        if report.lhs_canonical is not None:
            lhs, rhs = report.lhs_canonical, report.rhs_canonical
            var = "q"
            lhs_s = lhs.pretty(var) if isinstance(lhs, RationalFunction) else str(lhs)
            rhs_s = rhs.pretty(var) if isinstance(rhs, RationalFunction) else str(rhs)
            out.write(f"lhs: {lhs_s}\nrhs: {rhs_s}\n")
        elif report.grid is not None:
            out.write(
                f"grid: symbols={list(report.grid.free_symbols)} "
                f"bounds={report.grid.degree_bounds} "
                f"evaluations={report.grid.evaluations} "
                f"pole_rejections={report.grid.pole_rejections}\n"
            )
    return exit_code_for(reports)


def cmd_interp(args, out):
    points = ingest_points(args.points)
    values = [v for _, v in load_field_elements(args.values)]
    if len(values) != len(points):
        raise InputFileError(
            f"{args.values}: {len(values)} values for {len(points)} points"
        )
    table = newton_table(values, points)
    newton = newton_interpolant(table)
    lagrange = lagrange_interpolant(values, points)
    record = {
        "newton_coefficients": [str(c) for c in table.coefficients],
        "interpolant": [str(c) for c in newton.poly.coeffs],
        "agrees": newton.poly == lagrange.poly,
    }
    if args.at is not None:
        record["at"] = str(args.at)
        record["value"] = str(newton.poly.evaluate(args.at))
    if args.format == "json-lines":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(f"newton coefficients: {record['newton_coefficients']}\n")
        out.write(f"interpolant coefficients: {record['interpolant']}\n")
        out.write(f"newton == lagrange: {record['agrees']}\n")
        if args.at is not None:
            out.write(f"value at {record['at']}: {record['value']}\n")
    return 0 if record["agrees"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qid",
        description="Exact verification of q-identities in the field Q(q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--format",
            choices=["json-lines", "csv", "human"],
            default="json-lines",
        )
        p.add_argument("--parallelism", type=int, default=None)

    p_verify = sub.add_parser("verify", help="verify one identity over parameter ranges")
    p_verify.add_argument("identity", choices=sorted(CLI_IDENTITIES))
    p_verify.add_argument("--n", type=parse_range, default=None, metavar="A[..B]")
    p_verify.add_argument("--m", type=parse_range, default=None, metavar="A[..B]")
    p_verify.add_argument("--M", type=parse_range, default=None, metavar="A[..B]")
    p_verify.add_argument("--points", default=None, help="point file for alphabet-based identities")
    p_verify.add_argument("--at", type=Fraction, default=None, help="the x value for eq7")
    p_verify.add_argument(
        "--values",
        type=lambda s: tuple(Fraction(t) for t in s.split(",")),
        default=None,
        metavar="a,b,c,z",
        help="single-point mode for proposition1",
    )
    common(p_verify)

    p_sweep = sub.add_parser("sweep", help="run the whole verification matrix")
    p_sweep.add_argument("target", choices=["all"])
    p_sweep.add_argument("--quick", action="store_true", help="reduced ranges (n <= 8)")
    common(p_sweep)

    p_table = sub.add_parser("table", help="print canonical forms of both sides")
    p_table.add_argument("identity", choices=sorted(CLI_IDENTITIES))
    p_table.add_argument("--n", type=parse_range, required=True, metavar="A[..B]")
    p_table.add_argument("--m", type=parse_range, default=None, metavar="A[..B]")
    p_table.add_argument("--M", type=parse_range, default=None, metavar="A[..B]")
    p_table.add_argument("--points", default=None)
    p_table.add_argument("--at", type=Fraction, default=None)
    p_table.add_argument(
        "--values",
        type=lambda s: tuple(Fraction(t) for t in s.split(",")),
        default=None,
        metavar="a,b,c,z",
    )
    common(p_table)

    p_interp = sub.add_parser("interp", help="interpolate values over a point file")
    p_interp.add_argument("--points", required=True)
    p_interp.add_argument("--values", required=True)
    p_interp.add_argument("--at", type=Fraction, default=None)
    common(p_interp)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "sweep":
            return cmd_sweep(args, out)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "interp":
            return cmd_interp(args, out)
    except (ParameterError, InputFileError, DuplicatePoint, OSError) as exc:
        print(f"qid: error: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
