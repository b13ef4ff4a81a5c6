"""
Command-line front end.

    coherent-mor spectrum [--config F] [--preset P] [--format csv|json] ...
    coherent-mor sweep    [--variable delta|zeta|G1] [--lo X] [--hi Y] ...
    coherent-mor solve    [--n N] [--variable ...] [--lo X] [--hi Y] ...
    coherent-mor units    [--config F]
    coherent-mor check    fig3|fig4|fig5a|fig5b|fig6

Exit status: 0 ok, 1 failed anchor, 2 configuration error, 3 numerical
kernel error, 4 no roots.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .config import ConfigError, preset_values, read_config
from .figures import FIGURES, figure_driver, pair_function, preset
from .params import ValidationError, scaled_from_lab
from .rotation import NoRootError, solve_condition
from .scan import SweepError, SweepSpec, evaluate, sweep

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_KERNEL, EXIT_NO_ROOT = 0, 1, 2, 3, 4

COLUMNS = (
    "scan_var",
    "re_s_plus_0", "im_s_plus_0",
    "re_s_minus_0", "im_s_minus_0",
    "re_s_plus_c", "im_s_plus_c",
    "ty_off", "ty_on", "eta", "theta", "regime",
)


def _fmt(x):
    if isinstance(x, str):
        return x
    return "%.17g" % x


def row_record(row):
    return {
        "scan_var": row.value,
        "re_s_plus_0": row.s_plus_0.real,
        "im_s_plus_0": row.s_plus_0.imag,
        "re_s_minus_0": row.s_minus_0.real,
        "im_s_minus_0": row.s_minus_0.imag,
        "re_s_plus_c": row.s_plus_c.real,
        "im_s_plus_c": row.s_plus_c.imag,
        "ty_off": row.ty_off,
        "ty_on": row.ty_on,
        "eta": row.eta,
        "theta": row.theta,
        "regime": row.regime,
    }


def emit_table(records, columns, fmt, out):
    """Write dict records as CSV (17 significant digits) or JSON."""
    if fmt == "json":
        json.dump([{c: r[c] for c in columns} for r in records], out, indent=1)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([_fmt(r[c]) for c in columns])


def _common(p):
    p.add_argument("--config", help="INI file with [atom] [control] [env] [lab] [sweep]")
    p.add_argument("--preset", choices=FIGURES, help="start from a figure parameter set")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--points", type=int, help="grid points (default 2001)")
    p.add_argument("--two-photon", action="store_true", help="lock Delta = -delta")
    p.add_argument("--no-control", action="store_true", help="switch the control field off")
    p.add_argument("--no-field", action="store_true", help="switch the magnetic field off")
    p.add_argument("--workers", type=int, default=1, help="threads for the sweep")


def _range(p):
    p.add_argument("--variable", choices=("delta", "zeta", "G1"))
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coherent-mor",
        description="Control-field enhanced magneto-optical rotation spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="T_y and susceptibilities versus probe detuning")
    _common(p)
    p = sub.add_parser("sweep", help="scan delta, zeta or G1")
    _common(p)
    _range(p)
    p = sub.add_parser("solve", help="roots of the maximal-rotation condition")
    _common(p)
    _range(p)
    p.add_argument("--n", type=int, help="order of the (2n+1) pi condition")
    p = sub.add_parser("units", help="laboratory -> scaled parameter report")
    p.add_argument("--config")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p = sub.add_parser("check", help="compare a figure against its quoted numbers")
    p.add_argument("figure", choices=FIGURES)
    p.add_argument("--points", type=int, default=2001)
    return parser


def _load(args):
    base = preset_values(preset(args.preset)) if getattr(args, "preset", None) else None
    run = read_config(args.config, base=base) if args.config else read_config(base=base)
    for note in run.notes:
        print(f"note: {note}", file=sys.stderr)
    return run


def _spec(args, run, force_delta=False):
    sw = dict(run.sweep)
    for key in ("variable", "lo", "hi"):
        if getattr(args, key, None) is not None:
            sw[key] = getattr(args, key)
    if force_delta and sw["variable"] != "delta":
        sw.update(variable="delta", lo=-300.0, hi=300.0)
    if args.points is not None:
        sw["points"] = args.points
    return SweepSpec(
        variable=sw["variable"],
        lo=float(sw["lo"]),
        hi=float(sw["hi"]),
        points=int(sw["points"]),
        params=run.params,
        delta=float(sw["delta"]),
        control=sw["control"] and not args.no_control,
        two_photon=sw["two_photon"] or args.two_photon,
        field=sw["field"] and not args.no_field,
    ), sw


def _open(args):
    if args.output:
        return open(args.output, "w", encoding="utf-8", newline="")
    return _Stdout()


class _Stdout(io.TextIOBase):
    def write(self, s):
        return sys.stdout.write(s)

    def close(self):
        sys.stdout.flush()


def cmd_spectrum(args, force_delta=True):
    run = _load(args)
    spec, _ = _spec(args, run, force_delta=force_delta)
    rows = sweep(spec, workers=args.workers)
    with _open(args) as out:
        emit_table([row_record(r) for r in rows], COLUMNS, args.format, out)
    return EXIT_OK


def cmd_sweep(args):
    return cmd_spectrum(args, force_delta=False)


def cmd_solve(args):
    run = _load(args)
    spec, sw = _spec(args, run)
    n = args.n if args.n is not None else int(sw["n"])
    roots = solve_condition(pair_function(spec), spec.grid(), spec.params.env.alpha_l, n=n)
    rows = evaluate(spec, roots)
    records = [
        {"variable": spec.variable, "n": n, "root": x, "ty_on": r.ty_on}
        for x, r in zip(roots, rows)
    ]
    with _open(args) as out:
        emit_table(records, ("variable", "n", "root", "ty_on"), args.format, out)
    return EXIT_OK


def cmd_units(args):
    run = read_config(args.config) if args.config else read_config()
    scaled = scaled_from_lab(run.lab)
    records = [
        {"quantity": name, "formula": formula, "value": value}
        for name, (formula, value) in scaled.formulas.items()
    ]
    with _open(args) as out:
        emit_table(records, ("quantity", "formula", "value"), args.format, out)
    return EXIT_OK


def cmd_check(args):
    report = figure_driver(args.figure, points=args.points)
    out = sys.stdout
    out.write(f"{'anchor':<52} {'expected':>12} {'computed':>14} {'tolerance':>12}  result\n")
    for a in report.anchors:
        computed = "-" if math.isnan(a.computed) else f"{a.computed:.6g}"
        out.write(f"{a.name:<52} {a.expected:>12} {computed:>14} {a.tolerance:>12}  "
                  f"{'PASS' if a.passed else 'FAIL'}\n")
    failed = sum(not a.passed for a in report.anchors)
    out.write(f"{args.figure}: {len(report.anchors) - failed}/{len(report.anchors)} anchors pass\n")
    return EXIT_OK if failed == 0 else EXIT_FAIL


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
    "solve": cmd_solve,
    "units": cmd_units,
    "check": cmd_check,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ValidationError, SweepError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoRootError as exc:
        print(f"no roots: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    except (ArithmeticError, np.linalg.LinAlgError, ValueError) as exc:
        print(f"numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_KERNEL


if __name__ == "__main__":
    sys.exit(main())
