"""Command-line interface: constants, chain tables, disk verification, probes,
scans, and heatmap emission, with reproducible JSON/CSV reports.

Reports carry no timestamps or environment state, so identical argv yields
byte-identical output. Floats are serialized via repr (17 significant digits),
complex values as [re, im] pairs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .roots import (
    DEFAULT_CONFIG,
    BracketInvalid,
    NoConvergence,
    RootConfig,
    alpha_sequence,
    majorant_sequence,
    sigma_index,
    solve_delta_max,
    solve_gamma0,
)
from .series import ArgOfZero, DivisionNearZero, PowerSeries, differentiate
from .verify import (
    DiskGrid,
    Lemma1Report,
    NotAttained,
    ParamOutOfRange,
    ScanReport,
    VerificationReport,
    ZeroOnGrid,
    _grid_values,
    _ratio_to_lower_derivative,
    check_theorem,
    counterexample_scan,
    lemma1_probe,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NUMERIC = 4

HEATMAP_QUANTITIES = ("arg-fp", "arg-fp1-over-z", "arg-jst", "re-ratio")


class FunctionFileError(ValueError):
    """A function-spec file is missing, malformed, or inconsistent."""


# ------------------------------------------------------- function spec files

def parse_function_file(path) -> tuple[PowerSeries, dict]:
    """Load {p, coefficients, truncation?, gap_index?} into a PowerSeries.

    `coefficients` lists [re, im] pairs for the terms after the implied
    leading coefficient 1. `truncation`, when present, must equal
    len(coefficients) + 1. `gap_index` s forces the coefficient of z^(s-1)
    to zero (an error if that would be the leading term).
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise FunctionFileError(f"cannot read {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FunctionFileError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise FunctionFileError(f"{path}: top level must be an object")
    unknown = set(data) - {"p", "coefficients", "truncation", "gap_index"}
    if unknown:
        raise FunctionFileError(f"{path}: unknown field {sorted(unknown)[0]!r}")

    p = data.get("p")
    if not isinstance(p, int) or isinstance(p, bool) or p < 0:
        raise FunctionFileError(f"{path}: field 'p' must be an integer >= 0")
    pairs = data.get("coefficients")
    if not isinstance(pairs, list):
        raise FunctionFileError(f"{path}: field 'coefficients' must be a list of [re, im] pairs")
    tail = []
    for i, pair in enumerate(pairs):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise FunctionFileError(f"{path}: coefficients[{i}] must be an [re, im] pair of numbers")
        c = complex(pair[0], pair[1])
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise FunctionFileError(f"{path}: coefficients[{i}] must be finite")
        tail.append(c)

    if "truncation" in data:
        trunc = data["truncation"]
        if not isinstance(trunc, int) or isinstance(trunc, bool):
            raise FunctionFileError(f"{path}: field 'truncation' must be an integer")
        if trunc != len(tail) + 1:
            raise FunctionFileError(
                f"{path}: truncation {trunc} does not match {len(tail)} tail coefficients "
                f"(expected {len(tail) + 1})"
            )

    meta: dict = {}
    if "gap_index" in data:
        s = data["gap_index"]
        if not isinstance(s, int) or isinstance(s, bool) or s < 2:
            raise FunctionFileError(f"{path}: field 'gap_index' must be an integer >= 2")
        if s - 1 == p:
            raise FunctionFileError(
                f"{path}: gap_index {s} would zero the leading coefficient of z^{p}"
            )
        j = s - 1 - (p + 1)
        if 0 <= j < len(tail):
            tail[j] = 0j
        meta["gap_index"] = s

    raw = np.concatenate(([1.0], np.asarray(tail, dtype=complex) if tail else []))
    return PowerSeries(p, raw), meta


def series_to_spec(f: PowerSeries, gap_index: Optional[int] = None) -> dict:
    """Inverse of parse_function_file for series with leading coefficient 1."""
    if f.coeffs[0] != 1:
        raise ValueError("only series with leading coefficient 1 are serializable")
    spec = {
        "p": f.order_p,
        "coefficients": [[float(c.real), float(c.imag)] for c in f.coeffs[1:]],
        "truncation": f.truncation_N,
    }
    if gap_index is not None:
        spec["gap_index"] = gap_index
    return spec


# ------------------------------------------------------------- serialization

def _c(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _grid_payload(grid: DiskGrid) -> dict:
    return {"r_max": grid.r_max, "n_radial": grid.n_radial, "n_angular": grid.n_angular}


def _solver_payload(cfg: RootConfig) -> dict:
    return {"abs_tol": cfg.abs_tol, "max_iter": cfg.max_iter}


def _verification_payload(rep: VerificationReport) -> dict:
    return {
        "theorem_id": rep.theorem_id,
        "params": rep.params,
        "hypothesis_sup": rep.hypothesis_sup,
        "hypothesis_bound": rep.hypothesis_bound,
        "hypothesis_satisfied": rep.hypothesis_satisfied,
        "conclusions": [
            {
                "label": c.label,
                "kind": c.kind,
                "value": c.value,
                "bound": c.bound,
                "margin": c.margin,
                "witness": _c(c.witness),
            }
            for c in rep.conclusions
        ],
        "verdict": rep.verdict,
        "witnesses": [_c(w) for w in rep.witnesses],
        "notes": list(rep.notes),
    }


def _lemma1_payload(rep: Lemma1Report) -> dict:
    return {
        "gamma": rep.gamma,
        "level": rep.level,
        "r0": rep.r0,
        "z0": _c(rep.z0),
        "ratio": _c(rep.ratio),
        "k_est": rep.k_est,
        "a_est": rep.a_est,
        "imag_purity": rep.imag_purity,
    }


def _scan_payload(rep: ScanReport) -> dict:
    return {
        "theorem_id": rep.theorem_id,
        "p": rep.p,
        "params": rep.params,
        "trials": rep.trials,
        "seed": rep.seed,
        "sampler_N": rep.sampler_N,
        "attempts": rep.attempts,
        "counts": rep.counts,
        "verdicts": list(rep.verdicts),
        "worst_margin": rep.worst_margin,
        "worst_label": rep.worst_label,
        "worst_attempt": rep.worst_attempt,
        "worst_function": series_to_spec(rep.worst_function),
    }


def _strip_out_flag(argv) -> list:
    # the report destination does not affect the result, so the echoed command
    # omits it; stdout and --out emissions are then byte-identical
    kept, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--out":
            skip = True
        elif not a.startswith("--out="):
            kept.append(a)
    return kept


def _envelope(argv, result, grid: Optional[DiskGrid] = None, solver: Optional[RootConfig] = None) -> dict:
    env = {"tool": "argstar", "version": __version__, "command": _strip_out_flag(argv)}
    if grid is not None:
        env["grid"] = _grid_payload(grid)
    if solver is not None:
        env["solver"] = _solver_payload(solver)
    env["result"] = result
    return env


def _flatten(prefix: str, obj, rows: list):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}.{i}" if prefix else str(i), v, rows)
    else:
        if isinstance(obj, bool):
            cell = "true" if obj else "false"
        elif isinstance(obj, float):
            cell = repr(obj)
        elif obj is None:
            cell = ""
        else:
            cell = str(obj)
        rows.append((prefix, cell))


def _to_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _render(env: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, indent=2) + "\n"
    rows: list = []
    _flatten("", env, rows)
    return _to_csv(rows, ("key", "value"))


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------- heatmap

def emit_heatmap(f: PowerSeries, quantity: str, grid: DiskGrid, path) -> None:
    """Write quantity sampled over the grid as CSV rows r,theta,value in
    (radial, angular) order. Arguments are reported on the principal branch."""
    if quantity not in HEATMAP_QUANTITIES:
        raise ParamOutOfRange(f"unknown quantity {quantity!r}; choose from {HEATMAP_QUANTITIES}")
    p = f.order_p
    if quantity == "arg-fp":
        vals = np.angle(_grid_values(differentiate(f, p), 0, grid))
    elif quantity == "arg-fp1-over-z":
        if p < 1:
            raise ParamOutOfRange("arg-fp1-over-z requires p >= 1")
        vals = np.angle(_grid_values(differentiate(f, p - 1), 1, grid))
    elif quantity == "arg-jst":
        if p < 1:
            raise ParamOutOfRange("arg-jst requires p >= 1")
        vals = np.angle(_ratio_to_lower_derivative(f, 1, grid, "arg-jst"))
    else:  # re-ratio
        if p < 1:
            raise ParamOutOfRange("re-ratio requires p >= 1")
        vals = _ratio_to_lower_derivative(f, p, grid, "re-ratio").real
    vals = np.where(vals == -np.pi, np.pi, vals)  # fold onto (-pi, pi]

    lines = ["r,theta,value"]
    radii, angles = grid.radii, grid.angles
    for i in range(grid.n_radial):
        r_txt = repr(float(radii[i]))
        for j in range(grid.n_angular):
            lines.append(f"{r_txt},{repr(float(angles[j]))},{repr(float(vals[i, j]))}")
    Path(path).write_text("\n".join(lines) + "\n")


# ------------------------------------------------------------------ handlers

def _grid_from(args) -> DiskGrid:
    nr, na = args.grid
    return DiskGrid(r_max=args.rmax, n_radial=nr, n_angular=na)


def _cmd_gamma0(args, argv) -> int:
    root, composite = solve_gamma0()
    result = {
        "gamma0": root,
        "composite": composite,
        "residual": abs(2 * root + (2 / math.pi) * math.atan(root) - 1.0),
    }
    _write(_render(_envelope(argv, result, solver=DEFAULT_CONFIG), args.format), args.out)
    return EXIT_PASS


def _cmd_deltamax(args, argv) -> int:
    root, bound = solve_delta_max()
    result = {
        "delta_max": root,
        "bound": bound,
        "residual": abs(2 * root + (2 / math.pi) * math.atan(root) - 2.0),
    }
    _write(_render(_envelope(argv, result, solver=DEFAULT_CONFIG), args.format), args.out)
    return EXIT_PASS


def _cmd_alpha(args, argv) -> int:
    chain = alpha_sequence(args.alpha0, args.count)
    majorant = majorant_sequence(args.count)
    result = {
        "alpha0": chain.alpha0,
        "values": list(chain.values),
        "residuals": list(chain.residuals),
        "majorant": majorant,
        "sigma": sigma_index(chain.values),
    }
    if args.format == "csv":
        rows = [
            (str(k), repr(chain.values[k]), repr(chain.residuals[k]), repr(majorant[k]))
            for k in range(args.count + 1)
        ]
        text = _to_csv(rows, ("k", "alpha", "residual", "majorant"))
    else:
        text = _render(_envelope(argv, result, solver=DEFAULT_CONFIG), "json")
    _write(text, args.out)
    return EXIT_PASS


def _theorem_kwargs(args, meta) -> dict:
    kwargs = {}
    for name in ("alpha1", "alpha0", "delta"):
        v = getattr(args, name, None)
        if v is not None:
            kwargs[name] = v
    s = getattr(args, "s", None)
    if s is None and args.theorem.upper() == "T5":
        s = meta.get("gap_index")
    if s is not None:
        kwargs["s"] = s
    return kwargs


def _cmd_verify(args, argv) -> int:
    f, meta = parse_function_file(args.function)
    grid = _grid_from(args)
    rep = check_theorem(args.theorem, f, grid, **_theorem_kwargs(args, meta))
    _write(_render(_envelope(argv, _verification_payload(rep), grid=grid), args.format), args.out)
    return EXIT_FAIL if rep.verdict == "FAIL" else EXIT_PASS


def _cmd_lemma1(args, argv) -> int:
    q, _ = parse_function_file(args.function)
    grid = _grid_from(args)
    try:
        rep = lemma1_probe(q, args.gamma, grid)
    except NotAttained as e:
        partial = {
            "error": "not_attained",
            "gamma": e.gamma,
            "level": e.level,
            "best_sup": e.best_sup,
            "best_point": _c(e.best_point),
        }
        _write(_render(_envelope(argv, partial, grid=grid), args.format), args.out)
        print(f"lemma1: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    _write(_render(_envelope(argv, _lemma1_payload(rep), grid=grid), args.format), args.out)
    return EXIT_PASS


def _cmd_scan(args, argv) -> int:
    grid = _grid_from(args)
    rep = counterexample_scan(
        args.theorem,
        trials=args.trials,
        seed=args.seed,
        p=args.p,
        grid=grid,
        alpha1=args.alpha1,
        alpha0=args.alpha0,
        delta=args.delta,
        s=args.s,
        N=args.ncoeffs,
    )
    _write(_render(_envelope(argv, _scan_payload(rep), grid=grid), args.format), args.out)
    return EXIT_FAIL if rep.counts["FAIL"] > 0 else EXIT_PASS


def _cmd_heatmap(args, argv) -> int:
    f, _ = parse_function_file(args.function)
    grid = _grid_from(args)
    emit_heatmap(f, args.quantity, grid, args.out)
    return EXIT_PASS


# -------------------------------------------------------------------- parser

def _grid_spec(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if not m or int(m.group(1)) < 1 or int(m.group(2)) < 1:
        raise argparse.ArgumentTypeError(f"expected <n_radial>x<n_angular>, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _add_output_flags(sub):
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="write the report here instead of stdout")


def _add_grid_flags(sub):
    sub.add_argument("--rmax", type=float, default=0.995)
    sub.add_argument("--grid", type=_grid_spec, default=(64, 512), help="<n_radial>x<n_angular>")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argstar",
        description="Numerical checks of argument-bound starlikeness conditions on the unit disk.",
    )
    parser.add_argument("--version", action="version", version=f"argstar {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("gamma0", help="root of 2g + (2/pi)atan(g) = 1 and the composite bound")
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_gamma0)

    sub = subs.add_parser("deltamax", help="root of 2d + (2/pi)atan(d) = 2 and the gap-series bound")
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_deltamax)

    sub = subs.add_parser("alpha", help="implicit alpha chain with majorant column")
    sub.add_argument("--alpha0", type=float, required=True)
    sub.add_argument("--count", type=int, required=True)
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_alpha)

    sub = subs.add_parser("verify", help="check one implication for a function file")
    sub.add_argument("--theorem", required=True, help="t1|c1|c2|t3|t4|t5|l2|l3")
    sub.add_argument("--function", required=True, help="function spec JSON file")
    sub.add_argument("--alpha1", type=float, default=None)
    sub.add_argument("--alpha0", type=float, default=None)
    sub.add_argument("--delta", type=float, default=None)
    sub.add_argument("--s", type=int, default=None, help="gap index (default: file gap_index)")
    _add_grid_flags(sub)
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_verify)

    sub = subs.add_parser("lemma1", help="first-crossing boundary probe for q with q(0)=1")
    sub.add_argument("--function", required=True, help="function spec JSON file with p=0")
    sub.add_argument("--gamma", type=float, required=True)
    _add_grid_flags(sub)
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_lemma1)

    sub = subs.add_parser("scan", help="randomized counterexample scan for one implication")
    sub.add_argument("--theorem", required=True)
    sub.add_argument("--trials", type=int, default=200)
    sub.add_argument("--seed", type=int, required=True)
    sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--alpha1", type=float, default=None)
    sub.add_argument("--alpha0", type=float, default=None)
    sub.add_argument("--delta", type=float, default=None)
    sub.add_argument("--s", type=int, default=None)
    sub.add_argument("--ncoeffs", type=int, default=16, help="truncation of sampled functions")
    _add_grid_flags(sub)
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_scan)

    sub = subs.add_parser("heatmap", help="sample one quantity over the grid as CSV")
    sub.add_argument("--function", required=True)
    sub.add_argument("--quantity", required=True, choices=HEATMAP_QUANTITIES)
    sub.add_argument("--out", required=True)
    _add_grid_flags(sub)
    sub.set_defaults(handler=_cmd_heatmap)

    return parser


def run(argv) -> int:
    """Execute one CLI invocation; returns the exit code without exiting."""
    argv = list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else (0 if code is None else EXIT_USAGE)
    try:
        return args.handler(args, argv)
    except FunctionFileError as e:
        print(f"argstar: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ZeroOnGrid, DivisionNearZero, NoConvergence, ArgOfZero, BracketInvalid) as e:
        print(f"argstar: numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except ParamOutOfRange as e:
        print(f"argstar: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"argstar: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
