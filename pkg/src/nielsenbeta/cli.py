"""Command-line interface.

Usage:
    nielsenbeta eval -x 0.5 -m 1 --format json
    nielsenbeta table --x-min 1 --x-max 10 --points 10 -m 0,1,2 --format csv
    nielsenbeta verify all --seed 42
    nielsenbeta constants

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .core import (
    CONSTANTS,
    M_CAP,
    DomainError,
    EvalConfig,
    EvalPoint,
    NielsenError,
)
from .evaluator import nielsen_beta, reflection_eval, special_values
from .harness import CHECK_NAMES, GridSpec, SuiteConfig, run_all

FORMATS = ("text", "json", "csv")


def _num(v: float) -> str:
    """Human format: 12 significant digits."""
    return f"{v:.12g}"


def _fail(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def _common(f):
    f = click.option("--max-terms", type=click.IntRange(min=1), default=EvalConfig.max_terms,
                     show_default=True, help="Series term budget.")(f)
    f = click.option("--seed", type=int, default=42, show_default=True,
                     help="Seed for randomized checks.")(f)
    f = click.option("--tol", type=float, default=1e-12, show_default=True,
                     help="Target absolute error.")(f)
    f = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text",
                     show_default=True)(f)
    return f


def _config(tol: float, max_terms: int) -> EvalConfig:
    try:
        return EvalConfig(target_abs_tol=tol, max_terms=max_terms)
    except ValueError as exc:
        _fail(str(exc))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(c) if isinstance(c, float) else c for c in row])
    return buf.getvalue().rstrip("\n")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Nielsen beta function beta^(m)(x) with certified error bounds."""


@main.command("eval")
@click.option("-x", "x", type=float, required=True, help="Argument x > 0.")
@click.option("-m", "m", type=int, default=0, show_default=True, help=f"Derivative order, 0..{M_CAP}.")
@click.option("--reflect", is_flag=True, help="Use beta(x) = pi/sin(pi x) - beta(1-x) (m = 0, 0 < x < 1).")
@_common
def cmd_eval(x, m, reflect, fmt, tol, seed, max_terms):
    """Evaluate beta^(m)(x)."""
    cfg = _config(tol, max_terms)
    try:
        p = EvalPoint(x, m)
        if reflect:
            if m != 0:
                raise DomainError("reflection is only available for m = 0")
            r, trace = reflection_eval(p.x, cfg)
        else:
            r, trace = nielsen_beta(p, cfg)
    except NielsenError as exc:
        _fail(str(exc))
    rec = {"x": p.x, "m": p.m, "value": r.value, "error_bound": r.error_bound,
           "method": str(trace.backend), "reductions": trace.reductions_applied,
           "reflection_used": trace.reflection_used}
    if fmt == "json":
        click.echo(json.dumps(rec, indent=2))
    elif fmt == "csv":
        click.echo(_csv(list(rec), [list(rec.values())]))
    else:
        click.echo(f"beta^({p.m})({_num(p.x)}) = {_num(r.value)}")
        click.echo(f"error bound : {r.error_bound:.3e}")
        click.echo(f"method      : {trace.backend}")
        click.echo(f"reductions  : {trace.reductions_applied}")
        click.echo(f"reflection  : {'yes' if trace.reflection_used else 'no'}")


def _orders(text: str) -> list[int]:
    try:
        ms = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        _fail(f"bad order list {text!r}")
    if not ms:
        _fail("empty order list")
    return ms


@main.command("table")
@click.option("--x-min", type=float, default=0.5, show_default=True)
@click.option("--x-max", type=float, default=5.0, show_default=True)
@click.option("--points", type=int, default=10, show_default=True)
@click.option("-m", "m_list", default="0", show_default=True, help="Comma-separated orders.")
@click.option("--spacing", type=click.Choice(["linear", "log"]), default="linear", show_default=True)
@_common
def cmd_table(x_min, x_max, points, m_list, spacing, fmt, tol, seed, max_terms):
    """Tabulate beta^(m) on a grid."""
    cfg = _config(tol, max_terms)
    ms = _orders(m_list)
    try:
        grid = GridSpec(x_min, x_max, points, spacing.capitalize(), seed)
    except ValueError as exc:
        _fail(str(exc))
    rows = []
    try:
        for m in ms:
            for x in grid.values():
                r, trace = nielsen_beta(EvalPoint(x, m), cfg)
                rows.append((x, m, r.value, r.error_bound, str(trace.backend)))
    except NielsenError as exc:
        _fail(str(exc))
    header = ("x", "m", "value", "error_bound", "method")
    if fmt == "json":
        click.echo(json.dumps([dict(zip(header, row)) for row in rows], indent=2))
    elif fmt == "csv":
        click.echo(_csv(header, rows))
    else:
        click.echo(f"{'x':>14} {'m':>3} {'value':>20} {'error_bound':>11}  method")
        for x, m, v, e, meth in rows:
            click.echo(f"{_num(x):>14} {m:>3} {_num(v):>20} {e:>11.3e}  {meth}")


@main.command("verify", help="Run inequality checks by name, or 'all'.\n\nChecks: "
              + ", ".join(CHECK_NAMES))
@click.argument("checks", nargs=-1)
@_common
def cmd_verify(checks, fmt, tol, seed, max_terms):
    if not checks or "all" in checks:
        selected = None
    else:
        unknown = [c for c in checks if c not in CHECK_NAMES]
        if unknown:
            _fail(f"unknown check(s): {', '.join(unknown)}; known: all, {', '.join(CHECK_NAMES)}")
        selected = tuple(checks)
    _config(tol, max_terms)
    reports = run_all(SuiteConfig(seed=seed, tol=tol, checks=selected))
    if fmt == "json":
        click.echo(json.dumps([r.to_dict() for r in reports], indent=2))
    elif fmt == "csv":
        header = ("check_name", "points_tested", "violations", "worst_margin", "parameters")
        click.echo(_csv(header, [tuple(r.to_dict()[k] for k in header) for r in reports]))
    else:
        for r in reports:
            verdict = "PASS" if r.passed else "FAIL"
            click.echo(f"{verdict} {r.check_name:<22} points={r.points_tested:<5} "
                       f"violations={r.violations:<3} worst_margin={r.worst_margin:.3e}")
        n_fail = sum(not r.passed for r in reports)
        click.echo(f"{len(reports) - n_fail}/{len(reports)} checks passed")
    sys.exit(0 if all(r.passed for r in reports) else 1)


@main.command("constants")
@_common
def cmd_constants(fmt, tol, seed, max_terms):
    """Print the constants and the table of closed-form special values."""
    c = CONSTANTS
    specials = [{"x": sv.point.x, "m": sv.point.m, "closed_form": sv.closed_form,
                 "value": sv.numeric} for sv in special_values()]
    if fmt == "json":
        doc = {"ln2": c.LN2, "pi": c.PI, "catalan": c.CATALAN, "zeta2": c.ZETA2,
               "special_values": specials}
        click.echo(json.dumps(doc, indent=2))
    elif fmt == "csv":
        click.echo(_csv(("x", "m", "closed_form", "value"),
                        [tuple(s.values()) for s in specials]))
    else:
        click.echo(f"ln 2    = {_num(c.LN2)}")
        click.echo(f"pi      = {_num(c.PI)}")
        click.echo(f"G       = {_num(c.CATALAN)}")
        click.echo(f"zeta(2) = {_num(c.ZETA2)}")
        click.echo("")
        for s in specials:
            lhs = "beta" + "'" * s["m"] + f"({_num(s['x'])})"
            click.echo(f"{lhs:<12} = {s['closed_form']:<14} = {_num(s['value'])}")


if __name__ == "__main__":
    main()
