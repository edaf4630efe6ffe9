"""Public evaluation API: backend dispatch, argument reduction, special values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import polygamma as _pg
from . import quadrature as _quad
from . import series as _series
from .core import (
    CATALAN,
    EPS,
    LN2,
    PI,
    UNIT_ROUNDOFF,
    BackendPolicy,
    DomainError,
    EvalConfig,
    EvalPoint,
    Method,
    NielsenError,
    NonConvergence,
    TermBudgetExceeded,
    ToleranceUnreachable,
    ValueWithError,
)

# Auto uses the series only while it stays cheap; beyond this the polygamma
# route is both faster and certified.
SERIES_PAIR_LIMIT = 20_000


@dataclass(frozen=True)
class EvalTrace:
    reductions_applied: int
    reflection_used: bool
    backend: Method


@dataclass(frozen=True)
class SpecialValue:
    point: EvalPoint
    closed_form: str
    numeric: float


def _backend(p: EvalPoint, cfg: EvalConfig) -> ValueWithError:
    policy = cfg.backend_policy
    if policy is BackendPolicy.FORCE_SERIES:
        return _series.beta_series(p, cfg)
    if policy is BackendPolicy.FORCE_QUAD_UNIT:
        return _quad.beta_quad_unit(p, cfg)
    if policy is BackendPolicy.FORCE_QUAD_LAPLACE:
        return _quad.beta_quad_laplace(p, cfg)
    if policy is BackendPolicy.FORCE_POLYGAMMA:
        return _pg.beta_via_polygamma(p)
    tol = cfg.target_abs_tol
    pairs = _series.series_pairs_needed(p.x, p.m, tol)
    if pairs <= SERIES_PAIR_LIMIT and 2 * pairs <= cfg.max_terms:
        try:
            return _series.beta_series(p, cfg)
        except NielsenError:
            pass
    r = _pg.beta_via_polygamma(p)
    if r.error_bound <= tol:
        return r
    try:
        return _series.beta_series(p, cfg)
    except NielsenError:
        pass
    try:
        return _quad.beta_quad_laplace(p, cfg)
    except NonConvergence:
        return r


def nielsen_beta(p: EvalPoint | float, cfg: EvalConfig | None = None, m: int | None = None
                 ) -> tuple[ValueWithError, EvalTrace]:
    """Evaluate beta^(m)(x) with a certified absolute error bound.

    Arguments below ``cfg.reduction_threshold`` are first moved up with
    beta^(m)(x) = (-1)^m m!/x^(m+1) - beta^(m)(x+1).  Raises
    :class:`ToleranceUnreachable` when the final bound exceeds the target.
    """
    if not isinstance(p, EvalPoint):
        p = EvalPoint(p, 0 if m is None else m)
    cfg = cfg or EvalConfig()
    x, m = p.x, p.m
    fact = float(math.factorial(m))
    sgn = -1.0 if m % 2 else 1.0

    # beta(x) = sum_j (-1)^j c/(x+j)^(m+1) + (-1)^n beta(x+n), c = (-1)^m m!
    terms = []
    extra = 0.0
    y = x
    n = 0
    while y < cfg.reduction_threshold:
        terms.append((-1.0) ** n * sgn * fact * y ** -(m + 1))
        y_next = y + 1.0
        # fl(y + 1) may be inexact; move the difference into the bound later
        extra += abs(float(Fraction(y_next) - Fraction(y) - 1))
        y = y_next
        n += 1
    # reduced terms carry their own rounding
    red_abs = math.fsum(abs(t) for t in terms)

    tol = cfg.target_abs_tol
    inner_tol = tol
    if n:
        # the recurrence terms and the final subtraction eat part of the budget
        inner_tol = max(1e-15, tol - (m + 4) * EPS * red_abs - 2 * EPS * red_abs)
    try:
        inner = _backend(EvalPoint(y, m), cfg.with_tol(inner_tol))
    except (TermBudgetExceeded, NonConvergence) as exc:
        raise ToleranceUnreachable(str(exc)) from exc
    except ToleranceUnreachable:
        raise

    if n:
        inner_signed = (-1.0) ** n * inner.value
        value = math.fsum(terms + [inner_signed])
        # |beta^(m+1)| <= (m+1)!/x^(m+2) bounds the drift from inexact shifts
        drift = extra * (n + 1) * math.factorial(m + 1) * x ** -(m + 2) if extra else 0.0
        bound = (inner.error_bound + (m + 4) * EPS * red_abs + UNIT_ROUNDOFF * abs(value)
                 + drift)
        result = ValueWithError(value, bound, inner.method, inner.terms_or_nodes + n)
    else:
        result = inner
    if result.error_bound > tol:
        raise ToleranceUnreachable(
            f"bound {result.error_bound:.3g} exceeds tol {tol:.3g} at x={x}, m={m}")
    return result, EvalTrace(n, False, inner.method)


def beta(x: float, m: int = 0, tol: float = 1e-12) -> float:
    """Convenience wrapper returning only the value."""
    return nielsen_beta(EvalPoint(x, m), EvalConfig(tol))[0].value


def reflection_eval(x: float, cfg: EvalConfig | None = None) -> tuple[ValueWithError, EvalTrace]:
    """beta(x) = pi / sin(pi x) - beta(1 - x), for 0 < x < 1."""
    if not 0 < x < 1:
        raise DomainError(f"reflection needs 0 < x < 1 (got {x!r})")
    cfg = cfg or EvalConfig()
    mirror = 1.0 - x
    mirror_err = abs(float(Fraction(mirror) - (1 - Fraction(x))))
    b, trace = nielsen_beta(EvalPoint(mirror, 0), cfg)
    # sin(pi*x) = sin(pi*min(x, 1-x)) keeps the argument small near 1
    near = min(x, mirror)
    s = math.sin(PI * near)
    pole = PI / s
    # PI*near is off by ~2 eps relative; pi/sin(.) is then off by that times
    # |pi near cot(pi near)| <= 1, plus sin, division and the PI constant
    pole_err = 6 * EPS * pole
    if near == mirror:
        pole_err += mirror_err * PI * PI / s ** 2
    value = pole - b.value
    bound = (pole_err + b.error_bound + UNIT_ROUNDOFF * abs(value)
             + mirror_err / mirror ** 2)
    return (ValueWithError(value, bound, b.method, b.terms_or_nodes),
            EvalTrace(trace.reductions_applied, True, trace.backend))


_SPECIAL = (
    (1.0, 0, "ln 2", LN2),
    (0.5, 0, "pi/2", PI / 2),
    (1.5, 0, "2 - pi/2", 2 - PI / 2),
    (2.0, 0, "1 - ln 2", 1 - LN2),
    (1.0, 1, "-pi^2/12", -PI ** 2 / 12),
    (2.0, 1, "-1 + pi^2/12", -1 + PI ** 2 / 12),
    (3.0, 1, "3/4 - pi^2/12", 0.75 - PI ** 2 / 12),
    (0.5, 1, "-4G", -4 * CATALAN),
    (1.5, 1, "4(G - 1)", 4 * (CATALAN - 1)),
    (2.5, 1, "32/9 - 4G", 32 / 9 - 4 * CATALAN),
)


def special_values() -> list[SpecialValue]:
    """The closed forms at x in {1/2, 1, 3/2, 2, 5/2, 3} tabulated for m = 0, 1."""
    return [SpecialValue(EvalPoint(x, m), form, num) for x, m, form, num in _SPECIAL]


def lookup_special(x: float, m: int) -> SpecialValue | None:
    for sv in special_values():
        if sv.point.x == x and sv.point.m == m:
            return sv
    return None
