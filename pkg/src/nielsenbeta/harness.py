"""Grid-quantified certification of the convexity, monotonicity and additivity
inequalities satisfied by beta^(m).

Every check compares two sides ``lhs <= rhs`` whose values carry certified
error bounds.  The slack ``rhs - lhs`` only counts as a violation when it is
below minus the combined bound, so floating-point noise never fails a check
but a genuine counterexample of size above the bounds always does.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import (
    EPS,
    M_CAP,
    DomainError,
    EvalConfig,
    EvalPoint,
    NielsenError,
    ValueWithError,
)
from .evaluator import nielsen_beta, reflection_eval
from .polygamma import euler_beta, log_eulerbeta_derivative

DEFAULT_TOL = 1e-12
DEFAULT_SEED = 42


class InadmissibleTuple(ValueError):
    """Hoelder exponents whose derivative order m/a + n/b is not an integer."""


class DegenerateInterval(ValueError):
    """Interval too short for a certified difference quotient."""


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    points: int
    spacing: str = "Linear"
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if not (0 < self.x_min < self.x_max):
            raise ValueError("grid needs 0 < x_min < x_max")
        if self.points < 2:
            raise ValueError("grid needs at least 2 points")
        if self.spacing not in ("Linear", "Log"):
            raise ValueError("spacing must be 'Linear' or 'Log'")

    def values(self) -> list[float]:
        if self.spacing == "Log":
            xs = np.geomspace(self.x_min, self.x_max, self.points)
        else:
            xs = np.linspace(self.x_min, self.x_max, self.points)
        return [float(v) for v in xs]


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    points_tested: int
    violations: int
    worst_margin: float
    parameters: str

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(d["check_name"], int(d["points_tested"]), int(d["violations"]),
                   float(d["worst_margin"]), d["parameters"])


# ---------------------------------------------------------------------------
# bounded arithmetic


def _v(value: float, bound: float) -> ValueWithError:
    return ValueWithError(value, abs(bound))


def add(a: ValueWithError, b: ValueWithError) -> ValueWithError:
    v = a.value + b.value
    return _v(v, a.error_bound + b.error_bound + EPS * abs(v))


def sub(a: ValueWithError, b: ValueWithError) -> ValueWithError:
    v = a.value - b.value
    return _v(v, a.error_bound + b.error_bound + EPS * abs(v))


def mul(a: ValueWithError, b: ValueWithError) -> ValueWithError:
    v = a.value * b.value
    e = abs(a.value) * b.error_bound + abs(b.value) * a.error_bound + a.error_bound * b.error_bound
    return _v(v, e + EPS * abs(v))


def div(a: ValueWithError, b: ValueWithError) -> ValueWithError:
    if b.error_bound >= abs(b.value):
        raise NielsenError("divisor not bounded away from zero")
    v = a.value / b.value
    denom = abs(b.value) - b.error_bound
    e = (a.error_bound + abs(v) * b.error_bound) / denom
    return _v(v, e + EPS * abs(v))


def scale(a: ValueWithError, c: float) -> ValueWithError:
    v = a.value * c
    return _v(v, abs(c) * a.error_bound + EPS * abs(v))


def power(a: ValueWithError, p: float) -> ValueWithError:
    """a**p for a certified positive a; p may itself carry one rounding."""
    if a.value - a.error_bound <= 0:
        raise NielsenError("power of a value not certified positive")
    v = a.value ** p
    lo = (a.value - a.error_bound) ** p
    hi = (a.value + a.error_bound) ** p
    e = max(abs(hi - v), abs(v - lo))
    # pow rounding plus an eps-relative error in the exponent
    return _v(v, e + (4 + abs(p * math.log(a.value))) * EPS * abs(v))


def log(a: ValueWithError) -> ValueWithError:
    if a.value - a.error_bound <= 0:
        raise NielsenError("log of a value not certified positive")
    v = math.log(a.value)
    e = -math.log1p(-a.error_bound / a.value) if a.error_bound else 0.0
    return _v(v, e + 2 * EPS * max(abs(v), 1.0))


def absval(a: ValueWithError) -> ValueWithError:
    return _v(abs(a.value), a.error_bound)


def exact(c: float) -> ValueWithError:
    return ValueWithError(float(c), 0.0)


# ---------------------------------------------------------------------------
# cached evaluation


def point_tol(x: float, m: int, tol: float) -> float:
    """Requested absolute tolerance, raised to the double floor m!/x^(m+1) * 256 eps."""
    return max(tol, 256 * EPS * math.factorial(m) * x ** -(m + 1))


@functools.lru_cache(maxsize=200_000)
def _eval(x: float, m: int, tol: float) -> ValueWithError:
    r, _ = nielsen_beta(EvalPoint(x, m), EvalConfig(point_tol(x, m, tol)))
    return r


def bval(x: float, m: int, tol: float = DEFAULT_TOL, computed: bool = False) -> ValueWithError:
    """beta^(m)(x) with its bound.

    ``computed=True`` marks x as the rounded result of an arithmetic
    expression; the bound then also covers moving x by one rounding, using
    |beta^(m+1)| <= (m+1)!/x^(m+2).
    """
    r = _eval(float(x), int(m), float(tol))
    if computed:
        drift = EPS * x * math.factorial(m + 1) * x ** -(m + 2)
        return ValueWithError(r.value, r.error_bound + drift, r.method, r.terms_or_nodes)
    return r


def _float_of(q: Fraction) -> tuple[float, bool]:
    f = float(q)
    return f, Fraction(f) != q


# ---------------------------------------------------------------------------
# slack bookkeeping


@dataclass
class _Tally:
    name: str
    parameters: str
    points: int = 0
    violations: int = 0
    worst: float = math.inf
    details: list = field(default_factory=list)

    def leq(self, lhs: ValueWithError, rhs: ValueWithError) -> float:
        """Record lhs <= rhs; returns the slack."""
        slack = rhs.value - lhs.value
        bound = lhs.error_bound + rhs.error_bound + EPS * (abs(lhs.value) + abs(rhs.value))
        return self.slack(slack, bound)

    def geq_zero(self, v: ValueWithError) -> float:
        return self.slack(v.value, v.error_bound)

    def slack(self, slack: float, bound: float) -> float:
        self.points += 1
        if slack < -bound:
            self.violations += 1
        self.worst = min(self.worst, slack)
        return slack

    def fail(self):
        """A sub-check that could not be certified at all."""
        self.points += 1
        self.violations += 1

    def report(self) -> CheckReport:
        worst = 0.0 if self.worst == math.inf else self.worst
        return CheckReport(self.name, self.points, self.violations, worst, self.parameters)


def _fmt(**kw) -> str:
    parts = []
    for k, v in kw.items():
        if isinstance(v, float):
            v = repr(v)
        elif isinstance(v, (list, tuple)):
            v = "[" + ",".join(repr(i) if isinstance(i, float) else str(i) for i in v) + "]"
        parts.append(f"{k}={v}")
    return ";".join(parts)


def _require_even(m: int):
    if m % 2 or m < 0:
        raise DomainError(f"this check needs an even order m >= 0 (got {m})")


def _require_odd(m: int):
    if m % 2 == 0:
        raise DomainError(f"this check needs an odd order m (got {m})")


# ---------------------------------------------------------------------------
# the checks


def check_complete_monotonicity(grid: GridSpec, k_max: int = 6, tol: float = DEFAULT_TOL,
                                extended: bool = True) -> CheckReport:
    """(-1)^k beta^(k)(x) >= 0 for k <= k_max.

    With ``extended`` the orders k_max+1 .. M_CAP are checked as well; this is
    the statement that (-1)^m beta^(m) is completely monotonic for every m.
    """
    if k_max > M_CAP:
        raise DomainError(f"k_max must be <= {M_CAP}")
    top = M_CAP if extended else k_max
    t = _Tally("complete_monotonicity", _fmt(grid=_grid_str(grid), k_max=k_max, top_order=top))
    for x in grid.values():
        for k in range(top + 1):
            b = bval(x, k, tol)
            t.geq_zero(b if k % 2 == 0 else scale(b, -1.0))
    return t.report()


def check_beta_prime_concavity(grid: GridSpec, tol: float = DEFAULT_TOL) -> CheckReport:
    """beta'''(x) < 0, the concavity of beta' used for the Hermite-Hadamard bound."""
    t = _Tally("beta_prime_concavity", _fmt(grid=_grid_str(grid)))
    for x in grid.values():
        t.geq_zero(scale(bval(x, 3, tol), -1.0))
    return t.report()


def check_hermite_hadamard(a: float, b: float, tol: float = DEFAULT_TOL) -> CheckReport:
    """(beta'(a)+beta'(b))/2 <= (beta(b)-beta(a))/(b-a) <= beta'((a+b)/2)."""
    if a <= 0 or b <= 0:
        raise DomainError("a and b must be positive")
    if b < a:
        a, b = b, a
    if b - a < 1e-8:
        raise DegenerateInterval(f"b - a = {b - a!r} is below 1e-8")
    t = _Tally("hermite_hadamard", _fmt(a=a, b=b))
    width = b - a
    width_v = _v(width, EPS * width)
    slope = div(sub(bval(b, 0, tol), bval(a, 0, tol)), width_v)
    mid = (a + b) / 2
    ends = scale(add(bval(a, 1, tol), bval(b, 1, tol)), 0.5)
    t.leq(ends, slope)
    t.leq(slope, bval(mid, 1, tol, computed=True))
    return t.report()


def _as_fraction(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, str):
        return Fraction(a)
    return Fraction(a)


def holder_order(m: int, n: int, a) -> int:
    """The derivative order m/a + n/b with 1/a + 1/b = 1; raises if not an integer."""
    a = _as_fraction(a)
    if a <= 1:
        raise InadmissibleTuple("Hoelder exponent a must be > 1")
    order = m / a + n * (1 - 1 / a)
    if order.denominator != 1:
        raise InadmissibleTuple(f"m/a + n/b = {order} is not an integer (m={m}, n={n}, a={a})")
    return int(order)


def check_holder(x: float, y: float, m: int, n: int, a, tol: float = DEFAULT_TOL,
                 _tally: _Tally | None = None) -> CheckReport:
    """|beta^(m/a+n/b)(x/a + y/b)| <= |beta^(m)(x)|^(1/a) |beta^(n)(y)|^(1/b)."""
    a = _as_fraction(a)
    r = holder_order(m, n, a)
    if r > M_CAP:
        raise DomainError("combined order above M_CAP")
    inv_a = 1 / a
    inv_b = 1 - inv_a
    z, inexact = _float_of(Fraction(x) * inv_a + Fraction(y) * inv_b)
    t = _tally or _Tally("holder", _fmt(x=x, y=y, m=m, n=n, a=str(a)))
    lhs = absval(bval(z, r, tol, computed=inexact))
    rhs = mul(power(absval(bval(x, m, tol)), float(inv_a)),
              power(absval(bval(y, n, tol)), float(inv_b)))
    t.leq(lhs, rhs)
    return t.report()


def admissible_holder_tuples(max_order: int = 4, max_den: int = 4, max_a: int = 4):
    """(m, n, a) with a = p/q in (1, max_a], q <= max_den, and m/a + n/b integral."""
    exps = sorted({Fraction(p, q) for q in range(1, max_den + 1)
                   for p in range(q + 1, max_a * q + 1)})
    out = []
    for a in exps:
        for m in range(max_order + 1):
            for n in range(max_order + 1):
                try:
                    holder_order(m, n, a)
                except InadmissibleTuple:
                    continue
                out.append((m, n, a))
    return out


def check_turan(x: float, n: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """|beta^(n+1)(x)|^2 <= |beta^(n+2)(x)| |beta^(n)(x)|."""
    if n + 2 > M_CAP:
        raise DomainError("n + 2 must be <= M_CAP")
    t = _Tally("turan", _fmt(x=x, n=n))
    b0, b1, b2 = (absval(bval(x, n + i, tol)) for i in range(3))
    t.leq(mul(b1, b1), mul(b2, b0))
    return t.report()


def q_second_derivative(x: float, a: float, m: int, tol: float = DEFAULT_TOL) -> ValueWithError:
    """Q''(x) for Q = e^(ax) beta^(m)(x), from backend derivative values."""
    b0, b1, b2 = (bval(x, m + i, tol) for i in range(3))
    bracket = add(add(scale(b0, a * a), scale(b1, 2 * a)), b2)
    ex = math.exp(a * x)
    out = scale(bracket, ex)
    return _v(out.value, out.error_bound + 2 * EPS * abs(out.value))


def check_convexity_Q(grid: GridSpec, a: float, m: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """Q(x) = e^(ax) beta^(m)(x) is convex for even m: Q'' >= 0."""
    _require_even(m)
    if m + 2 > M_CAP:
        raise DomainError("m + 2 must be <= M_CAP")
    t = _Tally("convexity_q", _fmt(grid=_grid_str(grid), a=float(a), m=m))
    for x in grid.values():
        t.geq_zero(q_second_derivative(x, a, m, tol))
    return t.report()


def p_second_derivative(x: float, alpha: float, m: int, tol: float = DEFAULT_TOL) -> ValueWithError:
    """P'' = P {(alpha b1/b0)^2 + alpha (b2 b0 - b1^2)/b0^2} for P = (beta^(m))^alpha."""
    b0, b1, b2 = (bval(x, m + i, tol) for i in range(3))
    P = power(b0, alpha)
    ratio = scale(div(b1, b0), alpha)
    turan_gap = div(sub(mul(b2, b0), mul(b1, b1)), mul(b0, b0))
    return mul(P, add(mul(ratio, ratio), scale(turan_gap, alpha)))


def check_convexity_P(grid: GridSpec, alpha: float, m: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """P(x) = [beta^(m)(x)]^alpha is convex for even m and alpha > 0."""
    _require_even(m)
    if alpha <= 0:
        raise DomainError("alpha must be > 0")
    t = _Tally("convexity_p", _fmt(grid=_grid_str(grid), alpha=float(alpha), m=m))
    for x in grid.values():
        t.geq_zero(p_second_derivative(x, alpha, m, tol))
    return t.report()


def ratio_U(x: float, k: float, m: int, tol: float = DEFAULT_TOL) -> ValueWithError:
    kx = k * x
    return div(bval(kx, m, tol, computed=True), power(bval(x, m, tol), k))


def check_ratio_U(x1: float, x2: float, k: float, m: int, tol: float = DEFAULT_TOL,
                  _tally: _Tally | None = None) -> CheckReport:
    """U(x) = beta^(m)(kx)/beta^(m)(x)^k increases for k > 1, decreases for 0 < k <= 1."""
    _require_even(m)
    if not 0 < x1 < x2:
        raise DomainError("need 0 < x1 < x2")
    if k <= 0:
        raise DomainError("k must be > 0")
    t = _tally or _Tally("ratio_u", _fmt(x1=x1, x2=x2, k=float(k), m=m))
    u1, u2 = ratio_U(x1, k, m, tol), ratio_U(x2, k, m, tol)
    if k > 1:
        t.leq(u1, u2)
    else:
        t.leq(u2, u1)
    return t.report()


def check_ratio_corollary(x: float, y: float, k: float, m: int, tol: float = DEFAULT_TOL,
                          _tally: _Tally | None = None) -> CheckReport:
    """(beta^(m)(y)/beta^(m)(x))^k <= beta^(m)(ky)/beta^(m)(kx) for k > 1, reversed for k <= 1."""
    _require_even(m)
    if not 0 < x <= y:
        raise DomainError("need 0 < x <= y")
    if k <= 0:
        raise DomainError("k must be > 0")
    t = _tally or _Tally("ratio_corollary", _fmt(x=x, y=y, k=float(k), m=m))
    left = power(div(bval(y, m, tol), bval(x, m, tol)), k)
    right = div(bval(k * y, m, tol, computed=True), bval(k * x, m, tol, computed=True))
    if x == y:
        # both sides are exactly 1
        left, right = exact(1.0), exact(1.0)
    if k > 1:
        t.leq(left, right)
    else:
        t.leq(right, left)
    return t.report()


def check_omega(grid: GridSpec, a: float, m: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """Omega(x) = beta^(m)(a)/beta^(m)(x+a): Omega >= 1, nondecreasing, log-concave."""
    _require_even(m)
    if a <= 0:
        raise DomainError("a must be > 0")
    t = _Tally("omega", _fmt(grid=_grid_str(grid), a=float(a), m=m))
    xs = grid.values()
    base = bval(a, m, tol)
    shifted = [bval(x + a, m, tol, computed=True) for x in xs]
    omega = [div(base, s) for s in shifted]
    for o in omega:
        t.leq(exact(1.0), o)
    for o1, o2 in zip(omega, omega[1:]):
        t.leq(o1, o2)
    # ln Omega = ln beta(a) - ln beta(x+a); the constant drops out of the
    # three-point concavity test, so use g = -ln beta(x+a)
    g = [scale(log(s), -1.0) for s in shifted]
    for i in range(1, len(xs) - 1):
        w = (xs[i + 1] - xs[i]) / (xs[i + 1] - xs[i - 1])
        chord = add(scale(g[i - 1], w), scale(g[i + 1], 1 - w))
        # w carries a few roundings; widen by eps-relative on the chord terms
        chord = _v(chord.value, chord.error_bound + 4 * EPS * (abs(g[i - 1].value) + abs(g[i + 1].value)))
        t.leq(chord, g[i])
    return t.report()


def check_subadditivity(xy_pairs: Iterable[tuple[float, float]], m: int,
                        tol: float = DEFAULT_TOL) -> CheckReport:
    """beta^(m)(x+y) <= beta^(m)(x) + beta^(m)(y) for even m, >= for odd m."""
    if m < 0 or m > M_CAP:
        raise DomainError(f"m must be in [0, {M_CAP}]")
    pairs = list(xy_pairs)
    t = _Tally("subadditivity", _fmt(m=m, pairs=len(pairs)))
    for x, y in pairs:
        joint = bval(x + y, m, tol, computed=True)
        split = add(bval(x, m, tol), bval(y, m, tol))
        if m % 2 == 0:
            t.leq(joint, split)
        else:
            t.leq(split, joint)
    return t.report()


def check_starshaped(x: float, alpha: float, m: int, tol: float = DEFAULT_TOL,
                     _tally: _Tally | None = None) -> CheckReport:
    """beta^(m)(alpha x) <= alpha beta^(m)(x) for odd m and alpha in (0, 1]."""
    _require_odd(m)
    if m > M_CAP:
        raise DomainError("m must be <= M_CAP")
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    t = _tally or _Tally("starshaped", _fmt(x=x, alpha=float(alpha), m=m))
    if alpha == 1:
        t.leq(bval(x, m, tol), bval(x, m, tol))
    else:
        t.leq(bval(alpha * x, m, tol, computed=True), scale(bval(x, m, tol), alpha))
    return t.report()


def check_product(x: float, y: float, m: int, tol: float = DEFAULT_TOL,
                  _tally: _Tally | None = None) -> CheckReport:
    """[beta^(m)(xy)]^2 <= beta^(m)(x) beta^(m)(y) for x, y >= 1."""
    if x < 1 or y < 1:
        raise DomainError("x and y must be >= 1")
    t = _tally or _Tally("product", _fmt(x=x, y=y, m=m))
    xy, inexact = _float_of(Fraction(x) * Fraction(y))
    p = bval(xy, m, tol, computed=inexact)
    t.leq(mul(p, p), mul(bval(x, m, tol), bval(y, m, tol)))
    return t.report()


def check_product_general(xs: Sequence[float], m: int, tol: float = DEFAULT_TOL,
                          _tally: _Tally | None = None) -> CheckReport:
    """beta^(m)(prod x_i) <= (prod beta^(m)(x_i))^(1/n), compared in the log domain."""
    _require_even(m)
    xs = [float(v) for v in xs]
    if not xs or any(v < 1 for v in xs):
        raise DomainError("all x_i must be >= 1")
    t = _tally or _Tally("product_general", _fmt(xs=xs, m=m))
    prod = Fraction(1)
    for v in xs:
        prod *= Fraction(v)
    P, inexact = _float_of(prod)
    left = log(bval(P, m, tol, computed=inexact))
    logs = [log(bval(v, m, tol)) for v in xs]
    acc = logs[0]
    for lv in logs[1:]:
        acc = add(acc, lv)
    right = scale(acc, 1.0 / len(xs))
    t.leq(left, right)
    return t.report()


def check_minkowski(x: float, y: float, m: int, n: int, s: float, tol: float = DEFAULT_TOL,
                    _tally: _Tally | None = None) -> CheckReport:
    """(|beta^(m)(x)| + |beta^(n)(y)|)^(1/s) <= |beta^(m)(x)|^(1/s) + |beta^(n)(y)|^(1/s)."""
    if s < 1:
        raise DomainError("s must be >= 1")
    t = _tally or _Tally("minkowski", _fmt(x=x, y=y, m=m, n=n, s=float(s)))
    A = absval(bval(x, m, tol))
    B = absval(bval(y, n, tol))
    p = 1.0 / s
    t.leq(power(add(A, B), p), add(power(A, p), power(B, p)))
    return t.report()


def check_abs_bound(grid: GridSpec, m: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """|beta^(m)(x)| <= m!/x^(m+1)."""
    if m < 0 or m > M_CAP:
        raise DomainError(f"m must be in [0, {M_CAP}]")
    t = _Tally("abs_bound", _fmt(grid=_grid_str(grid), m=m))
    for x in grid.values():
        cap = math.factorial(m) * x ** -(m + 1)
        t.leq(absval(bval(x, m, tol)), _v(cap, (m + 3) * EPS * cap))
    return t.report()


def locate_mvt_point(a: float, b: float, m: int, tol: float = DEFAULT_TOL,
                     iterations: int = 200) -> tuple[float, bool]:
    """Bisect for lambda in (a, b) with beta^(m+1)(lambda) = (beta^(m)(b) - beta^(m)(a))/(b - a).

    beta^(m+1) is strictly monotone, so the root is unique.  Returns
    ``(lambda, bracketed)`` where ``bracketed`` says whether the endpoint
    signs were certified to differ.
    """
    slope = div(sub(bval(b, m, tol), bval(a, m, tol)), _v(b - a, EPS * (b - a)))

    def g(lam: float) -> ValueWithError:
        return sub(bval(lam, m + 1, tol), slope)

    ga, gb = g(a), g(b)
    bracketed = ((ga.value - ga.error_bound > 0 and gb.value + gb.error_bound < 0)
                 or (ga.value + ga.error_bound < 0 and gb.value - gb.error_bound > 0))
    lo, hi = a, b
    sign_lo = math.copysign(1.0, ga.value)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        gm = g(mid)
        if gm.value == 0:
            lo = hi = mid
            break
        if math.copysign(1.0, gm.value) == sign_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), bracketed


def check_mvt_bound(a: float, b: float, m: int, tol: float = DEFAULT_TOL,
                    _tally: _Tally | None = None) -> CheckReport:
    """|beta^(m)(b) - beta^(m)(a)| <= (b-a)(m+1)!/lambda^(m+2), lambda located constructively."""
    if not 0 < a < b:
        raise DomainError("need 0 < a < b")
    if m + 1 > M_CAP:
        raise DomainError("m + 1 must be <= M_CAP")
    t = _tally or _Tally("mvt_bound", _fmt(a=a, b=b, m=m))
    diff = absval(sub(bval(b, m, tol), bval(a, m, tol)))
    f = math.factorial(m + 1)
    uniform = (b - a) * f * a ** -(m + 2)
    t.leq(diff, _v(uniform, (m + 5) * EPS * uniform))
    lam, bracketed = locate_mvt_point(a, b, m, tol)
    if not bracketed:
        t.fail()
    else:
        t.slack(min(lam - a, b - lam), 0.0)
    at_lam = (b - a) * f * lam ** -(m + 2)
    t.leq(diff, _v(at_lam, (m + 5) * EPS * at_lam))
    return t.report()


def check_log_convexity(x: float, y: float, u: float, m: int, tol: float = DEFAULT_TOL,
                        _tally: _Tally | None = None) -> CheckReport:
    """beta^(m)(ux + vy) <= beta^(m)(x)^u beta^(m)(y)^v with v = 1 - u, m even."""
    _require_even(m)
    if not 0 < u < 1:
        raise DomainError("weights must satisfy 0 < u < 1")
    v = 1.0 - u
    t = _tally or _Tally("log_convexity", _fmt(x=x, y=y, u=float(u), m=m))
    z, inexact = _float_of(Fraction(u) * Fraction(x) + Fraction(v) * Fraction(y))
    lhs = bval(z, m, tol, computed=inexact)
    rhs = mul(power(bval(x, m, tol), u), power(bval(y, m, tol), v))
    t.leq(lhs, rhs)
    return t.report()


# identities ----------------------------------------------------------------


def check_recurrence(grid: GridSpec, m_max: int = 6, tol: float = DEFAULT_TOL) -> CheckReport:
    """|beta^(m)(x+1) + beta^(m)(x) - (-1)^m m!/x^(m+1)| within the combined bounds."""
    t = _Tally("recurrence", _fmt(grid=_grid_str(grid), m_max=m_max))
    for x in grid.values():
        x1 = x + 1.0
        shift_err = abs(float(Fraction(x1) - Fraction(x) - 1))
        for m in range(m_max + 1):
            term = (-1) ** m * math.factorial(m) * x ** -(m + 1)
            lhs = add(bval(x1, m, tol), bval(x, m, tol))
            bound = (lhs.error_bound + (m + 3) * EPS * abs(term) + EPS * abs(lhs.value)
                     + shift_err * math.factorial(m + 1) * x1 ** -(m + 2))
            resid = abs(lhs.value - term)
            t.slack(-resid, bound)
    return t.report()


def check_reflection(xs: Sequence[float], tol: float = DEFAULT_TOL) -> CheckReport:
    """beta(x) + beta(1-x) = pi/sin(pi x) on (0, 1): reflection route vs direct route."""
    t = _Tally("reflection", _fmt(points=len(xs)))
    for x in xs:
        direct = _eval(float(x), 0, point_tol(x, 0, tol))
        via, _ = reflection_eval(x, EvalConfig(point_tol(1 - x, 0, tol)))
        t.slack(-abs(direct.value - via.value), direct.error_bound + via.error_bound)
    return t.report()


def check_euler_beta(xs: Sequence[float], tol: float = DEFAULT_TOL,
                     threshold: float = 1e-10) -> CheckReport:
    """beta(x) + beta(1-x) = B(x, 1-x) through log-gamma, residual <= threshold."""
    t = _Tally("euler_beta", _fmt(points=len(xs), threshold=threshold))
    for x in xs:
        lhs = add(bval(x, 0, tol), bval(1.0 - x, 0, tol, computed=True))
        resid = abs(lhs.value - euler_beta(x, 1.0 - x))
        t.slack(threshold - resid, 0.0)
    return t.report()


def fd_convergence_ratio(x: float, h: float = 1e-4, tol: float = DEFAULT_TOL) -> float:
    """Residual ratio of the log-Euler-beta central difference at h and h/2."""
    ref = bval(x, 0, tol).value
    r1 = abs(log_eulerbeta_derivative(x, h) - ref)
    r2 = abs(log_eulerbeta_derivative(x, h / 2) - ref)
    return r1 / r2


def check_log_beta_derivative(xs: Sequence[float], h: float = 1e-4, min_ratio: float = 3.5,
                              tol: float = DEFAULT_TOL) -> CheckReport:
    """Halving h in -d/dx ln B(x/2, 1/2) cuts the residual against beta(x) by >= min_ratio."""
    t = _Tally("log_beta_derivative", _fmt(points=len(xs), h=h, min_ratio=min_ratio))
    for x in xs:
        t.slack(fd_convergence_ratio(x, h, tol) - min_ratio, 0.0)
    return t.report()


# ---------------------------------------------------------------------------
# suite


def _grid_str(g: GridSpec) -> str:
    return f"{g.spacing}[{g.x_min!r},{g.x_max!r}]x{g.points}"


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = DEFAULT_SEED
    tol: float = DEFAULT_TOL
    checks: tuple[str, ...] | None = None


def _rng(seed: int, salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, salt])


def _merge(name: str, params: str, fn: Callable[[_Tally], None]) -> CheckReport:
    t = _Tally(name, params)
    fn(t)
    return t.report()


def _suite_complete_monotonicity(cfg: SuiteConfig) -> CheckReport:
    return check_complete_monotonicity(GridSpec(0.1, 20.0, 40, "Log"), 6, cfg.tol)


def _suite_beta_prime_concavity(cfg: SuiteConfig) -> CheckReport:
    return check_beta_prime_concavity(GridSpec(0.1, 20.0, 60, "Log"), cfg.tol)


def _suite_hermite_hadamard(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 1)
    pairs = [tuple(sorted(p)) for p in rng.uniform(0.1, 10.0, size=(100, 2)).tolist()]
    pairs = [p for p in pairs if p[1] - p[0] >= 1e-8]

    def run(t: _Tally):
        for a, b in pairs:
            r = check_hermite_hadamard(a, b, cfg.tol)
            t.points += r.points_tested
            t.violations += r.violations
            t.worst = min(t.worst, r.worst_margin)
    return _merge("hermite_hadamard", _fmt(pairs=len(pairs), seed=cfg.seed, range=(0.1, 10.0)), run)


def _suite_holder(cfg: SuiteConfig) -> CheckReport:
    tuples = admissible_holder_tuples()
    pts = (0.3, 1.0, 2.5, 7.0)

    def run(t: _Tally):
        for m, n, a in tuples:
            for x in pts:
                for y in pts:
                    check_holder(x, y, m, n, a, cfg.tol, _tally=t)
    return _merge("holder", _fmt(tuples=len(tuples), points=pts, max_order=4, max_den=4), run)


def _suite_turan(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.2, 10.0, 30, "Log")

    def run(t: _Tally):
        for x in grid.values():
            for n in range(5):
                b0, b1, b2 = (absval(bval(x, n + i, cfg.tol)) for i in range(3))
                t.leq(mul(b1, b1), mul(b2, b0))
    return _merge("turan", _fmt(grid=_grid_str(grid), n_max=4), run)


def _suite_convexity_q(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.2, 5.0, 25, "Log")
    a_values = (-5.0, -1.0, 0.0, 1.0, 5.0)

    def run(t: _Tally):
        for a in a_values:
            for m in (0, 2, 4):
                for x in grid.values():
                    t.geq_zero(q_second_derivative(x, a, m, cfg.tol))
    return _merge("convexity_q", _fmt(grid=_grid_str(grid), a=a_values, m=(0, 2, 4)), run)


def _suite_convexity_p(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.2, 5.0, 25, "Log")
    alphas = (0.5, 1.0, 3.0)

    def run(t: _Tally):
        for alpha in alphas:
            for m in (0, 2, 4):
                for x in grid.values():
                    t.geq_zero(p_second_derivative(x, alpha, m, cfg.tol))
    return _merge("convexity_p", _fmt(grid=_grid_str(grid), alpha=alphas, m=(0, 2, 4)), run)


def _suite_ratio_u(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.5, 8.0, 50, "Log")
    ks = (0.5, 1.0, 2.0, 3.0)
    xs = grid.values()

    def run(t: _Tally):
        for k in ks:
            for m in (0, 2):
                for x1, x2 in zip(xs, xs[1:]):
                    check_ratio_U(x1, x2, k, m, cfg.tol, _tally=t)
    return _merge("ratio_u", _fmt(grid=_grid_str(grid), k=ks, m=(0, 2)), run)


def _suite_ratio_corollary(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.5, 8.0, 12, "Log")
    ks = (0.5, 1.0, 2.0, 3.0)
    xs = grid.values()

    def run(t: _Tally):
        for k in ks:
            for m in (0, 2):
                for i, x in enumerate(xs):
                    for y in xs[i:]:
                        check_ratio_corollary(x, y, k, m, cfg.tol, _tally=t)
    return _merge("ratio_corollary", _fmt(grid=_grid_str(grid), k=ks, m=(0, 2)), run)


def _suite_omega(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.1, 10.0, 60, "Linear")
    a_values = (0.5, 1.0, 2.0)

    def run(t: _Tally):
        for a in a_values:
            for m in (0, 2):
                r = check_omega(grid, a, m, cfg.tol)
                t.points += r.points_tested
                t.violations += r.violations
                t.worst = min(t.worst, r.worst_margin)
    return _merge("omega", _fmt(grid=_grid_str(grid), a=a_values, m=(0, 2)), run)


def _suite_subadditivity(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 2)
    pairs = [tuple(p) for p in rng.uniform(0.1, 10.0, size=(100, 2)).tolist()]

    def run(t: _Tally):
        for m in range(5):
            r = check_subadditivity(pairs, m, cfg.tol)
            t.points += r.points_tested
            t.violations += r.violations
            t.worst = min(t.worst, r.worst_margin)
    return _merge("subadditivity", _fmt(pairs=len(pairs), seed=cfg.seed, m=(0, 1, 2, 3, 4)), run)


def _suite_starshaped(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.2, 10.0, 25, "Log")
    alphas = tuple(round(0.1 * i, 1) for i in range(1, 11))

    def run(t: _Tally):
        for m in (1, 3):
            for alpha in alphas:
                for x in grid.values():
                    check_starshaped(x, alpha, m, cfg.tol, _tally=t)
    return _merge("starshaped", _fmt(grid=_grid_str(grid), alpha=alphas, m=(1, 3)), run)


def _suite_product(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 3)
    pairs = [(1.0, 1.0), (1.0, 2.0)] + [tuple(p) for p in rng.uniform(1.0, 5.0, size=(50, 2)).tolist()]

    def run(t: _Tally):
        for m in range(5):
            for x, y in pairs:
                check_product(x, y, m, cfg.tol, _tally=t)
    return _merge("product", _fmt(pairs=len(pairs), seed=cfg.seed, m=(0, 1, 2, 3, 4)), run)


def _suite_product_general(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 4)
    lists = [[1.0, 1.0, 1.0], [1.0, 2.0], [1.5, 2.0, 3.0]]
    for size in (2, 3, 4) * 10:
        lists.append(rng.uniform(1.0, 3.0, size=size).tolist())

    def run(t: _Tally):
        for m in (0, 2, 4):
            for xs in lists:
                check_product_general(xs, m, cfg.tol, _tally=t)
    return _merge("product_general", _fmt(lists=len(lists), seed=cfg.seed, m=(0, 2, 4)), run)


def _suite_minkowski(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 5)
    n = 100
    xs = rng.uniform(0.1, 10.0, size=(n, 2)).tolist()
    orders = rng.integers(0, 5, size=(n, 2)).tolist()
    ss = rng.uniform(1.0, 5.0, size=n).tolist()

    def run(t: _Tally):
        check_minkowski(1.0, 1.0, 0, 1, 2.0, cfg.tol, _tally=t)
        for (x, y), (m, k), s in zip(xs, orders, ss):
            check_minkowski(x, y, int(m), int(k), s, cfg.tol, _tally=t)
    return _merge("minkowski", _fmt(tuples=n + 1, seed=cfg.seed), run)


def _suite_abs_bound(cfg: SuiteConfig) -> CheckReport:
    grid = GridSpec(0.1, 20.0, 40, "Log")

    def run(t: _Tally):
        for m in range(7):
            r = check_abs_bound(grid, m, cfg.tol)
            t.points += r.points_tested
            t.violations += r.violations
            t.worst = min(t.worst, r.worst_margin)
    return _merge("abs_bound", _fmt(grid=_grid_str(grid), m=tuple(range(7))), run)


def _suite_mvt_bound(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 6)
    pairs = [(1.0, 2.0, 0), (0.5, 3.0, 1)]
    for a, b in rng.uniform(0.2, 10.0, size=(20, 2)).tolist():
        lo, hi = sorted((a, b))
        if hi - lo > 1e-3:
            pairs.append((lo, hi, int(rng.integers(0, 5))))

    def run(t: _Tally):
        for a, b, m in pairs:
            check_mvt_bound(a, b, m, cfg.tol, _tally=t)
    return _merge("mvt_bound", _fmt(cases=len(pairs), seed=cfg.seed), run)


def _suite_log_convexity(cfg: SuiteConfig) -> CheckReport:
    rng = _rng(cfg.seed, 7)
    n = 100
    xy = rng.uniform(0.1, 10.0, size=(n, 2)).tolist()
    us = rng.uniform(0.01, 0.99, size=n).tolist()

    def run(t: _Tally):
        check_log_convexity(1.0, 2.0, 0.5, 0, cfg.tol, _tally=t)
        for m in (0, 2, 4):
            for (x, y), u in zip(xy, us):
                check_log_convexity(x, y, u, m, cfg.tol, _tally=t)
    return _merge("log_convexity", _fmt(tuples=n, seed=cfg.seed, m=(0, 2, 4)), run)


def _suite_recurrence(cfg: SuiteConfig) -> CheckReport:
    return check_recurrence(GridSpec(0.1, 20.0, 100, "Log"), 6, cfg.tol)


def _identity_grid() -> list[float]:
    return [float(v) for v in np.linspace(0.005, 0.995, 100)]


def _suite_reflection(cfg: SuiteConfig) -> CheckReport:
    return check_reflection(_identity_grid(), cfg.tol)


def _suite_euler_beta(cfg: SuiteConfig) -> CheckReport:
    return check_euler_beta(_identity_grid(), cfg.tol)


def _suite_log_beta_derivative(cfg: SuiteConfig) -> CheckReport:
    # past x ~ 2 the O(h^2) residual sinks into lgamma rounding and the ratio
    # stops meaning anything
    xs = [float(v) for v in np.linspace(0.2, 1.5, 100)]
    return check_log_beta_derivative(xs, 1e-4, 3.5, cfg.tol)


SUITE: dict[str, Callable[[SuiteConfig], CheckReport]] = {
    "abs_bound": _suite_abs_bound,
    "beta_prime_concavity": _suite_beta_prime_concavity,
    "complete_monotonicity": _suite_complete_monotonicity,
    "convexity_p": _suite_convexity_p,
    "convexity_q": _suite_convexity_q,
    "euler_beta": _suite_euler_beta,
    "hermite_hadamard": _suite_hermite_hadamard,
    "holder": _suite_holder,
    "log_beta_derivative": _suite_log_beta_derivative,
    "log_convexity": _suite_log_convexity,
    "minkowski": _suite_minkowski,
    "mvt_bound": _suite_mvt_bound,
    "omega": _suite_omega,
    "product": _suite_product,
    "product_general": _suite_product_general,
    "ratio_corollary": _suite_ratio_corollary,
    "ratio_u": _suite_ratio_u,
    "recurrence": _suite_recurrence,
    "reflection": _suite_reflection,
    "starshaped": _suite_starshaped,
    "subadditivity": _suite_subadditivity,
    "turan": _suite_turan,
}

CHECK_NAMES = tuple(sorted(SUITE))


def run_all(suite_cfg: SuiteConfig | None = None) -> list[CheckReport]:
    """Run the selected checks (all by default), sorted by name.

    A check that raises is reported as one violation with the error text in
    ``parameters``; the remaining checks still run.
    """
    cfg = suite_cfg or SuiteConfig()
    names = CHECK_NAMES if cfg.checks is None else tuple(sorted(set(cfg.checks)))
    unknown = [n for n in names if n not in SUITE]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    reports = []
    for name in names:
        try:
            reports.append(SUITE[name](cfg))
        except (NielsenError, ValueError, ArithmeticError) as exc:
            reports.append(CheckReport(name, 0, 1, 0.0, f"error={type(exc).__name__}: {exc}"))
    return sorted(reports, key=lambda r: r.check_name)


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)
