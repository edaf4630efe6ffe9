"""Digamma and polygamma on the positive axis, and beta^(m) through them.

psi^(m)(x) is computed by shifting x upward with
psi^(m)(x) = psi^(m)(x+n) - (-1)^m m! sum_{j<n} (x+j)^-(m+1)
and then summing the Bernoulli asymptotic expansion at y = x + n.  For real
y > 0 that expansion is enveloping, so the first omitted term bounds the
remainder.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    EPS,
    UNIT_ROUNDOFF,
    DomainError,
    EvalPoint,
    M_CAP,
    Method,
    ValueWithError,
    combine_error,
    Op,
)

# B_2, B_4, ..., B_18; the last one only feeds the remainder bound
BERNOULLI_EVEN = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798),
)
N_BERNOULLI = 8
SWITCHOVER = 8.0
MAX_ORDER = M_CAP + 2


@dataclass(frozen=True)
class PolygammaRequest:
    m: int
    x: float

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 0 or self.m > MAX_ORDER:
            raise DomainError(f"polygamma order must be an integer in [0, {MAX_ORDER}]")
        if not math.isfinite(self.x) or self.x <= 0:
            raise DomainError(f"x must be > 0 (got {self.x!r})")


@functools.cache
def _coefficients(m: int) -> tuple[tuple[float, ...], float]:
    """Asymptotic coefficients c_k multiplying y^-(2k+m), and the remainder one."""
    coef = []
    for k in range(1, N_BERNOULLI + 2):
        b = BERNOULLI_EVEN[k - 1]
        if m == 0:
            c = b / (2 * k)
        else:
            c = b * math.factorial(2 * k + m - 1) / math.factorial(2 * k)
        coef.append(c)
    return tuple(float(c) for c in coef[:-1]), float(abs(coef[-1]))


@functools.cache
def _threshold(m: int) -> float:
    """Shift target: smallest integer y >= 8 where the remainder is below 2^-56 of the leading term."""
    _, rem = _coefficients(m)
    lead = 1.0 if m == 0 else float(math.factorial(m - 1))
    y = SWITCHOVER
    while rem * y ** -(2 * N_BERNOULLI + 2) > 2.0 ** -56 * lead:
        y += 1.0
    return y


def polygamma_abs_bound(n: int, x: float) -> float:
    """Upper bound on |psi^(n)(x)| for n >= 1: (n-1)!/x^n + n!/x^(n+1)."""
    return math.factorial(n - 1) / x ** n + math.factorial(n) / x ** (n + 1)


def _psi(m: int, x: float) -> ValueWithError:
    shift = max(0, math.ceil(_threshold(m) - x))
    terms = []
    if shift:
        sign = -1.0 if m % 2 == 0 else 1.0  # -(-1)^m
        fact = float(math.factorial(m))
        for j in range(shift):
            terms.append(sign * fact * (x + j) ** -(m + 1))
    y = x + shift
    coef, rem = _coefficients(m)
    if m == 0:
        asym = [math.log(y), -0.5 / y]
        asym += [-c * y ** -(2 * k) for k, c in enumerate(coef, start=1)]
        trunc = rem * y ** -(2 * N_BERNOULLI + 2)
    else:
        s = 1.0 if m % 2 else -1.0  # (-1)^(m+1)
        asym = [s * math.factorial(m - 1) * y ** -m, s * 0.5 * math.factorial(m) * y ** -(m + 1)]
        asym += [s * c * y ** -(2 * k + m) for k, c in enumerate(coef, start=1)]
        trunc = rem * y ** -(2 * N_BERNOULLI + 2 + m)
    terms += asym
    value = math.fsum(terms)
    abs_sum = math.fsum(abs(t) for t in terms)
    # y = fl(x + shift) is itself rounded
    arg_err = abs(float(Fraction(y) - Fraction(x) - shift))
    bound = (trunc + (m + 4) * EPS * abs_sum + UNIT_ROUNDOFF * abs(value)
             + arg_err * polygamma_abs_bound(m + 1, y))
    return ValueWithError(value, bound, Method.POLYGAMMA, shift + len(asym))


def digamma(x: float) -> ValueWithError:
    """psi(x) = d/dx ln Gamma(x) for x > 0."""
    req = PolygammaRequest(0, float(x))
    return _psi(0, req.x)


def polygamma(r: PolygammaRequest | int, x: float | None = None) -> ValueWithError:
    """psi^(m)(x); accepts a request or ``(m, x)``."""
    if not isinstance(r, PolygammaRequest):
        r = PolygammaRequest(int(r), float(x))
    return _psi(r.m, r.x)


def beta_via_polygamma(p: EvalPoint) -> ValueWithError:
    """beta^(m)(x) = 2^-(m+1) [psi^(m)((x+1)/2) - psi^(m)(x/2)]."""
    x, m = p.x, p.m
    upper_arg = (x + 1.0) / 2.0
    lower_arg = x / 2.0
    hi = _psi(m, upper_arg)
    lo = _psi(m, lower_arg)
    diff = combine_error(hi, lo, Op.SUB)
    arg_err = abs(float(Fraction(upper_arg) - (Fraction(x) + 1) / 2))
    if arg_err:
        diff = ValueWithError(diff.value, diff.error_bound + arg_err * polygamma_abs_bound(m + 1, upper_arg),
                              diff.method, diff.terms_or_nodes)
    out = combine_error(diff, 2.0 ** -(m + 1), Op.SCALE)
    return ValueWithError(out.value, out.error_bound, Method.POLYGAMMA,
                          hi.terms_or_nodes + lo.terms_or_nodes)


def ln_beta_half(u: float) -> float:
    """ln B(u/2, 1/2) = lnGamma(u/2) + lnGamma(1/2) - lnGamma((u+1)/2)."""
    return math.lgamma(u / 2) + math.lgamma(0.5) - math.lgamma((u + 1) / 2)


def log_eulerbeta_derivative(x: float, h: float = 1e-5) -> float:
    """Central difference of -ln B(x/2, 1/2), which approximates beta(x) to O(h^2)."""
    if not 0 < h <= 1e-4:
        raise DomainError("step h must satisfy 0 < h <= 1e-4")
    if not x - 2 * h > 0:
        raise DomainError(f"x - 2h must be > 0 (x={x}, h={h})")
    return -(ln_beta_half(x + h) - ln_beta_half(x - h)) / (2 * h)


def euler_beta(a: float, b: float) -> float:
    """B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) through log-gamma."""
    if a <= 0 or b <= 0:
        raise DomainError("Euler beta needs positive arguments")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))
