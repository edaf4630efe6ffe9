"""Alternating-series evaluation of beta^(m)(x) and related slow-series oracles.

All series here have the form sum_k (-1)^k f(k) with f positive and
completely monotone, so consecutive pairs g(j) = f(2j) - f(2j+1) form a
positive decreasing sequence.  Two tail treatments are used:

* :func:`oracle_partial_sums` stops after ``n_pairs`` pairs and bounds the
  remainder by the first omitted term.  It is deliberately naive and serves
  as the brute-force reference.
* :func:`beta_series`, :func:`eta` and :func:`beta_deriv_at_half` bracket the
  pair tail between ``int_N^inf g`` and ``g(N) + int_N^inf g`` and add the
  midpoint, so the remainder bound is ``g(N)/2``.  This is what makes the
  m = 0 series usable at 1e-12.

Partial sums go through :func:`math.fsum`, which is exactly rounded, so the
only rounding left is in forming the individual terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    EPS,
    PI,
    UNIT_ROUNDOFF,
    EvalConfig,
    EvalPoint,
    Method,
    M_CAP,
    DomainError,
    TermBudgetExceeded,
    ToleranceUnreachable,
    ValueWithError,
    rounding_bound,
)

_CHUNK = 1 << 20


@dataclass(frozen=True)
class SeriesResult(ValueWithError):
    pairs_summed: int = 0


def _fsum_terms(arrays) -> tuple[float, float]:
    """Exactly rounded sum of several arrays, plus the sum of magnitudes."""
    parts = []
    abs_sum = 0.0
    for arr in arrays:
        parts.append(math.fsum(arr.tolist()))
        abs_sum += float(np.abs(arr).sum())
    # the chunk sums are each exactly rounded; one more rounding per chunk
    total = math.fsum(parts)
    return total, abs_sum * (1 + len(parts) * EPS)


def _pair_tail(a: float, s: int, spacing: float) -> tuple[float, float]:
    """Integral of the pair envelope and the first omitted pair.

    For f(t) = t**-s sampled at a, a + spacing, a + 2*spacing, ... with pairs
    (a + 2j*spacing, a + (2j+1)*spacing), returns ``(I, g0)`` where
    ``g0 = f(a) - f(a + spacing)`` and ``I`` is the integral over j >= 0 of
    the pair function, which equals ``int_a^{a+spacing} f / (2*spacing)``.
    """
    r = math.log1p(spacing / a)
    g0 = a ** -s * -math.expm1(-s * r)
    if s == 1:
        seg = r
    else:
        seg = a ** (1 - s) * -math.expm1(-(s - 1) * r) / (s - 1)
    return seg / (2 * spacing), g0


def _alternating_bracketed(x: float, s: int, n_pairs: int) -> tuple[float, float, float]:
    """sum_{k>=0} (-1)^k (k + x)^-s with a bracketed tail.

    Returns ``(value, truncation_bound, rounding_bound)``.
    """
    chunks = []
    for start in range(0, 2 * n_pairs, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, 2 * n_pairs), dtype=np.float64)
        t = (k + x) ** (-s)
        t[1::2] *= -1.0
        chunks.append(t)
    partial, abs_sum = _fsum_terms(chunks)
    integral, g_first = _pair_tail(2 * n_pairs + x, s, 1.0)
    tail = integral + 0.5 * g_first
    value = partial + tail
    # x + k rounds once, the power amplifies by s, pow itself adds 1 ulp
    rnd = rounding_bound(abs_sum, s + 3, value) + 4 * EPS * tail
    return value, 0.5 * g_first, rnd


def _pairs_for(x: float, s: int, tol: float) -> int:
    """Pairs needed so the pair-tail half-width g(N)/2 stays below tol/2."""
    # g(N) <= s / (2N + x)**(s+1)
    a_req = (s / tol) ** (1.0 / (s + 1))
    return max(1, math.ceil((a_req - x) / 2) + 1)


def series_pairs_needed(x: float, m: int, tol: float) -> int:
    return _pairs_for(x, m + 1, tol / math.factorial(m))


def beta_series(p: EvalPoint, cfg: EvalConfig | None = None) -> SeriesResult:
    """beta^(m)(x) = (-1)^m m! sum_k (-1)^k / (k + x)^(m+1).

    Raises :class:`TermBudgetExceeded` when the tolerance would need more
    than ``cfg.max_terms`` terms.
    """
    cfg = cfg or EvalConfig()
    x, m = p.x, p.m
    tol = cfg.target_abs_tol
    fact = float(math.factorial(m))
    n_pairs = series_pairs_needed(x, m, tol)
    if 2 * n_pairs > cfg.max_terms:
        raise TermBudgetExceeded(
            f"beta_series(x={x}, m={m}) needs {2 * n_pairs} terms for tol={tol:g}, "
            f"budget is {cfg.max_terms}")
    s, trunc, rnd = _alternating_bracketed(x, m + 1, n_pairs)
    sign = -1.0 if m % 2 else 1.0
    value = sign * fact * s
    bound = fact * (trunc + rnd) + UNIT_ROUNDOFF * abs(value)
    if bound > tol:
        raise ToleranceUnreachable(
            f"rounding alone exceeds tol={tol:g} at x={x}, m={m} (bound {bound:.3g})")
    return SeriesResult(value, bound, Method.SERIES, 2 * n_pairs, pairs_summed=n_pairs)


def oracle_partial_sums(p: EvalPoint, n_pairs: int) -> SeriesResult:
    """Brute-force paired partial sum, bounded by the first omitted term.

    value = (-1)^m m! sum_{j < n_pairs} [(2j + x)^-(m+1) - (2j + 1 + x)^-(m+1)]
    """
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    x, m = p.x, p.m
    s = m + 1
    parts = []
    abs_sum = 0.0
    for start in range(0, n_pairs, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, n_pairs), dtype=np.float64)
        even = (2.0 * j + x) ** (-s)
        odd = (2.0 * j + 1.0 + x) ** (-s)
        parts.append(math.fsum(even.tolist()) - math.fsum(odd.tolist()))
        abs_sum += float(even.sum() + odd.sum())
    partial = math.fsum(parts)
    fact = float(math.factorial(m))
    value = (-1.0) ** m * fact * partial
    omitted = fact * (2 * n_pairs + x) ** (-s)
    rnd = fact * (s + 4 + 2 * len(parts)) * EPS * abs_sum + EPS * abs(value)
    return SeriesResult(value, omitted + rnd, Method.SERIES, 2 * n_pairs, pairs_summed=n_pairs)


def eta(s: int, tol: float = 1e-13) -> ValueWithError:
    """Dirichlet eta, sum_{k>=0} (-1)^k / (k+1)^s, for integer s >= 1."""
    if int(s) != s or s < 1:
        raise DomainError(f"eta needs an integer s >= 1, got {s!r}")
    s = int(s)
    n_pairs = _pairs_for(1.0, s, tol)
    value, trunc, rnd = _alternating_bracketed(1.0, s, n_pairs)
    return ValueWithError(value, trunc + rnd, Method.SERIES, 2 * n_pairs)


def beta_deriv_at_one(m: int) -> ValueWithError:
    """beta^(m)(1) = (-1)^m m! eta(m + 1)."""
    if m < 0 or m > M_CAP:
        raise DomainError(f"m must be in [0, {M_CAP}]")
    fact = float(math.factorial(m))
    e = eta(m + 1, tol=1e-13 / fact if m else 1e-13)
    value = (-1.0) ** m * fact * e.value
    return ValueWithError(value, fact * e.error_bound + UNIT_ROUNDOFF * abs(value),
                          Method.SERIES, e.terms_or_nodes)


def beta_deriv_at_half(m: int, tol: float = 1e-13) -> ValueWithError:
    """beta^(m)(1/2) from the combined 1/(4k+1)^s - 1/(4k+3)^s sum.

    beta^(m)(1/2) = (-1)^(m+1) m! 2^(m+1) [sum 1/(4k+3)^(m+1) - sum 1/(4k+1)^(m+1)].
    The two sums are never formed separately; the combined term decays like
    k^-(m+2) and its tail is bracketed by integrals.
    """
    if m < 1 or m > M_CAP:
        raise DomainError(f"m must be in [1, {M_CAP}]")
    s = m + 1
    scale = float(math.factorial(m)) * 2.0 ** s
    # combined term h(k) <= 2s / (4k+1)^(s+1)
    a_req = (2 * s * scale / tol) ** (1.0 / (s + 1))
    n = max(1, math.ceil((a_req - 1) / 4) + 1)
    chunks = []
    for start in range(0, n, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, n), dtype=np.float64)
        chunks.append((4.0 * k + 1.0) ** (-s))
        chunks.append(-((4.0 * k + 3.0) ** (-s)))
    partial, abs_sum = _fsum_terms(chunks)
    # pair members sit 2 apart, pairs repeat every 4
    integral, h_first = _pair_tail(4 * n + 1.0, s, 2.0)
    combined = partial + integral + 0.5 * h_first
    value = (-1.0) ** m * scale * combined
    rnd = rounding_bound(abs_sum, s + 3, combined) + 4 * EPS * integral
    bound = scale * (0.5 * h_first + rnd) + UNIT_ROUNDOFF * abs(value)
    return ValueWithError(value, bound, Method.SERIES, 2 * n)


def catalan_from_representations(n_terms: int = 1_000_000) -> tuple[ValueWithError, ValueWithError]:
    """Catalan's constant from the 1/(4k+1)^2 and the 1/(4k+3)^2 sums.

    G = -pi^2/8 + 2 sum 1/(4k+1)^2  and  G = pi^2/8 - 2 sum 1/(4k+3)^2.
    Each tail sum_{k>=N} f(k) lies in [int_N^inf f, f(N) + int_N^inf f];
    the midpoint is added and half the width is the bound.
    """
    k = np.arange(n_terms, dtype=np.float64)
    pi2_8 = PI * PI / 8
    # |pi - PI| < 1.3e-16, so pi^2/8 is off by < 2*pi*1.3e-16/8 plus rounding
    pi2_err = 2 * PI * 1.3e-16 / 8 + 2 * EPS * pi2_8
    out = []
    for offset, sign in ((1.0, 1.0), (3.0, -1.0)):
        terms = (4.0 * k + offset) ** -2
        partial = math.fsum(terms.tolist())
        a = 4.0 * n_terms + offset
        integral = 1.0 / (4.0 * a)
        first = 1.0 / (a * a)
        total = partial + integral + 0.5 * first
        g = -sign * pi2_8 + sign * 2.0 * total
        err = (pi2_err + 2.0 * (0.5 * first + rounding_bound(float(terms.sum()), 4, total))
               + UNIT_ROUNDOFF * abs(g))
        out.append(ValueWithError(g, err, Method.SERIES, n_terms))
    return out[0], out[1]
