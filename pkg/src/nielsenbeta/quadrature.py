"""Quadrature backends for beta^(m)(x).

Two integral forms are evaluated with a globally adaptive 7/15-point
Gauss-Kronrod rule:

    unit interval:  int_0^1 (ln t)^m t^(x-1) / (1 + t) dt
    Laplace form:   (-1)^m int_0^inf u^m e^(-x u) / (1 + e^(-u)) du

The unit form has an endpoint singularity at t = 0 whenever x < 1 or
m >= 1; there the substitution t = e^(-u) is applied, which turns it into
the Laplace integrand.  The semi-infinite range is truncated at T with the
tail bounded through the majorant 1/(1 + e^(-u)) <= 1.

Reported error = 10 * sum |K15 - G7| over panels + truncation tail +
modelled rounding.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import EPS, EvalConfig, EvalPoint, Method, NonConvergence, ValueWithError

# Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are the
# 7-point Gauss nodes.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])  # 15 nodes, ascending
K_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
G_WEIGHTS = np.zeros(15)
G_WEIGHTS[[1, 3, 5]] = _WG[:3]
G_WEIGHTS[[9, 11, 13]] = _WG[2::-1]
G_WEIGHTS[7] = _WG[3]

SAFETY = 10.0


@dataclass(frozen=True)
class QuadResult(ValueWithError):
    subdivisions: int = 0
    truncation_point: float = 0.0


def gauss_kronrod(f: Callable[[np.ndarray], np.ndarray], a: float, b: float):
    """One 15-point Kronrod panel.  Returns (K15, |K15 - G7|, sum |w f|)."""
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    fx = f(center + half * NODES)
    k = half * float(K_WEIGHTS @ fx)
    g = half * float(G_WEIGHTS @ fx)
    return k, abs(k - g), abs(half) * float(K_WEIGHTS @ np.abs(fx))


def adaptive_gk(f, a: float, b: float, tol: float, max_nodes: int,
                initial: int = 1, rounding_ulps: float = 32) -> tuple[float, float, int, int]:
    """Globally adaptive bisection on the panel with the largest error.

    Returns ``(integral, error_bound, nodes_used, panels)``.  The bound is
    SAFETY * sum |K - G| plus rounding.  Raises NonConvergence when the node
    budget runs out.
    """
    edges = np.linspace(a, b, initial + 1)
    heap = []
    nodes = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        k, e, ab = gauss_kronrod(f, float(lo), float(hi))
        nodes += 15
        heapq.heappush(heap, (-e, float(lo), float(hi), k, ab))
    while True:
        err = SAFETY * math.fsum(-item[0] for item in heap)
        abs_int = math.fsum(item[4] for item in heap)
        rnd = rounding_ulps * EPS * abs_int
        if err + rnd <= tol:
            break
        if rnd > 0.5 * tol:
            raise NonConvergence(
                f"rounding floor {rnd:.3g} leaves no room for tol {tol:.3g}")
        if nodes + 30 > max_nodes:
            raise NonConvergence(
                f"quadrature error {err + rnd:.3g} above tol {tol:.3g} after {nodes} nodes")
        neg_e, lo, hi, _, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise NonConvergence("panel width reached machine resolution")
        for l, h in ((lo, mid), (mid, hi)):
            k, e, ab = gauss_kronrod(f, l, h)
            heapq.heappush(heap, (-e, l, h, k, ab))
        nodes += 30
    total = math.fsum(item[3] for item in heap)
    return total, err + rnd, nodes, len(heap)


def laplace_tail_bound(x: float, m: int, T: float) -> float:
    """Upper bound for int_T^inf u^m e^(-x u) du = Gamma(m+1, xT) / x^(m+1).

    Gamma(m+1, z) = m! e^-z sum_{j<=m} z^j / j!.
    """
    z = x * T
    total = math.fsum(math.exp(j * math.log(z) - z - math.lgamma(j + 1)) for j in range(m + 1))
    return math.factorial(m) * total / x ** (m + 1) * (1 + 16 * EPS)


def truncation_point(x: float, m: int, tail_tol: float) -> float:
    """A truncation point T whose tail bound is below tail_tol.

    Found by doubling from 10/x and then bisecting to within 1%.
    """
    lo = 0.0
    hi = 10.0 / x
    while laplace_tail_bound(x, m, hi) > tail_tol:
        lo, hi = hi, hi * 2.0
    while hi - lo > 0.01 * hi:
        mid = 0.5 * (lo + hi)
        if laplace_tail_bound(x, m, mid) > tail_tol:
            lo = mid
        else:
            hi = mid
    return hi


def _laplace_integrand(x: float, m: int):
    def f(u: np.ndarray) -> np.ndarray:
        out = np.exp(-x * u) / (1.0 + np.exp(-u))
        if m:
            out = out * u ** m
        return out
    return f


def _laplace(p: EvalPoint, cfg: EvalConfig, method: Method) -> QuadResult:
    x, m = p.x, p.m
    tol = cfg.target_abs_tol
    T = truncation_point(x, m, tol / 10)
    tail = laplace_tail_bound(x, m, T)
    # a few starting panels scaled to the decay length 1/x
    initial = int(min(64, max(4, math.ceil(T * min(x, 1.0) / 4))))
    # 15-term dot products, exp, and m multiplications in u**m
    val, err, nodes, panels = adaptive_gk(_laplace_integrand(x, m), 0.0, T,
                                          tol - tail, cfg.max_nodes, initial,
                                          rounding_ulps=32 + m)
    sign = -1.0 if m % 2 else 1.0
    return QuadResult(sign * val, err + tail, method, nodes,
                      subdivisions=panels, truncation_point=T)


def beta_quad_laplace(p: EvalPoint, cfg: EvalConfig | None = None) -> QuadResult:
    """beta^(m)(x) from the semi-infinite integral."""
    return _laplace(p, cfg or EvalConfig(), Method.QUADRATURE_LAPLACE)


def beta_quad_unit(p: EvalPoint, cfg: EvalConfig | None = None) -> QuadResult:
    """beta^(m)(x) from the integral over (0, 1).

    For x >= 1 and m = 0 the integrand t^(x-1)/(1+t) is bounded and is
    integrated directly; every other case goes through t = e^(-u).
    """
    cfg = cfg or EvalConfig()
    if p.x < 1 or p.m >= 1:
        return _laplace(p, cfg, Method.QUADRATURE_UNIT)
    x = p.x

    def f(t: np.ndarray) -> np.ndarray:
        return t ** (x - 1.0) / (1.0 + t)

    val, err, nodes, panels = adaptive_gk(f, 0.0, 1.0, cfg.target_abs_tol, cfg.max_nodes)
    return QuadResult(val, err, Method.QUADRATURE_UNIT, nodes,
                      subdivisions=panels, truncation_point=1.0)
