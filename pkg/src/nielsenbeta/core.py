"""Shared value types, constants and error-bound arithmetic."""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from typing import Callable

EPS = sys.float_info.epsilon  # 2**-52
UNIT_ROUNDOFF = EPS / 2

#: Largest derivative order accepted by the evaluator.  Beyond this m! and
#: x**-(m+1) leave the double range for small x.
M_CAP = 12

# ln 2, rounded to nearest double
LN2 = math.log(2.0)
PI = math.pi
# Catalan's constant G = 0.91596559417721901505460351493238411077...
CATALAN = 0.915965594177219015054603514932384110774
# zeta(2) = pi**2 / 6 = 1.64493406684822643647241516664602518923...
ZETA2 = 1.644934066848226436472415166646025189219
# zeta(3) = 1.20205690315959428539973816151144999076... (Apery)
ZETA3 = 1.202056903159594285399738161511449990765
# Euler-Mascheroni gamma = 0.57721566490153286060651209008240243104...
EULER_GAMMA = 0.577215664901532860606512090082402431042


class NielsenError(ArithmeticError):
    """Base class for evaluation failures."""


class DomainError(NielsenError, ValueError):
    """Argument outside the domain of the function."""


class OrderTooLarge(DomainError):
    """Derivative order above M_CAP."""


class TermBudgetExceeded(NielsenError):
    """A series would need more terms than the configured budget."""


class NonConvergence(NielsenError):
    """Adaptive quadrature ran out of nodes before meeting the tolerance."""


class ToleranceUnreachable(NielsenError):
    """No backend could certify the requested absolute tolerance."""


class NonFiniteValue(NielsenError, OverflowError):
    """A computed value or bound overflowed or became NaN."""


class Method(str, enum.Enum):
    SERIES = "Series"
    QUADRATURE_UNIT = "QuadratureUnit"
    QUADRATURE_LAPLACE = "QuadratureLaplace"
    POLYGAMMA = "Polygamma"
    RECURRENCE = "Recurrence"
    CLOSED_FORM = "ClosedForm"

    def __str__(self) -> str:
        return self.value


class BackendPolicy(str, enum.Enum):
    AUTO = "Auto"
    FORCE_SERIES = "ForceSeries"
    FORCE_QUAD_UNIT = "ForceQuadUnit"
    FORCE_QUAD_LAPLACE = "ForceQuadLaplace"
    FORCE_POLYGAMMA = "ForcePolygamma"

    def __str__(self) -> str:
        return self.value


class Op(enum.Enum):
    ADD = "Add"
    SUB = "Sub"
    MUL = "Mul"
    SCALE = "Scale"


@dataclass(frozen=True)
class ValueWithError:
    """A value together with an absolute bound on its error.

    ``value`` and ``error_bound`` must be finite; a non-finite result is
    raised as :class:`NonFiniteValue` at construction time.
    """

    value: float
    error_bound: float = 0.0
    method: Method = Method.CLOSED_FORM
    terms_or_nodes: int = 0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise NonFiniteValue(f"non-finite value {self.value!r}")
        if not math.isfinite(self.error_bound) or self.error_bound < 0:
            raise NonFiniteValue(f"invalid error bound {self.error_bound!r}")
        if self.terms_or_nodes < 0:
            raise ValueError("terms_or_nodes must be >= 0")

    @property
    def lower(self) -> float:
        return self.value - self.error_bound

    @property
    def upper(self) -> float:
        return self.value + self.error_bound

    def contains(self, target: float, slack: float = 0.0) -> bool:
        return abs(self.value - target) <= self.error_bound + slack


@dataclass(frozen=True)
class EvalPoint:
    """Argument ``x > 0`` and derivative order ``0 <= m <= M_CAP``."""

    x: float
    m: int = 0

    def __post_init__(self):
        if isinstance(self.m, bool) or int(self.m) != self.m:
            raise DomainError(f"m must be an integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "x", float(self.x))
        if not math.isfinite(self.x) or self.x <= 0:
            raise DomainError(f"x must be > 0 (got {self.x!r})")
        if self.m < 0:
            raise DomainError(f"m must be >= 0 (got {self.m})")
        if self.m > M_CAP:
            raise OrderTooLarge(f"m must be <= {M_CAP} (got {self.m})")


@dataclass(frozen=True)
class EvalConfig:
    target_abs_tol: float = 1e-12
    max_terms: int = 4_000_000
    max_nodes: int = 100_000
    reduction_threshold: float = 1.0
    backend_policy: BackendPolicy = BackendPolicy.AUTO

    def __post_init__(self):
        if not (self.target_abs_tol >= 1e-15) or not math.isfinite(self.target_abs_tol):
            raise ValueError("target_abs_tol must be finite and >= 1e-15")
        if self.max_terms <= 0 or self.max_nodes <= 0:
            raise ValueError("max_terms and max_nodes must be positive")
        if not self.reduction_threshold > 0:
            raise ValueError("reduction_threshold must be positive")
        object.__setattr__(self, "backend_policy", BackendPolicy(self.backend_policy))

    def with_tol(self, tol: float) -> "EvalConfig":
        return EvalConfig(tol, self.max_terms, self.max_nodes,
                          self.reduction_threshold, self.backend_policy)


@dataclass(frozen=True)
class Constants:
    LN2: float = LN2
    PI: float = PI
    CATALAN: float = CATALAN
    ZETA2: float = ZETA2


CONSTANTS = Constants()


def combine_error(a: ValueWithError, b: ValueWithError | float, op: Op | str) -> ValueWithError:
    """Combine two bounded values, propagating a first-order error bound.

    For ``Scale`` the second argument is an exact float factor.  The
    rounding of the operation itself is added to the bound.
    """
    op = Op(op) if isinstance(op, str) else op
    if op is Op.SCALE:
        c = float(b.value if isinstance(b, ValueWithError) else b)
        v = a.value * c
        # scaling by a power of two is exact
        exact = c != 0 and math.frexp(abs(c))[0] == 0.5
        rnd = 0.0 if exact else UNIT_ROUNDOFF * abs(v)
        return _make(v, abs(c) * a.error_bound + rnd, a, a)
    if not isinstance(b, ValueWithError):
        b = ValueWithError(float(b))
    if op is Op.ADD:
        v = a.value + b.value
        e = a.error_bound + b.error_bound
    elif op is Op.SUB:
        v = a.value - b.value
        e = a.error_bound + b.error_bound
    else:
        v = a.value * b.value
        e = (abs(a.value) * b.error_bound + abs(b.value) * a.error_bound
             + a.error_bound * b.error_bound)
    rnd = 0.0 if v == 0 else UNIT_ROUNDOFF * abs(v)
    return _make(v, e + rnd, a, b)


def _make(v: float, e: float, a: ValueWithError, b: ValueWithError) -> ValueWithError:
    if not math.isfinite(v) or not math.isfinite(e):
        raise NonFiniteValue("overflow while combining bounded values")
    return ValueWithError(v, e, a.method, max(a.terms_or_nodes, b.terms_or_nodes))


def map_monotone(a: ValueWithError, f: Callable[[float], float],
                 rel_rounding: float = 4 * EPS) -> ValueWithError:
    """Apply a monotone function on ``[a.lower, a.upper]``.

    The bound is the larger endpoint excursion plus ``rel_rounding`` times
    the result, which covers the rounding of ``f`` itself.
    """
    v = f(a.value)
    if a.error_bound:
        e = max(abs(f(a.upper) - v), abs(f(a.lower) - v))
    else:
        e = 0.0
    return _make(v, e + rel_rounding * abs(v), a, a)


def rounding_bound(abs_sum: float, ulps_per_term: float, result: float) -> float:
    """Error of an exactly-rounded sum of terms each off by ``ulps_per_term`` eps."""
    return ulps_per_term * EPS * abs_sum + UNIT_ROUNDOFF * abs(result)
