import math

import pytest

from nielsenbeta.core import (
    CATALAN,
    CONSTANTS,
    LN2,
    M_CAP,
    PI,
    ZETA2,
    BackendPolicy,
    DomainError,
    EvalConfig,
    EvalPoint,
    Method,
    NonFiniteValue,
    Op,
    OrderTooLarge,
    ValueWithError,
    combine_error,
    map_monotone,
)


def test_constants_digits():
    assert abs(CATALAN - 0.915965594177) < 1e-12
    assert CATALAN == 0.915965594177219
    assert ZETA2 == pytest.approx(PI ** 2 / 6, rel=2e-16)
    assert LN2 == math.log(2)
    assert CONSTANTS.CATALAN == CATALAN


def test_value_with_error_rejects_nonfinite():
    with pytest.raises(NonFiniteValue):
        ValueWithError(math.nan, 0.0)
    with pytest.raises(NonFiniteValue):
        ValueWithError(math.inf, 0.0)
    with pytest.raises(NonFiniteValue):
        ValueWithError(1.0, -1e-3)
    with pytest.raises(NonFiniteValue):
        ValueWithError(1.0, math.inf)


def test_value_with_error_interval():
    v = ValueWithError(2.0, 0.5, Method.SERIES, 3)
    assert (v.lower, v.upper) == (1.5, 2.5)
    assert v.contains(2.4) and not v.contains(2.6)


@pytest.mark.parametrize("x", [0.0, -1.0, math.nan, math.inf])
def test_eval_point_domain(x):
    with pytest.raises(DomainError, match="x must be > 0"):
        EvalPoint(x, 0)


def test_eval_point_order():
    with pytest.raises(OrderTooLarge):
        EvalPoint(1.0, M_CAP + 1)
    with pytest.raises(DomainError):
        EvalPoint(1.0, -1)
    with pytest.raises(DomainError):
        EvalPoint(1.0, 1.5)
    assert EvalPoint(1, M_CAP).m == M_CAP


def test_eval_config_floor():
    with pytest.raises(ValueError):
        EvalConfig(target_abs_tol=1e-16)
    with pytest.raises(ValueError):
        EvalConfig(max_terms=0)
    cfg = EvalConfig(backend_policy="ForceSeries")
    assert cfg.backend_policy is BackendPolicy.FORCE_SERIES
    assert cfg.with_tol(1e-9).backend_policy is BackendPolicy.FORCE_SERIES


def test_combine_add():
    r = combine_error(ValueWithError(1.0, 0.01), ValueWithError(2.0, 0.02), Op.ADD)
    assert r.value == 3.0
    assert r.error_bound == pytest.approx(0.03, rel=1e-12)
    assert r.error_bound >= 0.03


def test_combine_scale_by_two_is_exact():
    x = 0.1234567
    r = combine_error(ValueWithError(x, 0.0), 2.0, Op.SCALE)
    assert r.value == 2 * x and r.error_bound == 0.0


def test_combine_mul():
    r = combine_error(ValueWithError(1.0, 0.1), ValueWithError(1.0, 0.1), "Mul")
    assert r.value == 1.0
    assert r.error_bound == pytest.approx(0.21, rel=1e-12)


def test_combine_sub_never_shrinks():
    a, b = ValueWithError(5.0, 1e-3), ValueWithError(5.0, 2e-3)
    r = combine_error(a, b, Op.SUB)
    assert r.error_bound >= max(a.error_bound, b.error_bound)


def test_combine_overflow():
    with pytest.raises(NonFiniteValue):
        combine_error(ValueWithError(1e308), ValueWithError(1e308), Op.MUL)


def test_map_monotone_log():
    r = map_monotone(ValueWithError(2.0, 1e-6), math.log)
    assert r.contains(math.log(2.0 + 1e-6)) and r.contains(math.log(2.0 - 1e-6))
