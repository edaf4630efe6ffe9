import math

import numpy as np
import pytest

from nielsenbeta.core import (
    CATALAN,
    LN2,
    PI,
    BackendPolicy,
    DomainError,
    EvalConfig,
    EvalPoint,
    Method,
    OrderTooLarge,
    ToleranceUnreachable,
)
from nielsenbeta.evaluator import (
    beta,
    lookup_special,
    nielsen_beta,
    reflection_eval,
    special_values,
)
from nielsenbeta.harness import point_tol
from nielsenbeta.series import oracle_partial_sums

from .oracles import BETA

EXPECTED_FORMS = {
    (1.0, 0): LN2,
    (0.5, 0): PI / 2,
    (1.5, 0): 2 - PI / 2,
    (2.0, 0): 1 - LN2,
    (1.0, 1): -PI ** 2 / 12,
    (2.0, 1): -1 + PI ** 2 / 12,
    (3.0, 1): 0.75 - PI ** 2 / 12,
    (0.5, 1): -4 * CATALAN,
    (1.5, 1): 4 * (CATALAN - 1),
    (2.5, 1): 32 / 9 - 4 * CATALAN,
}


def test_special_table_contents():
    table = special_values()
    assert len(table) == 10
    assert {(s.point.x, s.point.m) for s in table} == set(EXPECTED_FORMS)
    for s in table:
        assert s.numeric == pytest.approx(EXPECTED_FORMS[(s.point.x, s.point.m)], abs=1e-14)


@pytest.mark.parametrize("key", sorted(EXPECTED_FORMS))
def test_special_values_reproduced(key):
    r, _ = nielsen_beta(EvalPoint(*key))
    assert abs(r.value - EXPECTED_FORMS[key]) <= 1e-12
    assert r.error_bound <= 1e-12


def test_beta_prime_five_halves_is_negative():
    # beta' < 0 everywhere, which rules out a positive closed form at 5/2
    r, _ = nielsen_beta(EvalPoint(2.5, 1))
    assert r.value < 0
    assert abs(r.value - (32 / 9 - 4 * CATALAN)) < 1e-14


def test_lookup():
    assert lookup_special(2.0, 0).numeric == pytest.approx(0.3068528194400547, abs=1e-16)
    assert lookup_special(3.0, 1).numeric == pytest.approx(-0.0724670334241132, abs=1e-15)
    assert lookup_special(3.0, 0) is None


def test_domain_errors():
    with pytest.raises(DomainError):
        nielsen_beta(0.0)
    with pytest.raises(OrderTooLarge):
        nielsen_beta(EvalPoint(1.0, 13))


def test_float_shortcut():
    r, trace = nielsen_beta(1.5, m=0)
    assert r.value == pytest.approx(2 - PI / 2, abs=1e-15)
    assert beta(1.5) == r.value
    assert trace.reductions_applied == 0 and not trace.reflection_used


def test_reduction_small_x():
    r, trace = nielsen_beta(EvalPoint(0.05, 0))
    assert trace.reductions_applied == 1
    assert abs(r.value - BETA[(0.05, 0)]) <= r.error_bound
    direct = oracle_partial_sums(EvalPoint(0.05, 0), 10 ** 6)
    assert abs(r.value - direct.value) <= r.error_bound + direct.error_bound
    shifted = oracle_partial_sums(EvalPoint(1.05, 0), 10 ** 6)
    assert abs(r.value - (1 / 0.05 - shifted.value)) <= r.error_bound + shifted.error_bound + 1e-14


@pytest.mark.parametrize("key", sorted(BETA))
def test_against_frozen(key):
    x, m = key
    r, _ = nielsen_beta(EvalPoint(x, m), EvalConfig(point_tol(x, m, 1e-12)))
    assert abs(r.value - BETA[key]) <= r.error_bound + 2e-16 * abs(BETA[key])


def test_unreachable_is_reported():
    with pytest.raises(ToleranceUnreachable):
        nielsen_beta(EvalPoint(0.1, 4), EvalConfig(1e-12))


def test_reflection_half():
    r, trace = reflection_eval(0.5)
    assert r.contains(PI / 2, 1e-16)
    assert trace.reflection_used


@pytest.mark.parametrize("x", [0.25, 0.9])
def test_reflection_against_oracle(x):
    r, _ = reflection_eval(x)
    o = oracle_partial_sums(EvalPoint(x, 0), 10 ** 6)
    assert abs(r.value - o.value) <= r.error_bound + o.error_bound
    d, _ = nielsen_beta(EvalPoint(x, 0))
    assert abs(r.value - d.value) <= r.error_bound + d.error_bound


def test_reflection_domain():
    for x in (0.0, 1.0, 1.5, -0.2):
        with pytest.raises(DomainError):
            reflection_eval(x)


def test_reflection_residual_grid():
    for x in np.arange(0.05, 0.96, 0.05):
        x = float(x)
        a, _ = nielsen_beta(EvalPoint(x, 0))
        b, _ = nielsen_beta(EvalPoint(1 - x, 0))
        pole = PI / math.sin(PI * x)
        # 1 - x and sin(pi x) each carry a few roundings
        slack = a.error_bound + b.error_bound + 8e-16 * pole + 4e-16 * (1 - x) ** -2
        assert abs(a.value + b.value - pole) <= slack


def test_recurrence_residual_grid():
    for x in np.geomspace(0.1, 20, 40):
        x = float(x)
        for m in range(7):
            tol = point_tol(x, m, 1e-12)
            a, _ = nielsen_beta(EvalPoint(x + 1, m), EvalConfig(tol))
            b, _ = nielsen_beta(EvalPoint(x, m), EvalConfig(tol))
            term = (-1) ** m * math.factorial(m) * x ** -(m + 1)
            shift = abs((x + 1) - x - 1) * math.factorial(m + 1) * (x + 1) ** -(m + 2)
            slack = a.error_bound + b.error_bound + (m + 4) * 2.3e-16 * abs(term) + shift
            assert abs(a.value + b.value - term) <= slack


POLICIES = [BackendPolicy.AUTO, BackendPolicy.FORCE_SERIES,
            BackendPolicy.FORCE_QUAD_LAPLACE, BackendPolicy.FORCE_POLYGAMMA]


def test_policy_agreement_random():
    rng = np.random.default_rng(2024)
    xs = rng.uniform(0.1, 30, 30)
    ms = rng.integers(0, 5, 30)
    for x, m in zip(xs, ms):
        x, m = float(x), int(m)
        tol = point_tol(x, m, 1e-10)
        results = [nielsen_beta(EvalPoint(x, m), EvalConfig(tol, backend_policy=pol))[0]
                   for pol in POLICIES]
        for i, a in enumerate(results):
            for b in results[:i]:
                assert abs(a.value - b.value) <= a.error_bound + b.error_bound


def test_forced_backends_record_method():
    p = EvalPoint(2.0, 1)
    seen = {nielsen_beta(p, EvalConfig(1e-10, backend_policy=pol))[1].backend for pol in POLICIES[1:]}
    assert seen == {Method.SERIES, Method.QUADRATURE_LAPLACE, Method.POLYGAMMA}


@pytest.mark.parametrize("m", range(6))
def test_sign_and_monotonicity(m):
    xs = np.geomspace(0.2, 30, 60)
    vals = [(-1) ** m * nielsen_beta(EvalPoint(float(x), m), EvalConfig(point_tol(float(x), m, 1e-12)))[0].value
            for x in xs]
    assert all(v > 0 for v in vals)
    assert all(b < a for a, b in zip(vals, vals[1:]))
