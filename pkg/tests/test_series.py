import math

import numpy as np
import pytest

from nielsenbeta.core import (
    CATALAN,
    LN2,
    PI,
    EvalConfig,
    EvalPoint,
    TermBudgetExceeded,
    ToleranceUnreachable,
)
from nielsenbeta.series import (
    beta_deriv_at_half,
    beta_deriv_at_one,
    beta_series,
    catalan_from_representations,
    eta,
    oracle_partial_sums,
    series_pairs_needed,
)

from nielsenbeta.harness import point_tol

from .oracles import BETA, BETA2_HALF, ETA3


@pytest.mark.parametrize("x,m,expected", [
    (1.0, 0, LN2),
    (1.0, 1, -PI ** 2 / 12),
    (2.0, 0, 1 - LN2),
    (0.5, 1, -4 * CATALAN),
])
def test_series_closed_forms(x, m, expected):
    r = beta_series(EvalPoint(x, m), EvalConfig(1e-12))
    assert r.error_bound <= 1e-12
    assert abs(r.value - expected) <= r.error_bound + 4e-16 * abs(expected)


@pytest.mark.parametrize("key", [k for k in BETA if k[0] >= 0.25])
def test_series_against_frozen(key):
    x, m = key
    r = beta_series(EvalPoint(x, m), EvalConfig(point_tol(x, m, 1e-12)))
    assert abs(r.value - BETA[key]) <= r.error_bound + 2e-16 * abs(BETA[key])


def test_series_sign_law():
    for m in range(6):
        for x in (0.2, 1.0, 9.0):
            r = beta_series(EvalPoint(x, m), EvalConfig(point_tol(x, m, 1e-10)))
            assert math.copysign(1, r.value) == (-1) ** m


def test_series_budget():
    with pytest.raises(TermBudgetExceeded):
        beta_series(EvalPoint(1.0, 0), EvalConfig(1e-15, max_terms=1000))


def test_series_unreachable_near_zero():
    # |beta^(4)(0.1)| ~ 2.4e6, so 1e-15 is far below one ulp
    with pytest.raises(ToleranceUnreachable):
        beta_series(EvalPoint(0.1, 4), EvalConfig(1e-15))


def test_pair_count_grows_with_precision():
    assert series_pairs_needed(1.0, 0, 1e-6) < series_pairs_needed(1.0, 0, 1e-12)
    assert series_pairs_needed(1.0, 3, 1e-12) < series_pairs_needed(1.0, 0, 1e-12)


def test_term_monotonicity():
    for x in (0.1, 1.0, 7.5):
        for m in range(5):
            k = np.arange(0, 5000, dtype=float)
            t = math.factorial(m) / (k + x) ** (m + 1)
            assert np.all(np.diff(t) < 0)


def test_pairing_positivity_and_monotone_partial_sums():
    for x in (0.05, 0.7, 3.0):
        for m in range(4):
            j = np.arange(2000, dtype=float)
            g = (2 * j + x) ** -(m + 1) - (2 * j + 1 + x) ** -(m + 1)
            assert np.all(g > 0)
            prev = -math.inf
            for n in (1, 10, 100, 1000):
                r = oracle_partial_sums(EvalPoint(x, m), n)
                signed = (-1) ** m * r.value
                assert signed > prev
                prev = signed


@pytest.mark.parametrize("x,m,expected", [
    (1.0, 0, LN2),
    (2.0, 0, 1 - LN2),
    (0.5, 1, -4 * CATALAN),
])
def test_oracle_matches_closed_forms(x, m, expected):
    r = oracle_partial_sums(EvalPoint(x, m), 10 ** 6)
    assert abs(r.value - expected) <= r.error_bound


def test_oracle_bound_is_first_omitted_term():
    r = oracle_partial_sums(EvalPoint(0.3, 0), 1000)
    assert r.error_bound >= 1 / (2000 + 0.3)
    assert r.pairs_summed == 1000 and r.terms_or_nodes == 2000


def test_oracle_two_sizes_consistent():
    p = EvalPoint(0.3, 0)
    a = oracle_partial_sums(p, 1000)
    b = oracle_partial_sums(p, 100_000)
    assert abs(a.value - b.value) <= max(a.error_bound, b.error_bound)


def test_series_vs_oracle_x03():
    p = EvalPoint(0.3, 0)
    s = beta_series(p, EvalConfig(1e-12))
    o = oracle_partial_sums(p, 10 ** 6)
    assert abs(s.value - o.value) <= s.error_bound + o.error_bound


def test_series_vs_oracle_log_grid():
    xs = np.geomspace(0.1, 50, 50)
    for x in xs:
        for m in range(5):
            p = EvalPoint(float(x), m)
            o = oracle_partial_sums(p, 20_000)
            s = beta_series(p, EvalConfig(point_tol(float(x), m, 1e-12)))
            assert abs(s.value - o.value) <= s.error_bound + o.error_bound


def test_eta_values():
    assert eta(1).contains(LN2)
    assert eta(2).contains(PI ** 2 / 12, 2e-16)
    e3 = eta(3)
    assert e3.contains(ETA3, 2e-16)
    assert abs(e3.value - 0.75 * 1.2020569031595942) < 1e-12


def test_eta_domain():
    with pytest.raises(ValueError):
        eta(0)


def test_beta_deriv_at_one():
    assert beta_deriv_at_one(0).contains(LN2)
    assert beta_deriv_at_one(1).contains(-PI ** 2 / 12, 4e-16)
    assert beta_deriv_at_one(2).contains(2 * ETA3, 8e-16)


def test_beta_deriv_at_half():
    r = beta_deriv_at_half(1)
    assert r.contains(-4 * CATALAN, 1e-15)
    r2 = beta_deriv_at_half(2)
    assert r2.contains(BETA2_HALF, 4e-15)
    s = beta_series(EvalPoint(0.5, 2), EvalConfig(1e-10))
    assert abs(r2.value - s.value) <= r2.error_bound + s.error_bound


def test_beta_deriv_at_half_polygamma_route():
    # psi'(1/4) = pi^2 + 8G and psi'(3/4) = pi^2 - 8G give -4G
    quarter = 0.25 * ((PI ** 2 - 8 * CATALAN) - (PI ** 2 + 8 * CATALAN))
    assert abs(beta_deriv_at_half(1).value - quarter) < 1e-13


def test_catalan_representations():
    g1, g2 = catalan_from_representations()
    assert g1.contains(CATALAN, 2e-16)
    assert g2.contains(CATALAN, 2e-16)
    assert abs(g1.value - g2.value) <= g1.error_bound + g2.error_bound
