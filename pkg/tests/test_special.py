import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import reduction_lhs
from hemifrustum.errors import DivergenceError, DomainError, PoleError
from hemifrustum.quadrature import adaptive_quad_1d
from hemifrustum.series import SeriesResult, TruncationPolicy
from hemifrustum.special import (four_f3_negative_denominator_reduction, gauss_2f1,
                                 log_gamma, pfq, pochhammer, sin_cos_moment)

EPS = np.finfo(float).eps

# frozen by tests/oracles/compute_oracles.py (30-digit brute-force sums)
PFQ_HALF_THREEHALVES = 2.2570822507838922523
GAUSS_NEG = 1.0251790597101729369
REDUCTION_P0 = 0.026085223149662896295


class TestPolicy:
    def test_defaults(self):
        p = TruncationPolicy()
        assert (p.rel_tol, p.max_terms, p.consecutive_small) == (1e-12, 100_000, 3)

    @pytest.mark.parametrize("kw", [dict(rel_tol=0.0), dict(rel_tol=1.0),
                                    dict(max_terms=0), dict(consecutive_small=0),
                                    dict(max_shells=0)])
    def test_rejects_bad_fields(self, kw):
        with pytest.raises(DomainError):
            TruncationPolicy(**kw)


class TestLogGamma:
    def test_examples(self):
        assert log_gamma(1) == 0.0
        assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-15)
        assert log_gamma(10) == pytest.approx(math.log(362880), rel=1e-15)

    @pytest.mark.parametrize("x", [0.0, -1.5, -3.0])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            log_gamma(x)

    @settings(max_examples=300, deadline=None)
    @given(st.floats(min_value=-3, max_value=6))
    def test_relative_accuracy(self, e):
        x = 10.0 ** e
        exact = mpmath.loggamma(mpmath.mpf(x))
        if exact == 0:
            assert log_gamma(x) == 0.0
            return
        assert abs(log_gamma(x) - float(exact)) <= 1e-13 * abs(float(exact))

    @pytest.mark.parametrize("x", [1 + 1e-9, 2 - 1e-9, 0.999, 2.001, 1e-3, 1e6])
    def test_relative_accuracy_near_zeros(self, x):
        exact = float(mpmath.loggamma(mpmath.mpf(x)))
        assert abs(log_gamma(x) - exact) <= 1e-13 * abs(exact)


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(-3.7, 0) == 1.0
        assert pochhammer(0.0, 0) == 1.0
        assert pochhammer(0.5, 3) == 1.875
        assert pochhammer(-2, 4) == 0.0

    def test_rejects_negative_order(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)

    @settings(max_examples=300, deadline=None)
    @given(st.floats(min_value=-5, max_value=20), st.integers(0, 15), st.integers(0, 15))
    def test_product_split(self, x, m, n):
        # keep every factor x + k well away from zero so rounding stays at the ulp level
        if any(abs(x + k) < 0.25 for k in range(m + n)):
            return
        whole = pochhammer(x, m + n)
        split = pochhammer(x, m) * pochhammer(x + m, n)
        assert whole == pytest.approx(split, rel=1e-14)


class TestPfq:
    def test_zero_argument(self):
        for a, b, c in [(1, 2, 3), (-0.5, 7.2, 0.3), (10, -3, 4)]:
            assert pfq([a, b], [c], 0.0).value == 1.0

    def test_log_identity(self):
        res = pfq([1, 1], [2], 0.5)
        assert res.converged
        assert res.value == pytest.approx(2 * math.log(2), rel=1e-12)
        assert res.value == pytest.approx(1.3862944, abs=5e-8)

    def test_reference_value(self):
        res = pfq([0.5, 1.5], [1], 0.64)
        assert res.converged
        assert res.value == pytest.approx(PFQ_HALF_THREEHALVES, rel=1e-11)

    def test_terminating_is_exact(self):
        res = pfq([-3, 2.5], [1.5], 0.7)
        # 2F1(-3, b; c; z) is a cubic polynomial
        b, c, z = 2.5, 1.5, 0.7
        poly = sum(pochhammer(-3, k) * pochhammer(b, k) / (pochhammer(c, k) * math.factorial(k))
                   * z ** k for k in range(4))
        assert res.converged and res.error_estimate == 0.0
        assert res.value == pytest.approx(poly, rel=1e-15)
        assert res.terms_used == 4

    def test_terminating_beats_pole(self):
        res = pfq([-2, 1], [-5], 0.3)
        assert res.converged and res.terms_used == 3

    def test_pole(self):
        with pytest.raises(PoleError):
            pfq([1, 1], [-2], 0.3)
        with pytest.raises(PoleError):
            pfq([-2, 1], [-2], 0.3)

    def test_divergence(self):
        with pytest.raises(DivergenceError):
            pfq([1, 1], [2], 1.0)
        with pytest.raises(DivergenceError):
            pfq([1, 1], [2], -1.5)
        with pytest.raises(DivergenceError):
            pfq([1, 1, 1], [2], 0.1)

    def test_terminating_large_argument_allowed(self):
        res = pfq([-2, 1], [3], 5.0)
        assert res.value == pytest.approx(1 + (-2) * 5 / 3 + (2 * 2 * 25) / (3 * 4 * 2))

    def test_budget_exhausted(self):
        res = pfq([1, 1], [2], 0.999, TruncationPolicy(max_terms=50))
        assert not res.converged
        assert res.terms_used == 50

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=0.0, max_value=20.0))
    def test_exponential_nonnegative(self, z):
        res = pfq([], [], z)
        assert res.converged
        assert abs(res.value - math.exp(z)) <= 1e-12 * max(math.exp(z), 1.0)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=-20.0, max_value=0.0))
    def test_exponential_negative(self, z):
        # terms reach e^|z| before cancelling down to e^z, so binary64 leaves
        # an absolute rounding floor of about eps * abs_sum on top of rel_tol
        res = pfq([], [], z)
        assert res.converged
        assert res.abs_sum == pytest.approx(math.exp(-z), rel=1e-12)
        bound = 1e-12 * max(math.exp(z), 1.0) + 4 * EPS * res.abs_sum
        assert abs(res.value - math.exp(z)) <= bound

    def test_convergence_invariant(self):
        for args in [([0.5, 1.5], [1], 0.64), ([2, 3], [4], -0.9), ([], [], 3.0)]:
            res = pfq(*args)
            assert res.converged
            assert res.error_estimate <= 1e-12 * max(abs(res.value), 1.0)


class TestGauss2F1:
    def test_binomial(self):
        assert gauss_2f1(0.5, 1, 1, 0.25).value == pytest.approx(2 / math.sqrt(3), rel=1e-12)

    def test_zero(self):
        assert gauss_2f1(-0.5, 1, 2, 0).value == 1.0

    def test_reference_value(self):
        assert gauss_2f1(-0.5, 1, 2, -0.1024).value == pytest.approx(GAUSS_NEG, rel=1e-13)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-5, 5), st.floats(-5, 5), st.floats(0.1, 6), st.floats(-0.95, 0.95))
    def test_symmetry_exact(self, a, b, c, z):
        assert gauss_2f1(a, b, c, z) == gauss_2f1(b, a, c, z)


class TestReduction:
    def test_zero_argument(self):
        for p in range(4):
            assert four_f3_negative_denominator_reduction(1, 2, 3, 4, 5, 6, p, 0.0).value == 0.0

    def test_zero_numerator(self):
        assert four_f3_negative_denominator_reduction(0, 2, 3, 4, 5, 6, 2, 0.3).value == 0.0

    def test_reference_value(self):
        res = four_f3_negative_denominator_reduction(-0.5, 2, 1, 2, 1, 3, 0, -0.04)
        assert res.value == pytest.approx(REDUCTION_P0, rel=1e-13)
        assert reduction_lhs(-0.5, 2, 1, 2, 1, 3, 0, -0.04) == pytest.approx(REDUCTION_P0, rel=1e-13)

    def test_pole(self):
        with pytest.raises(PoleError):
            four_f3_negative_denominator_reduction(1, 1, 1, 1, -2, 1, 1, 0.1)

    def test_bad_order(self):
        with pytest.raises(DomainError):
            four_f3_negative_denominator_reduction(1, 1, 1, 1, 1, 1, -1, 0.1)

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_shifted_sum(self, seed):
        rng = np.random.default_rng(seed)
        A, B, C, D = rng.uniform(-0.9, 3.0, 4)
        E, G = rng.uniform(0.2, 4.0, 2)
        p = int(rng.integers(0, 4))
        z = float(rng.uniform(-0.5, 0.5))
        res = four_f3_negative_denominator_reduction(A, B, C, D, E, G, p, z)
        assert res.value == pytest.approx(reduction_lhs(A, B, C, D, E, G, p, z), rel=1e-12)


class TestSinCosMoment:
    @pytest.mark.parametrize("alpha,beta,expected", [
        (0, 0, math.pi / 2), (1, 1, 0.5), (2, 0, math.pi / 4)])
    def test_examples(self, alpha, beta, expected):
        assert sin_cos_moment(alpha, beta) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("alpha,beta", [(-1, 0), (0, -1.5)])
    def test_domain(self, alpha, beta):
        with pytest.raises(DomainError):
            sin_cos_moment(alpha, beta)

    @pytest.mark.parametrize("alpha", [0, 0.5, 1, 2, 3.5])
    @pytest.mark.parametrize("beta", [0, 0.5, 1, 2, 3.5])
    def test_against_quadrature(self, alpha, beta):
        q = adaptive_quad_1d(lambda t: np.sin(t) ** alpha * np.cos(t) ** beta,
                             0.0, math.pi / 2, abs_tol=1e-13, rel_tol=1e-13)
        assert abs(q.value - sin_cos_moment(alpha, beta)) <= 1e-10


def test_series_result_dict():
    r = SeriesResult(1.5, 3, 0.0, True, 1.5)
    assert r.to_dict() == {"value": 1.5, "terms_used": 3, "error_estimate": 0.0,
                           "converged": True, "abs_sum": 1.5}
