import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx

from bohrlab.oracle import SeriesSpec, certified_sum
from bohrlab.specfun import (
    M_STAR,
    TruncatedSeries,
    area_tail,
    check_radial,
    dilog,
    dist_target,
    partial_sum_P,
    phi,
    poly_P,
    psi,
)

radii = st.floats(min_value=0.0, max_value=0.999, allow_nan=False)
GRID = [k / 20 for k in range(1, 20)]


def phi_enclosure(r, K):
    # sum_{n=2}^{K} r^n/(n(n-1)), tail <= r^(K+1) / (K (K+1) (1-r))
    partial = math.fsum(r**n / (n * (n - 1)) for n in range(2, K + 1))
    return partial, r ** (K + 1) / (K * (K + 1) * (1 - r))


class TestRadial:
    @pytest.mark.parametrize("bad", [-0.1, 1.0, 1.5, float("nan")])
    def test_rejects_outside_unit_interval(self, bad):
        with pytest.raises(ValueError):
            check_radial(bad)

    def test_accepts_zero(self):
        assert check_radial(0) == 0.0


class TestPhi:
    def test_zero(self):
        assert phi(0.0) == 0.0

    def test_half(self):
        # 40-digit mpmath sum of the defining series
        assert phi(0.5) == approx(0.15342640972002734529, abs=1e-15)

    def test_point_nine_inside_60_term_enclosure(self):
        partial, tail = phi_enclosure(0.9, 60)
        assert partial <= phi(0.9) <= partial + tail

    @pytest.mark.parametrize("r", GRID)
    def test_enclosure(self, r):
        partial, tail = phi_enclosure(r, 200)
        assert partial - 1e-15 <= phi(r) <= partial + tail + 1e-15

    @pytest.mark.parametrize("r", [1e-3, 1e-6, 1e-9, 0.1, 0.2499, 0.2501])
    def test_relative_accuracy_near_zero(self, r):
        exact = mpmath.mpf(r) + (1 - mpmath.mpf(r)) * mpmath.log1p(-mpmath.mpf(r))
        assert phi(r) == approx(float(exact), rel=1e-14)

    def test_limit_near_one(self):
        assert phi(1 - 1e-12) == approx(1.0, abs=1e-10)


class TestPsi:
    def test_zero(self):
        assert psi(1, 0.0) == 0.0

    def test_value(self):
        assert psi(2, 0.5) == approx(-0.21576155433883569558, abs=1e-15)

    @pytest.mark.parametrize("r", [k / 10 for k in range(1, 10)])
    def test_identity_with_phi(self, r):
        assert psi(1, r) - (phi(r) - r) == approx(0.0, abs=1e-15)

    def test_rejects_m_zero(self):
        with pytest.raises(ValueError):
            psi(0, 0.5)


class TestPartialSum:
    def test_empty(self):
        assert partial_sum_P(2, 0.7) == 0.0

    def test_n4(self):
        assert partial_sum_P(4, 0.5) == approx(0.25 / 2 + 0.125 / 6, abs=1e-16)

    def test_converges_to_phi(self):
        r = 0.8
        partial, tail = phi_enclosure(r, 300)
        assert -1e-15 <= phi(r) - partial_sum_P(301, r) <= tail + 1e-15

    def test_rejects_small_N(self):
        with pytest.raises(ValueError):
            partial_sum_P(1, 0.5)


class TestDilog:
    def test_endpoints(self):
        assert dilog(0.0) == 0.0
        assert dilog(1.0) == math.pi**2 / 6

    def test_half_against_series_oracle(self):
        s = certified_sum(SeriesSpec(lambda n: 1.0 / n**2, 1, 0.5), 200)
        assert s.tail_bound <= 0.5**201 / (201**2 * 0.5)
        assert dilog(0.5) == approx(s.partial_sum, abs=1e-15)
        assert dilog(0.5) == approx(0.58224052646501250590, abs=1e-15)

    @pytest.mark.parametrize("x", [0.01, 0.3, 0.5, 0.51, 0.75, 0.9, 0.99, 0.999999])
    def test_against_mpmath(self, x):
        assert dilog(x) == approx(float(mpmath.polylog(2, x)), abs=1e-14)

    @pytest.mark.parametrize("x", [-1e-9, 1.0000001])
    def test_domain(self, x):
        with pytest.raises(ValueError):
            dilog(x)

    @given(st.floats(min_value=1e-6, max_value=1 - 1e-6))
    def test_reflection(self, x):
        residual = dilog(x) + dilog(1 - x) + math.log(x) * math.log1p(-x) - math.pi**2 / 6
        assert abs(residual) <= 1e-13


def area_series(M, r, K):
    x = r * r
    partial = math.fsum(n * (2 * M / (n * (n - 1))) ** 2 * x**n for n in range(2, K + 1))
    c_next = 4 * M * M / ((K + 1) * K**2)
    return partial, c_next * x ** (K + 1) / (1 - x)


class TestAreaTail:
    def test_zero(self):
        assert area_tail(1.0, 0.0) == 0.0

    def test_M1_half(self):
        partial, tail = area_series(1.0, 0.5, 80)
        assert partial - 1e-15 <= area_tail(1.0, 0.5) <= partial + tail + 1e-15
        assert area_tail(1.0, 0.5) == approx(0.13069885643807538924, abs=1e-14)

    def test_half_point_seven(self):
        partial, tail = area_series(0.5, 0.7, 400)
        assert tail < 1e-14
        assert area_tail(0.5, 0.7) == approx(partial, abs=1e-12)
        assert area_tail(0.5, 0.7) == approx(0.13194055967388723969, abs=1e-14)

    @pytest.mark.parametrize("r", GRID)
    @pytest.mark.parametrize("M", [0.2, 1.0])
    def test_grid(self, M, r):
        partial, tail = area_series(M, r, 600)
        assert area_tail(M, r) == approx(partial, abs=1e-12)


class TestPolyP:
    def test_values(self):
        assert poly_P(4, 0.0) == 0.0
        assert poly_P(3, 1.0) == 3.0
        assert poly_P(2, 0.5) == 0.75

    @given(st.integers(1, 12), st.floats(0, 3), st.floats(0, 3))
    def test_increasing(self, N, a, b):
        lo, hi = sorted((a, b))
        assert poly_P(N, lo) <= poly_P(N, hi)

    @given(st.integers(1, 12), st.floats(0, 2))
    def test_matches_power_sum(self, N, w):
        assert poly_P(N, w) == approx(sum(w**k for k in range(1, N + 1)), rel=1e-13, abs=1e-300)


class TestDistTarget:
    def test_values(self):
        assert dist_target(0.2) == approx(0.84548225555204375247, abs=1e-15)
        assert dist_target(1.0) == approx(0.22741127776021876233, abs=1e-15)

    def test_threshold(self):
        assert dist_target(M_STAR) == approx(0.0, abs=1e-15)
        assert M_STAR == approx(1.2943497247810449154, abs=1e-15)

    @given(st.floats(min_value=1e-6, max_value=5))
    def test_sign(self, M):
        if M < M_STAR * (1 - 1e-12):
            assert dist_target(M) > 0
        elif M > M_STAR * (1 + 1e-12):
            assert dist_target(M) < 0


@settings(max_examples=200)
@given(radii, radii, st.integers(2, 9), st.floats(0.05, 2.0))
def test_kernels_nondecreasing(a, b, N, M):
    r1, r2 = sorted((a, b))
    assert phi(r1) <= phi(r2)
    assert partial_sum_P(N, r1) <= partial_sum_P(N, r2)
    assert dilog(r1) <= dilog(r2)
    assert area_tail(M, r1) <= area_tail(M, r2)


@given(radii, radii, st.integers(1, 4))
def test_psi_plus_power_nondecreasing(a, b, m):
    # psi(m, r) + r**m = sum_{n>=2} r^(mn)/(n(n-1)) has nonnegative coefficients
    r1, r2 = sorted((a, b))
    assert psi(m, r1) + r1**m <= psi(m, r2) + r2**m + 1e-15


def test_truncated_series_rejects_negative_tail():
    with pytest.raises(ValueError):
        TruncatedSeries(1.0, -1e-3, 5)
