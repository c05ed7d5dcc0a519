import math

import numpy as np
import pytest

from ballavoid.construction import CANONICAL_OFFSET, chord_coordinate
from ballavoid.errors import DomainError, NumericError
from ballavoid.specfun import unit_ball_volume
from ballavoid.volume import (
    adaptive_gauss_legendre,
    dvol_da,
    lower_bound_vol_T,
    maximize_a,
    ratio_S,
    ratio_table,
    vol_T_closed_form,
    vol_T_quadrature,
)

A = CANONICAL_OFFSET
C = chord_coordinate(A)


# --- independent antiderivative oracles (dimensions 2 and 3 only) --------

def _circle_area_antiderivative(x, r):
    # int sqrt(r^2 - x^2) dx
    return 0.5 * x * math.sqrt(r * r - x * x) + 0.5 * r * r * math.asin(x / r)


def oracle_vol_T2(a=A):
    c = chord_coordinate(a)
    h = a - 0.5
    slab = 2.0 * (_circle_area_antiderivative(h, 0.5) - _circle_area_antiderivative(-h, 0.5))
    cap = 2.0 * (_circle_area_antiderivative(1.0, 1.0) - _circle_area_antiderivative(c, 1.0))
    return slab, cap


def _cubic_antiderivative(x, r):
    # int (r^2 - x^2) dx
    return r * r * x - x**3 / 3.0


def oracle_vol_T3(a=A):
    c = chord_coordinate(a)
    h = a - 0.5
    slab = math.pi * (_cubic_antiderivative(h, 0.5) - _cubic_antiderivative(-h, 0.5))
    cap = math.pi * (_cubic_antiderivative(1.0, 1.0) - _cubic_antiderivative(c, 1.0))
    return slab, cap


# Frozen from the oracles above.
VOL_T2 = 0.4475095645950514
VOL_T3 = 0.3273785868196076
LOWER_T2 = 0.3775030120694277
LOWER_T3 = 0.2890593780223384
RATIO_2 = 0.2848934371448171
RATIO_3 = 0.1563117610643393


class TestOracleSelfConsistency:
    def test_frozen_values_match_antiderivatives(self):
        slab2, cap2 = oracle_vol_T2()
        slab3, cap3 = oracle_vol_T3()
        assert slab2 + cap2 == pytest.approx(VOL_T2, abs=1e-14)
        assert slab2 == pytest.approx(LOWER_T2, abs=1e-14)
        assert slab3 + cap3 == pytest.approx(VOL_T3, abs=1e-14)
        assert slab3 == pytest.approx(LOWER_T3, abs=1e-14)
        assert 2 * (slab2 + cap2) / math.pi == pytest.approx(RATIO_2, abs=1e-14)
        assert 2 * (slab3 + cap3) / (4 * math.pi / 3) == pytest.approx(RATIO_3, abs=1e-14)


class TestVolT:
    def test_quadrature_n2(self):
        assert vol_T_quadrature(2, A).log_value.linear() == pytest.approx(VOL_T2, abs=1e-9)

    def test_quadrature_n3(self):
        assert vol_T_quadrature(3, A).log_value.linear() == pytest.approx(VOL_T3, abs=1e-9)

    def test_closed_form_n2(self):
        assert vol_T_closed_form(2, A).log_value.linear() == pytest.approx(VOL_T2, abs=1e-12)

    def test_closed_form_n3(self):
        assert vol_T_closed_form(3, A).log_value.linear() == pytest.approx(VOL_T3, abs=1e-12)

    def test_degenerate_offset_limit_is_half_small_ball(self):
        # As a -> 1/2+ the cap sliver vanishes and T tends to the half of
        # the small ball beyond x_1 = 1/2, of area pi/8 in the plane.
        vols = [vol_T_closed_form(2, a).log_value.linear() for a in (0.52, 0.51, 0.502, 0.5005)]
        assert all(b < a for a, b in zip(vols, vols[1:]))
        assert vols[-1] == pytest.approx(math.pi / 8, abs=5e-3)

    def test_method_agreement_over_random_offsets(self):
        rng = np.random.default_rng(42)
        for n in range(2, 51):
            for a in rng.uniform(0.52, 0.98, 20):
                q = vol_T_quadrature(n, float(a)).log_value.log_magnitude
                cf = vol_T_closed_form(n, float(a)).log_value.log_magnitude
                assert abs(q - cf) <= 1e-10

    def test_tolerance_domain(self):
        with pytest.raises(DomainError):
            vol_T_quadrature(3, A, tol=1e-3)
        with pytest.raises(DomainError):
            vol_T_quadrature(3, A, tol=1e-16)

    def test_invalid_params(self):
        with pytest.raises(DomainError):
            vol_T_closed_form(1, A)
        with pytest.raises(DomainError):
            vol_T_quadrature(3, 0.3)

    def test_high_dimension_stays_finite(self):
        est = vol_T_closed_form(5000)
        assert math.isfinite(est.log_value.log_magnitude)
        assert est.log_value.underflows


class TestLowerBound:
    def test_frozen_values(self):
        assert lower_bound_vol_T(2, A).log_value.linear() == pytest.approx(LOWER_T2, abs=1e-12)
        assert lower_bound_vol_T(3, A).log_value.linear() == pytest.approx(LOWER_T3, abs=1e-12)

    def test_never_exceeds_full_volume(self):
        rng = np.random.default_rng(5)
        for n in (2, 3, 7, 20, 45):
            for a in rng.uniform(0.52, 0.98, 10):
                lo = lower_bound_vol_T(n, float(a)).log_value.log_magnitude
                hi = vol_T_closed_form(n, float(a)).log_value.log_magnitude
                assert lo <= hi + 1e-14


class TestRatio:
    def test_frozen_ratio_n2(self):
        row = ratio_S(2)
        assert row.ratio == pytest.approx(RATIO_2, abs=1e-12)
        assert f"{row.ratio:.10g}".startswith("0.2848")
        assert row.scaled == pytest.approx(4 * RATIO_2, rel=1e-12)
        assert row.margin > 0

    def test_frozen_ratio_n3(self):
        row = ratio_S(3)
        assert row.ratio == pytest.approx(RATIO_3, abs=1e-12)
        assert f"{row.ratio:.10g}".startswith("0.1563")

    def test_quadrature_method_matches(self):
        assert ratio_S(2, method="quadrature").ratio == pytest.approx(RATIO_2, rel=1e-10)

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            ratio_S(2, method="sorcery")

    def test_table_margins_and_monotone_scaled(self):
        rows = ratio_table(2, 200)
        assert [r.n for r in rows] == list(range(2, 201))
        assert all(r.margin > 0 for r in rows)
        assert all(1.0 < r.scaled < 2.0 for r in rows)
        scaled = [r.scaled for r in rows]
        assert all(b > a for a, b in zip(scaled, scaled[1:]))

    def test_table_bounds_validated(self):
        with pytest.raises(DomainError):
            ratio_table(1, 5)
        with pytest.raises(DomainError):
            ratio_table(5, 4)
        with pytest.raises(DomainError):
            ratio_table(2, 10001)

    def test_small_ball_containment_bracket(self):
        # vol T < (1/2)^n v_n + unit-cap volume.
        from ballavoid.specfun import slab_fraction

        for n in (2, 3, 10, 40):
            vol_t = vol_T_closed_form(n).log_value.log_magnitude
            log_vn = unit_ball_volume(n).log_magnitude
            upper = np.logaddexp(
                n * math.log(0.5) + log_vn, log_vn + math.log(slab_fraction(n, C, 1.0))
            )
            assert vol_t <= upper


class TestDerivative:
    def test_zero_at_canonical_offset(self):
        for n in (2, 3, 10, 60):
            scale = math.exp(unit_ball_volume(n - 1).log_magnitude)
            assert abs(dvol_da(n, A)) <= 1e-10 * scale

    def test_sign_past_the_maximum(self):
        assert dvol_da(2, 0.75) < 0
        assert dvol_da(2, 0.6) > 0

    def test_finite_difference_at_fixed_point(self):
        h = 1e-5
        fd = (
            vol_T_closed_form(3, 0.68 + h).log_value.linear()
            - vol_T_closed_form(3, 0.68 - h).log_value.linear()
        ) / (2 * h)
        assert dvol_da(3, 0.68) == pytest.approx(fd, rel=1e-6)

    def test_finite_difference_at_random_points(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            n = int(rng.integers(2, 30))
            a = float(rng.uniform(0.55, 0.95))
            h = 1e-6
            fd = (
                vol_T_closed_form(n, a + h).log_value.linear()
                - vol_T_closed_form(n, a - h).log_value.linear()
            ) / (2 * h)
            assert dvol_da(n, a) == pytest.approx(fd, rel=1e-6)


def bisect_dvol_root(n):
    lo, hi = 0.6, 0.8
    assert dvol_da(n, lo) > 0 > dvol_da(n, hi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if dvol_da(n, mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestMaximizer:
    @pytest.mark.parametrize("n", [2, 3, 10])
    def test_matches_bisection_oracle(self, n):
        root = bisect_dvol_root(n)
        assert root == pytest.approx(CANONICAL_OFFSET, abs=1e-10)
        assert maximize_a(n) == pytest.approx(root, abs=1e-7)

    def test_argmax_invariant_across_dimensions(self):
        values = [maximize_a(n) for n in (2, 5, 12)]
        assert max(values) - min(values) <= 1e-7

    def test_preconditions(self):
        with pytest.raises(DomainError):
            maximize_a(1)
        with pytest.raises(DomainError):
            maximize_a(3, tol=1e-13)


class TestAdaptiveQuadrature:
    def test_smooth_integral(self):
        val, err = adaptive_gauss_legendre(np.sin, 0.0, math.pi, 1e-12)
        assert val == pytest.approx(2.0, rel=1e-12)

    def test_empty_interval(self):
        assert adaptive_gauss_legendre(np.sin, 1.0, 1.0, 1e-12) == (0.0, 0.0)

    def test_budget_exhaustion_reports_best_estimate(self):
        f = lambda x: np.sin(1000.0 * x)
        with pytest.raises(NumericError) as info:
            adaptive_gauss_legendre(f, 0.0, 10.0, 1e-14, max_panels=4)
        assert info.value.best_estimate is not None
        assert info.value.achieved_error is not None
