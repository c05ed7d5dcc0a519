import math

import pytest

from ballavoid.concentration import (
    best_certificate,
    certified_ratio_lower_bound,
    certifying_constants,
    concentration_bound,
    minimal_certified_n,
    validate_theorem,
)
from ballavoid.construction import CANONICAL_OFFSET
from ballavoid.errors import CertificateError, DomainError
from ballavoid.volume import ratio_S

A = CANONICAL_OFFSET


class TestConcentrationBound:
    def test_hand_values(self):
        assert concentration_bound(2.0) == pytest.approx(1 - math.exp(-2), abs=1e-15)
        assert concentration_bound(1.0) == pytest.approx(-0.2130613194, abs=1e-10)

    def test_large_c_saturates(self):
        assert abs(concentration_bound(10.0) - 1.0) <= 1e-15

    def test_vacuous_bound_returned_not_clamped(self):
        assert concentration_bound(1.0) < 0

    def test_hypothesis_c_at_least_one(self):
        with pytest.raises(DomainError):
            concentration_bound(0.99)


class TestCertifiedLowerBound:
    def test_wide_dimension_hand_value(self):
        c = (2 * A - 1) * math.sqrt(39)
        scaled = certified_ratio_lower_bound(40, c)
        assert scaled == pytest.approx(1.9114495, abs=1e-6)
        assert scaled >= 1.9

    def test_threshold_pair(self):
        scaled = certified_ratio_lower_bound(15, 1.44)
        assert scaled == pytest.approx(1.0150346, abs=1e-6)
        assert scaled > 1.0

    def test_width_violation_names_required_dimension(self):
        with pytest.raises(CertificateError) as info:
            certified_ratio_lower_bound(10, 1.44)
        assert info.value.n_required == 15

    def test_never_exceeds_exact_ratio(self):
        for n in (15, 20, 28, 40, 64):
            for c in (1.44, 1.6, 2.0, 2.4):
                try:
                    scaled = certified_ratio_lower_bound(n, c)
                except CertificateError:
                    continue
                assert scaled <= ratio_S(n).scaled

    def test_dimension_precondition(self):
        with pytest.raises(DomainError):
            certified_ratio_lower_bound(2, 2.0)


class TestMinimalCertifiedN:
    def test_c_two(self):
        cert = minimal_certified_n(2.0)
        assert cert.n_min == 28
        assert cert.width_ok_from == 28
        assert cert.bound_factor == pytest.approx(2 * (1 - math.exp(-2)), abs=1e-12)

    def test_threshold_constant_certifies_fifteen(self):
        assert minimal_certified_n(1.44).n_min == 15

    def test_too_small_c_has_no_certificate(self):
        with pytest.raises(CertificateError):
            minimal_certified_n(1.40)

    def test_width_threshold_monotone_in_c(self):
        certs = [minimal_certified_n(c) for c in (1.45, 1.6, 1.9, 2.3, 2.9)]
        widths = [cert.width_ok_from for cert in certs]
        assert all(b >= a for a, b in zip(widths, widths[1:]))


class TestBestCertificate:
    def test_best_certificate_reaches_fifteen(self):
        cert = best_certificate()
        assert cert.n_min <= 15
        assert cert.bound_factor > 1.0

    def test_refinement_never_worsens(self):
        coarse = best_certificate(resolution=1e-3)
        fine = best_certificate(resolution=2.5e-4)
        assert fine.n_min <= coarse.n_min

    def test_grid_contains_two(self):
        certs = certifying_constants()
        assert any(abs(cert.c - 2.0) < 1e-12 for cert in certs)

    def test_no_certificate_in_vacuous_range(self):
        with pytest.raises(CertificateError):
            best_certificate(c_min=1.0, c_max=1.3)

    def test_resolution_precondition(self):
        with pytest.raises(DomainError):
            best_certificate(resolution=0.01)


class TestValidateTheorem:
    def test_hand_cubic_case(self):
        # n=3, c=1: exact slab fraction (3/2)(h - h^3/3) at h = 1/sqrt(2).
        h = 1 / math.sqrt(2)
        exact = 1.5 * (h - h**3 / 3)
        assert exact == pytest.approx(0.8838834765, abs=1e-9)
        assert validate_theorem(3, 1.0)

    def test_wide_slab_rejected(self):
        with pytest.raises(DomainError):
            validate_theorem(3, 2.0)

    def test_full_grid(self):
        for n in range(3, 51):
            for c in (1.0, 1.5, 2.0, 3.0):
                if c / math.sqrt(n - 1) > 1.0:
                    continue
                assert validate_theorem(n, c)
