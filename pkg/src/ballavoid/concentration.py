"""Equatorial-slab concentration certificates.

Most of a high-dimensional ball's volume lies near any hyperplane through
the center: for n >= 3 and c >= 1 the slab |x_1| <= c/sqrt(n-1) holds a
fraction at least 1 - (2/c) e^(-c^2/2) of the unit ball.  Rescaled to the
radius-1/2 ball (fractions are scale invariant), this certifies
vol S / vol B > (1/2)^n for every dimension where the theorem's slab fits
inside the construction's slab of half-width a - 1/2, i.e. where
c/sqrt(n-1) <= 2a - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .construction import CANONICAL_OFFSET
from .errors import CertificateError, DomainError
from .specfun import slab_fraction


@dataclass(frozen=True)
class ConcentrationCertificate:
    """A constant c together with the range of dimensions it certifies.

    bound_factor = 2 (1 - (2/c) e^(-c^2/2)) is the certified lower bound
    for the 2^n-scaled ratio; the certificate is only meaningful when it
    exceeds 1.
    """

    c: float
    n_min: int
    bound_factor: float
    width_ok_from: int


def concentration_bound(c: float) -> float:
    """1 - (2/c) e^(-c^2/2); may be negative (vacuous) and is returned as-is."""
    if not c >= 1.0:
        raise DomainError(f"the inequality requires c >= 1, got {c!r}")
    return 1.0 - (2.0 / c) * math.exp(-0.5 * c * c)


def _width_ok_from(c: float, a: float) -> int:
    """Smallest n with c/sqrt(n-1) <= 2a - 1.

    The 1e-9 slack keeps constants chosen exactly at the boundary (such as
    c = (2a-1) sqrt(n-1)) from being pushed up a dimension by rounding.
    """
    return max(3, math.ceil(1.0 + (c / (2.0 * a - 1.0)) ** 2 - 1e-9))


def certified_ratio_lower_bound(n: int, c: float, a: float = CANONICAL_OFFSET) -> float:
    """Certified lower bound for 2^n * vol S / vol B at dimension n.

    Valid whenever the theorem's slab (rescaled to radius 1/2) fits inside
    the construction's slab; then vol S / vol B >= 2 (1/2)^n bound(c).
    """
    if not (isinstance(n, (int, np.integer)) and n >= 3):
        raise DomainError(f"dimension must be an integer >= 3, got {n!r}")
    bound = concentration_bound(c)
    needed = _width_ok_from(c, a)
    if n < needed:
        raise CertificateError(
            f"slab width c/sqrt(n-1) exceeds 2a - 1 at n={n}; "
            f"c={c} certifies only n >= {needed}",
            n_required=needed,
        )
    return 2.0 * bound


def minimal_certified_n(c: float, a: float = CANONICAL_OFFSET) -> ConcentrationCertificate:
    """Certificate for the smallest dimension the constant c covers."""
    bound_factor = 2.0 * concentration_bound(c)
    if not bound_factor > 1.0:
        raise CertificateError(
            f"c={c} gives bound factor {bound_factor:.6f} <= 1: no certificate"
        )
    width_ok_from = _width_ok_from(c, a)
    return ConcentrationCertificate(
        c=c, n_min=max(width_ok_from, 3), bound_factor=bound_factor, width_ok_from=width_ok_from
    )


def certifying_constants(
    a: float = CANONICAL_OFFSET, c_min: float = 1.0, c_max: float = 3.0, resolution: float = 1e-3
) -> list[ConcentrationCertificate]:
    """Certificates for every grid constant with bound factor above 1."""
    if not resolution <= 1e-3:
        raise DomainError(f"resolution must be <= 1e-3, got {resolution!r}")
    if not 1.0 <= c_min <= c_max:
        raise DomainError(f"need 1 <= c_min <= c_max, got [{c_min}, {c_max}]")
    count = int(round((c_max - c_min) / resolution))
    grid = sorted({round(c_min + k * resolution, 12) for k in range(count + 1)} | {c_max})
    certs = []
    for c in grid:
        if c > c_max:
            continue
        try:
            certs.append(minimal_certified_n(c, a))
        except CertificateError:
            continue
    return certs


def best_certificate(
    a: float = CANONICAL_OFFSET, c_min: float = 1.0, c_max: float = 3.0, resolution: float = 1e-3
) -> ConcentrationCertificate:
    """Grid search over c for the certificate with the smallest n_min.

    Ties are broken toward the larger bound factor (more slack above 1).
    """
    certs = certifying_constants(a, c_min, c_max, resolution)
    if not certs:
        raise CertificateError(f"no certifying constant in [{c_min}, {c_max}]")
    return min(certs, key=lambda cert: (cert.n_min, -cert.bound_factor))


def validate_theorem(n: int, c: float) -> bool:
    """Check the cited inequality against the exact slab fraction.

    Numerical validation of the statement, not a proof.
    """
    if not (isinstance(n, (int, np.integer)) and n >= 3):
        raise DomainError(f"dimension must be an integer >= 3, got {n!r}")
    bound = concentration_bound(c)
    width = c / math.sqrt(n - 1.0)
    if width > 1.0:
        raise DomainError(f"slab half-width {width:.4f} exceeds 1 at n={n}, c={c}")
    return slab_fraction(int(n), -width, width) >= bound
