"""Volume of T and S: quadrature, closed form, derivative, and optimizer.

The volume of T splits along the chord plane x_1 = c into a slab of the
small ball and a cap of the unit ball:

    vol T = int_{1/2-a}^{c-a} v_{n-1} (1/4 - x^2)^((n-1)/2) dx
          + int_{c}^{1}       v_{n-1} (1  - x^2)^((n-1)/2) dx

(c - a reduces to a - 1/2 at the canonical offset).  Both pieces are
evaluated in log scale: the integrand is divided by its maximum on the
interval before quadrature, so the same code path is exact for n = 2 and
underflow-free for n in the thousands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .construction import CANONICAL_OFFSET, chord_coordinate
from .errors import DomainError, NumericError
from .specfun import LogValue, slab_fraction, unit_ball_volume

LOG_HALF = math.log(0.5)
LOG_TWO = math.log(2.0)

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class VolumeEstimate:
    """A log-domain volume with its method tag and error bound.

    error_bound is absolute on the log scale for the deterministic methods
    and a 99% CI half-width (linear scale) for monte_carlo.
    """

    log_value: LogValue
    method: str  # quadrature | closed_form | monte_carlo | lower_bound
    error_bound: float

    def __post_init__(self):
        if self.error_bound < 0:
            raise DomainError("error_bound must be nonnegative")


@dataclass(frozen=True)
class RatioRow:
    """Per-dimension record of the counterexample inequality.

    margin = 2^n * (vol S / vol B) - 1; positivity refutes the (1/2)^n
    bound at dimension n.
    """

    n: int
    ratio: float
    scaled: float
    margin: float


def _check_params(n: int, a: float) -> None:
    if not (isinstance(n, (int, np.integer)) and n >= 2):
        raise DomainError(f"dimension must be an integer >= 2, got {n!r}")
    if not 0.5 < a < 1.0:
        raise DomainError(f"offset must lie in (1/2, 1), got {a!r}")


def _gl_panel(f, lo: float, hi: float) -> float:
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(_GL_WEIGHTS, f(mid + half * _GL_NODES)))


def adaptive_gauss_legendre(f, lo: float, hi: float, tol: float, max_panels: int = 4096):
    """Integrate f on [lo, hi] by 15-point Gauss-Legendre panels with
    recursive bisection on an absolute-plus-relative error criterion.

    Returns (value, error_estimate); raises NumericError (carrying the
    best estimate and achieved error) if the panel budget is exhausted.
    """
    if hi <= lo:
        return 0.0, 0.0
    whole = _gl_panel(f, lo, hi)
    scale = max(abs(whole), 1e-300)
    total = 0.0
    err = 0.0
    width = hi - lo
    panels = 0
    stack = [(lo, hi, whole)]
    while stack:
        a, b, coarse = stack.pop()
        panels += 1
        if panels > max_panels:
            rest = coarse + sum(item[2] for item in stack)
            best = total + rest
            raise NumericError(
                f"quadrature used more than {max_panels} panels without "
                f"reaching tolerance {tol}",
                best_estimate=best,
                achieved_error=err + abs(rest),
            )
        m = 0.5 * (a + b)
        left = _gl_panel(f, a, m)
        right = _gl_panel(f, m, b)
        fine = left + right
        disc = abs(fine - coarse)
        local_budget = (tol * scale + tol * abs(fine)) * ((b - a) / width)
        if disc <= local_budget or (b - a) < 1e-15 * width:
            total += fine
            err += disc
        else:
            stack.append((a, m, left))
            stack.append((m, b, right))
    return total, err


def _log_piece_quadrature(log_peak: float, g, lo: float, hi: float, tol: float):
    """log of int exp(log_peak) * g(x) dx where 0 <= g <= 1 on [lo, hi]."""
    value, err = adaptive_gauss_legendre(g, lo, hi, tol)
    if value <= 0.0:
        return -math.inf, 0.0
    return log_peak + math.log(value), err / value


def vol_T_quadrature(n: int, a: float = CANONICAL_OFFSET, tol: float = DEFAULT_TOL) -> VolumeEstimate:
    """vol T by adaptive quadrature of the two displayed integrals."""
    _check_params(n, a)
    if not 1e-14 <= tol <= 1e-6:
        raise DomainError(f"tol must lie in [1e-14, 1e-6], got {tol!r}")
    c = chord_coordinate(a)
    p = 0.5 * (n - 1)

    # Slab piece: peak of (1/4 - x^2)^p on [1/2-a, c-a] is at x = 0.
    def g_slab(x):
        return np.exp(p * np.log1p(-4.0 * x * x))

    log_slab, rel_slab = _log_piece_quadrature(p * math.log(0.25), g_slab, 0.5 - a, c - a, tol)

    # Cap piece: (1 - x^2)^p on [c, 1] peaks at the lower endpoint.
    log_one_minus_c2 = math.log1p(-c * c)

    def g_cap(x):
        # x can round to 1.0 at the deepest panels; log1p(-1) = -inf is the
        # right limit, so only the warning is suppressed.
        with np.errstate(divide="ignore"):
            return np.exp(p * (np.log1p(-x * x) - log_one_minus_c2))

    log_cap, rel_cap = _log_piece_quadrature(p * log_one_minus_c2, g_cap, c, 1.0, tol)

    log_vol = unit_ball_volume(int(n) - 1).log_magnitude + np.logaddexp(log_slab, log_cap)
    return VolumeEstimate(LogValue(float(log_vol)), "quadrature", max(rel_slab, rel_cap))


def vol_T_closed_form(n: int, a: float = CANONICAL_OFFSET) -> VolumeEstimate:
    """vol T in closed form via regularized-incomplete-beta slab fractions.

    Slab piece: the radius-1/2 ball (volume (1/2)^n v_n) restricted to a
    slab, rescaled to unit radius; cap piece: the unit ball beyond x_1 = c.
    """
    _check_params(n, a)
    c = chord_coordinate(a)
    n = int(n)
    log_vn = unit_ball_volume(n).log_magnitude
    slab = slab_fraction(n, 2.0 * (0.5 - a), 2.0 * (c - a))
    cap = slab_fraction(n, c, 1.0)
    log_slab = n * LOG_HALF + log_vn + (math.log(slab) if slab > 0 else -math.inf)
    log_cap = log_vn + (math.log(cap) if cap > 0 else -math.inf)
    return VolumeEstimate(LogValue(float(np.logaddexp(log_slab, log_cap))), "closed_form", 1e-12)


def lower_bound_vol_T(n: int, a: float = CANONICAL_OFFSET) -> VolumeEstimate:
    """The slab piece alone: a lower bound for vol T (the cap is dropped)."""
    _check_params(n, a)
    c = chord_coordinate(a)
    n = int(n)
    upper = min(a - 0.5, c - a)  # stay inside the unit ball for any offset
    slab = slab_fraction(n, 2.0 * (0.5 - a), 2.0 * upper)
    log_slab = n * LOG_HALF + unit_ball_volume(n).log_magnitude + math.log(slab)
    return VolumeEstimate(LogValue(float(log_slab)), "lower_bound", 1e-12)


def ratio_S(
    n: int, a: float = CANONICAL_OFFSET, method: str = "closed_form", tol: float = DEFAULT_TOL
) -> RatioRow:
    """vol S / vol B and its 2^n-scaled form, computed in log domain."""
    if method == "closed_form":
        est = vol_T_closed_form(n, a)
    elif method == "quadrature":
        est = vol_T_quadrature(n, a, tol)
    else:
        raise DomainError(f"unknown method {method!r}")
    n = int(n)
    log_ratio = LOG_TWO + est.log_value.log_magnitude - unit_ball_volume(n).log_magnitude
    return RatioRow(
        n=n,
        ratio=math.exp(log_ratio),
        scaled=math.exp(log_ratio + n * LOG_TWO),
        margin=math.exp(log_ratio + n * LOG_TWO) - 1.0,
    )


def dvol_da(n: int, a: float = CANONICAL_OFFSET) -> float:
    """Derivative of vol T in the offset a.

    Differentiating the split integral, the boundary terms at the chord
    plane cancel (the two integrands agree there), leaving

        v_{n-1} * [(1/4 - (a - 1/2)^2)^p - (1/4 - (c - a)^2)^p]

    with p = (n-1)/2; zero exactly at equidistance, for every n.
    """
    _check_params(n, a)
    c = chord_coordinate(a)
    p = 0.5 * (n - 1)
    log_vn1 = unit_ball_volume(int(n) - 1).log_magnitude
    t1 = math.exp(log_vn1 + p * math.log(0.25 - (a - 0.5) ** 2))
    t2 = math.exp(log_vn1 + p * math.log(0.25 - (c - a) ** 2))
    return t1 - t2


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_BRACKET_DELTA = 1e-6


def maximize_a(n: int, tol: float = 1e-10) -> float:
    """Golden-section search for the offset maximizing vol T.

    Kept independent of dvol_da (which is itself under test).  The volume
    vanishes at both bracket ends, so the maximum is interior.
    """
    if not (isinstance(n, (int, np.integer)) and n >= 2):
        raise DomainError(f"dimension must be an integer >= 2, got {n!r}")
    if not tol >= 1e-12:
        raise DomainError(f"tol must be >= 1e-12, got {tol!r}")

    def f(a: float) -> float:
        return vol_T_closed_form(n, a).log_value.log_magnitude

    lo, hi = 0.5 + _BRACKET_DELTA, 1.0 - _BRACKET_DELTA
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def ratio_table(n_min: int, n_max: int, a: float = CANONICAL_OFFSET) -> list[RatioRow]:
    """RatioRow for every dimension in [n_min, n_max]; each positive margin
    is the direct check of the counterexample inequality at that n."""
    if not (isinstance(n_min, (int, np.integer)) and isinstance(n_max, (int, np.integer))):
        raise DomainError("dimension bounds must be integers")
    if not 2 <= n_min <= n_max <= 10000:
        raise DomainError(f"need 2 <= n_min <= n_max <= 10000, got [{n_min}, {n_max}]")
    return [ratio_S(n, a) for n in range(int(n_min), int(n_max) + 1)]
