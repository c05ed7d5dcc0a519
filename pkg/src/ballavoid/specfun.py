"""Log-domain special functions and exact ball/slab volume primitives.

Everything here is pure and reentrant.  Volumes are carried as natural
logs because the unit-ball volume underflows double precision near
n ~ 1470 and 2^-n scale ratios lose precision far earlier; linear values
are exposed on demand with an explicit underflow flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NumericError

# Smallest positive normal double; below this, exp() returns a subnormal
# (or zero) and the linear representation is no longer trustworthy.
_LOG_NORMAL_MIN = math.log(2.2250738585072014e-308)


@dataclass(frozen=True)
class LogValue:
    """A positive quantity stored as its natural logarithm."""

    log_magnitude: float

    @classmethod
    def from_linear(cls, value: float) -> "LogValue":
        if not (value > 0 and math.isfinite(value)):
            raise DomainError(f"LogValue requires a positive finite value, got {value!r}")
        return cls(math.log(value))

    @property
    def underflows(self) -> bool:
        """True when the linear value is not representable as a normal double."""
        return self.log_magnitude < _LOG_NORMAL_MIN

    def linear(self) -> float:
        """Linear-scale value; rounds to subnormal/zero when `underflows`."""
        return math.exp(self.log_magnitude)


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise DomainError(f"log_gamma requires finite x > 0, got {x!r}")
    return math.lgamma(x)


def unit_ball_volume(n: int) -> LogValue:
    """Log of the volume of the unit ball in dimension n: pi^(n/2) / Gamma(1 + n/2)."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"dimension must be an integer >= 1, got {n!r}")
    return LogValue(0.5 * n * math.log(math.pi) - log_gamma(1.0 + 0.5 * n))


def _beta_continued_fraction(a: float, b: float, z: float) -> float:
    """Continued fraction for the incomplete beta function (modified Lentz).

    Converges fast for z < (a+1)/(a+b+2); the caller handles the symmetry
    switch for the other half of the domain.
    """
    tiny = 1e-300
    eps = 1e-16
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * z / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 500):
        m2 = 2 * m
        aa = m * (b - m) * z / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise NumericError(
        f"incomplete beta continued fraction did not converge "
        f"(a={a}, b={b}, z={z}, last factor={delta})",
        best_estimate=h,
        achieved_error=abs(delta - 1.0),
    )


def reg_inc_beta(z: float, alpha: float, beta: float) -> float:
    """Regularized incomplete beta function I_z(alpha, beta).

    Satisfies I_z(a, b) = 1 - I_{1-z}(b, a); absolute error <= 1e-13.
    """
    if not (alpha > 0 and beta > 0):
        raise DomainError(f"shape parameters must be positive, got alpha={alpha!r}, beta={beta!r}")
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return 1.0
    log_front = (
        log_gamma(alpha + beta)
        - log_gamma(alpha)
        - log_gamma(beta)
        + alpha * math.log(z)
        + beta * math.log1p(-z)
    )
    front = math.exp(log_front)
    if z < (alpha + 1.0) / (alpha + beta + 2.0):
        return front * _beta_continued_fraction(alpha, beta, z) / alpha
    return 1.0 - front * _beta_continued_fraction(beta, alpha, 1.0 - z) / beta


def _ball_cap_fraction(n: int, t: float) -> float:
    """P(x_1 > t) for a uniform point in the unit n-ball, t >= 0.

    Marginal density is proportional to (1 - x^2)^((n-1)/2); the tail is
    evaluated as I_{1-t^2}((n+1)/2, 1/2)/2 directly, without subtracting
    from 1, so deep caps keep full relative accuracy.
    """
    if t >= 1.0:
        return 0.0
    return 0.5 * reg_inc_beta((1.0 - t) * (1.0 + t), 0.5 * (n + 1), 0.5)


def slab_fraction(n: int, u0: float, u1: float) -> float:
    """Fraction of the unit n-ball with first coordinate in [u0, u1]."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"dimension must be an integer >= 1, got {n!r}")
    if not (-1.0 <= u0 <= u1 <= 1.0):
        raise DomainError(f"need -1 <= u0 <= u1 <= 1, got u0={u0!r}, u1={u1!r}")
    if u0 >= 0.0:
        return _ball_cap_fraction(n, u0) - _ball_cap_fraction(n, u1)
    if u1 <= 0.0:
        return _ball_cap_fraction(n, -u1) - _ball_cap_fraction(n, -u0)
    return 1.0 - _ball_cap_fraction(n, u1) - _ball_cap_fraction(n, -u0)
