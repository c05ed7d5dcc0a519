"""Seeded Monte Carlo: ball sampling, rejection sampling in T, volume
estimation, and randomized audits of the distance-avoidance property.

The generator is numpy's PCG64, seeded explicitly; Gaussian variates come
from the vectorized Marsaglia polar method so the rejection path touches
only ln and sqrt.  Identical configuration gives a bit-identical stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .construction import ConstructionParams
from .errors import DomainError, NumericError
from .specfun import LogValue
from .volume import VolumeEstimate

# 99% two-sided normal quantile, for binomial CI half-widths.
_Z99 = 2.5758293035489004


@dataclass(frozen=True)
class SamplerConfig:
    """Seed, sample count, and geometry for one reproducible run."""

    seed: int
    sample_count: int
    params: ConstructionParams

    def __post_init__(self):
        if not (isinstance(self.seed, (int, np.integer)) and 0 <= self.seed < 2**64):
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not (isinstance(self.sample_count, (int, np.integer)) and self.sample_count > 0):
            raise DomainError(f"sample_count must be positive, got {self.sample_count!r}")

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.seed))


@dataclass(frozen=True)
class AuditReport:
    """Aggregate of a pair audit; violations must be zero for the theorem
    to stand (a same-component pair at distance >= 1 or a cross pair at
    distance <= 1 counts as a violation, never dropped)."""

    pairs_tested: int
    violations: int
    min_cross_distance: float
    max_same_distance: float
    seed: int
    # Full-precision witnesses (x, y, tag, distance) for any violations,
    # capped at 10; empty on every healthy run.
    violating_pairs: tuple = ()


def _standard_normals(rng: np.random.Generator, count: int) -> np.ndarray:
    """Marsaglia polar method, vectorized; order of accepted pairs is fixed."""
    out = np.empty(count)
    filled = 0
    while filled < count:
        m = max(count - filled, 1024)
        u = rng.random((m, 2)) * 2.0 - 1.0
        s = np.einsum("ij,ij->i", u, u)
        keep = (s > 0.0) & (s < 1.0)
        u, s = u[keep], s[keep]
        factor = np.sqrt(-2.0 * np.log(s) / s)
        g = (u * factor[:, None]).ravel()
        take = min(count - filled, g.size)
        out[filled : filled + take] = g[:take]
        filled += take
    return out


def sample_unit_ball(n: int, rng: np.random.Generator, count: int = 1) -> np.ndarray:
    """Uniform points in the open unit n-ball: normalized Gaussian direction
    scaled by U^(1/n).  Returns shape (count, n)."""
    if not n >= 1:
        raise DomainError(f"dimension must be >= 1, got {n!r}")
    g = _standard_normals(rng, count * n).reshape(count, n)
    norms = np.linalg.norm(g, axis=1)
    while np.any(norms == 0.0):  # measure-zero; resample degenerate rows
        bad = norms == 0.0
        g[bad] = _standard_normals(rng, int(bad.sum()) * n).reshape(-1, n)
        norms = np.linalg.norm(g, axis=1)
    radii = rng.random(count) ** (1.0 / n)
    return g * (radii / norms)[:, None]


def sample_T(
    params: ConstructionParams, rng: np.random.Generator, count: int = 1
) -> tuple[np.ndarray, float]:
    """Uniform points in T by rejection from the small ball centered at
    a*e_1; returns (points of shape (count, n), acceptance rate)."""
    n = params.n
    a = params.a
    accepted = np.empty((count, n))
    filled = 0
    proposed = 0
    while filled < count:
        m = max(count - filled, 2048)
        y = 0.5 * sample_unit_ball(n, rng, m)
        y[:, 0] += a
        keep = (y[:, 0] > params.threshold) & (np.einsum("ij,ij->i", y, y) < 1.0)
        proposed += m
        hits = y[keep]
        if proposed >= 2048 and (filled + hits.shape[0]) / proposed < 1e-4:
            raise NumericError(
                f"rejection acceptance rate below 1e-4 at a={a!r}; offset is pathological"
            )
        take = min(count - filled, hits.shape[0])
        accepted[filled : filled + take] = hits[:take]
        filled += take
    return accepted, filled / proposed


def _in_S_mask(params: ConstructionParams, x: np.ndarray) -> np.ndarray:
    """Vectorized membership in S for points already inside the unit ball."""
    a = params.a
    r2 = params.cap_radius**2
    perp = np.einsum("ij,ij->i", x[:, 1:], x[:, 1:])
    pos = (x[:, 0] > params.threshold) & ((x[:, 0] - a) ** 2 + perp < r2)
    neg = (-x[:, 0] > params.threshold) & ((x[:, 0] + a) ** 2 + perp < r2)
    return pos | neg


def mc_volume_ratio(config: SamplerConfig) -> VolumeEstimate:
    """Monte Carlo estimate of vol S / vol B with a 99% binomial CI
    half-width in error_bound."""
    if config.sample_count < 10**4:
        raise DomainError(f"need at least 1e4 samples, got {config.sample_count}")
    rng = config.rng()
    x = sample_unit_ball(config.params.n, rng, config.sample_count)
    hits = int(_in_S_mask(config.params, x).sum())
    p = hits / config.sample_count
    half_width = _Z99 * math.sqrt(p * (1.0 - p) / config.sample_count)
    return VolumeEstimate(LogValue(math.log(p)), "monte_carlo", half_width)


def pair_audit(config: SamplerConfig) -> AuditReport:
    """Draw pairs of points in S (each independently in T or -T with
    probability 1/2) and audit the distance-avoidance theorem."""
    if config.sample_count < 10**4:
        raise DomainError(f"need at least 1e4 pairs, got {config.sample_count}")
    rng = config.rng()
    m = config.sample_count
    signs = np.where(rng.random(2 * m) < 0.5, 1.0, -1.0)
    points, _ = sample_T(config.params, rng, 2 * m)
    points *= signs[:, None]
    x, y = points[0::2], points[1::2]
    same = signs[0::2] == signs[1::2]
    dist = np.linalg.norm(x - y, axis=1)
    same_d = dist[same]
    cross_d = dist[~same]
    bad = (same & (dist >= 1.0)) | (~same & (dist <= 1.0))
    witnesses = tuple(
        (
            tuple(float(v) for v in x[i]),
            tuple(float(v) for v in y[i]),
            "same_component" if same[i] else "cross_component",
            float(dist[i]),
        )
        for i in np.flatnonzero(bad)[:10]
    )
    return AuditReport(
        pairs_tested=m,
        violations=int(bad.sum()),
        min_cross_distance=float(cross_d.min()) if cross_d.size else math.inf,
        max_same_distance=float(same_d.max()) if same_d.size else 0.0,
        seed=config.seed,
        violating_pairs=witnesses,
    )
