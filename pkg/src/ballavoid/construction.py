"""Geometry of the counterexample set.

The one-sided body T is the intersection of the open half-space x_1 > 1/2,
the open ball of radius 1/2 centered at a*e_1, and the open unit ball; the
full set S is T together with its reflection through the origin.

All membership tests use plain floating-point comparisons with the strict
inequalities of the definition: boundary points are outside.  Points are
plain numpy arrays; the distinguished axis is coordinate 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, GeometryError

#: Offset of the small-ball center along e_1 that maximizes the volume of T:
#: the unique root of 3a^2 - a - 3/4 = 0 in (1/2, 1).
CANONICAL_OFFSET = (1.0 + math.sqrt(10.0)) / 6.0


def canonical_offset() -> float:
    """The volume-maximizing offset (1 + sqrt(10)) / 6."""
    return CANONICAL_OFFSET


def chord_coordinate(a: float) -> float:
    """x_1-coordinate of the hyperplane through the intersection of the
    spheres ||x|| = 1 and ||x - a e_1|| = 1/2.

    Equals (a^2 + 3/4) / (2a) and lies in (1/2, 1) for a in (1/2, 1).
    """
    if not a + 0.5 > 1.0:
        raise GeometryError(
            f"spheres are nested for offset a={a!r} (need a + 1/2 > 1); no chord plane"
        )
    return (a * a + 0.75) / (2.0 * a)


def equidistance_residual(a: float) -> float:
    """(a - 1/2) - (c(a) - a): zero exactly when a*e_1 sits midway between
    the plane x_1 = 1/2 and the chord plane, i.e. at the canonical offset."""
    if not 0.5 < a < 1.0:
        raise DomainError(f"offset must lie in (1/2, 1), got {a!r}")
    return (a - 0.5) - (chord_coordinate(a) - a)


@dataclass(frozen=True)
class ConstructionParams:
    """Dimension and offset defining T and S.

    The cap radius and half-space threshold are fixed at 1/2 by the
    construction; they are stored so invariants can refer to them by name.
    """

    n: int
    a: float = CANONICAL_OFFSET
    cap_radius: float = field(default=0.5)
    threshold: float = field(default=0.5)

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 2):
            raise DomainError(f"dimension must be an integer >= 2, got {self.n!r}")
        if not 0.5 < self.a < 1.0:
            raise DomainError(f"offset must lie in (1/2, 1), got {self.a!r}")
        if self.cap_radius != 0.5 or self.threshold != 0.5:
            raise DomainError("cap_radius and threshold are fixed at 1/2")

    @property
    def chord(self) -> float:
        return chord_coordinate(self.a)


@dataclass(frozen=True)
class PairClass:
    """Classification of a point pair drawn for the distance audit."""

    tag: str  # same_component | cross_component | outside
    distance: float


def _check_point(params: ConstructionParams, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (params.n,):
        raise DomainError(f"point has shape {x.shape}, expected ({params.n},)")
    return x


def in_T(params: ConstructionParams, x) -> bool:
    """Strict membership in the one-sided body T."""
    x = _check_point(params, x)
    if not x[0] > params.threshold:
        return False
    center_sq = (x[0] - params.a) ** 2 + float(np.dot(x[1:], x[1:]))
    if not center_sq < params.cap_radius**2:
        return False
    return float(np.dot(x, x)) < 1.0


def in_S(params: ConstructionParams, x) -> bool:
    """Membership in S = T union -T."""
    x = _check_point(params, x)
    return in_T(params, x) or in_T(params, -x)


def classify_pair(params: ConstructionParams, x, y) -> PairClass:
    """Classify a pair for the distance-1 audit.

    Same-component pairs lie in one open ball of radius 1/2, hence distance
    < 1; cross pairs have x_1 > 1/2 and y_1 < -1/2, hence distance > 1.
    Violations of either bound are the audited theorem and must surface in
    the recorded distance, never be dropped.
    """
    x = _check_point(params, x)
    y = _check_point(params, y)
    distance = float(np.linalg.norm(x - y))
    sx = 1 if in_T(params, x) else (-1 if in_T(params, -x) else 0)
    sy = 1 if in_T(params, y) else (-1 if in_T(params, -y) else 0)
    if sx == 0 or sy == 0:
        return PairClass("outside", distance)
    if sx == sy:
        return PairClass("same_component", distance)
    return PairClass("cross_component", distance)


def inner_approximation(
    params: ConstructionParams, epsilon: float
) -> Callable[[np.ndarray], bool]:
    """Closed membership predicate with every strict inequality tightened
    by epsilon; a subset of S by construction."""
    if not 0.0 < epsilon < (params.a - 0.5) / 2.0:
        raise DomainError(
            f"epsilon must lie in (0, (a - 1/2)/2), got {epsilon!r} for a={params.a!r}"
        )
    a = params.a
    r = params.cap_radius - epsilon
    t = params.threshold + epsilon
    outer = 1.0 - epsilon

    def one_side(x: np.ndarray) -> bool:
        if not x[0] >= t:
            return False
        if not (x[0] - a) ** 2 + float(np.dot(x[1:], x[1:])) <= r * r:
            return False
        return float(np.dot(x, x)) <= outer * outer

    def predicate(x) -> bool:
        x = _check_point(params, x)
        return one_side(x) or one_side(-x)

    return predicate
