"""Interval value scales and ratio weights built from card counts.

An interval scale is anchored at two reference levels with stated utilities;
one card unit is then worth alpha = (u_q - u_p) / (e_pq + 1) and every other
level sits a whole number of units away.  Ratio weights instead anchor the
top/bottom ratio z, giving alpha = l(z - 1) / s with s the total number of
units across the ranking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadRatioError, NotConsistentError, OutOfRangeError
from .table import PairwiseTable, check_consistency


@dataclass(frozen=True)
class ValueScale:
    """Utilities per level (index 1..t, worst to best) with the anchors and
    unit value that produced them.  ``coordinates``, when present, carry the
    numeric meaning of each level for interpolation."""

    utilities: tuple
    anchors: tuple  # ((p, u_p), (q, u_q))
    alpha: float
    coordinates: tuple | None = None
    labels: tuple | None = None

    @property
    def t(self) -> int:
        return len(self.utilities)

    def utility_of_level(self, k: int) -> float:
        return self.utilities[k - 1]

    def to_dict(self) -> dict:
        return {
            "anchors": [list(self.anchors[0]), list(self.anchors[1])],
            "alpha": self.alpha,
            "utilities": list(self.utilities),
            "coordinates": list(self.coordinates) if self.coordinates else None,
            "labels": list(self.labels) if self.labels else None,
        }


def build_interval_scale(
    tbl: PairwiseTable, p: int, q: int, u_p: float, u_q: float
) -> ValueScale:
    """Anchor levels l_p and l_q at utilities u_p < u_q and place every level
    a whole number of card units away.

    h = e_pq + 1 units separate the anchors, so one unit is worth
    alpha = (u_q - u_p) / h.  Levels outside the anchor span extrapolate with
    the same unit; utilities below u_p and above u_q are permitted.
    """
    if not (1 <= p < q <= tbl.t):
        raise ValueError(f"anchors must satisfy 1 <= p < q <= t, got ({p}, {q})")
    if not u_p < u_q:
        raise ValueError("anchor utilities must satisfy u_p < u_q")
    violations = check_consistency(tbl, tol=0.0 if tbl.integer else 1e-9)
    if violations:
        raise NotConsistentError(violations)
    h = tbl.exact_value(p, q) + 1
    alpha = (u_q - u_p) / h
    utilities = []
    for k in range(1, tbl.t + 1):
        if k == p:
            utilities.append(u_p)
        elif k == q:
            utilities.append(u_q)  # the anchor holds exactly, free of rounding
        elif k < p:
            utilities.append(u_p - (tbl.exact_value(k, p) + 1) * alpha)
        else:
            utilities.append(u_p + (tbl.exact_value(p, k) + 1) * alpha)
    return ValueScale(
        utilities=tuple(utilities),
        anchors=((p, u_p), (q, u_q)),
        alpha=alpha,
        coordinates=tbl.level_coordinates,
        labels=tbl.level_labels,
    )


def interpolate(scale: ValueScale, x: float) -> float:
    """Piecewise-linear utility of a numeric performance between the level
    coordinates; exact at the coordinates themselves."""
    if scale.coordinates is None:
        raise ValueError("the scale has no level coordinates to interpolate over")
    points = sorted(zip(scale.coordinates, scale.utilities))
    xs = [c for c, _ in points]
    if not (xs[0] <= x <= xs[-1]):
        raise OutOfRangeError(f"{x} is outside the coordinate range [{xs[0]}, {xs[-1]}]")
    for (x0, u0), (x1, u1) in zip(points, points[1:]):
        if x0 <= x <= x1:
            if x1 == x0:
                return u0
            return u0 + (x - x0) / (x1 - x0) * (u1 - u0)
    return points[-1][1]


@dataclass(frozen=True)
class RatioWeights:
    """Weights of ranked classes on a ratio scale: w(r_1) = base and
    w(r_v) = base * z exactly."""

    weights: tuple
    cards: tuple
    base: float
    z: float
    alpha: float
    labels: tuple | None = None

    @property
    def classes(self) -> int:
        return len(self.weights)


def build_ratio_weights(
    cards: Sequence[float], base: float = 1.0, z: float = 2.0, labels: Sequence[str] | None = None
) -> RatioWeights:
    """Weights for v ranked classes separated by the given blank-card counts.

    s = sum(e_h + 1) units span the ranking, one unit is worth
    alpha = base * (z - 1) / s, and class h weighs
    base + alpha * sum_{j<h} (e_j + 1).  z = 1 degenerates to equal weights.
    """
    if z < 1:
        raise BadRatioError(f"ratio z must be >= 1, got {z}")
    if base <= 0:
        raise BadRatioError(f"base weight must be positive, got {base}")
    if any(c < 0 for c in cards):
        raise ValueError("card counts must be nonnegative")
    units = [c + 1 for c in cards]
    s = sum(units)
    if s == 0 and z != 1:
        raise BadRatioError("a single class cannot carry a ratio other than 1")
    alpha = base * (z - 1) / s if s else 0.0
    weights = [base]
    acc = 0.0
    for u in units:
        acc += u
        weights.append(base + alpha * acc)
    if labels is not None and len(labels) != len(weights):
        raise ValueError("one label per class required")
    return RatioWeights(
        weights=tuple(weights),
        cards=tuple(cards),
        base=base,
        z=z,
        alpha=alpha,
        labels=tuple(labels) if labels is not None else None,
    )
