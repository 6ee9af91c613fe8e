"""Planar geometry primitives and the golden-ratio constants.

All lengths are meters, all angles radians, everything double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Golden ratio, (1 + sqrt(5)) / 2.
PHI: float = (1.0 + math.sqrt(5.0)) / 2.0

#: Golden angle, 2*pi*(1 - 1/phi) ~ 137.5 degrees, the spiral increment
#: that maximizes angular dispersion of consecutive points.
GOLDEN_ANGLE: float = 2.0 * math.pi * (1.0 - 1.0 / PHI)


@dataclass(frozen=True)
class Point2D:
    """A position in the field, in meters. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")


@dataclass(frozen=True)
class FieldSpec:
    """Rectangular deployment field [0, width] x [0, height]."""

    width: float
    height: float

    def __post_init__(self) -> None:
        if not (self.width > 0 and self.height > 0):
            raise ValueError(f"field dimensions must be positive, got {self.width}x{self.height}")

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)

    def contains(self, p: Point2D) -> bool:
        return 0.0 <= p.x <= self.width and 0.0 <= p.y <= self.height

    def clamp(self, x: float, y: float) -> Point2D:
        """Clamp raw coordinates componentwise onto the field."""
        return Point2D(min(max(x, 0.0), self.width), min(max(y, 0.0), self.height))

    @property
    def center(self) -> Point2D:
        return Point2D(self.width / 2.0, self.height / 2.0)


def distance(a: Point2D, b: Point2D) -> float:
    """Euclidean distance between two points, meters."""
    return math.hypot(a.x - b.x, a.y - b.y)
