"""Node and anchor placement.

Unknown nodes are always uniform-random. Anchors support four layouts:

* random   - i.i.d. uniform over the field.
* grid     - cell centers of the most-square grid covering the count.
* phi_chain_spiral - a chain starting at the field center whose consecutive
  chord lengths grow geometrically by the golden ratio (d1, phi*d1,
  phi^2*d1, ...) with headings stepping by the golden angle. The geometric
  growth escapes any bounded field after a few anchors, so emitted points
  are clamped componentwise to the field; the chain itself keeps walking
  from the unclamped positions so the pre-clamp chords stay exact.
* golden_angle_sunflower - Vogel spiral (radius scale_c*sqrt(i), heading
  i*golden angle), the even-coverage phi layout used as the default for
  the golden-ratio localizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import GOLDEN_ANGLE, PHI, FieldSpec, Point2D
from .rng import RngStream

LAYOUT_KINDS = ("random", "grid", "phi_chain_spiral", "golden_angle_sunflower")


@dataclass(frozen=True)
class AnchorLayout:
    """Anchor placement strategy plus its kind-specific parameters.

    d1 applies only to phi_chain_spiral (first chord length, default 2 m);
    scale_c only to golden_angle_sunflower (radial scale; None picks
    0.5*min(width,height)/sqrt(count) at deploy time, which fills the field).
    """

    kind: str
    d1: float | None = None
    scale_c: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in LAYOUT_KINDS:
            raise ValueError(f"unknown layout kind {self.kind!r}, expected one of {LAYOUT_KINDS}")
        if self.kind != "phi_chain_spiral" and self.d1 is not None:
            raise ValueError(f"d1 is only valid for phi_chain_spiral, not {self.kind}")
        if self.kind != "golden_angle_sunflower" and self.scale_c is not None:
            raise ValueError(f"scale_c is only valid for golden_angle_sunflower, not {self.kind}")
        if self.d1 is not None and not self.d1 > 0:
            raise ValueError(f"d1 must be positive, got {self.d1}")
        if self.scale_c is not None and not self.scale_c > 0:
            raise ValueError(f"scale_c must be positive, got {self.scale_c}")


@dataclass(frozen=True)
class Deployment:
    """One trial's node placement: anchors first, then unknowns.

    Graph/hop-table node ids cover both groups in that order: anchor i has
    id i, unknown j has id len(anchors) + j.
    """

    field: FieldSpec
    anchors: tuple[Point2D, ...]
    unknowns: tuple[Point2D, ...]

    def __post_init__(self) -> None:
        if len(self.anchors) < 1:
            raise ValueError("deployment needs at least one anchor")
        for p in self.anchors + self.unknowns:
            if not self.field.contains(p):
                raise ValueError(f"point ({p.x}, {p.y}) lies outside the field")

    @property
    def n_nodes(self) -> int:
        return len(self.anchors) + len(self.unknowns)

    def position(self, node_id: int) -> Point2D:
        k = len(self.anchors)
        return self.anchors[node_id] if node_id < k else self.unknowns[node_id - k]


def deploy_unknowns_uniform(field: FieldSpec, count: int, rng: RngStream) -> list[Point2D]:
    """count i.i.d. uniform points; per point the x draw precedes the y draw."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return [Point2D(rng.uniform(0.0, field.width), rng.uniform(0.0, field.height)) for _ in range(count)]


def deploy_anchors_random(field: FieldSpec, count: int, rng: RngStream) -> list[Point2D]:
    return deploy_unknowns_uniform(field, count, rng)


def deploy_anchors_grid(field: FieldSpec, count: int) -> list[Point2D]:
    """First `count` cell centers, row-major, of the most-square grid with
    rows*cols >= count."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rows = math.isqrt(count)
    cols = -(-count // rows)
    out = []
    for i in range(rows):
        for j in range(cols):
            if len(out) == count:
                return out
            out.append(Point2D((j + 0.5) * field.width / cols, (i + 0.5) * field.height / rows))
    return out


def deploy_anchors_phi_chain(field: FieldSpec, count: int, d1: float = 2.0) -> list[Point2D]:
    """Golden-ratio chain: chord i has length d1*phi^(i-1), heading i*gamma."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if not d1 > 0:
        raise ValueError(f"d1 must be positive, got {d1}")
    cx, cy = field.center.x, field.center.y
    out = [field.clamp(cx, cy)]
    x, y = cx, cy  # unclamped chain position
    chord = d1
    for i in range(1, count):
        heading = i * GOLDEN_ANGLE
        x += chord * math.cos(heading)
        y += chord * math.sin(heading)
        out.append(field.clamp(x, y))
        chord *= PHI
    return out


def default_sunflower_scale(field: FieldSpec, count: int) -> float:
    return 0.5 * min(field.width, field.height) / math.sqrt(count)


def deploy_anchors_sunflower(field: FieldSpec, count: int, scale_c: float | None = None) -> list[Point2D]:
    """Vogel spiral: anchor i at radius scale_c*sqrt(i), heading i*gamma."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if scale_c is None:
        scale_c = default_sunflower_scale(field, count)
    if not scale_c > 0:
        raise ValueError(f"scale_c must be positive, got {scale_c}")
    cx, cy = field.center.x, field.center.y
    out = []
    for i in range(count):
        rho = scale_c * math.sqrt(i)
        heading = i * GOLDEN_ANGLE
        out.append(field.clamp(cx + rho * math.cos(heading), cy + rho * math.sin(heading)))
    return out


def place_anchors(layout: AnchorLayout, field: FieldSpec, count: int, rng: RngStream) -> list[Point2D]:
    """Dispatch on layout kind. Only the random layout draws from rng."""
    if layout.kind == "random":
        return deploy_anchors_random(field, count, rng)
    if layout.kind == "grid":
        return deploy_anchors_grid(field, count)
    if layout.kind == "phi_chain_spiral":
        return deploy_anchors_phi_chain(field, count, layout.d1 if layout.d1 is not None else 2.0)
    return deploy_anchors_sunflower(field, count, layout.scale_c)
