"""The three range-free position estimators.

* Centroid: unweighted mean of the anchors heard directly (hop count 1).
* DV-Hop: hop counts are converted to distances through a network-wide
  average hop size (total anchor-pair distance over total anchor-pair hop
  count), then the node multilaterates against every reachable anchor.
* Golden-ratio weighting: weighted mean of all reachable anchors with
  weights phi^(-h); anchors one hop closer count phi times more.

All estimators are pure functions of (node, anchor positions, hop table);
nothing here draws randomness. Anchors know their own positions and are
never localized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import PHI, Point2D, distance
from .network import HopTable


class LocalizationError(Exception):
    """Base for estimator failures."""


class ArityError(LocalizationError):
    """Too few anchors for the requested operation."""


class CollinearAnchors(LocalizationError):
    """Anchor geometry is rank-deficient; no unique position exists."""


class DisconnectedAnchors(LocalizationError):
    """Some anchor pair has no connecting path, so Eq-style global
    averaging of meters-per-hop is undefined."""


class DegenerateHops(LocalizationError):
    """Anchor-pair hop counts sum to zero; meters-per-hop is undefined."""


#: Determinant threshold (after row scaling) below which anchor geometry
#: is treated as collinear.
COLLINEARITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Estimate:
    """A position estimate plus the bookkeeping the energy model needs:
    how many anchors took part and their mean hop distance."""

    position: Point2D
    anchors_used: int
    mean_hops: float

    def __post_init__(self) -> None:
        if self.anchors_used < 1:
            raise ValueError("an estimate must use at least one anchor")
        if self.mean_hops < 0:
            raise ValueError("mean_hops must be non-negative")


def centroid_localize(node: int, anchors: list[Point2D], hop_table: HopTable) -> Estimate | None:
    """Unweighted mean of the hop-1 (directly heard) anchors.

    Returns None when no anchor is in direct range. mean_hops is 1 by
    construction.
    """
    cols = [c for c in range(hop_table.n_anchors) if hop_table.hop(node, c) == 1]
    if not cols:
        return None
    sx = math.fsum(anchors[c].x for c in cols)
    sy = math.fsum(anchors[c].y for c in cols)
    n = len(cols)
    return Estimate(Point2D(sx / n, sy / n), anchors_used=n, mean_hops=1.0)


def dvhop_avg_hop_size(anchors: list[Point2D], hop_table: HopTable) -> float:
    """Network-wide meters-per-hop: sum of anchor-pair distances over sum of
    anchor-pair hop counts (ordered and unordered pairing give the same
    ratio; unordered is computed)."""
    k = len(anchors)
    if k < 2:
        raise ArityError(f"average hop size needs at least 2 anchors, got {k}")
    sum_d = 0.0
    sum_h = 0
    for i in range(k):
        for j in range(i + 1, k):
            h = hop_table.hop(i, j)
            if h < 0:
                raise DisconnectedAnchors(f"anchors {i} and {j} are not connected")
            sum_d += distance(anchors[i], anchors[j])
            sum_h += h
    if sum_h == 0:
        raise DegenerateHops("anchor-pair hop counts sum to zero")
    return sum_d / sum_h


def dvhop_per_anchor_hop_sizes(anchors: list[Point2D], hop_table: HopTable) -> list[float]:
    """Per-anchor meters-per-hop: each anchor averages its own distances and
    hop counts to the other anchors."""
    k = len(anchors)
    if k < 2:
        raise ArityError(f"average hop size needs at least 2 anchors, got {k}")
    sizes = []
    for i in range(k):
        sum_d = 0.0
        sum_h = 0
        for j in range(k):
            if j == i:
                continue
            h = hop_table.hop(i, j)
            if h < 0:
                raise DisconnectedAnchors(f"anchors {i} and {j} are not connected")
            sum_d += distance(anchors[i], anchors[j])
            sum_h += h
        if sum_h == 0:
            raise DegenerateHops(f"anchor {i} has zero total hops to its peers")
        sizes.append(sum_d / sum_h)
    return sizes


def multilaterate(anchor_positions: list[Point2D], distances: list[float],
                  scale: float | None = None) -> Point2D:
    """Least-squares position from distances to three or more anchors.

    Subtracting the last anchor's circle equation from the others gives an
    overdetermined linear system, solved via 2x2 normal equations. Rows are
    scaled by 1/(2*scale) before forming the normal matrix so the
    collinearity determinant threshold is meaningful independent of field
    size; scale defaults to the anchor bounding-box diagonal.
    """
    k = len(anchor_positions)
    if k < 3:
        raise ArityError(f"multilateration needs at least 3 anchors, got {k}")
    if len(distances) != k:
        raise ValueError("anchor_positions and distances must have equal length")
    for d in distances:
        if d < 0:
            raise ValueError(f"distances must be non-negative, got {d}")

    if scale is None:
        xs = [p.x for p in anchor_positions]
        ys = [p.y for p in anchor_positions]
        scale = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    if scale <= 0:
        raise CollinearAnchors("anchors are coincident")

    ref = anchor_positions[-1]
    dr = distances[-1]
    s = 1.0 / (2.0 * scale)

    # normal equations M p = v for the scaled system
    m00 = m01 = m11 = v0 = v1 = 0.0
    for p, d in zip(anchor_positions[:-1], distances[:-1]):
        a0 = 2.0 * (p.x - ref.x) * s
        a1 = 2.0 * (p.y - ref.y) * s
        b = (p.x * p.x - ref.x * ref.x + p.y * p.y - ref.y * ref.y + dr * dr - d * d) * s
        m00 += a0 * a0
        m01 += a0 * a1
        m11 += a1 * a1
        v0 += a0 * b
        v1 += a1 * b

    det = m00 * m11 - m01 * m01
    if det < COLLINEARITY_TOLERANCE:
        raise CollinearAnchors(f"scaled normal determinant {det:.3e} below {COLLINEARITY_TOLERANCE}")
    return Point2D((m11 * v0 - m01 * v1) / det, (m00 * v1 - m01 * v0) / det)


def dvhop_localize(node: int, anchors: list[Point2D], hop_table: HopTable,
                   hop_size: float | None = None,
                   per_anchor_sizes: list[float] | None = None,
                   scale: float | None = None) -> Estimate | None:
    """DV-Hop estimate: distance to each reachable anchor is its hop count
    times the hop size, then least-squares multilateration over all of them.

    hop_size (or per_anchor_sizes for the per-anchor-nearest variant) may be
    precomputed once per topology; by default the global hop size is derived
    from the hop table on the fly. When per_anchor_sizes is given, the node
    uses the hop size of its fewest-hop anchor (ties: lowest anchor index).

    Returns None when fewer than 3 anchors are reachable or their geometry
    is collinear.
    """
    cols = [c for c in range(hop_table.n_anchors) if hop_table.is_reachable(node, c)]
    if len(cols) < 3:
        return None
    if per_anchor_sizes is not None:
        nearest = min(cols, key=lambda c: (hop_table.hop(node, c), c))
        size = per_anchor_sizes[nearest]
    elif hop_size is not None:
        size = hop_size
    else:
        size = dvhop_avg_hop_size(anchors, hop_table)

    hops = [hop_table.hop(node, c) for c in cols]
    dists = [h * size for h in hops]
    try:
        pos = multilaterate([anchors[c] for c in cols], dists, scale=scale)
    except CollinearAnchors:
        return None
    return Estimate(pos, anchors_used=len(cols), mean_hops=math.fsum(hops) / len(hops))


def grl_weights(hop_counts: list[int]) -> list[float]:
    """Unnormalized golden-ratio weights phi^(-h) per hop count."""
    for h in hop_counts:
        if h < 0 or not math.isfinite(h):
            raise ValueError(f"hop counts must be finite and non-negative, got {h}")
    return [PHI ** (-h) for h in hop_counts]


def grl_localize(node: int, anchors: list[Point2D], hop_table: HopTable) -> Estimate | None:
    """Golden-ratio weighted mean over all reachable anchors (no hop cap;
    extra hops suppress an anchor's weight by 1/phi each).

    Returns None when no anchor is reachable. mean_hops is the unweighted
    mean hop count of the anchors used.
    """
    cols = [c for c in range(hop_table.n_anchors) if hop_table.is_reachable(node, c)]
    if not cols:
        return None
    hops = [hop_table.hop(node, c) for c in cols]
    weights = grl_weights(hops)
    total = math.fsum(weights)
    x = math.fsum(w * anchors[c].x for w, c in zip(weights, cols)) / total
    y = math.fsum(w * anchors[c].y for w, c in zip(weights, cols)) / total
    return Estimate(Point2D(x, y), anchors_used=len(cols), mean_hops=math.fsum(hops) / len(hops))
