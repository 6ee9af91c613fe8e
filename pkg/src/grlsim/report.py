"""CSV and SVG emission.

All numeric CSV cells use fixed 6-decimal notation so identical runs are
byte-identical; unlocalized nodes leave est_x/est_y/error_m empty. The
field plot is hand-emitted SVG markup (no plotting dependency) at 6 user
units per meter: unknowns as blue circles, anchors as red squares,
estimates as green crosses, gray connectors joining each true/estimated
pair.
"""

from __future__ import annotations

import csv
from typing import Iterable

from .energy import EnergyParams, energy_hop_sweep
from .experiment import ResultsBundle, TrialDetail

SUMMARY_COLUMNS = ["trial", "algorithm", "seed", "mean_error_m", "error_std_m",
                   "coverage", "mean_hops", "mean_energy_uJ"]
PERNODE_COLUMNS = ["trial", "algorithm", "node_id", "true_x", "true_y", "est_x", "est_y",
                   "error_m", "hops", "anchors_used", "energy_uJ"]
SWEEP_COLUMNS = ["algorithm", "h", "energy_uJ"]


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def write_summary_csv(bundle: ResultsBundle, path) -> None:
    """One row per (trial, algorithm), ordered that way."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SUMMARY_COLUMNS)
        for s in bundle.summaries:
            writer.writerow([
                s.trial_index, s.algorithm, s.seed,
                _fmt(s.mean_error), _fmt(s.error_std), _fmt(s.coverage),
                _fmt(s.mean_hops), _fmt(s.mean_energy),
            ])


def write_pernode_csv(bundle: ResultsBundle, path) -> None:
    """One row per (trial, algorithm, unknown node), ordered that way."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(PERNODE_COLUMNS)
        for d in bundle.details:
            for m in d.metrics:
                writer.writerow([
                    d.trial_index, d.algorithm, m.node_id,
                    _fmt(m.true_pos.x), _fmt(m.true_pos.y),
                    _fmt(m.est_pos.x if m.est_pos else None),
                    _fmt(m.est_pos.y if m.est_pos else None),
                    _fmt(m.error), _fmt(m.hops), m.anchors_used, _fmt(m.energy),
                ])


def read_summary_csv(path) -> list[dict]:
    """Parse a summary CSV back into typed rows (None for empty cells)."""
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            out.append({
                "trial": int(row["trial"]),
                "algorithm": row["algorithm"],
                "seed": int(row["seed"]),
                "mean_error_m": float(row["mean_error_m"]) if row["mean_error_m"] else None,
                "error_std_m": float(row["error_std_m"]) if row["error_std_m"] else None,
                "coverage": float(row["coverage"]) if row["coverage"] else None,
                "mean_hops": float(row["mean_hops"]) if row["mean_hops"] else None,
                "mean_energy_uJ": float(row["mean_energy_uJ"]) if row["mean_energy_uJ"] else None,
            })
    return out


SVG_SCALE = 6.0  # user units per meter
_MARGIN = 30.0
_LEGEND_HEIGHT = 80.0


def write_field_svg(detail: TrialDetail, path) -> None:
    """Standalone field plot for one trial of one algorithm."""
    field = detail.deployment.field
    w = field.width * SVG_SCALE + 2 * _MARGIN
    h = field.height * SVG_SCALE + 2 * _MARGIN + _LEGEND_HEIGHT

    def sx(x: float) -> float:
        return _MARGIN + x * SVG_SCALE

    def sy(y: float) -> float:
        # flip so the y axis points up, as on paper
        return _MARGIN + (field.height - y) * SVG_SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}" '
        f'viewBox="0 0 {w:.0f} {h:.0f}">',
        f'<rect class="border" x="{_MARGIN:.2f}" y="{_MARGIN:.2f}" '
        f'width="{field.width * SVG_SCALE:.2f}" height="{field.height * SVG_SCALE:.2f}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for m in detail.metrics:
        if m.est_pos is not None:
            parts.append(
                f'<line class="connector" x1="{sx(m.true_pos.x):.2f}" y1="{sy(m.true_pos.y):.2f}" '
                f'x2="{sx(m.est_pos.x):.2f}" y2="{sy(m.est_pos.y):.2f}" '
                'stroke="gray" stroke-width="0.8"/>'
            )
    for p in detail.deployment.unknowns:
        parts.append(f'<circle class="unknown" cx="{sx(p.x):.2f}" cy="{sy(p.y):.2f}" r="3" fill="blue"/>')
    for p in detail.deployment.anchors:
        parts.append(
            f'<rect class="anchor" x="{sx(p.x) - 4:.2f}" y="{sy(p.y) - 4:.2f}" '
            'width="8" height="8" fill="red"/>'
        )
    for m in detail.metrics:
        if m.est_pos is not None:
            x, y = sx(m.est_pos.x), sy(m.est_pos.y)
            parts.append(
                f'<path class="estimate" d="M {x - 4:.2f} {y:.2f} L {x + 4:.2f} {y:.2f} '
                f'M {x:.2f} {y - 4:.2f} L {x:.2f} {y + 4:.2f}" '
                'stroke="green" stroke-width="1.6" fill="none"/>'
            )

    ly = field.height * SVG_SCALE + 2 * _MARGIN + 20
    legend = [
        ('<circle class="legend-swatch" cx="{x}" cy="{y}" r="3" fill="blue"/>', "true position"),
        ('<rect class="legend-swatch" x="{x4}" y="{y4}" width="8" height="8" fill="red"/>', "anchor"),
        ('<path class="legend-swatch" d="M {xm} {y} L {xp} {y} M {x} {ym} L {x} {yp}" '
         'stroke="green" stroke-width="1.6" fill="none"/>', "estimate"),
    ]
    lx = _MARGIN
    parts.append(f'<g class="legend" font-family="sans-serif" font-size="12">')
    parts.append(f'<text x="{lx:.2f}" y="{ly - 12:.2f}">{detail.algorithm}, trial {detail.trial_index}</text>')
    for tmpl, label in legend:
        parts.append(tmpl.format(x=f"{lx + 4:.2f}", y=f"{ly:.2f}",
                                 x4=f"{lx:.2f}", y4=f"{ly - 4:.2f}",
                                 xm=f"{lx:.2f}", xp=f"{lx + 8:.2f}",
                                 ym=f"{ly - 4:.2f}", yp=f"{ly + 4:.2f}"))
        parts.append(f'<text x="{lx + 14:.2f}" y="{ly + 4:.2f}">{label}</text>')
        lx += 110
    parts.append("</g>")
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def write_energy_sweep_csv(params: EnergyParams, path, h_values: Iterable[float] = range(1, 7),
                           n: int = 10, algorithms: Iterable[str] = ("centroid", "dvhop", "grl")) -> None:
    """Energy-vs-hop-count grid for the configured algorithms."""
    rows = energy_hop_sweep(params, list(algorithms), list(h_values), n)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for alg, h, e in rows:
            writer.writerow([alg, _fmt(float(h)), _fmt(e)])
