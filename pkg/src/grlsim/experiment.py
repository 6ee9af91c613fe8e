"""Experiment configuration and the Monte Carlo trial runner.

Each trial derives its own random stream from (master_seed, trial_index)
and draws in a fixed order: the shared unknown-node positions first, then
anchor positions for the algorithms whose layout is random, in the order
grl, dvhop, centroid. Keeping that order stable means enabling or
disabling later algorithms never perturbs earlier draws, so results are
regression-stable.

All algorithms in a trial see the same unknown nodes (paired comparison);
anchor layouts and communication ranges are per-algorithm.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field

from .deployment import AnchorLayout, Deployment, deploy_unknowns_uniform, place_anchors
from .energy import ALGORITHMS, EnergyParams, NodeMetrics, TrialSummary, localization_energy, summarize_trial
from .geometry import FieldSpec, distance
from .localization import (
    DegenerateHops,
    DisconnectedAnchors,
    centroid_localize,
    dvhop_avg_hop_size,
    dvhop_localize,
    dvhop_per_anchor_hop_sizes,
    grl_localize,
)
from .network import HopTable, build_graph, compute_hops, scaled_range
from .rng import derive_trial_stream


class ConfigError(Exception):
    """Base for configuration failures."""


class ParseError(ConfigError):
    """Config file is not valid JSON."""


class ValidationError(ConfigError):
    """Config content violates the schema; message lists the fields."""


def _default_layouts() -> dict[str, AnchorLayout]:
    return {
        "grl": AnchorLayout("golden_angle_sunflower"),
        "dvhop": AnchorLayout("random"),
        "centroid": AnchorLayout("random"),
    }


@dataclass(frozen=True)
class ExperimentConfig:
    field: FieldSpec = FieldSpec(100.0, 100.0)
    n_unknowns: int = 90
    n_anchors: int = 10
    base_range_r: float = 10.0
    algorithms: tuple[str, ...] = ALGORITHMS
    anchor_layout: dict[str, AnchorLayout] = dc_field(default_factory=_default_layouts)
    baseline_range: str = "phi_scaled"
    dvhop_hop_size: str = "global"
    energy: EnergyParams = EnergyParams()
    trials: int = 50
    master_seed: int = 42

    def comm_range(self, algorithm: str) -> float:
        """Effective communication range: the golden-ratio localizer always
        scales the base radius by phi; baselines follow `baseline_range`."""
        if algorithm == "grl" or self.baseline_range == "phi_scaled":
            return scaled_range(self.base_range_r)
        return self.base_range_r

    def to_dict(self) -> dict:
        layouts = {}
        for alg, lay in self.anchor_layout.items():
            entry: dict = {"kind": lay.kind}
            if lay.d1 is not None:
                entry["d1"] = lay.d1
            if lay.scale_c is not None:
                entry["scale_c"] = lay.scale_c
            layouts[alg] = entry
        return {
            "field": {"width": self.field.width, "height": self.field.height},
            "n_unknowns": self.n_unknowns,
            "n_anchors": self.n_anchors,
            "base_range_r": self.base_range_r,
            "algorithms": list(self.algorithms),
            "anchor_layout": layouts,
            "baseline_range": self.baseline_range,
            "dvhop_hop_size": self.dvhop_hop_size,
            "energy": {
                "e_tx": self.energy.e_tx,
                "e_rx": self.energy.e_rx,
                "tx_multiplier": dict(self.energy.tx_multiplier),
                "rx_multiplier": dict(self.energy.rx_multiplier),
            },
            "trials": self.trials,
            "master_seed": self.master_seed,
        }


_TOP_LEVEL_KEYS = {
    "field", "n_unknowns", "n_anchors", "base_range_r", "algorithms",
    "anchor_layout", "baseline_range", "dvhop_hop_size", "energy",
    "trials", "master_seed",
}


def _check_unknown_keys(obj: dict, allowed: set, context: str, errors: list) -> None:
    for key in obj:
        if key not in allowed:
            errors.append(f"{context}{key}: unknown key")


def _as_number(value, name: str, errors: list, minimum=None, strict=False) -> float | None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        errors.append(f"{name}: expected a finite number, got {value!r}")
        return None
    if minimum is not None and (value <= minimum if strict else value < minimum):
        op = ">" if strict else ">="
        errors.append(f"{name}: must be {op} {minimum} (got {value})")
        return None
    return float(value)


def _as_int(value, name: str, errors: list, minimum=None) -> int | None:
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append(f"{name}: expected an integer, got {value!r}")
        return None
    if minimum is not None and value < minimum:
        errors.append(f"{name}: must be >= {minimum} (got {value})")
        return None
    return value


def _parse_layout(spec, name: str, errors: list) -> AnchorLayout | None:
    if isinstance(spec, str):
        spec = {"kind": spec}
    if not isinstance(spec, dict):
        errors.append(f"{name}: expected a layout kind or object, got {spec!r}")
        return None
    _check_unknown_keys(spec, {"kind", "d1", "scale_c"}, f"{name}.", errors)
    kind = spec.get("kind")
    if not isinstance(kind, str):
        errors.append(f"{name}.kind: required layout kind string")
        return None
    try:
        return AnchorLayout(kind, d1=spec.get("d1"), scale_c=spec.get("scale_c"))
    except ValueError as exc:
        errors.append(f"{name}: {exc}")
        return None


def config_from_dict(raw: dict) -> ExperimentConfig:
    """Validate a parsed JSON object and fill defaults. Raises
    ValidationError listing every offending field."""
    if not isinstance(raw, dict):
        raise ValidationError("config root: expected a JSON object")
    errors: list[str] = []
    _check_unknown_keys(raw, _TOP_LEVEL_KEYS, "", errors)

    defaults = ExperimentConfig()
    fld = defaults.field
    if "field" in raw:
        fobj = raw["field"]
        if not isinstance(fobj, dict):
            errors.append("field: expected an object with width and height")
        else:
            _check_unknown_keys(fobj, {"width", "height"}, "field.", errors)
            w = _as_number(fobj.get("width", 100.0), "field.width", errors, minimum=0.0, strict=True)
            h = _as_number(fobj.get("height", 100.0), "field.height", errors, minimum=0.0, strict=True)
            if w is not None and h is not None:
                fld = FieldSpec(w, h)

    n_unknowns = _as_int(raw.get("n_unknowns", defaults.n_unknowns), "n_unknowns", errors, minimum=1)
    n_anchors = _as_int(raw.get("n_anchors", defaults.n_anchors), "n_anchors", errors, minimum=3)
    base_r = _as_number(raw.get("base_range_r", defaults.base_range_r), "base_range_r", errors,
                        minimum=0.0, strict=True)
    trials = _as_int(raw.get("trials", defaults.trials), "trials", errors, minimum=1)
    master_seed = raw.get("master_seed", defaults.master_seed)
    if isinstance(master_seed, bool) or not isinstance(master_seed, int):
        errors.append(f"master_seed: expected an integer, got {master_seed!r}")

    algorithms = defaults.algorithms
    if "algorithms" in raw:
        seq = raw["algorithms"]
        if (not isinstance(seq, list) or not seq or len(set(seq)) != len(seq)
                or any(a not in ALGORITHMS for a in seq)):
            errors.append(f"algorithms: expected a non-empty list without duplicates from {list(ALGORITHMS)}")
        else:
            algorithms = tuple(seq)

    layouts = _default_layouts()
    if "anchor_layout" in raw:
        lobj = raw["anchor_layout"]
        if not isinstance(lobj, dict):
            errors.append("anchor_layout: expected an object keyed by algorithm")
        else:
            for alg, spec in lobj.items():
                if alg not in ALGORITHMS:
                    errors.append(f"anchor_layout.{alg}: unknown algorithm")
                    continue
                lay = _parse_layout(spec, f"anchor_layout.{alg}", errors)
                if lay is not None:
                    layouts[alg] = lay

    baseline_range = raw.get("baseline_range", defaults.baseline_range)
    if baseline_range not in ("phi_scaled", "base_r"):
        errors.append(f"baseline_range: expected 'phi_scaled' or 'base_r', got {baseline_range!r}")
    dvhop_hop_size = raw.get("dvhop_hop_size", defaults.dvhop_hop_size)
    if dvhop_hop_size not in ("global", "per_anchor_nearest"):
        errors.append(f"dvhop_hop_size: expected 'global' or 'per_anchor_nearest', got {dvhop_hop_size!r}")

    energy = defaults.energy
    if "energy" in raw:
        eobj = raw["energy"]
        if not isinstance(eobj, dict):
            errors.append("energy: expected an object")
        else:
            _check_unknown_keys(eobj, {"e_tx", "e_rx", "tx_multiplier", "rx_multiplier"}, "energy.", errors)
            e_tx = _as_number(eobj.get("e_tx", energy.e_tx), "energy.e_tx", errors, minimum=0.0, strict=True)
            e_rx = _as_number(eobj.get("e_rx", energy.e_rx), "energy.e_rx", errors, minimum=0.0, strict=True)
            mults = {}
            for mname in ("tx_multiplier", "rx_multiplier"):
                table = dict(getattr(energy, mname))
                if mname in eobj:
                    mobj = eobj[mname]
                    if not isinstance(mobj, dict):
                        errors.append(f"energy.{mname}: expected an object keyed by algorithm")
                    else:
                        for alg, m in mobj.items():
                            if alg not in ALGORITHMS:
                                errors.append(f"energy.{mname}.{alg}: unknown algorithm")
                                continue
                            v = _as_number(m, f"energy.{mname}.{alg}", errors, minimum=0.0, strict=True)
                            if v is not None:
                                table[alg] = v
                mults[mname] = table
            if e_tx is not None and e_rx is not None:
                energy = EnergyParams(e_tx, e_rx, mults["tx_multiplier"], mults["rx_multiplier"])

    if errors:
        raise ValidationError("; ".join(errors))
    return ExperimentConfig(
        field=fld,
        n_unknowns=n_unknowns,
        n_anchors=n_anchors,
        base_range_r=base_r,
        algorithms=algorithms,
        anchor_layout=layouts,
        baseline_range=baseline_range,
        dvhop_hop_size=dvhop_hop_size,
        energy=energy,
        trials=trials,
        master_seed=master_seed,
    )


def load_config(path) -> ExperimentConfig:
    """Read, parse, and validate a JSON config file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return config_from_dict(raw)


@dataclass(frozen=True)
class TrialDetail:
    """Per-node outcomes of one (trial, algorithm) evaluation."""

    trial_index: int
    algorithm: str
    deployment: Deployment
    metrics: tuple[NodeMetrics, ...]


@dataclass(frozen=True)
class ResultsBundle:
    """Everything one experiment produced, ordered by (trial, algorithm)."""

    config: ExperimentConfig
    summaries: tuple[TrialSummary, ...]
    details: tuple[TrialDetail, ...]


def _attempt_stats(hop_table: HopTable, node: int, algorithm: str) -> tuple[float, int]:
    """(mean hop count, anchor count) of the anchor set the algorithm
    listens to, independent of whether the estimate succeeds."""
    if algorithm == "centroid":
        cols = [c for c in range(hop_table.n_anchors) if hop_table.hop(node, c) == 1]
    else:
        cols = list(hop_table.reachable_columns(node))
    if not cols:
        return 0.0, 0
    hops = [hop_table.hop(node, c) for c in cols]
    return math.fsum(hops) / len(hops), len(cols)


def _evaluate_algorithm(config: ExperimentConfig, algorithm: str, deployment: Deployment,
                        trial_index: int) -> TrialDetail:
    anchors = list(deployment.anchors)
    graph = build_graph(deployment, config.comm_range(algorithm))
    hop_table = compute_hops(graph, list(range(len(anchors))))

    hop_size = None
    per_anchor_sizes = None
    degenerate = False
    if algorithm == "dvhop":
        # If any anchor pair is disconnected the hop-size average is
        # undefined and every node of this trial stays unlocalized.
        try:
            if config.dvhop_hop_size == "per_anchor_nearest":
                per_anchor_sizes = dvhop_per_anchor_hop_sizes(anchors, hop_table)
            else:
                hop_size = dvhop_avg_hop_size(anchors, hop_table)
        except (DisconnectedAnchors, DegenerateHops):
            degenerate = True

    metrics = []
    k = len(anchors)
    for u, true_pos in enumerate(deployment.unknowns):
        node = k + u
        est = None
        if algorithm == "centroid":
            est = centroid_localize(node, anchors, hop_table)
        elif algorithm == "grl":
            est = grl_localize(node, anchors, hop_table)
        elif not degenerate:
            est = dvhop_localize(node, anchors, hop_table, hop_size=hop_size,
                                 per_anchor_sizes=per_anchor_sizes,
                                 scale=config.field.diagonal)
        if est is not None:
            h, n = est.mean_hops, est.anchors_used
            err = distance(true_pos, est.position)
            pos = est.position
        else:
            h, n = _attempt_stats(hop_table, node, algorithm)
            err = None
            pos = None
        e = localization_energy(config.energy, algorithm, h, n) if n >= 1 else 0.0
        metrics.append(NodeMetrics(node, true_pos, pos, err, h, n, e))
    return TrialDetail(trial_index, algorithm, deployment, tuple(metrics))


def run_experiment(config: ExperimentConfig) -> ResultsBundle:
    """Run all trials for all configured algorithms, deterministically."""
    summaries = []
    details = []
    for t in range(config.trials):
        rng = derive_trial_stream(config.master_seed, t)
        unknowns = tuple(deploy_unknowns_uniform(config.field, config.n_unknowns, rng))
        anchors_by_alg = {}
        for alg in ALGORITHMS:  # fixed draw order, independent of selection order
            if alg in config.algorithms:
                anchors_by_alg[alg] = tuple(
                    place_anchors(config.anchor_layout[alg], config.field, config.n_anchors, rng)
                )
        for alg in sorted(config.algorithms):
            deployment = Deployment(config.field, anchors_by_alg[alg], unknowns)
            detail = _evaluate_algorithm(config, alg, deployment, t)
            details.append(detail)
            summaries.append(summarize_trial(list(detail.metrics), alg, config.master_seed, t))
    return ResultsBundle(config, tuple(summaries), tuple(details))
