import json
import warnings

import pytest

from grlsim.energy import EmptyTrialWarning
from grlsim.experiment import (
    ExperimentConfig,
    ParseError,
    ValidationError,
    config_from_dict,
    load_config,
    run_experiment,
)
from grlsim.geometry import PHI


def small_config(**overrides) -> ExperimentConfig:
    base = {"trials": 3, "n_unknowns": 30, "n_anchors": 6, "master_seed": 7}
    base.update(overrides)
    return config_from_dict(base)


# ---------------------------------------------------------------- config

def test_empty_object_gives_defaults():
    cfg = config_from_dict({})
    assert cfg.field.width == 100.0 and cfg.field.height == 100.0
    assert cfg.n_unknowns == 90 and cfg.n_anchors == 10
    assert cfg.base_range_r == 10.0
    assert cfg.trials == 50
    assert cfg.master_seed == 42
    assert cfg.algorithms == ("grl", "dvhop", "centroid")
    assert cfg.anchor_layout["grl"].kind == "golden_angle_sunflower"
    assert cfg.anchor_layout["dvhop"].kind == "random"
    assert cfg.anchor_layout["centroid"].kind == "random"
    assert cfg.baseline_range == "phi_scaled"
    assert cfg.dvhop_hop_size == "global"
    assert cfg.energy.e_tx == 50.0 and cfg.energy.e_rx == 50.0


def test_too_few_anchors_names_field():
    with pytest.raises(ValidationError, match="n_anchors"):
        config_from_dict({"n_anchors": 2})


def test_grl_range_is_phi_scaled():
    cfg = config_from_dict({"base_range_r": 10})
    assert cfg.comm_range("grl") == pytest.approx(16.1803398875, abs=1e-6)
    assert cfg.comm_range("dvhop") == pytest.approx(10.0 * PHI)


def test_baseline_range_switch():
    cfg = config_from_dict({"baseline_range": "base_r"})
    assert cfg.comm_range("dvhop") == 10.0
    assert cfg.comm_range("centroid") == 10.0
    assert cfg.comm_range("grl") == pytest.approx(10.0 * PHI)


@pytest.mark.parametrize("raw,fragment", [
    ({"frobnicate": 1}, "frobnicate"),
    ({"field": {"width": 10, "depth": 3}}, "field.depth"),
    ({"energy": {"e_tx": 50, "joules": 1}}, "energy.joules"),
    ({"anchor_layout": {"grl": {"kind": "random", "spin": 2}}}, "anchor_layout.grl.spin"),
    ({"anchor_layout": {"apit": "random"}}, "anchor_layout.apit"),
    ({"baseline_range": "double"}, "baseline_range"),
    ({"dvhop_hop_size": "median"}, "dvhop_hop_size"),
    ({"algorithms": ["grl", "grl"]}, "algorithms"),
    ({"algorithms": []}, "algorithms"),
    ({"trials": 0}, "trials"),
    ({"field": {"width": -5}}, "field.width"),
    ({"master_seed": "abc"}, "master_seed"),
    ({"energy": {"tx_multiplier": {"grl": 0}}}, "tx_multiplier"),
], ids=lambda v: str(v)[:40])
def test_validation_errors_name_offender(raw, fragment):
    with pytest.raises(ValidationError, match=fragment.replace(".", r"\.")):
        config_from_dict(raw)


def test_layout_string_shorthand_and_params():
    cfg = config_from_dict({"anchor_layout": {"grl": "grid",
                                              "dvhop": {"kind": "phi_chain_spiral", "d1": 3.5}}})
    assert cfg.anchor_layout["grl"].kind == "grid"
    assert cfg.anchor_layout["dvhop"].d1 == 3.5
    assert cfg.anchor_layout["centroid"].kind == "random"


def test_load_config_parse_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_config(p)


def test_load_config_roundtrip(tmp_path):
    cfg = small_config()
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(cfg.to_dict()), encoding="utf-8")
    assert load_config(p) == cfg


def test_config_errors_are_collected():
    with pytest.raises(ValidationError) as exc:
        config_from_dict({"n_anchors": 1, "trials": -2})
    message = str(exc.value)
    assert "n_anchors" in message and "trials" in message


# ------------------------------------------------------------------- runs

def test_row_count_two_algorithms():
    cfg = small_config(algorithms=["grl", "centroid"], trials=3)
    bundle = run_experiment(cfg)
    assert len(bundle.summaries) == 6
    assert [s.algorithm for s in bundle.summaries] == ["centroid", "grl"] * 3


def test_summaries_ordered_by_trial_then_algorithm():
    bundle = run_experiment(small_config())
    keys = [(s.trial_index, s.algorithm) for s in bundle.summaries]
    assert keys == sorted(keys)
    assert len(bundle.summaries) == 3 * 3


def test_paired_unknowns_across_algorithms():
    bundle = run_experiment(small_config())
    by_trial = {}
    for d in bundle.details:
        by_trial.setdefault(d.trial_index, []).append(d.deployment.unknowns)
    for unknown_sets in by_trial.values():
        assert all(u == unknown_sets[0] for u in unknown_sets)


def test_run_deterministic():
    a = run_experiment(small_config())
    b = run_experiment(small_config())
    assert a.summaries == b.summaries
    assert a.details == b.details


def test_draw_order_stable_when_adding_later_algorithms():
    # grl's sunflower layout draws nothing, so dvhop's random anchors come
    # straight after the unknowns whether or not other algorithms run
    only = run_experiment(small_config(algorithms=["dvhop"]))
    full = run_experiment(small_config())
    dv_only = [d for d in only.details]
    dv_full = [d for d in full.details if d.algorithm == "dvhop"]
    for a, b in zip(dv_only, dv_full):
        assert a.deployment.anchors == b.deployment.anchors
        assert a.metrics == b.metrics


def test_trial_seed_echoed_in_summaries():
    bundle = run_experiment(small_config(master_seed=123))
    assert all(s.seed == 123 for s in bundle.summaries)


def test_degenerate_range_keeps_row_contract():
    # a microscopic range disconnects everything: every algorithm still
    # emits one summary row per trial, with zero coverage
    cfg = small_config(base_range_r=0.001, baseline_range="base_r", trials=2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyTrialWarning)
        bundle = run_experiment(cfg)
    assert len(bundle.summaries) == 6
    grl_rows = [s for s in bundle.summaries if s.algorithm == "grl"]
    assert all(s.coverage == 0.0 and s.mean_error is None for s in grl_rows)
    for d in bundle.details:
        for m in d.metrics:
            assert m.est_pos is None and m.anchors_used == 0 and m.energy == 0.0


def test_node_ids_are_global_indices():
    cfg = small_config()
    bundle = run_experiment(cfg)
    for d in bundle.details:
        ids = [m.node_id for m in d.metrics]
        assert ids == list(range(cfg.n_anchors, cfg.n_anchors + cfg.n_unknowns))


def test_energy_matches_model_for_every_node():
    cfg = small_config()
    bundle = run_experiment(cfg)
    e = cfg.energy
    for d in bundle.details:
        tx = e.tx_multiplier[d.algorithm]
        rx = e.rx_multiplier[d.algorithm]
        for m in d.metrics:
            assert m.energy == pytest.approx(tx * e.e_tx * m.hops + rx * e.e_rx * m.anchors_used,
                                             abs=1e-9)


def test_centroid_mean_hops_is_one():
    bundle = run_experiment(small_config())
    for s in bundle.summaries:
        if s.algorithm == "centroid" and s.mean_hops is not None:
            assert s.mean_hops == 1.0
