import json

import pytest

from grlsim.cli import main
from grlsim.report import read_summary_csv


def run_cli(*argv):
    return main(list(argv))


@pytest.fixture
def tiny_config(tmp_path):
    p = tmp_path / "config.json"
    p.write_text(json.dumps({"trials": 2, "n_unknowns": 15, "n_anchors": 5, "master_seed": 3}),
                 encoding="utf-8")
    return p


def test_run_writes_outputs(tmp_path, tiny_config, capsys):
    out = tmp_path / "results"
    code = run_cli("run", "--config", str(tiny_config), "--out-dir", str(out),
                   "--plot", "--per-node")
    assert code == 0
    assert (out / "summary.csv").exists()
    assert (out / "per_node.csv").exists()
    assert (out / "effective_config.json").exists()
    for alg in ("grl", "dvhop", "centroid"):
        assert (out / f"field_{alg}.svg").exists()
    rows = read_summary_csv(out / "summary.csv")
    assert len(rows) == 6
    assert "summary.csv" in capsys.readouterr().out


def test_run_seed_and_trials_overrides(tmp_path, tiny_config):
    out = tmp_path / "results"
    assert run_cli("run", "--config", str(tiny_config), "--out-dir", str(out),
                   "--seed", "99", "--trials", "1") == 0
    rows = read_summary_csv(out / "summary.csv")
    assert len(rows) == 3
    assert all(r["seed"] == 99 for r in rows)
    echoed = json.loads((out / "effective_config.json").read_text(encoding="utf-8"))
    assert echoed["master_seed"] == 99 and echoed["trials"] == 1


def test_run_is_byte_deterministic(tmp_path, tiny_config):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        assert run_cli("run", "--config", str(tiny_config), "--out-dir", str(out),
                       "--plot", "--per-node") == 0
    for name in ("summary.csv", "per_node.csv", "field_grl.svg", "effective_config.json"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_validate_ok(tmp_path, tiny_config, capsys):
    assert run_cli("validate", "--config", str(tiny_config)) == 0
    assert "OK" in capsys.readouterr().out


def test_validate_bad_config_exits_1(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"n_anchors": 1}), encoding="utf-8")
    assert run_cli("validate", "--config", str(p)) == 1
    assert "n_anchors" in capsys.readouterr().err


def test_malformed_json_exits_1(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{", encoding="utf-8")
    assert run_cli("validate", "--config", str(p)) == 1


def test_missing_config_exits_2(tmp_path, capsys):
    assert run_cli("validate", "--config", str(tmp_path / "nope.json")) == 2
    assert "i/o error" in capsys.readouterr().err


def test_out_dir_collision_exits_2(tmp_path, tiny_config, capsys):
    blocker = tmp_path / "results"
    blocker.write_text("a file, not a directory", encoding="utf-8")
    assert run_cli("run", "--config", str(tiny_config), "--out-dir", str(blocker)) == 2


def test_sweep_outputs(tmp_path):
    out = tmp_path / "sweep_out"
    assert run_cli("sweep", "--out-dir", str(out)) == 0
    lines = (out / "energy_sweep.csv").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 19
    assert lines[0] == "algorithm,h,energy_uJ"


def test_sweep_custom_grid(tmp_path):
    out = tmp_path / "sweep_out"
    assert run_cli("sweep", "--out-dir", str(out), "--n", "4", "--h-max", "2") == 0
    lines = (out / "energy_sweep.csv").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 7
    centroid_h1 = [ln for ln in lines if ln.startswith("centroid,1.000000,")]
    assert float(centroid_h1[0].split(",")[2]) == pytest.approx(290.0, abs=1e-9)
