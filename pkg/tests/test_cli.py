"""CLI surface: outputs, config merging, and byte-level determinism."""

import json
import os

import numpy as np
import pytest

from graphxc import cli


def run(argv, out_path):
    code = cli.main(argv + ["--out", os.fspath(out_path)])
    return code, out_path.read_bytes()


class TestGrid:
    def test_grid_build_reports_counts(self, tmp_path):
        code, raw = run(["grid", "build", "--h2", "1.0",
                         "--preset", "coarse"], tmp_path / "g.json")
        assert code == 0
        data = json.loads(raw)
        assert data["n_atoms"] == 2
        assert data["n_points"] == 1040
        assert data["config"]["command"] == "grid build"

    def test_geometry_file_input(self, tmp_path):
        geom = tmp_path / "geom.txt"
        geom.write_text("0 0 0\n0 0 1.4\n")
        code, raw = run(["grid", "build", "--geometry", os.fspath(geom)],
                        tmp_path / "g.json")
        assert code == 0
        assert json.loads(raw)["n_atoms"] == 2

    def test_conflicting_geometry_flags_rejected(self, tmp_path, capsys):
        code = cli.main(["grid", "build", "--h2", "1.0", "--h4", "45"])
        assert code == 2
        assert "exactly one" in capsys.readouterr().err


class TestGraph:
    def test_graph_build_counts_edge_classes(self, tmp_path):
        code, raw = run(["graph", "build", "--h2", "1.0"],
                        tmp_path / "gr.json")
        assert code == 0
        data = json.loads(raw)
        assert data["n_edges"] == (data["edges_local"] +
                                   data["edges_expander"] +
                                   data["edges_global"])
        assert data["edges_global"] == 10 * data["n_grid"]

    def test_graph_validate_passes_on_good_expander(self, tmp_path):
        code, raw = run(["graph", "validate", "--n-vertices", "512",
                         "--expander-degree", "6", "--seed", "1"],
                        tmp_path / "v.json")
        assert code == 0
        assert json.loads(raw)["report"]["passed"] is True


class TestScf:
    def test_scf_run_energy_and_convergence(self, tmp_path):
        code, raw = run(["scf", "run", "--h2", "1.0", "--xc", "pw92",
                         "--mode", "rks"], tmp_path / "s.json")
        assert code == 0
        data = json.loads(raw)
        assert data["converged"] is True
        assert data["e_total"] == pytest.approx(-1.1313, abs=5e-3)
        assert data["config"]["xc"] == "pw92"

    def test_scf_uks_mode_accepted(self, tmp_path):
        geom = tmp_path / "atom.txt"
        geom.write_text("0 0 0\n")
        code, raw = run(["scf", "run", "--geometry", os.fspath(geom),
                         "--mode", "uks"], tmp_path / "s.json")
        assert code == 0
        data = json.loads(raw)
        assert data["n_up"] == 1 and data["n_dn"] == 0


class TestFci:
    def test_fci_run_h2(self, tmp_path):
        code, raw = run(["fci", "run", "--h2", "1.0"], tmp_path / "f.json")
        assert code == 0
        data = json.loads(raw)
        assert data["e_total"] == pytest.approx(-1.15167903, abs=1e-7)

    def test_fci_sweep_emits_jsonl(self, tmp_path):
        code, raw = run(["fci", "sweep", "--s-values", "1.0,2.0"],
                        tmp_path / "sweep.jsonl")
        assert code == 0
        lines = raw.decode().strip().split("\n")
        assert len(lines) == 3                  # header + 2 records
        header = json.loads(lines[0])
        assert header["config"]["command"] == "fci sweep"
        recs = [json.loads(ln) for ln in lines[1:]]
        assert [r["S"] for r in recs] == [1.0, 2.0]

    def test_fci_sweep_requires_values(self, capsys):
        code = cli.main(["fci", "sweep"])
        assert code == 2


class TestConfigMerging:
    def test_config_file_supplies_defaults(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n_roots": 2}))
        code, raw = run(["fci", "run", "--h2", "1.0",
                         "--config", os.fspath(cfg)], tmp_path / "f.json")
        assert code == 0
        data = json.loads(raw)
        assert len(data["energies"]) == 2
        assert data["config"]["n_roots"] == 2

    def test_cli_flag_overrides_config_file(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n_roots": 2}))
        code, raw = run(["fci", "run", "--h2", "1.0", "--n-roots", "1",
                         "--config", os.fspath(cfg)], tmp_path / "f.json")
        assert code == 0
        assert len(json.loads(raw)["energies"]) == 1

    def test_exc_seed_env_fallback(self, tmp_path, monkeypatch):
        monkeypatch.setenv("EXC_SEED", "7")
        code, raw = run(["graph", "build", "--h2", "1.0"],
                        tmp_path / "g.json")
        assert code == 0
        assert json.loads(raw)["config"]["seed"] == 7

    def test_explicit_seed_beats_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("EXC_SEED", "7")
        code, raw = run(["graph", "build", "--h2", "1.0", "--seed", "3"],
                        tmp_path / "g.json")
        assert code == 0
        assert json.loads(raw)["config"]["seed"] == 3


class TestDeterminism:
    CASES = [
        ["grid", "build", "--h2", "1.3", "--preset", "coarse",
         "--seed", "5"],
        ["graph", "build", "--h2", "1.3", "--seed", "5", "--full"],
        ["graph", "validate", "--n-vertices", "512", "--seed", "5"],
        ["scf", "run", "--h2", "1.3", "--xc", "pw92", "--seed", "5"],
        ["scf", "run", "--h2", "1.3", "--xc", "exphormer-pw92",
         "--seed", "5"],
        ["fci", "sweep", "--s-values", "0.9,1.3", "--seed", "5"],
    ]

    @pytest.mark.parametrize("argv", CASES,
                             ids=[" ".join(c[:2]) + "-" + c[-1]
                                  if False else "-".join(c[:2]) + str(i)
                                  for i, c in enumerate(CASES)])
    def test_rerun_is_byte_identical(self, argv, tmp_path):
        code1, raw1 = run(argv, tmp_path / "a.out")
        code2, raw2 = run(argv, tmp_path / "b.out")
        assert code1 == code2 == 0
        assert raw1 == raw2

    def test_eval_dissociation_csv_byte_identical(self, tmp_path):
        argv = ["eval", "dissociation", "--s-grid", "1.0,2.4", "--csv",
                "--seed", "2"]
        code1, raw1 = run(argv, tmp_path / "a.csv")
        code2, raw2 = run(argv, tmp_path / "b.csv")
        assert code1 == code2 == 0
        assert raw1 == raw2
        header = raw1.decode().splitlines()[0]
        assert header == "x_value,method,energy,error"

    def test_different_seed_changes_expander_output(self, tmp_path):
        base = ["graph", "build", "--h2", "1.3", "--full"]
        _, raw1 = run(base + ["--seed", "1"], tmp_path / "a.json")
        _, raw2 = run(base + ["--seed", "2"], tmp_path / "b.json")
        assert raw1 != raw2
