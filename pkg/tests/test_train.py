"""Optimizer oracles, config validation, and short end-to-end training."""

import dataclasses
import json

import numpy as np
import pytest

from graphxc import autodiff as ad
from graphxc import fci, train
from graphxc.errors import ConfigurationError, NumericalError


def make_params(values):
    return {k: ad.Tensor(np.asarray(v, float), requires_grad=True)
            for k, v in values.items()}


class TestAdam:
    def test_zero_gradient_zero_decay_leaves_params(self):
        params = make_params({"a": [1.0, -2.0], "b": 0.5})
        before = {k: p.value.copy() for k, p in params.items()}
        state = train.adam_state(params)
        train.adam_step(params, {"a": np.zeros(2), "b": np.zeros(())},
                        state, lr=1e-3)
        for k in params:
            np.testing.assert_array_equal(params[k].value, before[k])

    def test_constant_gradient_step_approaches_lr(self):
        # with a constant gradient the ADAM update magnitude tends to lr
        params = make_params({"a": 0.0})
        state = train.adam_state(params)
        lr = 1e-3
        prev = params["a"].value.copy()
        for _ in range(500):
            prev = params["a"].value.copy()
            train.adam_step(params, {"a": np.asarray(2.7)}, state, lr=lr)
        last_step = abs(float(params["a"].value - prev))
        assert last_step == pytest.approx(lr, rel=1e-3)

    def test_scalar_quadratic_converges_within_500_steps(self):
        # minimize (x - 0.1)^2 from x=0 at the production learning rate
        params = make_params({"x": 0.0})
        state = train.adam_state(params)
        for _ in range(500):
            g = 2.0 * (params["x"].value - 0.1)
            train.adam_step(params, {"x": g}, state, lr=5e-4)
        assert abs(float(params["x"].value) - 0.1) < 1e-3

    def test_classical_l2_matches_manual_first_step(self):
        lam, lr, g0, x0 = 0.01, 1e-3, 0.3, 2.0
        params = make_params({"x": x0})
        state = train.adam_state(params)
        train.adam_step(params, {"x": np.asarray(g0)}, state, lr=lr,
                        weight_decay=lam)
        g = g0 + lam * x0
        m_hat = g                      # bias-corrected first moment, t=1
        v_hat = g * g
        expected = x0 - lr * m_hat / (np.sqrt(v_hat) + 1e-8)
        assert float(params["x"].value) == pytest.approx(expected,
                                                         rel=1e-12)

    def test_decoupled_decay_differs_from_classical(self):
        runs = []
        for decoupled in (False, True):
            params = make_params({"x": 2.0})
            state = train.adam_state(params)
            train.adam_step(params, {"x": np.asarray(0.3)}, state,
                            lr=1e-3, weight_decay=0.01,
                            decoupled=decoupled)
            runs.append(float(params["x"].value))
        assert runs[0] != runs[1]

    def test_non_finite_gradient_raises(self):
        params = make_params({"x": 0.0})
        state = train.adam_state(params)
        with pytest.raises(NumericalError):
            train.adam_step(params, {"x": np.asarray(np.nan)}, state,
                            lr=1e-3)

    def test_missing_gradient_treated_as_zero(self):
        params = make_params({"x": 1.5})
        state = train.adam_state(params)
        train.adam_step(params, {"x": None}, state, lr=1e-3)
        assert float(params["x"].value) == 1.5


class TestConfig:
    def test_defaults_valid(self):
        cfg = train.TrainConfig()
        assert cfg.learning_rate == 5e-4
        assert cfg.weight_decay == 5e-5
        assert len(cfg.train_s) == 6

    def test_nonpositive_patience_rejected(self):
        with pytest.raises(ConfigurationError):
            train.TrainConfig(patience=0)

    def test_all_zero_loss_weights_rejected(self):
        with pytest.raises(ConfigurationError):
            train.TrainConfig(w_total=0.0, w_atomization=0.0, w_aux=0.0)

    def test_unknown_variant_rejected(self):
        with pytest.raises(ConfigurationError):
            train.TrainConfig(variant="mystery-net")

    def test_all_eight_variants_accepted(self):
        assert len(train.VARIANTS) == 8
        for v in train.VARIANTS:
            train.TrainConfig(variant=v)


@pytest.fixture(scope="module")
def tiny_records():
    return fci.dissociation_dataset([1.0, 1.35, 2.4])


@pytest.fixture(scope="module")
def tiny_config():
    return train.TrainConfig(variant="exphormer-full", max_epochs=3,
                             train_s=(1.0, 2.4), val_s=(1.35,), seed=0)


@pytest.fixture(scope="module")
def tiny_run(tiny_config, tiny_records, tmp_path_factory):
    path = tmp_path_factory.mktemp("ckpt") / "model.npz"
    rec = train.train(tiny_config, records=tiny_records,
                      checkpoint_path=path)
    return rec, path


class TestTraining:
    def test_epoch_zero_equals_base_functional(self, tiny_run,
                                               tiny_config, tiny_records):
        # beta starts at zero, so the first epoch sees the base DFA error
        rec, _ = tiny_run
        by_s = {round(r["S"], 10): r for r in tiny_records}
        base_cfg = dataclasses.replace(tiny_config, max_epochs=1)
        geoms, _, _ = train.prepare_geometries(base_cfg, tiny_records)
        import graphxc.scf as scf
        base = scf.Functional(tiny_config.base)
        errs = []
        for g in geoms:
            st = scf.scf_solve(g.system, base, g.scf_config)
            errs.append(abs(st.e_total - g.e_ref))
        expected = float(np.mean(errs)) * train.HARTREE_TO_KCAL
        assert rec.train_mae[0] == pytest.approx(expected, abs=1e-6)

    def test_parameters_move_after_first_epoch(self, tiny_run):
        rec, _ = tiny_run
        assert rec.train_mae[1] != rec.train_mae[0]

    def test_loss_components_logged_every_epoch(self, tiny_run):
        rec, _ = tiny_run
        assert len(rec.loss_components) == len(rec.train_mae)
        for comp in rec.loss_components:
            assert set(comp) == {"total-energy", "atomization",
                                 "aux-density"}

    def test_checkpoint_written_and_loadable(self, tiny_run, tiny_config):
        rec, path = tiny_run
        assert path.exists()
        functional = train.load_functional(tiny_config, path)
        loaded = functional.parameters()
        assert "beta" in loaded
        assert all(np.all(np.isfinite(p.value)) for p in loaded.values())

    def test_record_serializes_deterministically(self, tiny_run):
        rec, _ = tiny_run
        text = train.run_record_to_json(rec)
        assert text == train.run_record_to_json(rec)
        parsed = json.loads(text)
        assert parsed["config"]["variant"] == "exphormer-full"
        assert len(parsed["train_mae"]) == 3

    def test_training_is_deterministic(self, tiny_config, tiny_records,
                                       tiny_run):
        rec1, _ = tiny_run
        rec2 = train.train(tiny_config, records=tiny_records)
        assert rec1.train_mae == rec2.train_mae
        assert rec1.val_mae == rec2.val_mae

    def test_predictions_cover_all_geometries(self, tiny_run, tiny_config):
        rec, _ = tiny_run
        assert [p["S"] for p in rec.predictions["train"]] == \
            list(tiny_config.train_s)
        assert [p["S"] for p in rec.predictions["val"]] == \
            list(tiny_config.val_s)
        assert rec.predictions["atom"]["e_ref"] == pytest.approx(
            fci.hydrogen_atom_energy(), abs=1e-12)

    def test_stop_reason_reports_budget(self, tiny_run):
        rec, _ = tiny_run
        assert "epoch budget" in rec.stop_reason or \
            "target" in rec.stop_reason


class TestExperiments:
    def test_untrained_dissociation_matches_base(self, tiny_config,
                                                 tiny_records):
        # beta = 0: the learned functional is exactly the base functional
        import graphxc.scf as scf
        functional = train.make_functional_for(tiny_config)
        rows = train.dissociation_experiment(functional, tiny_config,
                                             [1.0, 2.4],
                                             records=tiny_records)
        base = scf.Functional(tiny_config.base)
        for row, s in zip(rows, [1.0, 2.4]):
            geoms, _, _ = train.prepare_geometries(
                dataclasses.replace(tiny_config, train_s=(s,), val_s=()),
                tiny_records)
            st = scf.scf_solve(geoms[0].system, base, geoms[0].scf_config)
            assert row["e_model"] == pytest.approx(st.e_total, abs=1e-10)

    def test_interpolative_flag_bounds(self, tiny_config, tiny_records):
        functional = train.make_functional_for(tiny_config)
        rows = train.dissociation_experiment(functional, tiny_config,
                                             [1.0, 2.4],
                                             records=tiny_records)
        assert all(row["interpolative"] for row in rows)
