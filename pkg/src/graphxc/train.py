"""Training loop, experiment drivers, and the ablation matrix."""

import dataclasses
import json
import os
from dataclasses import dataclass, field, asdict

import numpy as np

from . import autodiff as ad
from . import fci, geometry as geo
from . import graph as gg
from . import grids, nn, scf
from .errors import ConfigurationError, DivergenceError, NumericalError

HARTREE_TO_KCAL = 627.5094740631
DIVERGENCE_PENALTY = 1e6          # kcal/mol, per diverged geometry
MAE_TARGET = 1.0                  # kcal/mol, epochs-to-threshold metric

VARIANTS = {
    "nn-lda": {"net": "nnlda", "expander_degree": 0, "n_global": 0},
    "gcn": {"net": "gcn", "expander_degree": 0, "n_global": 0},
    "gcn-distance": {"net": "gcn", "distance_weight": True,
                     "expander_degree": 0, "n_global": 0},
    "nnconv": {"net": "nnconv", "expander_degree": 0, "n_global": 0},
    "transformerconv": {"net": "exphormer", "expander_degree": 0,
                        "n_global": 0},
    "exphormer-no-dist": {"net": "exphormer", "use_distance": False,
                          "expander_degree": 6, "n_global": 10},
    "exphormer-no-globals": {"net": "exphormer", "expander_degree": 6,
                             "n_global": 0},
    "exphormer-full": {"net": "exphormer", "expander_degree": 6,
                       "n_global": 10},
}


@dataclass
class TrainConfig:
    learning_rate: float = 5e-4
    weight_decay: float = 5e-5
    decoupled_weight_decay: bool = False
    w_total: float = 1.0
    w_atomization: float = 1.0
    w_aux: float = 0.0
    train_s: tuple = (1.0, 1.7, 2.4, 3.1, 3.8, 4.5)
    val_s: tuple = (1.35, 2.75, 4.15)
    patience: int = 500
    max_epochs: int = 2000
    seed: int = 0
    variant: str = "exphormer-full"
    base: str = "pw92"
    unroll: int = 1
    grid_preset: str = "coarse"
    scf_threshold: float = 1e-5
    refresh_every: int = 50        # full SCF re-anchor interval (epochs)
    mae_target: float = MAE_TARGET

    def __post_init__(self):
        if self.patience <= 0:
            raise ConfigurationError("patience must be > 0")
        if self.w_total <= 0 and self.w_atomization <= 0 and self.w_aux <= 0:
            raise ConfigurationError("at least one loss weight must be > 0")
        if self.variant not in VARIANTS:
            raise ConfigurationError(
                f"unknown variant {self.variant!r}; choose from "
                f"{sorted(VARIANTS)}")


@dataclass
class RunRecord:
    config: dict
    train_mae: list = field(default_factory=list)   # kcal/mol per epoch
    val_mae: list = field(default_factory=list)
    loss: list = field(default_factory=list)
    loss_components: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    epochs_to_threshold: int = -1                   # -1: never reached
    stop_reason: str = ""
    best_epoch: int = -1
    best_val_mae: float = float("inf")
    final_train_mae: float = float("nan")           # converged-SCF eval
    final_val_mae: float = float("nan")
    checkpoint: str = ""
    predictions: dict = field(default_factory=dict)


# -- optimizer -------------------------------------------------------------

def adam_state(params):
    return {"t": 0,
            "m": {k: np.zeros_like(p.value) for k, p in params.items()},
            "v": {k: np.zeros_like(p.value) for k, p in params.items()}}


def adam_step(params, grads, state, lr, weight_decay=0.0,
              beta1=0.9, beta2=0.999, eps=1e-8, decoupled=False):
    """One ADAM update in place; classical L2 adds lambda*theta to grads."""
    state["t"] += 1
    t = state["t"]
    for name in sorted(params):
        p, g = params[name], grads[name]
        if g is None:
            g = np.zeros_like(p.value)
        g = np.asarray(g, dtype=np.float64)
        if not np.all(np.isfinite(g)):
            raise NumericalError(f"non-finite gradient for {name!r}")
        if weight_decay and not decoupled:
            g = g + weight_decay * p.value
        m = state["m"][name] = beta1 * state["m"][name] + (1 - beta1) * g
        v = state["v"][name] = beta2 * state["v"][name] + (1 - beta2) * g * g
        m_hat = m / (1 - beta1 ** t)
        v_hat = v / (1 - beta2 ** t)
        step = lr * m_hat / (np.sqrt(v_hat) + eps)
        if weight_decay and decoupled:
            step = step + lr * weight_decay * p.value
        p.value = p.value - step
    return params, state


# -- model assembly --------------------------------------------------------

def build_net(variant, seed=0):
    spec = VARIANTS[variant]
    kind = spec["net"]
    if kind == "nnlda":
        return nn.NNLDANet(seed=seed)
    if kind == "gcn":
        return nn.GCNNet(seed=seed,
                         distance_weight=spec.get("distance_weight", False))
    if kind == "nnconv":
        return nn.NNConvNet(seed=seed)
    return nn.ExphormerNet(seed=seed, n_global=spec["n_global"],
                           use_distance=spec.get("use_distance", True))


def build_graph(variant, grid, seed=0):
    spec = VARIANTS[variant]
    return gg.assemble(grid, expander_degree=spec["expander_degree"],
                       n_global=spec["n_global"], seed=seed)


def assemble_system(atoms, config, graph_seed=0):
    grid = grids.build_grid(atoms, preset=config.grid_preset)
    graph = build_graph(config.variant, grid, seed=graph_seed)
    return scf.build_system(atoms, grid, graph=graph)


def make_functional_for(config):
    net = build_net(config.variant, seed=config.seed)
    return scf.Functional(config.base, net=net)


# -- training --------------------------------------------------------------

def _abs(t):
    return ad.relu(t) + ad.relu(-1.0 * t)


class _Geometry:
    """A labeled geometry with its system and persistent density cache."""

    def __init__(self, system, scf_config, e_ref, e_atomization_ref,
                 density_ref, tag):
        self.system = system
        self.scf_config = scf_config
        self.e_ref = e_ref
        self.e_at_ref = e_atomization_ref
        self.density_ref = density_ref
        self.tag = tag
        self.cache = None

    def anchor(self, functional):
        """Fully converge the SCF at the current parameters."""
        d_init = None if self.cache is None \
            else (self.cache.d_up, self.cache.d_dn)
        self.cache = scf.scf_solve(self.system, functional,
                                   self.scf_config, d_init=d_init)
        return self.cache

    def step(self, functional, unroll):
        cfg = dataclasses.replace(self.scf_config, unroll=unroll)
        e_t, self.cache = scf.differentiable_run(
            self.system, functional, cfg, warm_start=self.cache)
        return e_t


def _aux_density_loss(geometry, functional):
    """Grid-weighted MSE between the model and reference densities."""
    sys_ = geometry.system
    d_tot = ad.Tensor(geometry.cache.d_up) + ad.Tensor(geometry.cache.d_dn)
    phi = ad.Tensor(sys_.phi)
    n_model = (ad.matmul(phi, d_tot) * phi).sum(axis=1)
    n_ref = np.einsum("gm,mn,gn->g", sys_.phi, geometry.density_ref,
                      sys_.phi)
    diff = n_model - ad.Tensor(n_ref)
    return (ad.Tensor(sys_.grid.weights) * diff * diff).sum()


def prepare_geometries(config, records=None):
    """Build train/val `_Geometry` lists plus the free-atom system."""
    wanted = sorted(set(config.train_s) | set(config.val_s))
    if records is None:
        records = fci.dissociation_dataset(wanted)
    by_s = {round(r["S"], 10): r for r in records}
    rcfg = scf.SCFConfig(mode="restricted", threshold=config.scf_threshold,
                         unroll=config.unroll)
    ucfg = scf.SCFConfig(mode="unrestricted",
                         threshold=config.scf_threshold,
                         unroll=config.unroll)

    def build(s_values, tag):
        out = []
        for s in s_values:
            rec = by_s[round(s, 10)]
            sys_ = assemble_system(np.asarray(rec["geometry"]), config,
                                   graph_seed=config.seed)
            out.append(_Geometry(sys_, rcfg, rec["e_total"],
                                 rec["e_atomization"],
                                 np.asarray(rec["density"]), tag))
        return out

    train = build(config.train_s, "train")
    val = build(config.val_s, "val")
    atom_sys = assemble_system(np.zeros((1, 3)), config,
                               graph_seed=config.seed)
    e_atom_ref = fci.hydrogen_atom_energy()
    atom = _Geometry(atom_sys, ucfg, e_atom_ref, 0.0, None, "atom")
    return train, val, atom


def _epoch_metrics(geoms, e_atom, e_values, config):
    """Per-geometry energy errors -> (energy MAE, atomization MAE)."""
    errs_e, errs_at = [], []
    for g, e in zip(geoms, e_values):
        errs_e.append(abs(e - g.e_ref))
        errs_at.append(abs((2.0 * e_atom - e) - g.e_at_ref))
    return (float(np.mean(errs_e)) * HARTREE_TO_KCAL,
            float(np.mean(errs_at)) * HARTREE_TO_KCAL)


def train(config, records=None, checkpoint_path=None, log=None):
    """Train a variant against the FCI dissociation labels.

    Returns a RunRecord; `checkpoint_path` stores the best-validation
    parameters as a versioned binary checkpoint.
    """
    functional = make_functional_for(config)
    params = functional.parameters()
    state = adam_state(params)
    train_geoms, val_geoms, atom = prepare_geometries(config, records)
    record = RunRecord(config=asdict(config))
    base_functional = scf.Functional(config.base)
    for g in train_geoms + val_geoms + [atom]:
        g.anchor(base_functional)

    best_params = {k: p.value.copy() for k, p in params.items()}
    since_best = 0
    for epoch in range(config.max_epochs):
        if config.refresh_every and epoch and \
                epoch % config.refresh_every == 0:
            for g in train_geoms + val_geoms + [atom]:
                g.anchor(functional)

        flags = []
        for p in params.values():
            p.zero_grad()
        e_atom_t = atom.step(functional, config.unroll)
        # Each geometry tape is backpropagated immediately and released so
        # only one lives at a time; the atom tape is shared across the
        # atomization terms, so its energy enters them as a detached leaf
        # whose accumulated adjoint seeds one final backward pass.
        e_atom_leaf = ad.Tensor(e_atom_t.value, requires_grad=True)
        inv_n = 1.0 / len(train_geoms)
        seed = np.asarray(inv_n)
        loss_sum = 0.0
        train_e, n_ok = [], 0
        for g in train_geoms:
            try:
                e_t = g.step(functional, config.unroll)
            except (DivergenceError, NumericalError) as exc:
                flags.append(f"{g.tag} geometry diverged: {exc}")
                g.cache = None
                g.anchor(base_functional)
                train_e.append(None)
                continue
            train_e.append(float(e_t.value))
            n_ok += 1
            term = 0.0
            if config.w_total:
                term = term + config.w_total * _abs(e_t - g.e_ref)
            if config.w_atomization:
                e_at = 2.0 * e_atom_leaf - e_t
                term = term + config.w_atomization * _abs(e_at - g.e_at_ref)
            if config.w_aux:
                term = term + config.w_aux * _aux_density_loss(g, functional)
            term.backward(seed)
            loss_sum += float(term.value) * inv_n
            del term, e_t

        penalty = (len(train_geoms) - n_ok) * DIVERGENCE_PENALTY
        if n_ok:
            if e_atom_leaf.grad is not None:
                e_atom_t.backward(e_atom_leaf.grad)
            grads = {k: p.grad for k, p in params.items()}
            try:
                adam_step(params, grads, state, config.learning_rate,
                          config.weight_decay,
                          decoupled=config.decoupled_weight_decay)
            except NumericalError as exc:
                flags.append(f"epoch {epoch} aborted: {exc}")
            loss_val = loss_sum * HARTREE_TO_KCAL
        else:
            loss_val = 0.0
        loss_val += penalty

        e_atom_val = float(e_atom_t.value)
        tr_ok = [(g, e) for g, e in zip(train_geoms, train_e)
                 if e is not None]
        if tr_ok:
            mae_e, mae_at = _epoch_metrics([g for g, _ in tr_ok],
                                           e_atom_val,
                                           [e for _, e in tr_ok], config)
        else:
            mae_e = mae_at = DIVERGENCE_PENALTY
        mae_e += penalty

        val_e = []
        for g in val_geoms:
            try:
                val_e.append(float(g.step(functional, config.unroll).value))
            except (DivergenceError, NumericalError) as exc:
                flags.append(f"{g.tag} geometry diverged: {exc}")
                g.cache = None
                g.anchor(base_functional)
                val_e.append(None)
        v_ok = [(g, e) for g, e in zip(val_geoms, val_e) if e is not None]
        if v_ok:
            val_mae, _ = _epoch_metrics([g for g, _ in v_ok], e_atom_val,
                                        [e for _, e in v_ok], config)
        else:
            val_mae = DIVERGENCE_PENALTY
        val_mae += (len(val_geoms) - len(v_ok)) * DIVERGENCE_PENALTY

        record.train_mae.append(mae_e)
        record.val_mae.append(val_mae)
        record.loss.append(loss_val)
        record.loss_components.append(
            {"total-energy": mae_e, "atomization": mae_at,
             "aux-density": 0.0})
        if flags:
            record.flags.append({"epoch": epoch, "events": flags})
        if record.epochs_to_threshold < 0 and mae_e <= config.mae_target:
            record.epochs_to_threshold = epoch + 1
        if mae_e <= config.mae_target:
            record.best_val_mae = min(record.best_val_mae, val_mae)
            record.best_epoch = epoch
            best_params = {k: p.value.copy() for k, p in params.items()}
            record.stop_reason = (
                f"train MAE reached target {config.mae_target} kcal/mol")
            break
        if log and epoch % 25 == 0:
            log(f"epoch {epoch}: train {mae_e:.3f} val {val_mae:.3f} "
                f"kcal/mol")

        if val_mae < record.best_val_mae - 1e-12:
            record.best_val_mae = val_mae
            record.best_epoch = epoch
            best_params = {k: p.value.copy() for k, p in params.items()}
            since_best = 0
        else:
            since_best += 1
            if since_best >= config.patience:
                record.stop_reason = (
                    f"early stopping: {config.patience} epochs without "
                    f"validation improvement")
                break
    else:
        record.stop_reason = f"epoch budget ({config.max_epochs}) exhausted"

    # restore the best checkpoint and evaluate with fully converged SCF
    for k, p in params.items():
        p.value = best_params[k].copy()
    for g in train_geoms + val_geoms + [atom]:
        g.cache = None
        g.anchor(functional)
    e_atom_final = atom.cache.e_total
    fin_tr = [g.cache.e_total for g in train_geoms]
    fin_val = [g.cache.e_total for g in val_geoms]
    record.final_train_mae, _ = _epoch_metrics(train_geoms, e_atom_final,
                                               fin_tr, config)
    record.final_val_mae, _ = _epoch_metrics(val_geoms, e_atom_final,
                                             fin_val, config)
    record.predictions = {
        "train": [{"S": s, "e_model": e, "e_ref": g.e_ref,
                   "converged": bool(g.cache.converged)}
                  for s, e, g in zip(config.train_s, fin_tr, train_geoms)],
        "val": [{"S": s, "e_model": e, "e_ref": g.e_ref,
                 "converged": bool(g.cache.converged)}
                for s, e, g in zip(config.val_s, fin_val, val_geoms)],
        "atom": {"e_model": e_atom_final, "e_ref": atom.e_ref}}
    if checkpoint_path:
        payload = dict(params)
        nn.save_params(checkpoint_path, payload)
        record.checkpoint = os.fspath(checkpoint_path)
    return record


def load_functional(config, checkpoint_path):
    """Rebuild a variant functional and load trained parameters into it."""
    functional = make_functional_for(config)
    nn.load_params(checkpoint_path, functional.parameters())
    return functional


# -- experiment drivers ----------------------------------------------------

def dissociation_experiment(functional, config, s_grid, records=None):
    """Predicted vs FCI energies along the H2 curve."""
    s_grid = [float(s) for s in s_grid]
    if records is None:
        records = fci.dissociation_dataset(s_grid)
    by_s = {round(r["S"], 10): r for r in records}
    atom_cfg = scf.SCFConfig(mode="unrestricted",
                             threshold=config.scf_threshold)
    atom_sys = assemble_system(np.zeros((1, 3)), config,
                               graph_seed=config.seed)
    e_atom = scf.scf_solve(atom_sys, functional, atom_cfg).e_total
    rows = []
    for s in s_grid:
        rec = by_s[round(s, 10)]
        sys_ = assemble_system(np.asarray(rec["geometry"]), config,
                               graph_seed=config.seed)
        st = scf.scf_solve(sys_, functional,
                           scf.SCFConfig(threshold=config.scf_threshold))
        err = (st.e_total - rec["e_total"]) * HARTREE_TO_KCAL
        rows.append({"S": s, "R": rec["R"], "e_model": st.e_total,
                     "e_fci": rec["e_total"],
                     "error_kcal": err,
                     "e_atomization_model":
                         (2.0 * e_atom - st.e_total) * HARTREE_TO_KCAL,
                     "converged": bool(st.converged),
                     "interpolative": bool(1.0 <= s <= 4.5)})
    return rows


def h4_experiment(functional, config, thetas, repeats=10, level_shift=0.3,
                  fci_records=None):
    """Restricted + repeated unrestricted runs over the H4 barrier."""
    thetas = [float(t) for t in thetas]
    if fci_records is None:
        fci_records = fci.h4_dataset(thetas)
    by_t = {round(r["theta"], 10): r for r in fci_records}
    pbe = scf.Functional("pbe")
    rows = []
    for theta in thetas:
        rec = by_t[round(theta, 10)]
        atoms = np.asarray(rec["geometry"])
        grid = grids.build_grid(atoms, preset=config.grid_preset)
        rcfg = scf.SCFConfig(threshold=config.scf_threshold,
                             level_shift=level_shift, max_iterations=300)
        sys_r = scf.build_system(
            atoms, grid, graph=build_graph(config.variant, grid,
                                           seed=config.seed))
        st_r = scf.scf_solve(sys_r, functional, rcfg)
        st_pbe = scf.scf_solve(sys_r, pbe, rcfg)
        runs = []
        for k in range(repeats):
            graph = build_graph(config.variant, grid,
                                seed=config.seed + 1000 + k)
            sys_u = scf.build_system(atoms, grid, graph=graph)
            ucfg = scf.SCFConfig(mode="unrestricted", breaking_angle=0.4,
                                 threshold=config.scf_threshold,
                                 max_iterations=150)
            try:
                st_u = scf.scf_solve(sys_u, functional, ucfg)
                runs.append({"seed": config.seed + 1000 + k,
                             "e_total": st_u.e_total,
                             "converged": bool(st_u.converged),
                             "residual": float(st_u.residuals[-1])})
            except (DivergenceError, NumericalError) as exc:
                runs.append({"seed": config.seed + 1000 + k,
                             "e_total": None, "converged": False,
                             "error": str(exc)})
        energies = [r["e_total"] for r in runs if r["e_total"] is not None]
        rows.append({
            "theta": theta,
            "e_restricted": st_r.e_total,
            "restricted_converged": bool(st_r.converged),
            "e_pbe": st_pbe.e_total,
            "pbe_converged": bool(st_pbe.converged),
            "e_fci_singlet": rec["e_singlet"],
            "e_fci_lowest": rec["e_lowest"],
            "fci_lowest_s_squared": rec["lowest_s_squared"],
            "unrestricted_runs": runs,
            "unrestricted_mean":
                float(np.mean(energies)) if energies else None,
            "unrestricted_min":
                float(np.min(energies)) if energies else None,
            "unrestricted_max":
                float(np.max(energies)) if energies else None,
        })
    return rows


def ablation_matrix(config, variants=None, records=None, out_dir=None,
                    log=None):
    """Train every variant with identical seeds/budget; Table-shaped rows."""
    variants = list(variants) if variants else sorted(VARIANTS)
    rows = []
    for variant in variants:
        cfg = dataclasses.replace(config, variant=variant)
        path = os.path.join(out_dir, f"{variant}.ckpt") if out_dir else None
        try:
            rec = train(cfg, records=records, checkpoint_path=path, log=log)
            rows.append({"variant": variant,
                         "epochs_to_threshold": rec.epochs_to_threshold,
                         "final_train_mae": rec.final_train_mae,
                         "final_val_mae": rec.final_val_mae,
                         "best_epoch": rec.best_epoch,
                         "stop_reason": rec.stop_reason,
                         "diverged_epochs": len(rec.flags)})
        except Exception as exc:     # row failure must not abort the matrix
            rows.append({"variant": variant, "error": str(exc)})
    return rows


def run_record_to_json(record):
    return json.dumps(asdict(record), sort_keys=True, indent=2)
