"""Tests for the Kohn-Sham SCF solver and its differentiable path."""

import math

import numpy as np
import pytest

from graphxc import autodiff as ad
from graphxc import functionals as fx
from graphxc import geometry as geo
from graphxc import graph as gg
from graphxc import grids, scf
from graphxc.errors import ConfigurationError, DivergenceError


def coarse_system(atoms, graph_seed=None):
    grid = grids.build_grid(atoms, preset="coarse")
    graph = gg.assemble(grid, seed=graph_seed) \
        if graph_seed is not None else None
    return scf.build_system(atoms, grid, graph=graph)


# -- independent textbook RKS-LDA oracle -----------------------------------
# Closed-shell fixed-point loop with damping, scalar XC evaluation, and a
# numerically differentiated v_xc; shares only the integrals and grid.

def _eps_unpol(n):
    if n <= 0:
        return 0.0
    ex = -0.75 * (3.0 / math.pi) ** (1 / 3) * n ** (1 / 3)
    rs = (3.0 / (4.0 * math.pi * n)) ** (1 / 3)
    a, a1, b1, b2, b3, b4 = (0.031091, 0.21370, 7.5957, 3.5876,
                             1.6382, 0.49294)
    q1 = 2 * a * (b1 * math.sqrt(rs) + b2 * rs + b3 * rs ** 1.5
                  + b4 * rs ** 2)
    ec = -2 * a * (1 + a1 * rs) * math.log(1 + 1.0 / q1)
    return ex + ec


def _vxc_unpol(n, h=1e-7):
    if n <= h:
        return 0.0
    return ((n + h) * _eps_unpol(n + h)
            - (n - h) * _eps_unpol(n - h)) / (2 * h)


def textbook_rks_lda(system):
    ints = system.integrals
    s, h_core = ints.S, ints.h_core
    w, v = np.linalg.eigh(s)
    x = v @ np.diag(w ** -0.5) @ v.T
    nb = s.shape[0]
    nocc = system.n_electron // 2
    phi = system.phi
    wts = system.grid.weights
    d = np.zeros((nb, nb))
    e_old = 0.0
    for _ in range(400):
        n_g = np.einsum("gm,mn,gn->g", phi, d, phi)
        n_g = np.maximum(n_g, 0.0)
        vxc = np.array([_vxc_unpol(n) for n in n_g])
        v_mat = np.einsum("g,gm,gn->mn", wts * vxc, phi, phi)
        j = np.einsum("mnls,ls->mn", ints.eri, d)
        f = h_core + j + v_mat
        fp = x.T @ f @ x
        _, c = np.linalg.eigh(fp)
        c = x @ c
        d_new = 2.0 * c[:, :nocc] @ c[:, :nocc].T
        d = 0.5 * d + 0.5 * d_new
        e_xc = float(np.sum(wts * np.array(
            [_eps_unpol(n) for n in n_g]) * n_g))
        e = float(np.einsum("mn,mn->", d, h_core)
                  + 0.5 * np.einsum("mn,mn->", d, j) + e_xc + ints.E_nn)
        if abs(e - e_old) < 1e-11:
            break
        e_old = e
    # final consistent energy
    n_g = np.maximum(np.einsum("gm,mn,gn->g", phi, d, phi), 0.0)
    j = np.einsum("mnls,ls->mn", ints.eri, d)
    e_xc = float(np.sum(wts * np.array(
        [_eps_unpol(n) for n in n_g]) * n_g))
    return float(np.einsum("mn,mn->", d, h_core)
                 + 0.5 * np.einsum("mn,mn->", d, j) + e_xc + ints.E_nn)


class TestSCFBasics:

    def test_h_atom_uks_bounds_and_reproducibility(self):
        sys_ = coarse_system(np.zeros((1, 3)))
        cfg = scf.SCFConfig(mode="unrestricted")
        a = scf.scf_solve(sys_, scf.Functional("pw92"), cfg)
        b = scf.scf_solve(sys_, scf.Functional("pw92"), cfg)
        assert a.converged
        assert -1.0 < a.e_total < 0.0
        assert a.e_total == b.e_total          # bitwise reproducible

    def test_h2_matches_textbook_rks_lda(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))
        st = scf.scf_solve(sys_, scf.Functional("pw92"))
        ref = textbook_rks_lda(sys_)
        assert st.converged
        assert st.e_total == pytest.approx(ref, abs=1e-6)

    def test_energy_components_sum(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))
        st = scf.scf_solve(sys_, scf.Functional("pbe"))
        parts = sum(v for k, v in st.components.items() if k != "total")
        assert parts == st.components["total"]
        assert st.e_total == st.components["total"]

    def test_restricted_zeta_zero(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))
        st = scf.scf_solve(sys_, scf.Functional("pw92"))
        np.testing.assert_array_equal(st.d_up, st.d_dn)

    def test_electron_count(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))
        st = scf.scf_solve(sys_, scf.Functional("pw92"))
        count = np.einsum("mn,mn->", st.d_up + st.d_dn, sys_.integrals.S)
        assert count == pytest.approx(2.0, abs=1e-8)

    def test_converged_stationarity(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))
        cfg = scf.SCFConfig(threshold=1e-7)
        st = scf.scf_solve(sys_, scf.Functional("pw92"), cfg)
        more = scf.scf_solve(sys_, scf.Functional("pw92"),
                             scf.SCFConfig(max_iterations=1),
                             d_init=(st.d_up, st.d_dn))
        assert abs(more.e_total - st.e_total) < 10 * cfg.threshold

    def test_restricted_odd_electrons_rejected(self):
        sys_ = coarse_system(np.zeros((1, 3)))
        with pytest.raises(ConfigurationError):
            scf.scf_solve(sys_, scf.Functional("pw92"),
                          scf.SCFConfig(mode="restricted"))

    def test_divergence_error(self):
        sys_ = coarse_system(geo.h2_geometry(1.4), graph_seed=0)
        f = scf.make_functional("exphormer-pw92", seed=0)
        f.net.readout.bias.value = np.array([1.0])
        f.beta.value = np.array(1e7)
        with pytest.raises(DivergenceError):
            scf.scf_solve(sys_, f)

    def test_nonconvergence_is_data(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))
        st = scf.scf_solve(sys_, scf.Functional("pw92"),
                           scf.SCFConfig(max_iterations=2))
        assert not st.converged
        assert len(st.residuals) == 2
        assert np.isfinite(st.e_total)


class TestEnhancedFunctional:

    def test_smooth_start_identical_energy(self):
        sys_ = coarse_system(geo.h2_geometry(1.4), graph_seed=0)
        base = scf.scf_solve(sys_, scf.Functional("pw92"))
        enh = scf.scf_solve(sys_, scf.make_functional("exphormer-pw92"))
        assert abs(enh.e_total - base.e_total) < 1e-10

    def test_smooth_start_identical_trajectory(self):
        sys_ = coarse_system(geo.h2_geometry(1.4), graph_seed=0)
        base = scf.scf_solve(sys_, scf.Functional("pw92"))
        enh = scf.scf_solve(sys_, scf.make_functional("exphormer-pw92"))
        assert len(base.residuals) == len(enh.residuals)
        np.testing.assert_allclose(base.residuals, enh.residuals,
                                   rtol=0, atol=1e-10)

    def test_graph_required(self):
        sys_ = coarse_system(geo.h2_geometry(1.4))   # no graph attached
        with pytest.raises(ConfigurationError):
            scf.scf_solve(sys_, scf.make_functional("exphormer-pw92"))


class TestAtomization:

    def test_single_atom_self_difference_zero(self):
        sys_ = coarse_system(np.zeros((1, 3)))
        st = scf.scf_solve(sys_, scf.Functional("pw92"),
                           scf.SCFConfig(mode="unrestricted"))
        e, ok = scf.atomization_energy(st, [st])
        assert e == 0.0 and ok

    def test_bound_molecule_positive(self):
        mol = scf.scf_solve(coarse_system(geo.h2_geometry(1.4)),
                            scf.Functional("pw92"))
        atom = scf.scf_solve(coarse_system(np.zeros((1, 3))),
                             scf.Functional("pw92"),
                             scf.SCFConfig(mode="unrestricted"))
        e, ok = scf.atomization_energy(mol, [atom, atom])
        assert ok and e > 0.0

    def test_nonconverged_flagged(self):
        mol = scf.scf_solve(coarse_system(geo.h2_geometry(1.4)),
                            scf.Functional("pw92"),
                            scf.SCFConfig(max_iterations=1))
        atom = scf.scf_solve(coarse_system(np.zeros((1, 3))),
                             scf.Functional("pw92"),
                             scf.SCFConfig(mode="unrestricted"))
        _, ok = scf.atomization_energy(mol, [atom, atom])
        assert not ok


class TestSymmetryBreaking:

    def test_zero_angle_unchanged(self):
        c = np.random.default_rng(0).normal(size=(4, 4))
        out = scf.symmetry_breaking_guess(c, 1, 0.0)
        np.testing.assert_array_equal(out, c)

    def test_guess_idempotency(self):
        sys_ = coarse_system(geo.h2_geometry(7.0))
        ints = sys_.integrals
        st = scf.scf_solve(sys_, scf.Functional("pw92"))
        c = scf.symmetry_breaking_guess(st.c_up, 1, 0.4)
        d = c[:, :1] @ c[:, :1].T
        np.testing.assert_allclose(d @ ints.S @ d, d, atol=1e-10)

    def test_uks_below_rks_at_stretched_h2(self):
        sys_ = coarse_system(geo.h2_geometry(7.0))
        rks = scf.scf_solve(sys_, scf.Functional("pw92"))
        uks = scf.scf_solve(sys_, scf.Functional("pw92"),
                            scf.SCFConfig(mode="unrestricted",
                                          breaking_angle=0.5))
        assert rks.converged and uks.converged
        assert uks.e_total < rks.e_total - 1e-3


class TestDifferentiableRun:

    def setup_method(self):
        self.sys = coarse_system(geo.h2_geometry(1.4), graph_seed=0)

    def test_matches_scf_energy(self):
        f = scf.Functional("pw92")
        st = scf.scf_solve(self.sys, f, scf.SCFConfig(threshold=1e-9))
        e_t, _ = scf.differentiable_run(self.sys, f,
                                        scf.SCFConfig(unroll=2),
                                        warm_start=st)
        assert abs(e_t.item() - st.e_total) < 1e-7

    def test_beta_gradient_at_zero(self):
        # with beta = 0 and a nonzero readout, dE/dbeta at the converged
        # density is the quadrature contraction of eps * F * n
        f = scf.make_functional("exphormer-pw92", seed=3)
        f.net.readout.weight.value = np.random.default_rng(4).normal(
            scale=0.05, size=(32, 1))
        st = scf.scf_solve(self.sys, f, scf.SCFConfig(threshold=1e-10))
        assert st.converged
        e_t, _ = scf.differentiable_run(self.sys, f, warm_start=st)
        for p in f.parameters().values():
            p.zero_grad()
        e_t.backward()

        phi = self.sys.phi
        d_tot = st.d_up + st.d_dn
        n_v = np.maximum(np.einsum("gm,mn,gn->g", phi, d_tot, phi), 0.0)
        eps = fx.pw92_lda(0.5 * n_v, 0.5 * n_v).value
        zeta = np.zeros_like(n_v)
        f_exp = f.net.forward(n_v, zeta, self.sys.graph).value
        expected = float(np.sum(self.sys.grid.weights * eps * f_exp * n_v))
        assert float(f.beta.grad) == pytest.approx(expected, rel=1e-6)

    def test_parameter_gradients_match_fd(self):
        f = scf.make_functional("exphormer-pw92", seed=0)
        rng = np.random.default_rng(1)
        f.net.readout.weight.value = rng.normal(scale=0.02, size=(32, 1))
        f.net.readout.bias.value = np.array([0.01])
        f.beta.value = np.array(0.05)
        st = scf.scf_solve(self.sys, f, scf.SCFConfig(threshold=1e-10))
        assert st.converged
        cfg = scf.SCFConfig(unroll=1)
        e_t, _ = scf.differentiable_run(self.sys, f, cfg, warm_start=st)
        params = f.parameters()
        for p in params.values():
            p.zero_grad()
        e_t.backward()
        h = 1e-4
        for name in ("beta", "readout.weight", "layer1.w4", "layer0.w2",
                     "globals"):
            p = params[name]
            idx = tuple(rng.integers(0, s) for s in p.value.shape)
            tape = p.grad[idx] if p.value.shape else float(p.grad)
            orig = p.value[idx] if p.value.shape else float(p.value)

            def setv(v, p=p, idx=idx):
                if p.value.shape:
                    p.value[idx] = v
                else:
                    p.value = np.array(v)

            setv(orig + h)
            ep = scf.differentiable_run(self.sys, f, cfg,
                                        warm_start=st)[0].item()
            setv(orig - h)
            em = scf.differentiable_run(self.sys, f, cfg,
                                        warm_start=st)[0].item()
            setv(orig)
            fd = (ep - em) / (2 * h)
            assert fd == pytest.approx(tape, rel=1e-4, abs=1e-8)

    def test_determinism(self):
        f = scf.make_functional("exphormer-pw92", seed=5)
        f.net.readout.weight.value = np.random.default_rng(6).normal(
            scale=0.02, size=(32, 1))
        a, _ = scf.differentiable_run(self.sys, f)
        b, _ = scf.differentiable_run(self.sys, f)
        assert a.item() == b.item()
