import numpy as np
import pytest
from scipy.integrate import quad

from graphxc.errors import CapacityError, ConfigurationError
from graphxc.geometry import h2_geometry
from graphxc.grids import build_grid
from graphxc.integrals import (BasisSet, basis_on_grid, boys_f0,
                               build_integrals, density_on_grid, load_basis,
                               one_electron, two_electron)


def single_primitive(alpha, center=(0.0, 0.0, 0.0)):
    n = (2 * alpha / np.pi) ** 0.75
    return BasisSet(centers=np.array([center]), exponents=((alpha,),),
                    coefficients=((n,),))


class TestLoadBasis:
    def test_h2_631g_count(self):
        basis = load_basis("6-31G", h2_geometry(1.4))
        assert basis.n_basis == 4

    def test_h_sto3g_count(self):
        basis = load_basis("STO-3G", np.zeros((1, 3)))
        assert basis.n_basis == 1

    def test_h4_631g_count(self):
        from graphxc.geometry import h4_planar
        basis = load_basis("6-31G", h4_planar(45.0))
        assert basis.n_basis == 8

    def test_contracted_normalization(self):
        for name in ("6-31G", "STO-3G"):
            basis = load_basis(name, np.zeros((1, 3)))
            S, _, _, _ = one_electron(basis, np.zeros((1, 3)))
            assert np.allclose(np.diag(S), 1.0, atol=1e-10)

    def test_unknown_basis(self):
        with pytest.raises(ConfigurationError):
            load_basis("cc-pVDZ", np.zeros((1, 3)))


class TestBoys:
    def test_at_zero(self):
        assert boys_f0(0.0) == pytest.approx(1.0, abs=1e-14)

    def test_asymptote(self):
        x = 5e4
        assert boys_f0(x) == pytest.approx(0.5 * np.sqrt(np.pi / x),
                                           rel=1e-12)

    def test_against_adaptive_quadrature(self):
        # F0(x) = int_0^1 exp(-x t^2) dt
        for x in (1e-8, 1e-3, 0.029, 0.031, 1.0, 4.7, 30.0):
            ref, err = quad(lambda t: np.exp(-x * t * t), 0.0, 1.0,
                            epsabs=1e-15, epsrel=1e-14)
            assert boys_f0(x) == pytest.approx(ref, rel=1e-12)


class TestOneElectron:
    def test_single_primitive_s_and_t(self):
        alpha = 1.3
        basis = single_primitive(alpha)
        S, T, _, _ = one_electron(basis, np.zeros((1, 3)))
        assert S[0, 0] == pytest.approx(1.0, abs=1e-12)
        assert T[0, 0] == pytest.approx(1.5 * alpha, rel=1e-12)

    def test_h2_nuclear_repulsion(self):
        _, _, _, e_nn = one_electron(load_basis("STO-3G", h2_geometry(1.4)),
                                     h2_geometry(1.4))
        assert e_nn == pytest.approx(1.0 / 1.4, rel=1e-12)

    def test_overlap_against_grid_quadrature(self):
        pos = h2_geometry(1.4)
        basis = load_basis("6-31G", pos)
        S, _, _, _ = one_electron(basis, pos)
        grid = build_grid(pos, preset="paper-like")
        phi, _ = basis_on_grid(basis, grid)
        S_quad = phi.T @ (grid.weights[:, None] * phi)
        assert np.allclose(S_quad, S, atol=1e-6)

    def test_hydrogen_atom_virial_scale(self):
        # exact H-atom ground state in a near-complete even-tempered set
        alphas = [0.001 * 2.2 ** k for k in range(24)]
        n = (2 * np.array(alphas) / np.pi) ** 0.75
        basis = BasisSet(centers=np.zeros((len(alphas), 3)),
                         exponents=tuple((a,) for a in alphas),
                         coefficients=tuple((c,) for c in n))
        S, T, V, _ = one_electron(basis, np.zeros((1, 3)))
        from scipy.linalg import eigh
        w = eigh(T + V, S, eigvals_only=True)
        assert w[0] == pytest.approx(-0.5, abs=1e-6)


class TestTwoElectron:
    def test_single_primitive_closed_form(self):
        # (aa|aa) for one normalized primitive = 2 sqrt(alpha / pi)
        alpha = 0.9
        eri = two_electron(single_primitive(alpha))
        assert eri[0, 0, 0, 0] == pytest.approx(2 * np.sqrt(alpha / np.pi),
                                                rel=1e-12)

    def test_single_primitive_monte_carlo(self):
        alpha = 1.0
        eri = two_electron(single_primitive(alpha))
        rng = np.random.default_rng(7)
        m = 400_000
        # importance-sample both electrons from |phi|^2 (normal, var 1/(4a))
        r1 = rng.normal(scale=np.sqrt(0.25 / alpha), size=(m, 3))
        r2 = rng.normal(scale=np.sqrt(0.25 / alpha), size=(m, 3))
        inv = 1.0 / np.linalg.norm(r1 - r2, axis=1)
        est, sem = inv.mean(), inv.std() / np.sqrt(m)
        assert abs(est - eri[0, 0, 0, 0]) < max(5 * sem, 1e-4)

    def test_symmetries_exact(self):
        pos = h2_geometry(1.4)
        eri = two_electron(load_basis("6-31G", pos))
        assert np.array_equal(eri, eri.transpose(1, 0, 2, 3))
        assert np.array_equal(eri, eri.transpose(0, 1, 3, 2))
        assert np.array_equal(eri, eri.transpose(2, 3, 0, 1))

    def test_h2_sto3g_against_textbook_recipe(self):
        # independent scalar implementation, Szabo-Ostlund appendix style
        from scipy.special import erf as _erf

        def f0(t):
            return 1.0 if t < 1e-12 else 0.5 * np.sqrt(np.pi / t) \
                * _erf(np.sqrt(t))

        pos = h2_geometry(1.4)
        basis = load_basis("STO-3G", pos)
        n = basis.n_basis

        def eri_ref(i, j, k, l):
            total = 0.0
            for a, ca in zip(basis.exponents[i], basis.coefficients[i]):
                for b, cb in zip(basis.exponents[j], basis.coefficients[j]):
                    for c, cc in zip(basis.exponents[k],
                                     basis.coefficients[k]):
                        for d, cd in zip(basis.exponents[l],
                                         basis.coefficients[l]):
                            p, q = a + b, c + d
                            rp = (a * basis.centers[i] + b * basis.centers[j]) / p
                            rq = (c * basis.centers[k] + d * basis.centers[l]) / q
                            kab = np.exp(-a * b / p * np.sum(
                                (basis.centers[i] - basis.centers[j]) ** 2))
                            kcd = np.exp(-c * d / q * np.sum(
                                (basis.centers[k] - basis.centers[l]) ** 2))
                            total += (ca * cb * cc * cd * kab * kcd
                                      * 2 * np.pi ** 2.5
                                      / (p * q * np.sqrt(p + q))
                                      * f0(p * q / (p + q)
                                           * np.sum((rp - rq) ** 2)))
            return total

        eri = two_electron(basis)
        for idx in np.ndindex(n, n, n, n):
            assert eri[idx] == pytest.approx(eri_ref(*idx), rel=1e-10)

    def test_capacity_limit(self):
        big = BasisSet(centers=np.zeros((33, 3)),
                       exponents=tuple(((1.0,),) * 33),
                       coefficients=tuple(((1.0,),) * 33))
        with pytest.raises(CapacityError):
            two_electron(big)


class TestBasisOnGrid:
    def test_electron_count_vs_trace(self):
        pos = np.zeros((1, 3))
        basis = load_basis("6-31G", pos)
        ints = build_integrals(basis, pos)
        from scipy.linalg import eigh
        w, c = eigh(ints.h_core, ints.S)
        dm = np.outer(c[:, 0], c[:, 0])  # 1 electron in the lowest orbital
        assert np.trace(dm @ ints.S) == pytest.approx(1.0, abs=1e-12)
        grid = build_grid(pos, preset="paper-like")
        phi, _ = basis_on_grid(basis, grid)
        n_g = density_on_grid(dm, phi)
        assert grid.integrate(n_g) == pytest.approx(1.0, abs=1e-6)
        assert np.all(n_g >= -1e-14)

    def test_gradient_zero_at_center(self):
        basis = load_basis("STO-3G", np.zeros((1, 3)))
        grid_like = type("G", (), {"points": np.zeros((1, 3))})
        _, dphi = basis_on_grid(basis, grid_like)
        assert np.allclose(dphi, 0.0)

    def test_gradient_matches_fd(self):
        basis = load_basis("6-31G", h2_geometry(1.4))
        pts = np.array([[0.3, -0.2, 0.5]])
        h = 1e-6
        g = type("G", (), {"points": pts})
        _, dphi = basis_on_grid(basis, g)
        for ax in range(3):
            bumped = pts.copy()
            bumped[0, ax] += h
            pp, _ = basis_on_grid(basis, type("G", (), {"points": bumped}))
            bumped[0, ax] -= 2 * h
            pm, _ = basis_on_grid(basis, type("G", (), {"points": bumped}))
            fd = (pp - pm) / (2 * h)
            assert np.allclose(dphi[0, ax], fd[0], atol=1e-8)
