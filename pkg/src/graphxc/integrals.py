"""s-type Gaussian basis sets and analytic one-/two-electron integrals.

Covers exactly what hydrogen-only KS-DFT and FCI need: overlap, kinetic,
nuclear attraction (Boys function), dense (ss|ss) repulsion integrals, and
basis values/gradients on a quadrature grid.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import erf

from .errors import CapacityError, ConfigurationError, GeometryError
from .geometry import check_geometry

# Hydrogen s-shell data from the standard published tables; contraction
# coefficients multiply unit-normalized primitives.
BASIS_TABLES = {
    "6-31G": [
        [(18.7311370, 0.03349460), (2.8253937, 0.23472695),
         (0.6401217, 0.81375733)],
        [(0.1612778, 1.0)],
    ],
    "STO-3G": [
        [(3.42525091, 0.15432897), (0.62391373, 0.53532814),
         (0.16885540, 0.44463454)],
    ],
}


@dataclass(frozen=True)
class BasisSet:
    """Contracted s-functions: per function a center and primitive list."""

    centers: np.ndarray      # (n_basis, 3) Bohr
    exponents: tuple         # per function: tuple of alpha
    coefficients: tuple      # per function: tuple of c * N(alpha), normalized
    name: str = "custom"

    @property
    def n_basis(self):
        return len(self.exponents)


def _prim_norm(alpha):
    return (2.0 * alpha / np.pi) ** 0.75


def load_basis(name, atom_positions):
    """Build the named hydrogen basis on the given geometry (Bohr)."""
    name = name.upper()
    if name not in BASIS_TABLES:
        raise ConfigurationError(
            f"unknown basis {name!r}; available: {sorted(BASIS_TABLES)}")
    pos = check_geometry(atom_positions)
    centers, exps, coefs = [], [], []
    for a in pos:
        for shell in BASIS_TABLES[name]:
            alphas = tuple(alpha for alpha, _ in shell)
            raw = np.array([c * _prim_norm(alpha) for alpha, c in shell])
            # renormalize the contracted function
            s = 0.0
            for ai, ci in zip(alphas, raw):
                for aj, cj in zip(alphas, raw):
                    s += ci * cj * (np.pi / (ai + aj)) ** 1.5
            centers.append(a)
            exps.append(alphas)
            coefs.append(tuple(raw / np.sqrt(s)))
    return BasisSet(centers=np.array(centers), exponents=tuple(exps),
                    coefficients=tuple(coefs), name=name)


def boys_f0(x):
    """F0(x) = (1/2) sqrt(pi/x) erf(sqrt(x)), series-stable near zero."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x < 0.03
    xs = x[small]
    # F0(x) = sum_k (-x)^k / (k! (2k+1))
    term = np.ones_like(xs)
    acc = np.ones_like(xs)
    for k in range(1, 12):
        term = term * (-xs) / k
        acc = acc + term / (2 * k + 1)
    out[small] = acc
    xl = x[~small]
    out[~small] = 0.5 * np.sqrt(np.pi / xl) * erf(np.sqrt(xl))
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class IntegralSet:
    S: np.ndarray
    T: np.ndarray
    V: np.ndarray
    eri: np.ndarray
    E_nn: float

    @property
    def n_basis(self):
        return len(self.S)

    @property
    def h_core(self):
        return self.T + self.V


def nuclear_repulsion(atom_positions, charges=None):
    pos = check_geometry(atom_positions)
    z = np.ones(len(pos)) if charges is None else np.asarray(charges)
    e = 0.0
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            e += z[i] * z[j] / np.linalg.norm(pos[i] - pos[j])
    return e


def one_electron(basis, atom_positions, charges=None):
    """Overlap, kinetic, and nuclear-attraction matrices plus E_nn."""
    pos = check_geometry(atom_positions)
    z = np.ones(len(pos)) if charges is None else np.asarray(charges)
    n = basis.n_basis
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for mu in range(n):
        for nu in range(mu, n):
            a_mu, a_nu = basis.centers[mu], basis.centers[nu]
            ab2 = float(np.sum((a_mu - a_nu) ** 2))
            s = t = v = 0.0
            for alpha, ca in zip(basis.exponents[mu], basis.coefficients[mu]):
                for beta, cb in zip(basis.exponents[nu],
                                    basis.coefficients[nu]):
                    p = alpha + beta
                    mu_ab = alpha * beta / p
                    kab = np.exp(-mu_ab * ab2)
                    s_prim = (np.pi / p) ** 1.5 * kab
                    s += ca * cb * s_prim
                    t += ca * cb * mu_ab * (3.0 - 2.0 * mu_ab * ab2) * s_prim
                    center = (alpha * a_mu + beta * a_nu) / p
                    for zc, rc in zip(z, pos):
                        pc2 = float(np.sum((center - rc) ** 2))
                        v -= zc * 2.0 * np.pi / p * kab * boys_f0(p * pc2) \
                            * ca * cb
            S[mu, nu] = S[nu, mu] = s
            T[mu, nu] = T[nu, mu] = t
            V[mu, nu] = V[nu, mu] = v
    return S, T, V, nuclear_repulsion(pos, z)


def two_electron(basis):
    """Dense chemists'-notation (mu nu | lam sig) array for s-functions."""
    n = basis.n_basis
    if n > 32:
        raise CapacityError(f"dense ERI storage limited to 32 functions, "
                            f"got {n}")
    eri = np.zeros((n, n, n, n))
    pair_idx = [(mu, nu) for mu in range(n) for nu in range(mu + 1)]
    for pi, (mu, nu) in enumerate(pair_idx):
        for lam, sig in pair_idx[:pi + 1]:
            val = _eri_contracted(basis, mu, nu, lam, sig)
            for (i, j, k, l) in ((mu, nu, lam, sig), (nu, mu, lam, sig),
                                 (mu, nu, sig, lam), (nu, mu, sig, lam),
                                 (lam, sig, mu, nu), (sig, lam, mu, nu),
                                 (lam, sig, nu, mu), (sig, lam, nu, mu)):
                eri[i, j, k, l] = val
    return eri


def _eri_contracted(basis, mu, nu, lam, sig):
    a_mu, a_nu = basis.centers[mu], basis.centers[nu]
    a_lam, a_sig = basis.centers[lam], basis.centers[sig]
    ab2 = float(np.sum((a_mu - a_nu) ** 2))
    cd2 = float(np.sum((a_lam - a_sig) ** 2))
    val = 0.0
    for alpha, ca in zip(basis.exponents[mu], basis.coefficients[mu]):
        for beta, cb in zip(basis.exponents[nu], basis.coefficients[nu]):
            p = alpha + beta
            kab = np.exp(-alpha * beta / p * ab2)
            rp = (alpha * a_mu + beta * a_nu) / p
            for gamma, cc in zip(basis.exponents[lam],
                                 basis.coefficients[lam]):
                for delta, cd in zip(basis.exponents[sig],
                                     basis.coefficients[sig]):
                    q = gamma + delta
                    kcd = np.exp(-gamma * delta / q * cd2)
                    rq = (gamma * a_lam + delta * a_sig) / q
                    rho = p * q / (p + q)
                    pq2 = float(np.sum((rp - rq) ** 2))
                    val += (ca * cb * cc * cd
                            * 2.0 * np.pi ** 2.5
                            / (p * q * np.sqrt(p + q))
                            * kab * kcd * boys_f0(rho * pq2))
    return val


def build_integrals(basis, atom_positions, charges=None):
    S, T, V, e_nn = one_electron(basis, atom_positions, charges)
    if np.linalg.eigvalsh(S).min() <= 0:
        raise GeometryError("overlap matrix not positive definite")
    return IntegralSet(S=S, T=T, V=V, eri=two_electron(basis), E_nn=e_nn)


def basis_on_grid(basis, grid):
    """Values and Cartesian gradients of each basis function at grid points.

    Returns (phi, dphi): shapes (n_points, n_basis) and (n_points, 3,
    n_basis).
    """
    pts = grid.points
    phi = np.zeros((len(pts), basis.n_basis))
    dphi = np.zeros((len(pts), 3, basis.n_basis))
    for mu in range(basis.n_basis):
        dr = pts - basis.centers[mu]
        r2 = np.sum(dr ** 2, axis=1)
        for alpha, c in zip(basis.exponents[mu], basis.coefficients[mu]):
            g = c * np.exp(-alpha * r2)
            phi[:, mu] += g
            dphi[:, :, mu] += (-2.0 * alpha) * dr * g[:, None]
    return phi, dphi


def density_on_grid(dm, phi):
    """n(g) = sum_{mu nu} D_mu_nu phi_mu(g) phi_nu(g) for a density matrix."""
    return np.einsum("gm,mn,gn->g", phi, dm, phi, optimize=True)
