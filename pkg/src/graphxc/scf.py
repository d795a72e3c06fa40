"""Restricted / unrestricted Kohn-Sham SCF with pluggable XC functionals.

The production loop runs in plain numpy with DIIS acceleration; the XC
potential is obtained each iteration as the tape gradient of E_xc with
respect to the spin density matrices, so any functional expressible on the
tape (including the learned enhancement) plugs in unchanged.

`differentiable_run` re-executes a fixed number of damped iterations on the
tape from a converged warm start and returns the total energy as a tensor
with a gradient path to the functional parameters.
"""

import dataclasses
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import autodiff as ad
from . import functionals as fx
from .errors import (ConfigurationError, DivergenceError, NumericalError)
from .integrals import basis_on_grid, build_integrals, load_basis

DIVERGENCE_LIMIT = 1e3
DIIS_START = 0.1        # Hartree


@dataclass
class SCFConfig:
    mode: str = "restricted"            # restricted | unrestricted
    max_iterations: int = 150
    threshold: float = 1e-7
    diis_depth: int = 8
    mixing: float = 0.3
    unroll: int = 1
    breaking_angle: float = 0.0         # HOMO/LUMO mixing, radians
    level_shift: float = 0.0            # virtual-orbital shift, Hartree

    def __post_init__(self):
        if self.mode not in ("restricted", "unrestricted"):
            raise ConfigurationError(f"unknown SCF mode {self.mode!r}")
        if self.threshold <= 0:
            raise ConfigurationError("convergence threshold must be > 0")
        if self.max_iterations < 1 or self.unroll < 1:
            raise ConfigurationError("iteration counts must be >= 1")


@dataclass
class SCFState:
    d_up: np.ndarray
    d_dn: np.ndarray
    c_up: np.ndarray
    c_dn: np.ndarray
    eps_up: np.ndarray
    eps_dn: np.ndarray
    e_total: float
    components: dict
    residuals: list
    converged: bool
    n_up: int
    n_dn: int


@dataclass
class System:
    """Geometry plus everything precomputable for one SCF problem."""

    atoms: np.ndarray
    basis: object
    integrals: object
    grid: object
    phi: np.ndarray
    dphi: np.ndarray
    graph: object = None
    x_mat: np.ndarray = field(init=False)

    def __post_init__(self):
        s = self.integrals.S
        w, v = np.linalg.eigh(s)
        if w.min() <= 1e-10:
            raise NumericalError("overlap matrix is numerically singular")
        self.x_mat = v @ np.diag(w ** -0.5) @ v.T

    @property
    def n_electron(self):
        return len(self.atoms)           # hydrogen only, neutral


def build_system(atoms, grid, basis_name="6-31g", graph=None):
    basis = load_basis(basis_name, atoms)
    ints = build_integrals(basis, atoms)
    phi, dphi = basis_on_grid(basis, grid)
    return System(atoms=np.asarray(atoms, float), basis=basis,
                  integrals=ints, grid=grid, phi=phi, dphi=dphi,
                  graph=graph)


# -- functional dispatch ---------------------------------------------------

class Functional:
    """Base DFA plus optional learned enhancement.

    kind: 'pw92' or 'pbe'. When `net` is given, the pointwise energy is
    scaled by (1 + beta * F) with F the network output on the grid.
    """

    def __init__(self, kind="pw92", net=None, beta=None):
        if kind not in ("pw92", "pbe"):
            raise ConfigurationError(f"unknown base functional {kind!r}")
        self.kind = kind
        self.net = net
        self.beta = beta if beta is not None else (
            ad.parameter(0.0) if net is not None else None)

    def parameters(self):
        out = {}
        if self.net is not None:
            out.update(self.net.parameters())
            out["beta"] = self.beta
        return out


def make_functional(name, seed=0, **net_kwargs):
    """Build a functional from its CLI name, e.g. 'exphormer-pw92'."""
    from . import nn
    if name in ("pw92", "pbe"):
        return Functional(name)
    if name.startswith("exphormer-"):
        base = name[len("exphormer-"):]
        return Functional(base, net=nn.ExphormerNet(seed=seed, **net_kwargs))
    raise ConfigurationError(f"unknown functional {name!r}")


def _grid_density(phi, dphi, d, need_gradient):
    """Density (and gradient magnitude) per grid point, on the tape."""
    half = ad.matmul(phi, d)
    n = (half * phi).sum(axis=1)
    n = ad.where_mask(n.value > 0.0, n, 0.0)
    if not need_gradient:
        return n, None
    gsq = None
    comps = []
    for a in range(3):
        ga = 2.0 * (ad.matmul(dphi[a], d) * phi).sum(axis=1)
        comps.append(ga)
        term = ga * ga
        gsq = term if gsq is None else gsq + term
    gnorm = ad.sqrt(gsq + 1e-60)
    return n, (comps, gnorm)


def _xc_on_tape(functional, system, d_up_t, d_dn_t):
    """E_xc (and the pointwise eps) for tape density matrices."""
    phi = ad.Tensor(system.phi)
    dphi = [ad.Tensor(system.dphi[:, a, :]) for a in range(3)]
    need_grad = functional.kind == "pbe"
    n_up, gu = _grid_density(phi, dphi, d_up_t, need_grad)
    n_dn, gd = _grid_density(phi, dphi, d_dn_t, need_grad)
    n_tot = n_up + n_dn
    if functional.kind == "pw92":
        eps = fx.pw92_lda(n_up, n_dn)
    else:
        comps = [u + v for u, v in zip(gu[0], gd[0])]
        gsq = comps[0] * comps[0] + comps[1] * comps[1] \
            + comps[2] * comps[2]
        g_tot = ad.sqrt(gsq + 1e-60)
        eps = fx.pbe(n_up, n_dn, gu[1], gd[1], g_tot)
    if functional.net is not None:
        if system.graph is None:
            raise ConfigurationError(
                "enhanced functional needs an electron graph")
        safe_n = np.where(n_tot.value > fx.DENSITY_FLOOR, n_tot.value, 1.0)
        zeta = (n_up - n_dn) / ad.Tensor(safe_n)
        f_exp = functional.net.forward(n_tot, zeta, system.graph)
        eps = fx.enhance(eps, f_exp, functional.beta)
    e_xc = fx.xc_energy(eps, n_tot, system.grid.weights)
    return eps, e_xc


def _xc_potential(functional, system, d_up, d_dn):
    """V_xc per spin as the tape gradient of E_xc, plus the energy value.

    The functional's own parameters are detached for the duration so this
    never touches their accumulated gradients (it is called inside forward
    passes of the training loop).
    """
    params = list(functional.parameters().values())
    flags = [p.requires_grad for p in params]
    for p in params:
        p.requires_grad = False
    try:
        tu, td = ad.parameter(d_up), ad.parameter(d_dn)
        _, e_xc = _xc_on_tape(functional, system, tu, td)
        e_xc.backward()
    finally:
        for p, flag in zip(params, flags):
            p.requires_grad = flag
    v_up = 0.5 * (tu.grad + tu.grad.T)
    v_dn = 0.5 * (td.grad + td.grad.T)
    return v_up, v_dn, float(e_xc.value)


def _coulomb(eri, d_tot):
    return np.einsum("mnls,ls->mn", eri, d_tot)


def _occupations(n_electron, mode):
    if mode == "restricted":
        if n_electron % 2:
            raise ConfigurationError(
                "restricted mode needs an even electron count")
        return n_electron // 2, n_electron // 2
    n_up = (n_electron + 1) // 2
    return n_up, n_electron - n_up


def _density_from_fock(f, x, nocc, shift=0.0, proj=None):
    fp = x.T @ f @ x
    if shift and proj is not None:
        # level shift: push the virtual space up by `shift` Hartree
        fp = fp + shift * (np.eye(len(fp)) - proj)
    w, v = np.linalg.eigh(fp)
    c = x @ v
    d = c[:, :nocc] @ c[:, :nocc].T
    return d, c, w


def _energy_components(ints, d_up, d_dn, e_xc):
    d_tot = d_up + d_dn
    t = float(np.einsum("mn,mn->", d_tot, ints.T))
    v = float(np.einsum("mn,mn->", d_tot, ints.V))
    j = _coulomb(ints.eri, d_tot)
    e_h = 0.5 * float(np.einsum("mn,mn->", d_tot, j))
    comps = {"kinetic": t, "external": v, "hartree": e_h,
             "xc": e_xc, "nuclear": ints.E_nn}
    comps["total"] = t + v + e_h + e_xc + ints.E_nn
    return comps, j


class _DIIS:
    """Pulay mixing over stacked spin Fock matrices."""

    def __init__(self, depth):
        self.depth = depth
        self.focks = []
        self.errors = []

    def step(self, fock, error):
        self.focks.append(fock.copy())
        self.errors.append(error.copy())
        if len(self.focks) > self.depth:
            self.focks.pop(0)
            self.errors.pop(0)
        if len(self.focks) < 2:
            return fock
        # drop the oldest vectors while the overlap matrix is so
        # ill-conditioned that the extrapolation would be garbage
        while True:
            m = len(self.focks)
            overlap = np.array(
                [[np.vdot(self.errors[i], self.errors[j])
                  for j in range(m)] for i in range(m)])
            if m == 1 or np.linalg.cond(overlap) < 1e12:
                break
            self.focks.pop(0)
            self.errors.pop(0)
        b = np.empty((m + 1, m + 1))
        b[:m, :m] = overlap
        b[-1, :] = -1.0
        b[:, -1] = -1.0
        b[-1, -1] = 0.0
        rhs = np.zeros(m + 1)
        rhs[-1] = -1.0
        try:
            coef = np.linalg.solve(b, rhs)[:m]
        except np.linalg.LinAlgError:
            return None                     # signal DIIS breakdown
        return sum(c * f for c, f in zip(coef, self.focks))


def symmetry_breaking_guess(c_up, nocc_up, angle):
    """Rotate the alpha HOMO into the LUMO by `angle`; beta untouched."""
    c = c_up.copy()
    if angle == 0.0 or nocc_up >= c.shape[1]:
        return c
    h, l = nocc_up - 1, nocc_up
    homo, lumo = c[:, h].copy(), c[:, l].copy()
    c[:, h] = np.cos(angle) * homo + np.sin(angle) * lumo
    c[:, l] = -np.sin(angle) * homo + np.cos(angle) * lumo
    return c


def scf_solve(system, functional, config=None, d_init=None):
    """Self-consistent solve; non-convergence is reported, not raised."""
    config = config or SCFConfig()
    ints = system.integrals
    x = system.x_mat
    h_core = ints.h_core
    s = ints.S
    n_up, n_dn = _occupations(system.n_electron, config.mode)

    if d_init is not None:
        d_up, d_dn = (a.copy() for a in d_init)
    else:
        d_up, c_core, _ = _density_from_fock(h_core, x, n_up)
        if config.mode == "unrestricted" and config.breaking_angle != 0.0:
            c_mix = symmetry_breaking_guess(
                c_core, n_up, config.breaking_angle)
            d_up = c_mix[:, :n_up] @ c_mix[:, :n_up].T
        d_dn, _, _ = _density_from_fock(h_core, x, n_dn) \
            if n_dn != n_up or config.breaking_angle != 0.0 \
            else (d_up.copy(), None, None)
        if n_dn == 0:
            d_dn = np.zeros_like(d_up)

    diis = _DIIS(config.diis_depth)
    prev_f = None
    residuals = []
    converged = False
    c_up = c_dn = np.zeros_like(s)
    eps_up = eps_dn = np.zeros(s.shape[0])
    comps = {}

    for _ in range(config.max_iterations):
        v_up, v_dn, e_xc = _xc_potential(functional, system, d_up, d_dn)
        if config.mode == "restricted":
            # the learned functional need not be even in zeta; the
            # restricted stationarity condition uses the symmetrized
            # potential
            v_up = v_dn = 0.5 * (v_up + v_dn)
        j = _coulomb(ints.eri, d_up + d_dn)
        f_up = h_core + j + v_up
        f_dn = h_core + j + v_dn
        comps, _ = _energy_components(ints, d_up, d_dn, e_xc)
        if abs(comps["total"]) > DIVERGENCE_LIMIT:
            raise DivergenceError(
                f"SCF energy diverged: {comps['total']:.3e} Ha")

        err_up = x.T @ (f_up @ d_up @ s - s @ d_up @ f_up) @ x
        err_dn = x.T @ (f_dn @ d_dn @ s - s @ d_dn @ f_dn) @ x
        stacked_f = np.concatenate([f_up, f_dn])
        stacked_e = np.concatenate([err_up, err_dn])
        residual = float(np.linalg.norm(stacked_e))
        residuals.append(residual)

        # far from the fixed point (e.g. a symmetry-breaking guess) DIIS
        # extrapolation oscillates; damp until the residual is small.
        # With a level shift active DIIS pulls back toward the degenerate
        # saddle the shift is meant to escape, so damping is used alone.
        mixed = diis.step(stacked_f, stacked_e) \
            if residual < DIIS_START and not config.level_shift else None
        if mixed is None:
            prev = prev_f if prev_f is not None else stacked_f
            mixed = (1 - config.mixing) * prev + config.mixing * stacked_f
        prev_f = mixed
        nb = s.shape[0]
        f_new_up, f_new_dn = mixed[:nb], mixed[nb:]

        shift = config.level_shift
        p_up = x.T @ s @ d_up @ s @ x if shift else None
        d_up_new, c_up, eps_up = _density_from_fock(f_new_up, x, n_up,
                                                    shift, p_up)
        if n_dn > 0:
            p_dn = x.T @ s @ d_dn @ s @ x if shift else None
            d_dn_new, c_dn, eps_dn = _density_from_fock(f_new_dn, x, n_dn,
                                                        shift, p_dn)
        else:
            d_dn_new = np.zeros_like(d_up)
            c_dn, eps_dn = c_up * 0.0, eps_up * 0.0
        if config.mode == "restricted":
            d_dn_new = d_up_new
            c_dn, eps_dn = c_up, eps_up

        for d_sigma, n_sigma in ((d_up_new, n_up), (d_dn_new, n_dn)):
            count = float(np.einsum("mn,mn->", d_sigma, s))
            if abs(count - n_sigma) > 1e-8:
                raise NumericalError(
                    f"electron count drifted: {count} vs {n_sigma}")

        d_up, d_dn = d_up_new, d_dn_new
        if residual < config.threshold:
            converged = True
            break

    v_up, v_dn, e_xc = _xc_potential(functional, system, d_up, d_dn)
    comps, _ = _energy_components(ints, d_up, d_dn, e_xc)
    return SCFState(d_up=d_up, d_dn=d_dn, c_up=c_up, c_dn=c_dn,
                    eps_up=eps_up, eps_dn=eps_dn,
                    e_total=comps["total"], components=comps,
                    residuals=residuals, converged=converged,
                    n_up=n_up, n_dn=n_dn)


def atomization_energy(molecule_state, atom_states):
    """Sum of atomic energies minus the molecular energy (positive when
    bound); flagged False if any input failed to converge."""
    e = sum(a.e_total for a in atom_states) - molecule_state.e_total
    ok = molecule_state.converged and all(a.converged for a in atom_states)
    return e, ok


# -- differentiable path ---------------------------------------------------

def _tape_coulomb(eri2, d_t, nb):
    flat = ad.reshape(d_t, (nb * nb, 1))
    return ad.reshape(ad.matmul(ad.Tensor(eri2), flat), (nb, nb))


def _tape_density(f_t, x, nocc):
    xt = ad.Tensor(x)
    fp = ad.matmul(ad.matmul(ad.Tensor(x.T), f_t), xt)
    _, v = ad.symeig(fp)
    c = ad.matmul(xt, v)
    rows = ad.gather(ad.transpose(c), np.arange(nocc))
    return ad.matmul(ad.transpose(rows), rows)


def differentiable_run(system, functional, config=None, warm_start=None):
    """Fixed-unroll damped SCF on the tape; returns (E_total tensor, state).

    The XC potential entering each unrolled Fock matrix is evaluated at the
    incoming density and treated as a constant on the tape (its parameter
    dependence is recovered through the stationarity of the converged
    energy); every other term, including the final E_xc, stays on the tape.
    """
    config = config or SCFConfig()
    if warm_start is None:
        warm_start = scf_solve(system, functional, config)
    ints = system.integrals
    nb = ints.S.shape[0]
    eri2 = ints.eri.reshape(nb * nb, nb * nb)
    n_up, n_dn = warm_start.n_up, warm_start.n_dn
    h_t = ad.Tensor(ints.h_core)

    d_up_t = ad.Tensor(warm_start.d_up)
    d_dn_t = ad.Tensor(warm_start.d_dn)
    for _ in range(config.unroll):
        v_up, v_dn, _ = _xc_potential(
            functional, system, d_up_t.value, d_dn_t.value)
        if config.mode == "restricted":
            v_up = v_dn = 0.5 * (v_up + v_dn)
        j_t = _tape_coulomb(eri2, d_up_t + d_dn_t, nb)
        f_up_t = h_t + j_t + ad.Tensor(v_up)
        new_up = _tape_density(f_up_t, system.x_mat, n_up)
        if n_dn == n_up and config.mode == "restricted":
            new_dn = new_up
        elif n_dn > 0:
            f_dn_t = h_t + j_t + ad.Tensor(v_dn)
            new_dn = _tape_density(f_dn_t, system.x_mat, n_dn)
        else:
            new_dn = ad.Tensor(np.zeros((nb, nb)))
        m = config.mixing
        d_up_t = (1.0 - m) * d_up_t + m * new_up
        d_dn_t = (1.0 - m) * d_dn_t + m * new_dn

    _, e_xc_t = _xc_on_tape(functional, system, d_up_t, d_dn_t)
    d_tot_t = d_up_t + d_dn_t
    j_t = _tape_coulomb(eri2, d_tot_t, nb)
    e_one = (d_tot_t * h_t).sum()
    e_h = 0.5 * (d_tot_t * j_t).sum()
    e_total = e_one + e_h + e_xc_t + ints.E_nn
    if abs(float(e_total.value)) > DIVERGENCE_LIMIT:
        raise DivergenceError(
            f"unrolled SCF energy diverged: {float(e_total.value):.3e} Ha")
    state = dataclasses.replace(warm_start, d_up=d_up_t.value,
                                d_dn=d_dn_t.value,
                                e_total=float(e_total.value))
    return e_total, state
