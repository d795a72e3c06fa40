"""Dense full configuration interaction over an orthonormalized basis.

Orbitals come from symmetric (Loewdin) orthogonalization of the atomic
basis; the Hamiltonian is assembled with the Slater-Condon rules over
alpha/beta occupation strings and diagonalized densely.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import geometry as geo
from .errors import CapacityError, ConfigurationError
from .integrals import build_integrals, load_basis

DIMENSION_LIMIT = 10_000


@dataclass
class DeterminantSpace:
    """Alpha/beta occupation strings of a fixed (N_up, N_dn) sector."""

    n_orb: int
    n_up: int
    n_dn: int
    strings_up: list
    strings_dn: list

    @property
    def dimension(self):
        return len(self.strings_up) * len(self.strings_dn)


@dataclass
class FCIResult:
    energies: np.ndarray       # lowest roots, E_nn included (Hartree)
    s_squared: np.ndarray      # <S^2> per root
    ground_vector: np.ndarray
    density: np.ndarray        # spin-summed ground-state 1-RDM, AO basis
    space: DeterminantSpace


def determinant_space(n_orb, n_up, n_dn):
    if not (0 <= n_up <= n_orb and 0 <= n_dn <= n_orb):
        raise ConfigurationError(
            f"cannot place ({n_up}, {n_dn}) electrons in {n_orb} orbitals")
    dim = comb(n_orb, n_up) * comb(n_orb, n_dn)
    if dim > DIMENSION_LIMIT:
        raise CapacityError(
            f"determinant space dimension {dim} exceeds the dense "
            f"limit {DIMENSION_LIMIT}")
    occs_up = list(combinations(range(n_orb), n_up))
    occs_dn = list(combinations(range(n_orb), n_dn))
    return DeterminantSpace(n_orb, n_up, n_dn, occs_up, occs_dn)


def _mask(occ):
    m = 0
    for p in occ:
        m |= 1 << p
    return m


def _single_phase(mask, i, a):
    """Sign of a_i^dagger-to-a move: parity of occupieds strictly between."""
    lo, hi = (i, a) if i < a else (a, i)
    between = mask & (((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1))
    return -1.0 if between.bit_count() % 2 else 1.0


def _excitation(mask_i, mask_j):
    """Holes (in i), particles (in j), and the permutation sign."""
    diff = mask_i ^ mask_j
    holes = [p for p in range(diff.bit_length()) if diff >> p & 1
             and mask_i >> p & 1]
    parts = [p for p in range(diff.bit_length()) if diff >> p & 1
             and mask_j >> p & 1]
    sign, mask = 1.0, mask_i
    for h, p in zip(holes, parts):
        sign *= _single_phase(mask, h, p)
        mask = (mask ^ (1 << h)) | (1 << p)
    return holes, parts, sign


def _diagonal(occ_a, occ_b, h, eri):
    e = sum(h[p, p] for p in occ_a) + sum(h[p, p] for p in occ_b)
    for occ in (occ_a, occ_b):
        for p, q in combinations(occ, 2):
            e += eri[p, p, q, q] - eri[p, q, q, p]
    for p in occ_a:
        for q in occ_b:
            e += eri[p, p, q, q]
    return e


def _single_element(i, a, occ_same, occ_other, h, eri):
    e = h[i, a]
    for r in occ_same:
        if r != i:
            e += eri[i, a, r, r] - eri[i, r, r, a]
    for r in occ_other:
        e += eri[i, a, r, r]
    return e


def _transform(integrals):
    """Core Hamiltonian and chemist-notation ERIs in Loewdin orbitals."""
    w, v = np.linalg.eigh(integrals.S)
    x = v @ np.diag(w ** -0.5) @ v.T
    h = x.T @ integrals.h_core @ x
    eri = np.einsum("mnlt,mp,nq,lr,ts->pqrs", integrals.eri, x, x, x, x,
                    optimize=True)
    return h, eri


def build_hamiltonian(space, h, eri):
    su, sd = space.strings_up, space.strings_dn
    mu = [_mask(o) for o in su]
    md = [_mask(o) for o in sd]
    nu, nd = len(su), len(sd)
    deg_u = np.array([[(a ^ b).bit_count() // 2 for b in mu] for a in mu])
    deg_d = np.array([[(a ^ b).bit_count() // 2 for b in md] for a in md])
    dim = nu * nd
    ham = np.zeros((dim, dim))
    for iu in range(nu):
        for idn in range(nd):
            row = iu * nd + idn
            for ju in range(iu, nu):
                du = deg_u[iu, ju]
                if du > 2:
                    continue
                j0 = idn if ju == iu else 0
                for jd in range(j0, nd):
                    dd = deg_d[idn, jd]
                    if du + dd > 2:
                        continue
                    col = ju * nd + jd
                    if du == 0 and dd == 0:
                        val = _diagonal(su[iu], sd[idn], h, eri)
                    elif du == 1 and dd == 0:
                        (i,), (a,), s = _excitation(mu[iu], mu[ju])
                        val = s * _single_element(i, a, su[iu], sd[idn],
                                                  h, eri)
                    elif du == 0 and dd == 1:
                        (i,), (a,), s = _excitation(md[idn], md[jd])
                        val = s * _single_element(i, a, sd[idn], su[iu],
                                                  h, eri)
                    elif du == 1 and dd == 1:
                        (i,), (a,), s1 = _excitation(mu[iu], mu[ju])
                        (j,), (b,), s2 = _excitation(md[idn], md[jd])
                        val = s1 * s2 * eri[i, a, j, b]
                    elif du == 2:
                        (i, j), (a, b), s = _excitation(mu[iu], mu[ju])
                        val = s * (eri[i, a, j, b] - eri[i, b, j, a])
                    else:
                        (i, j), (a, b), s = _excitation(md[idn], md[jd])
                        val = s * (eri[i, a, j, b] - eri[i, b, j, a])
                    ham[row, col] = val
                    ham[col, row] = val
    return ham


def _s_squared(space, vec):
    """<S^2> = ||S_+ psi||^2 + Sz(Sz + 1)."""
    sz = 0.5 * (space.n_up - space.n_dn)
    if space.n_dn == 0:
        return sz * (sz + 1.0)
    raised = {}
    sd = space.strings_dn
    for iu, occ_u in enumerate(space.strings_up):
        mask_u = _mask(occ_u)
        for idn, occ_d in enumerate(sd):
            c = vec[iu * len(sd) + idn]
            if c == 0.0:
                continue
            mask_d = _mask(occ_d)
            for p in occ_d:
                if mask_u >> p & 1:
                    continue
                # annihilate beta_p then create alpha_p
                s = _single_phase(mask_d, p, space.n_orb) \
                    * _single_phase(mask_u, p, space.n_orb)
                new_u = tuple(sorted(occ_u + (p,)))
                new_d = tuple(o for o in occ_d if o != p)
                key = (new_u, new_d)
                raised[key] = raised.get(key, 0.0) + s * c
    norm2 = sum(v * v for v in raised.values())
    return norm2 + sz * (sz + 1.0)


def _one_rdm(space, vec):
    """Spin-summed 1-RDM in the orthonormal orbital basis."""
    n = space.n_orb
    gamma = np.zeros((n, n))
    su, sd = space.strings_up, space.strings_dn
    mu = [_mask(o) for o in su]
    md = [_mask(o) for o in sd]
    nd = len(sd)
    for iu, occ_u in enumerate(su):
        for idn, occ_d in enumerate(sd):
            c = vec[iu * nd + idn]
            if c == 0.0:
                continue
            for p in occ_u:
                gamma[p, p] += c * c
            for p in occ_d:
                gamma[p, p] += c * c
    # alpha single excitations
    for iu in range(len(su)):
        for ju in range(iu + 1, len(su)):
            if (mu[iu] ^ mu[ju]).bit_count() != 2:
                continue
            (i,), (a,), s = _excitation(mu[iu], mu[ju])
            for idn in range(nd):
                t = s * vec[iu * nd + idn] * vec[ju * nd + idn]
                gamma[i, a] += t
                gamma[a, i] += t
    # beta single excitations
    for idn in range(nd):
        for jd in range(idn + 1, nd):
            if (md[idn] ^ md[jd]).bit_count() != 2:
                continue
            (i,), (a,), s = _excitation(md[idn], md[jd])
            for iu in range(len(su)):
                t = s * vec[iu * nd + idn] * vec[iu * nd + jd]
                gamma[i, a] += t
                gamma[a, i] += t
    return gamma


def fci_solve(integrals, n_up, n_dn, n_roots=1):
    """Lowest `n_roots` exact eigenstates of the electronic Hamiltonian."""
    space = determinant_space(integrals.n_basis, n_up, n_dn)
    h, eri = _transform(integrals)
    ham = build_hamiltonian(space, h, eri)
    vals, vecs = np.linalg.eigh(ham)
    n_roots = min(n_roots, space.dimension)
    energies = vals[:n_roots] + integrals.E_nn
    s2 = np.array([_s_squared(space, vecs[:, k]) for k in range(n_roots)])
    ground = vecs[:, 0]
    w, v = np.linalg.eigh(integrals.S)
    x = v @ np.diag(w ** -0.5) @ v.T
    density = x @ _one_rdm(space, ground) @ x.T
    return FCIResult(energies=energies, s_squared=s2,
                     ground_vector=ground, density=density, space=space)


def integrals_for(atoms, basis_name="6-31g"):
    """Gaussian integrals for a hydrogen geometry in the named basis."""
    basis = load_basis(basis_name, atoms)
    return build_integrals(basis, atoms)


_integrals_for = integrals_for


def hydrogen_atom_energy(basis_name="6-31g"):
    """FCI (= exact one-electron) energy of a single H atom."""
    ints = _integrals_for(np.zeros((1, 3)), basis_name)
    return float(fci_solve(ints, 1, 0).energies[0])


def dissociation_dataset(s_values, basis_name="6-31g", n_roots=1):
    """Labeled H2 records on the R = S * 1.400 Bohr dissociation curve."""
    s_values = list(s_values)
    for s in s_values:
        if not 0.5 <= s <= 5.0:
            raise ConfigurationError(f"scale S={s} outside [0.5, 5]")
    e_atom = hydrogen_atom_energy(basis_name)
    records = []
    for s in s_values:
        atoms = geo.h2_scaled(s)
        res = fci_solve(_integrals_for(atoms, basis_name), 1, 1,
                        n_roots=n_roots)
        e0 = float(res.energies[0])
        records.append({
            "S": float(s),
            "R": float(s * 1.400),
            "geometry": atoms.tolist(),
            "e_total": e0,
            "e_atomization": 2.0 * e_atom - e0,
            "roots": [float(e) for e in res.energies],
            "s_squared": [float(v) for v in res.s_squared],
            "density": res.density.tolist(),
        })
    return records


def h4_dataset(theta_values, radius=2.0, basis_name="6-31g", n_roots=6):
    """Planar-H4 sweep records with spin labels and singlet tracking."""
    records = []
    for theta in theta_values:
        if not 40.0 <= theta <= 50.0:
            raise ConfigurationError(
                f"theta={theta} outside the [40, 50] degree sweep")
        atoms = geo.h4_planar(theta, radius=radius)
        res = fci_solve(_integrals_for(atoms, basis_name), 2, 2,
                        n_roots=n_roots)
        singlet = next((k for k, s2 in enumerate(res.s_squared)
                        if s2 < 1e-3), None)
        records.append({
            "theta": float(theta),
            "R": float(radius),
            "geometry": atoms.tolist(),
            "roots": [float(e) for e in res.energies],
            "s_squared": [float(v) for v in res.s_squared],
            "e_lowest": float(res.energies[0]),
            "lowest_s_squared": float(res.s_squared[0]),
            "e_singlet": None if singlet is None
            else float(res.energies[singlet]),
        })
    return records
