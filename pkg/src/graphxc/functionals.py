"""Exchange-correlation energy densities on the autodiff tape.

Provides spin-resolved PW92 LDA (Slater exchange + Perdew-Wang 1992
correlation), the PBE GGA, and the learned-enhancement wrapper
``eps_tilde = eps * (1 + beta * f)`` used by the graph functional.

All evaluators accept `autodiff.Tensor` (or plain arrays, which are wrapped)
and stay fully differentiable with respect to the spin densities, gradient
magnitudes, and any learnable inputs.
"""

from dataclasses import dataclass

import numpy as np

from . import autodiff as ad
from .errors import DimensionError, NumericalError

# Points with total density below this are zeroed out entirely: they carry
# no energy and would otherwise hit n^{-2/3} singularities in the far field.
DENSITY_FLOOR = 1e-12

_CX = 0.75 * (3.0 / np.pi) ** (1.0 / 3.0)        # Slater exchange constant
_FPP0 = 1.709920934161365                        # f''(0) spin interpolation
_PBE_KAPPA = 0.804
_PBE_MU = 0.2195149727645171
_PBE_GAMMA = (1.0 - np.log(2.0)) / np.pi ** 2
_PBE_BETA = 0.06672455060314922

# PW92 pade parameters: (A, alpha1, beta1, beta2, beta3, beta4) for the
# unpolarized / polarized correlation energy and the spin stiffness -alpha_c.
_PW92_EC0 = (0.031091, 0.21370, 7.5957, 3.5876, 1.6382, 0.49294)
_PW92_EC1 = (0.015545, 0.20548, 14.1189, 6.1977, 3.3662, 0.62517)
_PW92_MAC = (0.016887, 0.11125, 10.357, 3.6231, 0.88026, 0.49671)


@dataclass
class XCResult:
    """Pointwise energy density and its weighted total."""

    eps: ad.Tensor       # Hartree per electron, one entry per grid point
    e_xc: ad.Tensor      # scalar total, sum_g w_g eps_g n_g


def _validated(n_up, n_dn):
    n_up, n_dn = ad.astensor(n_up), ad.astensor(n_dn)
    if n_up.shape != n_dn.shape:
        raise DimensionError(
            f"spin density shape mismatch {n_up.shape} vs {n_dn.shape}")
    if np.any(n_up.value < 0.0) or np.any(n_dn.value < 0.0):
        raise NumericalError("negative spin density passed to functional")
    return n_up, n_dn


def _floored(n_up, n_dn):
    """Clamp each spin channel to the floor; report the live-point mask."""
    live = (n_up.value + n_dn.value) >= DENSITY_FLOOR
    up = ad.where_mask(n_up.value >= DENSITY_FLOOR, n_up, DENSITY_FLOOR)
    dn = ad.where_mask(n_dn.value >= DENSITY_FLOOR, n_dn, DENSITY_FLOOR)
    return up, dn, live


def _g_pade(rs, params):
    a, a1, b1, b2, b3, b4 = params
    srs = ad.sqrt(rs)
    poly = b1 * srs + b2 * rs + b3 * rs * srs + b4 * rs * rs
    return (-2.0 * a) * (1.0 + a1 * rs) * ad.log(1.0 + 1.0 / (2.0 * a * poly))


def _pw92_correlation(rs, zeta):
    """Spin-interpolated PW92 correlation energy per electron."""
    ec0 = _g_pade(rs, _PW92_EC0)
    ec1 = _g_pade(rs, _PW92_EC1)
    alphac = -1.0 * _g_pade(rs, _PW92_MAC)
    f = ((1.0 + zeta) ** (4.0 / 3.0) + (1.0 - zeta) ** (4.0 / 3.0) - 2.0) \
        / (2.0 ** (4.0 / 3.0) - 2.0)
    z4 = zeta ** 4.0
    return ec0 + alphac * (f / _FPP0) * (1.0 - z4) + (ec1 - ec0) * f * z4


def _lda_pieces(n_up, n_dn):
    n = n_up + n_dn
    rs = (3.0 / (4.0 * np.pi)) ** (1.0 / 3.0) * n ** (-1.0 / 3.0)
    zeta = (n_up - n_dn) / n
    # spin-scaled Slater exchange, per electron
    ex = (-_CX * 2.0 ** (1.0 / 3.0)) \
        * (n_up ** (4.0 / 3.0) + n_dn ** (4.0 / 3.0)) / n
    return n, rs, zeta, ex


def pw92_lda(n_up, n_dn):
    """PW92 LDA energy density per electron at each point."""
    n_up, n_dn = _validated(n_up, n_dn)
    up, dn, live = _floored(n_up, n_dn)
    _, rs, zeta, ex = _lda_pieces(up, dn)
    eps = ex + _pw92_correlation(rs, zeta)
    return ad.where_mask(live, eps, 0.0)


def _pbe_exchange(n_up, n_dn, g_up, g_dn):
    """PBE exchange per electron via the exact spin-scaling relation."""
    total = None
    for ns, gs in ((n_up, g_up), (n_dn, g_dn)):
        n2, g2 = 2.0 * ns, 2.0 * gs
        kf = (3.0 * np.pi ** 2) ** (1.0 / 3.0) * n2 ** (1.0 / 3.0)
        s = g2 / (2.0 * kf * n2)
        fx = 1.0 + _PBE_KAPPA \
            - _PBE_KAPPA / (1.0 + (_PBE_MU / _PBE_KAPPA) * s * s)
        term = (-0.5 * _CX) * n2 ** (4.0 / 3.0) * fx
        total = term if total is None else total + term
    return total / (n_up + n_dn)


def _pbe_correlation(n, rs, zeta, ec_lda, g_tot):
    phi = 0.5 * ((1.0 + zeta) ** (2.0 / 3.0) + (1.0 - zeta) ** (2.0 / 3.0))
    kf = (3.0 * np.pi ** 2) ** (1.0 / 3.0) * n ** (1.0 / 3.0)
    ks = ad.sqrt(4.0 * kf / np.pi)
    t = g_tot / (2.0 * phi * ks * n)
    phi3 = phi ** 3.0
    bg = _PBE_BETA / _PBE_GAMMA
    a = bg / (ad.exp(-1.0 * ec_lda / (_PBE_GAMMA * phi3)) - 1.0)
    t2 = t * t
    at2 = a * t2
    h = _PBE_GAMMA * phi3 * ad.log(
        1.0 + bg * t2 * (1.0 + at2) / (1.0 + at2 + at2 * at2))
    return ec_lda + h


def pbe(n_up, n_dn, grad_up, grad_dn, grad_tot):
    """PBE energy density per electron.

    `grad_up`, `grad_dn`, `grad_tot` are the gradient magnitudes |grad n_s|
    and |grad n| per point, computed analytically from the density matrix.
    """
    n_up, n_dn = _validated(n_up, n_dn)
    grads = []
    for g in (grad_up, grad_dn, grad_tot):
        g = ad.astensor(g)
        if g.shape != n_up.shape:
            raise DimensionError(
                f"gradient shape {g.shape} does not match density "
                f"{n_up.shape}")
        if np.any(g.value < 0.0):
            raise NumericalError("negative gradient magnitude")
        grads.append(g)
    g_up, g_dn, g_tot = grads
    up, dn, live = _floored(n_up, n_dn)
    n, rs, zeta, _ = _lda_pieces(up, dn)
    ec_lda = _pw92_correlation(rs, zeta)
    eps = _pbe_exchange(up, dn, g_up, g_dn) \
        + _pbe_correlation(n, rs, zeta, ec_lda, g_tot)
    return ad.where_mask(live, eps, 0.0)


def xc_energy(eps, n, weights):
    """Quadrature contraction E_xc = sum_g w_g eps_g n_g."""
    eps, n = ad.astensor(eps), ad.astensor(n)
    weights = np.asarray(weights, dtype=np.float64)
    if eps.shape != n.shape or eps.shape != weights.shape:
        raise DimensionError("eps / density / weights length mismatch")
    return (ad.Tensor(weights) * eps * n).sum()


def enhance(eps, f_exp, beta):
    """Learned enhancement eps_tilde = eps * (1 + beta * f_exp)."""
    eps, f_exp = ad.astensor(eps), ad.astensor(f_exp)
    if eps.shape != f_exp.shape:
        raise DimensionError(
            f"enhancement factor shape {f_exp.shape} does not match "
            f"energy density {eps.shape}")
    return eps * (1.0 + ad.astensor(beta) * f_exp)


def enhanced_xc(eps_base, f_exp, beta, n, weights):
    """Full enhanced result: pointwise eps_tilde and its energy total."""
    eps = enhance(eps_base, f_exp, beta)
    return XCResult(eps=eps, e_xc=xc_energy(eps, n, weights))
