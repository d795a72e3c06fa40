"""Sparse attention graph on the quadrature grid.

Three edge families: local (radial neighbours plus near-neighbour angular
links within each Lebedev shell), a random-permutation expander over all
grid vertices, and K reservoir vertices connected to every grid vertex.
Expander quality is checked against the near-Ramanujan spectral bound.
"""

import json
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import ConfigurationError, NumericalError

LOCAL, EXPANDER, GLOBAL = 0, 1, 2
_TIE_TOL = 1e-9  # slack for distance ties on symmetric shells


@dataclass(frozen=True)
class ElectronGraph:
    """Undirected typed edge list over grid + reservoir vertices."""

    n_grid: int
    n_global: int
    src: np.ndarray        # (n_edges,) int64
    dst: np.ndarray        # (n_edges,) int64
    etype: np.ndarray      # (n_edges,) int8, LOCAL/EXPANDER/GLOBAL
    dist: np.ndarray       # (n_edges,) Bohr; 0 for global edges
    expander_degree: int
    alpha: float
    seed: int

    @property
    def n_vertices(self):
        return self.n_grid + self.n_global

    @property
    def n_edges(self):
        return len(self.src)

    def edges_of_type(self, etype):
        mask = self.etype == etype
        return self.src[mask], self.dst[mask]

    def directed(self):
        """Both traversal directions: (src, dst, etype, dist) arrays."""
        return (np.concatenate([self.src, self.dst]),
                np.concatenate([self.dst, self.src]),
                np.concatenate([self.etype, self.etype]),
                np.concatenate([self.dist, self.dist]))

    def save(self, path):
        payload = {
            "header": {"n_grid": int(self.n_grid),
                       "n_global": int(self.n_global),
                       "d": int(self.expander_degree),
                       "alpha": float(self.alpha),
                       "seed": int(self.seed)},
            "src": self.src.tolist(),
            "dst": self.dst.tolist(),
            "etype": self.etype.tolist(),
            "dist": self.dist.tolist(),
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, sort_keys=True)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            payload = json.load(fh)
        h = payload["header"]
        return cls(n_grid=h["n_grid"], n_global=h["n_global"],
                   src=np.array(payload["src"], dtype=np.int64),
                   dst=np.array(payload["dst"], dtype=np.int64),
                   etype=np.array(payload["etype"], dtype=np.int8),
                   dist=np.array(payload["dist"]),
                   expander_degree=h["d"], alpha=h["alpha"], seed=h["seed"])


def _arc_distance(u, v):
    """Great-circle distance between unit vectors (rows)."""
    chord = np.linalg.norm(u - v, axis=-1)
    return 2.0 * np.arcsin(np.clip(0.5 * chord, 0.0, 1.0))


def _unit_points(grid, sl):
    offs = grid.points[sl] - grid.atom_positions[grid.shell_index[sl.start, 0]]
    return offs / np.linalg.norm(offs, axis=1, keepdims=True)


def radial_edges(grid):
    """Link each shell point to the adjacent outer shell.

    Equal Lebedev orders pair identical angular indices; otherwise each
    inner point links to the angularly nearest outer point.
    """
    src, dst = [], []
    for a, atom_sched in enumerate(grid.schedule):
        for b in range(len(atom_sched) - 1):
            sl_in = grid.shell_slice(a, b)
            sl_out = grid.shell_slice(a, b + 1)
            n_in = sl_in.stop - sl_in.start
            n_out = sl_out.stop - sl_out.start
            if atom_sched[b][1] == atom_sched[b + 1][1]:
                src.extend(range(sl_in.start, sl_in.stop))
                dst.extend(range(sl_out.start, sl_out.stop))
            else:
                u_in = _unit_points(grid, sl_in)
                u_out = _unit_points(grid, sl_out)
                arc = _arc_distance(u_in[:, None, :], u_out[None, :, :])
                nearest = np.argmin(arc, axis=1)
                src.extend(range(sl_in.start, sl_in.stop))
                dst.extend(sl_out.start + nearest)
    return np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)


def angular_edges(grid, alpha):
    """Near-neighbour links within each shell by great-circle distance.

    Point k connects to c when d_kc <= (1 + alpha) * min_{l != k} d_lk;
    the per-source cutoffs are symmetrized by union.
    """
    if alpha < 0:
        raise ConfigurationError("angular cutoff parameter must be >= 0")
    src, dst = [], []
    cache = {}
    for a, atom_sched in enumerate(grid.schedule):
        for b, (_, order) in enumerate(atom_sched):
            if order not in cache:
                cache[order] = _shell_pairs(_unit_points(
                    grid, grid.shell_slice(a, b)), alpha)
            base = grid.shell_slice(a, b).start
            i, j = cache[order]
            src.extend(base + i)
            dst.extend(base + j)
    return np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)


def _shell_pairs(units, alpha):
    n = len(units)
    if n < 2:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    arc = _arc_distance(units[:, None, :], units[None, :, :])
    np.fill_diagonal(arc, np.inf)
    cutoff = (1.0 + alpha) * arc.min(axis=1)
    reach = arc <= cutoff[:, None] + _TIE_TOL
    adj = reach | reach.T
    i, j = np.nonzero(np.triu(adj, k=1))
    return i.astype(np.int64), j.astype(np.int64)


def expander_multigraph(n_grid, d, seed):
    """Raw permutation-model pairs: slot list versus its permuted copy.

    Every vertex occupies d/2 slots, so the undirected multigraph has
    exact degree d (self loops counting 2).
    """
    if d % 2 != 0 or d < 2:
        raise ConfigurationError("expander degree must be even and >= 2")
    if n_grid * d // 2 < 1:
        raise ConfigurationError("empty expander slot list")
    rng = np.random.default_rng(seed)
    s = np.repeat(np.arange(n_grid, dtype=np.int64), d // 2)
    pi = rng.permutation(len(s))
    return s, s[pi]


def expander_edges(n_grid, d, seed):
    """Expander edge list: multigraph pruned of self loops and duplicates."""
    a, b = expander_multigraph(n_grid, d, seed)
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    keep = lo != hi
    pairs = np.unique(np.stack([lo[keep], hi[keep]], axis=1), axis=0)
    if len(pairs) == 0:
        return (np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64))
    return pairs[:, 0], pairs[:, 1]


def global_edges(n_grid, n_global):
    """Each reservoir vertex n_grid..n_grid+K-1 linked to every grid vertex."""
    if n_global < 0:
        raise ConfigurationError("global vertex count must be >= 0")
    src = np.repeat(np.arange(n_grid, n_grid + n_global, dtype=np.int64),
                    n_grid)
    dst = np.tile(np.arange(n_grid, dtype=np.int64), n_global)
    return src, dst


def assemble(grid, alpha=0.5, expander_degree=6, n_global=10, seed=0):
    """Union of local, expander, and global edges with distance features.

    expander_degree=0 and n_global=0 select the corresponding ablations.
    """
    rs, rd = radial_edges(grid)
    as_, ad_ = angular_edges(grid, alpha)
    local_s = np.concatenate([rs, as_])
    local_d = np.concatenate([rd, ad_])
    parts_s, parts_d, parts_t = [local_s], [local_d], [
        np.full(len(local_s), LOCAL, dtype=np.int8)]
    if expander_degree:
        es, ed = expander_edges(grid.n_points, expander_degree, seed)
        parts_s.append(es)
        parts_d.append(ed)
        parts_t.append(np.full(len(es), EXPANDER, dtype=np.int8))
    if n_global:
        gs, gd = global_edges(grid.n_points, n_global)
        parts_s.append(gs)
        parts_d.append(gd)
        parts_t.append(np.full(len(gs), GLOBAL, dtype=np.int8))
    src = np.concatenate(parts_s)
    dst = np.concatenate(parts_d)
    etype = np.concatenate(parts_t)
    dist = np.zeros(len(src))
    spatial = etype != GLOBAL
    dist[spatial] = np.linalg.norm(
        grid.points[src[spatial]] - grid.points[dst[spatial]], axis=1)
    return ElectronGraph(n_grid=grid.n_points, n_global=n_global, src=src,
                         dst=dst, etype=etype, dist=dist,
                         expander_degree=expander_degree, alpha=alpha,
                         seed=seed)


@dataclass(frozen=True)
class SpectralReport:
    """Extremal adjacency eigenvalues of the (pruned) expander."""

    lambda_1: float
    lambda_2: float
    lambda_min: float
    gap_offdiag: float       # max_{i>1} |lambda_i|
    gap_literal: float       # lambda_1 - max_{i>1} |lambda_i|
    threshold: float         # 2 sqrt(d-1)
    tolerance: float
    passed: bool


def spectral_gap(edges, n_grid, d, tol_fraction=0.05):
    """Near-Ramanujan check: max_{i>1}|lambda_i| <= 2 sqrt(d-1) (1+tol).

    A disconnected graph (lambda_2 == lambda_1) always fails, regardless of
    the magnitude test.  Reports both the off-principal statistic and the
    literal gap lambda_1 - max|lambda_i|.
    """
    src, dst = edges
    data = np.ones(2 * len(src))
    adj = sp.coo_matrix(
        (data, (np.concatenate([src, dst]), np.concatenate([dst, src]))),
        shape=(n_grid, n_grid)).tocsr()
    if n_grid <= 256:
        vals = np.linalg.eigvalsh(adj.toarray())
        lam1, lam2, lam_min = vals[-1], vals[-2], vals[0]
    else:
        # fixed start vector keeps the iterative solve bit-reproducible
        v0 = np.full(n_grid, 1.0 / np.sqrt(n_grid))
        try:
            top = spla.eigsh(adj, k=2, which="LA", v0=v0,
                             return_eigenvectors=False)
            bot = spla.eigsh(adj, k=1, which="SA", v0=v0,
                             return_eigenvectors=False)
        except spla.ArpackNoConvergence as err:
            raise NumericalError(
                f"spectral solve did not converge: {err}")
        lam1, lam2 = np.sort(top)[::-1]
        lam_min = bot[0]
    offdiag = max(abs(lam2), abs(lam_min))
    threshold = 2.0 * np.sqrt(d - 1.0)
    tolerance = tol_fraction * threshold
    return SpectralReport(
        lambda_1=float(lam1), lambda_2=float(lam2),
        lambda_min=float(lam_min), gap_offdiag=float(offdiag),
        gap_literal=float(lam1 - offdiag), threshold=float(threshold),
        tolerance=float(tolerance),
        passed=bool(offdiag <= threshold + tolerance
                    and lam1 - lam2 > 1e-8))


def mean_angular_degree(order, alpha):
    """Average angular-edge degree of a single isolated Lebedev shell."""
    from .grids import lebedev
    sh = lebedev(order)
    i, j = _shell_pairs(sh.unit_points, alpha)
    return 2.0 * len(i) / sh.n_points
