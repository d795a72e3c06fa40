"""Generate Lebedev quadrature tables by solving the moment equations.

Each rule is a union of octahedral-symmetry orbits. Orbit node parameters are
refined by variable-projection least squares: for trial parameters the weights
are the linear least-squares solution of the spherical-harmonic moment system,
and the node parameters are optimized until the residual vanishes.  Seed
values below are coarse (4-6 digit) literature values; the solve polishes them
to machine precision.  Output is written to src/graphxc/lebedev_data.py.
"""

import sys

import numpy as np
from scipy.optimize import least_squares
from scipy.special import sph_harm_y

# rule layout: (n_points, degree, orbits) where each orbit is
#   ("a1"|"a2"|"a3", seed_weight) or ("b"|"c", seed_param, seed_weight)
#   or ("d", seed_r, seed_s, seed_weight)
RULES = {
    6: (3, [("a1", 1 / 6)]),
    14: (5, [("a1", 1 / 15), ("a3", 3 / 40)]),
    26: (7, [("a1", 1 / 21), ("a2", 4 / 105), ("a3", 9 / 280)]),
    38: (9, [("a1", 1 / 105), ("a3", 9 / 280),
             ("c", 0.4597008434, 1 / 35)]),
    50: (11, [("a1", 0.0126984), ("a2", 0.0225749), ("a3", 0.0210937),
              ("b", 0.3015113, 0.0201733)]),
    74: (13, [("a1", 0.000513067), ("a2", 0.01660406), ("a3", -0.02958603),
              ("b", 0.4803844614, 0.02657620),
              ("c", 0.3207726489, 0.01652217)]),
    86: (15, [("a1", 0.01154401), ("a3", 0.01194333),
              ("b", 0.3696028464, 0.01111055),
              ("b", 0.6943540066, 0.01187650),
              ("c", 0.3742430390, 0.01181230)]),
    110: (17, [("a1", 0.0038282705), ("a3", 0.0097937375),
               ("b", 0.1851156353, 0.0082117373),
               ("b", 0.6904210484, 0.0099428149),
               ("b", 0.3956894730, 0.0095954713),
               ("c", 0.4783690288, 0.0096949964)]),
    146: (19, [("a1", 5.996313688e-4), ("a2", 7.372999718e-3),
               ("a3", 7.210515360e-3),
               ("b", 0.6764410400, 7.116355493e-3),
               ("b", 0.4174961227, 6.753829486e-3),
               ("b", 0.1574676672, 7.574394159e-3),
               ("d", 0.1403553811, 0.4493328323, 6.991087353e-3)]),
    194: (23, [("a1", 1.782340447e-3), ("a2", 5.716905949e-3),
               ("a3", 5.573383178e-3),
               ("b", 0.6712973442, 5.608704082e-3),
               ("b", 0.2892465627, 5.158237711e-3),
               ("b", 0.4446933178, 5.518771467e-3),
               ("b", 0.1299335447, 4.106777028e-3),
               ("c", 0.3457702197, 5.051846064e-3),
               ("d", 0.1590417105, 0.8360360154, 5.530248916e-3)]),
}


def orbit_points(kind, params):
    if kind == "a1":
        return np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0],
                         [0, -1, 0], [0, 0, 1], [0, 0, -1]], float)
    if kind == "a2":
        q = 1 / np.sqrt(2)
        pts = []
        for i in range(3):
            for j in range(i + 1, 3):
                for si in (q, -q):
                    for sj in (q, -q):
                        p = [0.0, 0.0, 0.0]
                        p[i], p[j] = si, sj
                        pts.append(p)
        return np.array(pts)
    if kind == "a3":
        q = 1 / np.sqrt(3)
        return np.array([[sx * q, sy * q, sz * q]
                         for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)])
    if kind == "b":
        l, = params
        m = np.sqrt(max(1 - 2 * l * l, 0.0))
        pts = []
        for pos in range(3):  # position of the m component
            for sl1 in (1, -1):
                for sl2 in (1, -1):
                    for sm in (1, -1):
                        v = [sl1 * l, sl2 * l]
                        v.insert(pos, sm * m)
                        pts.append(v)
        return np.array(pts)
    if kind == "c":
        p, = params
        q = np.sqrt(max(1 - p * p, 0.0))
        pts = []
        for (u, v) in ((p, q), (q, p)):
            for zero in range(3):
                for su in (1, -1):
                    for sv in (1, -1):
                        w = [su * u, sv * v]
                        w.insert(zero, 0.0)
                        pts.append(w)
        return np.array(pts)
    if kind == "d":
        r, s = params
        w = np.sqrt(max(1 - r * r - s * s, 0.0))
        pts = []
        import itertools
        for perm in itertools.permutations((r, s, w)):
            for signs in itertools.product((1, -1), repeat=3):
                pts.append([signs[k] * perm[k] for k in range(3)])
        return np.array(pts)
    raise ValueError(kind)


def real_sph_basis(points, lmax):
    """Rows: one real Y_lm per (l,m), columns: points."""
    x, y, z = points.T
    theta = np.arccos(np.clip(z, -1, 1))
    phi = np.arctan2(y, x)
    rows = []
    for l in range(lmax + 1):
        for m in range(-l, l + 1):
            ylm = sph_harm_y(l, abs(m), theta, phi)
            if m < 0:
                rows.append(np.sqrt(2) * ylm.imag)
            elif m == 0:
                rows.append(ylm.real)
            else:
                rows.append(np.sqrt(2) * ylm.real)
    return np.array(rows)


def solve_rule(npts, degree, orbits):
    nonlin0 = []
    for orb in orbits:
        if orb[0] in ("b", "c"):
            nonlin0.append(orb[1])
        elif orb[0] == "d":
            nonlin0.extend(orb[1:3])

    target = np.zeros((degree + 1) ** 2)
    target[0] = 1 / np.sqrt(4 * np.pi)

    def design(nonlin):
        it = iter(nonlin)
        cols, plists = [], []
        for orb in orbits:
            kind = orb[0]
            if kind in ("a1", "a2", "a3"):
                pts = orbit_points(kind, ())
            elif kind in ("b", "c"):
                pts = orbit_points(kind, (next(it),))
            else:
                pts = orbit_points(kind, (next(it), next(it)))
            plists.append(pts)
            cols.append(real_sph_basis(pts, degree).sum(axis=1))
        return np.array(cols).T, plists

    def resid(nonlin):
        A, _ = design(nonlin)
        w, *_ = np.linalg.lstsq(A, target, rcond=None)
        return A @ w - target

    if nonlin0:
        sol = least_squares(resid, nonlin0, xtol=3e-16, ftol=3e-16, gtol=3e-16)
        nonlin = sol.x
    else:
        nonlin = []
    A, plists = design(nonlin)
    w, *_ = np.linalg.lstsq(A, target, rcond=None)
    res = np.abs(A @ w - target).max()

    pts = np.vstack(plists)
    wts = np.concatenate([np.full(len(p), wi) for p, wi in zip(plists, w)])
    assert len(pts) == npts, (len(pts), npts)
    assert abs(wts.sum() - 1) < 1e-12
    return pts, wts, res


def main():
    out = ["# Lebedev quadrature rules under octahedral symmetry, generated by",
           "# tools/gen_lebedev.py (moment-equation solve, weights sum to 1).",
           "# Keys are point counts; values are (degree, points, weights).",
           "", "import numpy as np", "", "LEBEDEV_RULES = {"]
    for npts, (degree, orbits) in sorted(RULES.items()):
        pts, wts, res = solve_rule(npts, degree, orbits)
        print(f"rule {npts:4d}: degree {degree:2d}, moment residual {res:.3e}",
              file=sys.stderr)
        out.append(f"    {npts}: ({degree}, np.array([")
        for p in pts:
            out.append(f"        [{p[0]!r}, {p[1]!r}, {p[2]!r}],")
        out.append("    ]), np.array([")
        for v in wts:
            out.append(f"        {v!r},")
        out.append("    ])),")
    out.append("}")
    with open("src/graphxc/lebedev_data.py", "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
