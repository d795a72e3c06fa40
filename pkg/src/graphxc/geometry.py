"""Molecular geometries: XYZ parsing, unit conversion, standard systems."""

import numpy as np

from .errors import GeometryError

BOHR_PER_ANGSTROM = 1.8897259886
HARTREE_TO_KCALMOL = 627.5094740631


def check_geometry(positions):
    """Validate a (n_atom, 3) Bohr position array; returns it as ndarray."""
    pos = np.asarray(positions, dtype=float)
    if pos.ndim != 2 or pos.shape[1] != 3:
        raise GeometryError(f"expected (n_atom, 3) positions, got {pos.shape}")
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            if np.linalg.norm(pos[i] - pos[j]) < 1e-10:
                raise GeometryError(f"duplicate nuclei at indices {i}, {j}")
    return pos


def parse_xyz(path):
    """Read an XYZ file (Angstrom), returning hydrogen positions in Bohr."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    try:
        n_atom = int(lines[0].split()[0])
    except (ValueError, IndexError):
        raise GeometryError(f"{path}: first line must be the atom count")
    body = lines[1:]
    # second line is the optional comment; detect by trying to parse an atom
    if body and not _is_atom_line(body[0]):
        body = body[1:]
    if len(body) < n_atom:
        raise GeometryError(f"{path}: expected {n_atom} atom lines")
    positions = []
    for ln in body[:n_atom]:
        parts = ln.split()
        if parts[0].upper() not in ("H", "1"):
            raise GeometryError(f"only hydrogen is supported, got {parts[0]!r}")
        positions.append([float(v) for v in parts[1:4]])
    return check_geometry(np.array(positions) * BOHR_PER_ANGSTROM)


def _is_atom_line(line):
    parts = line.split()
    if len(parts) < 4:
        return False
    try:
        [float(v) for v in parts[1:4]]
    except ValueError:
        return False
    return True


def h2_geometry(separation_bohr):
    """H2 on the z axis, centered at the origin (positions in Bohr)."""
    h = 0.5 * separation_bohr
    return np.array([[0.0, 0.0, -h], [0.0, 0.0, h]])


def h2_scaled(scale):
    """Scaled H2 geometry: separation R = scale * 1.400 Bohr."""
    return h2_geometry(scale * 1.400)


def h4_planar(theta_deg, radius=2.0):
    """Planar H4 rectangle: nuclei at (+-R sin(theta), +-R cos(theta)).

    theta = 45 degrees is an exact square; moving away from it pairs the
    atoms into two stretched H2 units across the shorter rectangle side.
    """
    t = np.deg2rad(theta_deg)
    s, c = radius * np.sin(t), radius * np.cos(t)
    return np.array([[s, c, 0.0], [s, -c, 0.0],
                     [-s, c, 0.0], [-s, -c, 0.0]])


def hydrogen_chain(n_atom, spacing=1.8):
    """n_atom hydrogens along z with uniform spacing (Bohr)."""
    z = (np.arange(n_atom) - 0.5 * (n_atom - 1)) * spacing
    pos = np.zeros((n_atom, 3))
    pos[:, 2] = z
    return pos
