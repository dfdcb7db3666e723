"""Indexed polygon meshes, validation, and the five canonical seed polyhedra.

Meshes are immutable: vertices as a read-only float array, faces as index
cycles wound counter-clockwise viewed from outside.  Everything produced by
this package is referenced to a circumsphere centered at the origin, and
tolerances are expressed relative to its radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateFace,
    EulerViolation,
    InvalidOrientation,
    NonManifoldEdge,
    UnsupportedSeed,
)

__all__ = [
    "PHI",
    "SEED_KINDS",
    "DEFAULT_TOL",
    "TolerancePolicy",
    "Vec3",
    "Mesh",
    "build_mesh",
    "mesh_counts",
    "seed",
    "mirrored",
    "rotated",
    "rotation_to_z",
    "dedupe_points",
]

# A point in 3-space: float64 array of shape (3,).
Vec3 = np.ndarray

PHI = (1.0 + math.sqrt(5.0)) / 2.0

SEED_KINDS = (
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "truncated_icosahedron",
)


@dataclass(frozen=True)
class TolerancePolicy:
    """Numeric tolerances for geometry checks.

    metric_eps is relative to the circumsphere radius; rank_eps is relative
    to the largest singular value of whatever matrix is being ranked.
    """

    metric_eps: float = 1e-9
    rank_eps: float = 1e-10

    def __post_init__(self) -> None:
        if self.metric_eps <= 0.0 or self.rank_eps <= 0.0:
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = TolerancePolicy()


@dataclass(frozen=True, eq=False)
class Mesh:
    """Immutable indexed surface.

    Faces are index cycles, counter-clockwise viewed from outside.  Edges are
    derived at construction: each is a sorted index pair, and the edge list
    is in lexicographic order.  Use :func:`build_mesh` to construct one; the
    constructor itself performs no validation.
    """

    vertices: np.ndarray  # (V, 3) float64, read-only
    faces: tuple[tuple[int, ...], ...]
    center: np.ndarray  # (3,) float64, read-only
    radius: float | None  # circumsphere radius when inscribed, else None
    closed: bool
    edges: tuple[tuple[int, int], ...]
    boundary_edges: tuple[tuple[int, int], ...]  # edges used by exactly one face

    @property
    def counts(self) -> tuple[int, int, int]:
        """(vertex, edge, face) counts."""
        return len(self.vertices), len(self.edges), len(self.faces)

    def degrees(self) -> np.ndarray:
        """Number of edges incident to each vertex."""
        out = np.zeros(len(self.vertices), dtype=int)
        for a, b in self.edges:
            out[a] += 1
            out[b] += 1
        return out

    def face_centroids(self) -> np.ndarray:
        return np.array([self.vertices[list(f)].mean(axis=0) for f in self.faces])

    def edge_lengths(self) -> np.ndarray:
        idx = np.asarray(self.edges)
        return np.linalg.norm(self.vertices[idx[:, 0]] - self.vertices[idx[:, 1]], axis=1)


def _face_normal(points: np.ndarray) -> np.ndarray:
    """Newell normal of a planar polygon (unnormalized)."""
    n = np.zeros(3)
    for i in range(len(points)):
        p, q = points[i], points[(i + 1) % len(points)]
        n += np.cross(p, q)
    return n


def _derive_edges(faces: Sequence[tuple[int, ...]]) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for face in faces:
        for i in range(len(face)):
            a, b = face[i], face[(i + 1) % len(face)]
            key = (a, b) if a < b else (b, a)
            counts[key] = counts.get(key, 0) + 1
    return counts


def build_mesh(
    vertices: Iterable[Sequence[float]],
    faces: Iterable[Sequence[int]],
    *,
    center: Sequence[float] = (0.0, 0.0, 0.0),
    radius: float | None = None,
    closed: bool = True,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Mesh:
    """Validate and freeze a mesh.

    Checks, in order: face sanity, the Euler formula (closed meshes), edge
    manifoldness, winding consistency, outward orientation, and, when a
    radius is given, that every vertex lies on the circumsphere within
    tol.metric_eps * radius.
    """
    verts = np.asarray(list(vertices), dtype=float)
    if verts.ndim != 2 or verts.shape[1] != 3 or len(verts) == 0:
        raise ValueError("vertices must be a non-empty sequence of 3D points")
    if not np.isfinite(verts).all():
        raise ValueError("vertex coordinates must be finite")
    ctr = np.asarray(center, dtype=float)

    face_list: list[tuple[int, ...]] = []
    for face in faces:
        cycle = tuple(int(i) for i in face)
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            raise DegenerateFace(f"face {cycle} has fewer than 3 distinct vertices")
        if min(cycle) < 0 or max(cycle) >= len(verts):
            raise DegenerateFace(f"face {cycle} references a vertex out of range")
        face_list.append(cycle)
    if not face_list:
        raise ValueError("mesh must have at least one face")

    edge_counts = _derive_edges(face_list)
    v, s, f = len(verts), len(edge_counts), len(face_list)
    if closed and v - s + f != 2:
        raise EulerViolation(f"V - S + F = {v} - {s} + {f} = {v - s + f}, expected 2")

    for edge, n in edge_counts.items():
        if n > 2 or (closed and n != 2):
            raise NonManifoldEdge(f"edge {edge} belongs to {n} faces")

    directed: set[tuple[int, int]] = set()
    for face in face_list:
        for i in range(len(face)):
            a, b = face[i], face[(i + 1) % len(face)]
            if (a, b) in directed:
                raise InvalidOrientation(f"directed edge {(a, b)} traversed twice")
            directed.add((a, b))

    for fi, face in enumerate(face_list):
        pts = verts[list(face)] - ctr
        normal = _face_normal(pts)
        if float(normal @ pts.mean(axis=0)) <= 0.0:
            raise InvalidOrientation(f"face {fi} is not counter-clockwise from outside")

    if radius is not None:
        if radius <= 0.0:
            raise ValueError("radius must be positive")
        dist = np.linalg.norm(verts - ctr, axis=1)
        worst = float(np.abs(dist - radius).max())
        if worst > tol.metric_eps * radius:
            raise ValueError(
                f"vertices stray {worst:.3e} from the stated circumsphere radius {radius}"
            )

    edges = tuple(sorted(edge_counts))
    boundary = tuple(e for e in edges if edge_counts[e] == 1)
    verts.setflags(write=False)
    ctr.setflags(write=False)
    return Mesh(
        vertices=verts,
        faces=tuple(face_list),
        center=ctr,
        radius=radius,
        closed=closed,
        edges=edges,
        boundary_edges=boundary,
    )


def mesh_counts(P: Mesh) -> tuple[int, int, int]:
    """(V, S, F): vertex, edge, face counts."""
    return P.counts


# --- seed polyhedra ---------------------------------------------------------


def _unit_tetrahedron() -> tuple[np.ndarray, list[tuple[int, ...]]]:
    verts = np.array(
        [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
    ) / math.sqrt(3.0)
    return verts, _triangle_faces(verts)


def _unit_octahedron() -> tuple[np.ndarray, list[tuple[int, ...]]]:
    verts = np.array(
        [
            [1, 0, 0], [-1, 0, 0],
            [0, 1, 0], [0, -1, 0],
            [0, 0, 1], [0, 0, -1],
        ],
        dtype=float,
    )
    return verts, _triangle_faces(verts)


def _unit_icosahedron() -> tuple[np.ndarray, list[tuple[int, ...]]]:
    # The 12 cyclic permutations of (0, +-1, +-PHI), scaled to the unit sphere.
    raw = []
    for a, b in ((1.0, PHI), (1.0, -PHI), (-1.0, PHI), (-1.0, -PHI)):
        raw.append((0.0, a, b))
        raw.append((b, 0.0, a))
        raw.append((a, b, 0.0))
    verts = np.array(raw) / math.sqrt(1.0 + PHI * PHI)
    return verts, _triangle_faces(verts)


def _triangle_faces(verts: np.ndarray) -> list[tuple[int, ...]]:
    """Faces of a regular triangle-faced solid: mutually nearest vertex triples."""
    n = len(verts)
    d2 = np.sum((verts[:, None, :] - verts[None, :, :]) ** 2, axis=2)
    edge2 = d2[d2 > 1e-12].min()
    adj = d2 < edge2 * 1.000001
    faces = []
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i, j]:
                continue
            for k in range(j + 1, n):
                if adj[i, k] and adj[j, k]:
                    faces.append(_oriented((i, j, k), verts))
    return faces


def _oriented(face: tuple[int, ...], verts: np.ndarray) -> tuple[int, ...]:
    pts = verts[list(face)]
    if float(_face_normal(pts) @ pts.mean(axis=0)) < 0.0:
        return tuple(reversed(face))
    return face


def _angle_sorted(indices: Sequence[int], points: np.ndarray, axis: np.ndarray) -> tuple[int, ...]:
    """Sort indices by polar angle of their points around the outward axis (ties by index)."""
    axis = axis / np.linalg.norm(axis)
    helper = np.array([0.0, 0.0, 1.0])
    if abs(float(axis @ helper)) > 0.9:
        helper = np.array([1.0, 0.0, 0.0])
    t1 = np.cross(helper, axis)
    t1 /= np.linalg.norm(t1)
    t2 = np.cross(axis, t1)  # (t1, t2, axis) is right-handed
    keyed = []
    for i in indices:
        p = points[i]
        keyed.append((math.atan2(float(p @ t2), float(p @ t1)), i))
    return tuple(i for _, i in sorted(keyed))


def _unit_dodecahedron() -> tuple[np.ndarray, list[tuple[int, ...]]]:
    # Vertices sit along the face-centroid directions of the icosahedron;
    # one pentagon wraps each icosahedron vertex.
    ico_verts, ico_faces = _unit_icosahedron()
    centroids = np.array([ico_verts[list(f)].mean(axis=0) for f in ico_faces])
    verts = centroids / np.linalg.norm(centroids, axis=1)[:, None]
    faces = []
    for vi in range(len(ico_verts)):
        ring = [fi for fi, f in enumerate(ico_faces) if vi in f]
        faces.append(_oriented(_angle_sorted(ring, verts, ico_verts[vi]), verts))
    return verts, faces


def _unit_truncated_icosahedron() -> tuple[np.ndarray, list[tuple[int, ...]]]:
    # Cut every icosahedron edge at one third from each end: 60 vertices,
    # one pentagon per old vertex, one hexagon per old face.
    ico_verts, ico_faces = _unit_icosahedron()
    index: dict[tuple[int, int], int] = {}
    pts = []
    edges = set()
    for f in ico_faces:
        for i in range(3):
            a, b = f[i], f[(i + 1) % 3]
            edges.add((min(a, b), max(a, b)))
    for a, b in sorted(edges):
        for u, v in ((a, b), (b, a)):
            index[(u, v)] = len(pts)
            pts.append((2.0 * ico_verts[u] + ico_verts[v]) / 3.0)
    verts = np.array(pts)
    verts /= np.linalg.norm(verts, axis=1)[:, None]

    faces: list[tuple[int, ...]] = []
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    for u in range(len(ico_verts)):
        ring = [index[(u, v)] for v in nbrs[u]]
        faces.append(_oriented(_angle_sorted(ring, verts, ico_verts[u]), verts))
    for a, b, c in ico_faces:
        cycle = (
            index[(a, b)], index[(b, a)],
            index[(b, c)], index[(c, b)],
            index[(c, a)], index[(a, c)],
        )
        faces.append(cycle)
    return verts, faces


_SEED_BUILDERS = {
    "tetrahedron": _unit_tetrahedron,
    "octahedron": _unit_octahedron,
    "icosahedron": _unit_icosahedron,
    "dodecahedron": _unit_dodecahedron,
    "truncated_icosahedron": _unit_truncated_icosahedron,
}


def rotation_to_z(direction: Sequence[float]) -> np.ndarray:
    """Rotation matrix taking the given direction onto the +z axis.

    The rotation is about the axis perpendicular to both, through the
    smallest angle; this is the documented orientation used for dome cuts.
    """
    v = np.asarray(direction, dtype=float)
    v = v / np.linalg.norm(v)
    z = np.array([0.0, 0.0, 1.0])
    c = float(v @ z)
    if c > 1.0 - 1e-15:
        return np.eye(3)
    if c < -1.0 + 1e-15:
        return np.diag([1.0, -1.0, -1.0])  # half turn about x
    axis = np.cross(v, z)
    axis /= np.linalg.norm(axis)
    s = math.sqrt(max(0.0, 1.0 - c * c))
    K = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + s * K + (1.0 - c) * (K @ K)


def seed(kind: str, radius: float = 1.0, *, vertex_up: bool = False) -> Mesh:
    """Canonical seed polyhedron inscribed in a sphere of the given radius.

    With vertex_up=True the mesh is rotated so its highest canonical vertex
    (lowest index on ties) lands exactly on the +z axis, which makes dome
    cuts reproducible.
    """
    if kind not in _SEED_BUILDERS:
        raise UnsupportedSeed(f"unknown seed kind {kind!r}; expected one of {SEED_KINDS}")
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    verts, faces = _SEED_BUILDERS[kind]()
    if vertex_up:
        top = int(np.lexsort((np.arange(len(verts)), -verts[:, 2]))[0])
        verts = verts @ rotation_to_z(verts[top]).T
    return build_mesh(verts * radius, faces, radius=radius)


def mirrored(P: Mesh) -> Mesh:
    """Reflection of P through the plane x = 0 (face cycles reversed to stay outward)."""
    verts = P.vertices.copy()
    verts[:, 0] *= -1.0
    ctr = P.center.copy()
    ctr[0] *= -1.0
    faces = [tuple(reversed(f)) for f in P.faces]
    return build_mesh(verts, faces, center=ctr, radius=P.radius, closed=P.closed)


def rotated(P: Mesh, matrix: np.ndarray) -> Mesh:
    """P transformed by a proper rotation matrix about its center."""
    R = np.asarray(matrix, dtype=float)
    verts = (P.vertices - P.center) @ R.T + P.center
    return build_mesh(verts, P.faces, center=P.center, radius=P.radius, closed=P.closed)


def dedupe_points(points: Iterable[Sequence[float]], eps: float) -> tuple[np.ndarray, list[int]]:
    """Merge points closer than eps; first occurrence wins.

    Uses a uniform spatial grid with cell size eps, checking the 27
    neighboring cells, so matches cannot be missed across cell borders.
    Returns the unique points and a map from old index to new.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    grid: dict[tuple[int, int, int], list[int]] = {}
    unique: list[np.ndarray] = []
    remap: list[int] = []
    inv = 1.0 / eps
    for p in np.asarray(list(points), dtype=float):
        cx, cy, cz = (int(math.floor(c * inv)) for c in p)
        hit = -1
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for dz in (-1, 0, 1):
                    for idx in grid.get((cx + dx, cy + dy, cz + dz), ()):
                        if float(np.linalg.norm(unique[idx] - p)) < eps:
                            hit = idx
                            break
                    if hit >= 0:
                        break
                if hit >= 0:
                    break
            if hit >= 0:
                break
        if hit < 0:
            hit = len(unique)
            unique.append(p)
            grid.setdefault((cx, cy, cz), []).append(hit)
        remap.append(hit)
    return np.array(unique), remap
