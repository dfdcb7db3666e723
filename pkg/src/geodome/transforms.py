"""Polyhedron transforms: polar dual, pyramid augmentation, dome truncation."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import (
    EmptyDome,
    FaceThroughCenter,
    StrictCutViolation,
    TriangularFacePresent,
)
from .mesh import DEFAULT_TOL, Mesh, TolerancePolicy, build_mesh

__all__ = ["dual", "gemmate", "truncate_dome"]


def _face_planes(P: Mesh, tol: TolerancePolicy, rho: float) -> tuple[np.ndarray, np.ndarray]:
    """Outward unit normal and center offset of every face plane."""
    normals = np.zeros((len(P.faces), 3))
    offsets = np.zeros(len(P.faces))
    for fi, face in enumerate(P.faces):
        pts = P.vertices[list(face)] - P.center
        n = np.zeros(3)
        for i in range(len(pts)):
            n += np.cross(pts[i], pts[(i + 1) % len(pts)])
        n /= np.linalg.norm(n)
        d = float(pts.mean(axis=0) @ n)
        if abs(d) <= tol.metric_eps * rho:
            raise FaceThroughCenter(f"face {fi} lies in a plane through the center")
        normals[fi] = n
        offsets[fi] = d
    return normals, offsets


def _polarity_radius(P: Mesh, tol: TolerancePolicy) -> float:
    """Radius of the canonical polarity sphere of P.

    The rule is chosen so that taking the dual twice is the identity: a mesh
    with only a circumsphere uses it, a mesh whose face planes are tangent to
    one common sphere uses that, and a mesh with both (the regular seeds)
    uses their geometric mean, which maps each such mesh to a dual inscribed
    in the same circumsphere.
    """
    scale = float(np.linalg.norm(P.vertices - P.center, axis=1).mean())
    _, offsets = _face_planes(P, tol, scale)
    span = float(offsets.max() - offsets.min())
    mean = float(offsets.mean())
    tangent = mean if mean > 0.0 and span <= tol.metric_eps * mean else None
    if P.radius is not None and tangent is not None:
        return math.sqrt(P.radius * tangent)
    if P.radius is not None:
        return P.radius
    if tangent is not None:
        return tangent
    raise ValueError(
        "no canonical polarity sphere: mesh is neither inscribed nor "
        "tangent to a common sphere; pass sphere_radius explicitly"
    )


def dual(
    P: Mesh,
    *,
    sphere_radius: float | None = None,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Mesh:
    """Polar dual with respect to a sphere about the center of P.

    Each face plane at foot distance d maps to the pole at distance
    rho^2 / d along the plane's perpendicular foot direction; each vertex
    maps to the face cycling through the poles of its incident faces,
    ordered by polar angle around the vertex direction (ties by face index).
    The sphere defaults to the circumsphere of P; a mesh that is not
    inscribed but has all face planes tangent to one sphere (as the dual of
    an inscribed mesh does) uses that tangent sphere, and a mesh with both
    spheres (a regular seed) uses their geometric mean, which keeps the dual
    inscribed in the same circumsphere.  All three branches make taking the
    dual twice return the original shape with no rescaling.
    """
    rho = sphere_radius if sphere_radius is not None else _polarity_radius(P, tol)
    if rho <= 0.0:
        raise ValueError("polarity sphere radius must be positive")
    normals, offsets = _face_planes(P, tol, rho)
    poles = P.center + normals * (rho * rho / offsets)[:, None]

    incident: list[list[int]] = [[] for _ in range(len(P.vertices))]
    for fi, face in enumerate(P.faces):
        for v in face:
            incident[v].append(fi)

    faces = []
    for vi, ring in enumerate(incident):
        axis = P.vertices[vi] - P.center
        axis = axis / np.linalg.norm(axis)
        helper = np.array([0.0, 0.0, 1.0])
        if abs(float(axis @ helper)) > 0.9:
            helper = np.array([1.0, 0.0, 0.0])
        t1 = np.cross(helper, axis)
        t1 /= np.linalg.norm(t1)
        t2 = np.cross(axis, t1)
        keyed = []
        for fi in ring:
            rel = poles[fi] - P.center
            keyed.append((math.atan2(float(rel @ t2), float(rel @ t1)), fi))
        faces.append(tuple(fi for _, fi in sorted(keyed)))

    dist = np.linalg.norm(poles - P.center, axis=1)
    mean = float(dist.mean())
    radius = mean if float(dist.max() - dist.min()) <= tol.metric_eps * mean else None
    return build_mesh(poles, faces, center=P.center, radius=radius, tol=tol)


def gemmate(P: Mesh, tol: TolerancePolicy = DEFAULT_TOL) -> Mesh:
    """Erect a right pyramid on every face, apex on the circumsphere.

    Each apex is the central projection of the face's perpendicular foot, so
    the pyramid is right and its slant edges are equal: every output face is
    an isosceles (or better) triangle.  Requires an inscribed mesh whose
    faces are all non-triangular.
    """
    if P.radius is None:
        raise ValueError("pyramid augmentation requires an inscribed mesh")
    for fi, face in enumerate(P.faces):
        if len(face) == 3:
            raise TriangularFacePresent(f"face {fi} is a triangle")
    normals, _ = _face_planes(P, tol, P.radius)
    apexes = P.center + normals * P.radius

    verts = np.vstack([P.vertices, apexes])
    base = len(P.vertices)
    faces = []
    for fi, face in enumerate(P.faces):
        apex = base + fi
        for i in range(len(face)):
            faces.append((face[i], face[(i + 1) % len(face)], apex))
    return build_mesh(verts, faces, center=P.center, radius=P.radius, tol=tol)


def truncate_dome(
    P: Mesh,
    height_fraction: float,
    *,
    axis: Sequence[float] = (0.0, 0.0, 1.0),
    strict: bool = False,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Mesh:
    """Keep the faces of an inscribed sphere above a horizontal cut.

    The cut height for a fraction h is z = R * (1 - 2h), measured along the
    axis from the center: h = 0.5 keeps the upper hemisphere, h = 1 the whole
    sphere.  A face is kept when its centroid is at or above the cut; no
    vertex is moved or clipped, so the result is an open shell whose boundary
    shows up in Mesh.boundary_edges.  With strict=True a kept face dipping
    below the cut by more than the tolerance is an error.
    """
    if P.radius is None:
        raise ValueError("dome truncation requires an inscribed mesh")
    if not 0.0 < height_fraction <= 1.0:
        raise ValueError("height_fraction must lie in (0, 1]")
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    z_cut = P.radius * (1.0 - 2.0 * height_fraction)

    heights = (P.vertices - P.center) @ a
    kept = [
        face
        for face in P.faces
        if float(heights[list(face)].mean()) >= z_cut
    ]
    if not kept:
        raise EmptyDome(f"no face centroid reaches the cut at fraction {height_fraction}")
    if len(kept) == len(P.faces):
        return P

    if strict:
        for face in kept:
            low = float(heights[list(face)].min())
            if low < z_cut - tol.metric_eps * P.radius:
                raise StrictCutViolation(
                    f"kept face {face} has a vertex {z_cut - low:.3e} below the cut"
                )

    used = sorted({v for face in kept for v in face})
    remap = {old: new for new, old in enumerate(used)}
    verts = P.vertices[used]
    faces = [tuple(remap[v] for v in face) for face in kept]
    return build_mesh(
        verts, faces, center=P.center, radius=P.radius, closed=False, tol=tol
    )
