"""Seed solids, mesh validation, and basic transforms."""

from __future__ import annotations

import numpy as np
import pytest

from geodome import (
    DEFAULT_TOL,
    DegenerateFace,
    EulerViolation,
    InvalidOrientation,
    Mesh,
    NonManifoldEdge,
    TolerancePolicy,
    UnsupportedSeed,
    build_mesh,
    congruent,
    dedupe_points,
    mesh_counts,
    mirrored,
    rotated,
    rotation_to_z,
    seed,
)

SEED_COUNTS = {
    "tetrahedron": (4, 6, 4),
    "octahedron": (6, 12, 8),
    "icosahedron": (12, 30, 20),
    "dodecahedron": (20, 30, 12),
    "truncated_icosahedron": (60, 90, 32),
}


@pytest.mark.parametrize("kind,counts", sorted(SEED_COUNTS.items()))
def test_seed_counts(kind, counts):
    P = seed(kind)
    assert P.counts == counts
    assert mesh_counts(P) == counts
    v, s, f = counts
    assert v - s + f == 2


@pytest.mark.parametrize("kind", sorted(SEED_COUNTS))
def test_seed_vertices_on_sphere(kind):
    P = seed(kind, radius=2.5)
    dist = np.linalg.norm(P.vertices - P.center, axis=1)
    np.testing.assert_allclose(dist, 2.5, rtol=0, atol=1e-12)
    assert P.radius == 2.5
    assert P.closed


def test_seed_radius_scales_exactly():
    small = seed("icosahedron", 1.0)
    big = seed("icosahedron", 10.0)
    np.testing.assert_array_equal(big.vertices, small.vertices * 10.0)


def test_seed_rejects_unknown_kind():
    with pytest.raises(UnsupportedSeed):
        seed("cube")


def test_seed_rejects_bad_radius():
    with pytest.raises(ValueError):
        seed("icosahedron", 0.0)
    with pytest.raises(ValueError):
        seed("icosahedron", -1.0)


def test_seed_vertex_up_puts_vertex_on_pole():
    for kind in sorted(SEED_COUNTS):
        P = seed(kind, radius=3.0, vertex_up=True)
        top = P.vertices[:, 2].max()
        assert top == pytest.approx(3.0, abs=1e-12)


def test_seed_vertex_up_is_a_rotation():
    flat = seed("icosahedron")
    up = seed("icosahedron", vertex_up=True)
    assert congruent(flat, up)


def test_truncated_icosahedron_face_mix():
    P = seed("truncated_icosahedron")
    sizes = sorted(len(f) for f in P.faces)
    assert sizes.count(5) == 12
    assert sizes.count(6) == 20
    lengths = P.edge_lengths()
    assert lengths.std() < 1e-12  # all edges equal


def test_dodecahedron_all_pentagons():
    P = seed("dodecahedron")
    assert all(len(f) == 5 for f in P.faces)
    assert set(int(d) for d in P.degrees()) == {3}


def test_mesh_arrays_read_only(icosa):
    with pytest.raises(ValueError):
        icosa.vertices[0, 0] = 9.9


def test_edges_sorted_and_unique(icosa):
    assert list(icosa.edges) == sorted(set(icosa.edges))
    assert all(a < b for a, b in icosa.edges)


def test_degenerate_face_rejected():
    verts = [(0, 0, 1), (1, 0, 0), (0, 1, 0), (0, 0, 0)]
    with pytest.raises(DegenerateFace):
        build_mesh(verts, [(0, 1, 1)], closed=False)
    with pytest.raises(DegenerateFace):
        build_mesh(verts, [(0, 1)], closed=False)
    with pytest.raises(DegenerateFace):
        build_mesh(verts, [(0, 1, 7)], closed=False)


def test_open_mesh_as_closed_violates_euler():
    verts = [(0, 0, 1), (1, 0, 1), (0, 1, 1)]
    with pytest.raises(EulerViolation):
        build_mesh(verts, [(0, 1, 2)], closed=True)
    open_mesh = build_mesh(verts, [(0, 1, 2)], closed=False)
    assert not open_mesh.closed
    assert len(open_mesh.boundary_edges) == 3


def test_three_faces_on_one_edge_non_manifold():
    verts = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
    faces = [(0, 1, 2), (0, 3, 1), (0, 1, 4)]
    with pytest.raises(NonManifoldEdge):
        build_mesh(verts, faces, closed=False)


def test_flipped_face_rejected():
    t = seed("tetrahedron")
    faces = list(t.faces)
    faces[0] = faces[0][::-1]
    with pytest.raises(InvalidOrientation):
        build_mesh(t.vertices, faces)


def test_inscribed_radius_enforced():
    t = seed("tetrahedron")
    verts = t.vertices.copy()
    verts[0] *= 1.001
    with pytest.raises(ValueError):
        build_mesh(verts, t.faces, radius=1.0)


def test_tolerance_policy_validation():
    with pytest.raises(ValueError):
        TolerancePolicy(metric_eps=0.0)
    with pytest.raises(ValueError):
        TolerancePolicy(rank_eps=-1e-9)
    assert DEFAULT_TOL.metric_eps == 1e-9
    assert DEFAULT_TOL.rank_eps == 1e-10


def test_mirrored_flips_and_revalidates(icosa):
    M = mirrored(icosa)
    assert isinstance(M, Mesh)
    assert M.counts == icosa.counts
    np.testing.assert_array_equal(M.vertices[:, 0], -icosa.vertices[:, 0])
    np.testing.assert_array_equal(M.vertices[:, 1:], icosa.vertices[:, 1:])


def test_rotated_preserves_congruence(icosa):
    R = rotation_to_z((1.0, 2.0, 2.0))
    np.testing.assert_allclose(R @ R.T, np.eye(3), atol=1e-12)
    assert np.linalg.det(R) == pytest.approx(1.0)
    Q = rotated(icosa, R)
    assert congruent(icosa, Q)


def test_rotation_to_z_sends_direction_to_pole():
    for d in [(0, 0, 1), (0, 0, -1), (1, 0, 0), (3, -2, 5)]:
        R = rotation_to_z(d)
        u = np.asarray(d, dtype=float)
        u /= np.linalg.norm(u)
        np.testing.assert_allclose(R @ u, [0, 0, 1], atol=1e-12)


def test_dedupe_points_collapses_near_duplicates():
    pts = [(0, 0, 0), (1, 0, 0), (0, 0, 1e-12), (1, 0, 0), (0, 1, 0)]
    unique, remap = dedupe_points(pts, eps=1e-9)
    assert len(unique) == 3
    assert remap == [0, 1, 0, 1, 2]
    np.testing.assert_array_equal(unique[remap[4]], [0, 1, 0])
