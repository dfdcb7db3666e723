"""Shared fixtures: seeds and spheres reused across test modules."""

from __future__ import annotations

import pytest

from geodome import Mesh, project_to_sphere, seed, subdivide


def _sphere(m: int, n: int, kind: str = "icosahedron", radius: float = 1.0,
            vertex_up: bool = False) -> Mesh:
    base = seed(kind, radius, vertex_up=vertex_up)
    return project_to_sphere(subdivide(base, m, n))


@pytest.fixture(scope="session")
def make_sphere():
    """Factory building an (m, n) sphere from a seed kind."""
    return _sphere


@pytest.fixture(scope="session")
def icosa() -> Mesh:
    return seed("icosahedron")


@pytest.fixture(scope="session")
def sphere_2v() -> Mesh:
    return _sphere(2, 0)


@pytest.fixture(scope="session")
def sphere_3v() -> Mesh:
    return _sphere(3, 0)


@pytest.fixture(scope="session")
def sphere_21() -> Mesh:
    return _sphere(2, 1)
