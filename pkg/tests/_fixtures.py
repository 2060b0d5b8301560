"""Shared small complexes for the test suite.

The Betti numbers, cup ranks, and property-(A) verdicts asserted against
these complexes were frozen from an independent elimination oracle kept
outside the package.
"""

from __future__ import annotations

from itertools import combinations

from simpsurf.complex2 import Complex2

SPHERE_TRIS = [t for t in combinations(range(4), 3)]

RP2_TRIS = [(1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
            (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6)]

TORUS_TRIS = [tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)] + \
             [tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]

CIRCLE_EDGES = [(0, 7), (0, 8), (7, 8)]


def sphere() -> Complex2:
    return Complex2.from_triangles(SPHERE_TRIS)


def rp2() -> Complex2:
    return Complex2.from_triangles(RP2_TRIS)


def torus() -> Complex2:
    return Complex2.from_triangles(TORUS_TRIS)


def torus_with_circle() -> Complex2:
    return Complex2.from_triangles(TORUS_TRIS, extra_edges=CIRCLE_EDGES)


def torus_circle_sphere() -> Complex2:
    """Torus with a loose circle at vertex 0 and a sphere wedged on at 0."""
    sphere_at_0 = [(0, 101, 102), (0, 101, 103), (0, 102, 103), (101, 102, 103)]
    return Complex2.from_triangles(list(TORUS_TRIS) + sphere_at_0,
                                   extra_edges=CIRCLE_EDGES)
