"""Stored face lists for minimal surface triangulations.

Keys are surface names as produced by SurfaceId.name.  Each entry attains
the minimal triangle count for its surface; catalog() re-validates both
the classification and the count at load time.  The S2, N1 and M1 entries
are classical; the N2, N3 and M2 entries were produced by greedy
link-condition edge contractions from polygon-scheme triangulations and
then frozen here.
"""

MINIMAL_TRIANGULATIONS: dict[str, tuple[tuple[int, int, int], ...]] = {
    # boundary of the 3-simplex
    "S2": (
        (0, 1, 2),
        (0, 1, 3),
        (0, 2, 3),
        (1, 2, 3),
    ),
    # 6-vertex projective plane, the icosahedron quotient
    "N1": (
        (1, 2, 3),
        (1, 2, 4),
        (1, 3, 5),
        (1, 4, 6),
        (1, 5, 6),
        (2, 3, 6),
        (2, 4, 5),
        (2, 5, 6),
        (3, 4, 5),
        (3, 4, 6),
    ),
    # 7-vertex torus: orbits of {0,1,3} and {0,2,3} modulo 7
    "M1": tuple(
        tuple(sorted(((i + d) % 7 for d in offsets)))
        for offsets in ((0, 1, 3), (0, 2, 3))
        for i in range(7)
    ),
    # 8-vertex Klein bottle
    "N2": (
        (0, 1, 5),
        (0, 1, 7),
        (0, 2, 5),
        (0, 2, 6),
        (0, 3, 4),
        (0, 3, 6),
        (0, 4, 7),
        (1, 2, 3),
        (1, 2, 7),
        (1, 3, 6),
        (1, 4, 5),
        (1, 4, 6),
        (2, 3, 4),
        (2, 4, 6),
        (2, 5, 7),
        (4, 5, 7),
    ),
    # 9-vertex non-orientable genus 3 surface
    "N3": (
        (0, 1, 2),
        (0, 1, 7),
        (0, 2, 6),
        (0, 3, 5),
        (0, 3, 6),
        (0, 5, 8),
        (0, 7, 8),
        (1, 2, 4),
        (1, 3, 6),
        (1, 3, 7),
        (1, 4, 5),
        (1, 5, 8),
        (1, 6, 8),
        (2, 3, 4),
        (2, 3, 5),
        (2, 5, 6),
        (3, 4, 8),
        (3, 7, 8),
        (4, 5, 6),
        (4, 6, 8),
    ),
    # 10-vertex orientable genus 2 surface
    "M2": (
        (0, 1, 2),
        (0, 1, 3),
        (0, 2, 7),
        (0, 3, 9),
        (0, 4, 6),
        (0, 4, 7),
        (0, 6, 8),
        (0, 8, 9),
        (1, 2, 9),
        (1, 3, 5),
        (1, 4, 5),
        (1, 4, 7),
        (1, 6, 8),
        (1, 6, 9),
        (1, 7, 8),
        (2, 3, 6),
        (2, 3, 8),
        (2, 4, 5),
        (2, 4, 6),
        (2, 5, 7),
        (2, 8, 9),
        (3, 5, 7),
        (3, 6, 9),
        (3, 7, 8),
    ),
}
