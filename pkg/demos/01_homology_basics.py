"""
Complexes and their F2 homology
===============================

Build a few small 2-complexes and read off face counts, Euler
characteristics, and reduced Betti numbers over the two-element field.
"""

from simpsurf import Complex2, betti_numbers, catalog, parse_surface_id

# the boundary of a solid triangle: a circle made of three edges
circle = Complex2.from_triangles([], extra_edges=[(0, 1), (0, 2), (1, 2)])
print("circle:", circle.n_vertices, "vertices,", circle.n_edges, "edges,",
      "betti =", betti_numbers(circle))

# filling the triangle kills the 1-cycle
disk = Complex2.from_triangles([(0, 1, 2)])
print("disk:  betti =", betti_numbers(disk), " chi =",
      disk.euler_characteristic())

# the tetrahedron boundary is the smallest closed surface: a 2-sphere
sphere = catalog(parse_surface_id("S2"))
print("sphere: betti =", betti_numbers(sphere), " chi =",
      sphere.euler_characteristic())

# the 7-vertex torus has two independent 1-cycles and one 2-cycle
torus = catalog(parse_surface_id("M1"))
print("torus:  betti =", betti_numbers(torus), " chi =",
      torus.euler_characteristic())

# every edge of a closed surface lies in exactly two triangles,
# so 3 * alpha_2 = 2 * alpha_1
for name in ("S2", "N1", "M1", "N2", "N3", "M2"):
    k = catalog(parse_surface_id(name))
    assert 3 * k.n_triangles == 2 * k.n_edges
    print(f"{name}: alpha = ({k.n_vertices}, {k.n_edges}, {k.n_triangles}),"
          f" 3*alpha_2 == 2*alpha_1")
