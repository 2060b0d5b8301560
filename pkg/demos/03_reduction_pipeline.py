"""
Reducing a wedge back to its surface
====================================

Start from K = torus with a circle attached and a tetrahedron boundary
wedged on.  A preservation functional pins the torus H^2 class; the
pipeline kills the unpreserved sphere class, collapses the debris, and
eliminates the circle's loose edges, counting them in m.
"""

from simpsurf import (PreservationSpec, attach_circle, betti_numbers, catalog,
                      classify, fundamental_class_cochain, parse_surface_id,
                      simplify_pipeline, wedge)

base = catalog(parse_surface_id("M1"))
k = attach_circle(base, 0)
bubble = catalog(parse_surface_id("S2")).relabeled({i: 100 + i for i in range(4)})
k = wedge(k, 0, bubble, 100)
print("K:", k.n_vertices, "vertices,", k.n_triangles, "triangles,",
      "betti =", betti_numbers(k))

# the functional is the indicator of one torus triangle: it evaluates to 1
# on the torus fundamental class and to 0 on the bubble class
spec = PreservationSpec.from_cochain_vectors(base,
                                             [fundamental_class_cochain(base)])

trace = simplify_pipeline(k, spec)
print("killed triangles:", trace.killed_triangles)
print("collapse pairs:  ", len(trace.collapses))
print("contractions:    ", trace.contractions)
print("deleted edges:   ", trace.deleted_edges, " -> m =", trace.free_rank)
for label, betti in trace.snapshots:
    print(f"  after {label:<9} betti = {betti}")

reduced = trace.result
print("L:", reduced.n_vertices, "vertices,", reduced.n_triangles,
      "triangles, classifies as", classify(reduced).surface.name)

# chi bookkeeping: each kill costs 1, each deletion refunds 1
assert (reduced.euler_characteristic()
        == k.euler_characteristic() - len(trace.killed_triangles)
        + len(trace.deleted_edges))
print("chi books balance:",
      f"{reduced.euler_characteristic()} == {k.euler_characteristic()}"
      f" - {len(trace.killed_triangles)} + {len(trace.deleted_edges)}")
