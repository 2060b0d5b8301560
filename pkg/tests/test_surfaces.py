"""Surface recognition, classification, constructions, and the catalog."""

import pytest

from simpsurf.bounds import SurfaceId, minimal_triangle_count, parse_surface_id
from simpsurf.complex2 import Complex2
from simpsurf.homology import betti_numbers, h2_coordinates, homology_summary
from simpsurf.surfaces import (_nonorientable_word, _orientable_word,
                               _polygon_scheme_complex, _subdivide, attach_circle,
                               catalog, classify, expected_betti,
                               fundamental_class_cochain, is_closed_surface,
                               surface_hypotheses_report, verify_orientation_witness,
                               wedge)

from _fixtures import SPHERE_TRIS, sphere, torus, torus_with_circle

MINIMAL_NAMES = ("S2", "N1", "M1", "N2", "N3", "M2")


def test_classify_catalog_entries():
    for name in MINIMAL_NAMES:
        surface = parse_surface_id(name)
        result = classify(catalog(surface))
        assert result.is_surface
        assert result.failure_reason is None
        assert result.surface == surface


def test_catalog_entries_are_minimal():
    for name in MINIMAL_NAMES:
        surface = parse_surface_id(name)
        assert catalog(surface).n_triangles == minimal_triangle_count(surface)


def test_catalog_caches():
    assert catalog(parse_surface_id("M1")) is catalog(parse_surface_id("M1"))


def test_orientation_witnesses():
    for name in ("S2", "M1", "M2"):
        k = catalog(parse_surface_id(name))
        witness = classify(k).orientation_witness
        assert witness is not None
        assert verify_orientation_witness(k, witness)
        # flipping a single triangle breaks coherence
        bad = dict(witness)
        first = k.triangles[0]
        bad[first] = -bad[first]
        assert not verify_orientation_witness(k, bad)


def test_nonorientable_have_no_witness():
    for name in ("N1", "N2", "N3"):
        result = classify(catalog(parse_surface_id(name)))
        assert result.orientation_witness is None


def test_classify_failure_reasons():
    two = Complex2.from_triangles(
        [t for t in SPHERE_TRIS] + [tuple(v + 10 for v in t) for t in SPHERE_TRIS])
    assert classify(two).failure_reason == "disconnected"
    assert classify(torus_with_circle()).failure_reason == "bad_edge_degree"
    assert classify(Complex2.from_triangles([(0, 1, 2)])).failure_reason == "bad_edge_degree"
    pinched = wedge(sphere(), 0, sphere(), 0)
    assert classify(pinched).failure_reason == "bad_link"
    assert not is_closed_surface(pinched)
    assert is_closed_surface(sphere())


def test_expected_betti_matches_homology():
    for name in MINIMAL_NAMES:
        surface = parse_surface_id(name)
        assert betti_numbers(catalog(surface)) == expected_betti(surface)


def test_hypotheses_report_torus_vs_klein():
    # F2 Betti numbers cannot tell M1 from N2; the report shows the
    # hypothesis checks passing while classification disagrees.
    k = torus()
    report = surface_hypotheses_report(k, parse_surface_id("N2"))
    assert report.edge_degrees_ok
    assert report.betti_ok
    assert report.cup_pairing_ok
    assert report.all_hypotheses_hold
    assert not report.classification_matches
    right = surface_hypotheses_report(k, parse_surface_id("M1"))
    assert right.all_hypotheses_hold and right.classification_matches


def test_hypotheses_report_failures():
    report = surface_hypotheses_report(torus_with_circle(), parse_surface_id("M1"))
    assert not report.edge_degrees_ok
    assert report.betti == (0, 3, 1)
    assert not report.betti_ok
    assert not report.cup_pairing_ok
    assert not report.classification_matches


def test_wedge_disjoint_labels():
    other = sphere().relabeled({v: v + 100 for v in range(4)})
    w = wedge(torus(), 0, other, 100)
    assert w.euler_characteristic() == 0 + 2 - 1
    assert betti_numbers(w) == (0, 2, 2)
    assert w.has_vertex(0) and not w.has_vertex(100)


def test_wedge_point_is_identity():
    point = Complex2((99,), (), ())
    assert wedge(torus(), 3, point, 99) == torus()


def test_wedge_label_clash_namespaces():
    w = wedge(torus(), 0, torus(), 0)
    assert w.euler_characteristic() == -1
    assert betti_numbers(w) == (0, 4, 2)
    assert w.has_vertex("L.0") and w.has_vertex("R.1")
    assert not w.has_vertex("R.0")


def test_wedge_same_label_same_vertex():
    other = sphere().relabeled({0: 0, 1: 11, 2: 12, 3: 13})
    w = wedge(torus(), 0, other, 0)
    assert w.euler_characteristic() == 1
    assert w.has_vertex(0) and w.has_vertex(11)


def test_wedge_rejects_missing_vertices():
    with pytest.raises(ValueError):
        wedge(torus(), 77, sphere(), 0)
    with pytest.raises(ValueError):
        wedge(torus(), 0, sphere(), 77)


def test_attach_circle():
    k = attach_circle(torus(), 0)
    assert k.n_vertices == 9
    assert k.n_edges == torus().n_edges + 3
    assert k.n_triangles == torus().n_triangles
    assert betti_numbers(k) == (0, 3, 1)
    assert len(k.maximal_edges()) == 3
    k2 = attach_circle(k, 0)
    assert betti_numbers(k2) == (0, 4, 1)
    with pytest.raises(ValueError):
        attach_circle(torus(), 77)


def test_fundamental_class_cochain():
    for name in ("M1", "N1", "M2"):
        k = catalog(parse_surface_id(name))
        w = fundamental_class_cochain(k)
        summary = homology_summary(k)
        assert not h2_coordinates(summary, w).is_zero()
    with pytest.raises(ValueError):
        fundamental_class_cochain(torus_with_circle())


def test_polygon_scheme_words():
    kt = _polygon_scheme_complex(_orientable_word(1))
    assert classify(kt).surface == SurfaceId(True, 1)
    kk = _polygon_scheme_complex(_nonorientable_word(2))
    assert classify(kk).surface == SurfaceId(False, 2)


def test_polygon_scheme_validation():
    with pytest.raises(ValueError):
        _polygon_scheme_complex([("a", 1), ("a", -1)])  # too short
    with pytest.raises(ValueError):
        _polygon_scheme_complex([("a", 1), ("a", 1), ("b", 1)])  # b once
    with pytest.raises(ValueError):
        _polygon_scheme_complex([("a", 2), ("a", 1), ("b", 1), ("b", 1)])


def test_generic_catalog_entries():
    m3 = catalog(SurfaceId(True, 3))
    assert classify(m3).surface == SurfaceId(True, 3)
    n4 = catalog(SurfaceId(False, 4))
    assert classify(n4).surface == SurfaceId(False, 4)
    assert betti_numbers(n4) == (0, 4, 1)


def test_subdivision_counts():
    sub, vmap, emid = _subdivide(torus())
    assert sub.n_triangles == 6 * 14
    assert sub.euler_characteristic() == 0
    assert classify(sub).surface == SurfaceId(True, 1)
    assert len(vmap) == 7 and len(emid) == 21
