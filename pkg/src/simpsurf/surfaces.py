"""Closed-surface recognition, classification, and model triangulations.

Recognition is purely combinatorial: a complex is a closed surface iff it
is connected, every edge lies in exactly two triangles, and every vertex
link is a single cycle.  Classification then reads off orientability by
propagating triangle orientations across shared edges and converts the
Euler characteristic into a genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import catalog_data
from .bounds import SurfaceId, minimal_triangle_count
from .complex2 import Complex2, Label, canon_edge, canon_triangle, label_key
from .homology import CochainVector, betti_numbers, cochain, has_property_a

__all__ = [
    "ClassificationResult",
    "is_closed_surface",
    "classify",
    "verify_orientation_witness",
    "expected_betti",
    "SurfaceHypothesesReport",
    "surface_hypotheses_report",
    "wedge",
    "attach_circle",
    "fundamental_class_cochain",
    "catalog",
]


@dataclass
class ClassificationResult:
    """Outcome of surface recognition plus, on success, the surface type."""

    is_surface: bool
    failure_reason: Optional[str]  # 'disconnected' | 'bad_edge_degree' | 'bad_link'
    surface: Optional[SurfaceId]
    orientation_witness: Optional[dict[tuple[Label, Label, Label], int]]


def _link_is_single_cycle(k: Complex2, v: Label) -> bool:
    nodes, ledges = k.link_of_vertex(v)
    if len(nodes) < 3 or len(nodes) != len(ledges):
        return False
    deg = {u: 0 for u in nodes}
    adj = {u: [] for u in nodes}
    for a, b in ledges:
        if a not in deg or b not in deg:
            return False
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if any(d != 2 for d in deg.values()):
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def is_closed_surface(k: Complex2) -> bool:
    return classify(k).is_surface


def _directed_boundary(t, sign: int):
    a, b, c = t
    cyc = (a, b, c) if sign > 0 else (a, c, b)
    return ((cyc[0], cyc[1]), (cyc[1], cyc[2]), (cyc[2], cyc[0]))


def classify(k: Complex2) -> ClassificationResult:
    """Recognize and classify a closed surface.

    Failures are reported in check order: connectivity, then edge degrees,
    then vertex links.  For orientable surfaces the witness maps each
    triangle to +1 or -1 giving a coherent orientation.
    """
    if len(k.connected_components()) != 1:
        return ClassificationResult(False, "disconnected", None, None)
    if any(k.edge_degree(e) != 2 for e in k.edges):
        return ClassificationResult(False, "bad_edge_degree", None, None)
    if any(not _link_is_single_cycle(k, v) for v in k.vertices):
        return ClassificationResult(False, "bad_link", None, None)

    sign: dict = {k.triangles[0]: 1}
    stack = [k.triangles[0]]
    orientable = True
    while stack and orientable:
        t = stack.pop()
        induced = _directed_boundary(t, sign[t])
        for d in induced:
            e = canon_edge(*d)
            for u in k.triangles_at_edge(e):
                if u == t:
                    continue
                # compatible orientations induce opposite directions on e
                want = 1 if (d[1], d[0]) in _directed_boundary(u, 1) else -1
                if u in sign:
                    if sign[u] != want:
                        orientable = False
                        break
                else:
                    sign[u] = want
                    stack.append(u)
            if not orientable:
                break
    assert len(sign) == k.n_triangles or not orientable

    chi = k.euler_characteristic()
    if orientable:
        assert chi % 2 == 0
        surface = SurfaceId(True, (2 - chi) // 2)
        return ClassificationResult(True, None, surface, dict(sign))
    return ClassificationResult(True, None, SurfaceId(False, 2 - chi), None)


def verify_orientation_witness(k: Complex2, witness: dict) -> bool:
    """Check a claimed coherent orientation edge by edge."""
    if set(witness) != set(k.triangles):
        return False
    for e in k.edges:
        ts = k.triangles_at_edge(e)
        if len(ts) != 2:
            return False
        d0 = _directed_boundary(ts[0], witness[ts[0]])
        d1 = _directed_boundary(ts[1], witness[ts[1]])
        forward = e if e in d0 else (e[1], e[0])
        if forward not in d0 or (forward[1], forward[0]) not in d1:
            return False
    return True


def expected_betti(surface: SurfaceId) -> tuple[int, int, int]:
    """Reduced F2 Betti numbers of a closed surface."""
    if surface.orientable:
        return (0, 2 * surface.genus, 1)
    return (0, surface.genus, 1)


@dataclass
class SurfaceHypothesesReport:
    """Separate necessary conditions for being a given surface.

    The F2 Betti numbers do not separate a torus from a Klein bottle, so
    the checks here are reported individually and cross-validated against
    the link/orientation classification, which stays the ground truth.
    """

    target: SurfaceId
    edge_degrees_ok: bool
    betti: tuple[int, int, int]
    betti_ok: bool
    cup_pairing_ok: bool
    classification: ClassificationResult

    @property
    def classification_matches(self) -> bool:
        return self.classification.surface == self.target

    @property
    def all_hypotheses_hold(self) -> bool:
        return self.edge_degrees_ok and self.betti_ok and self.cup_pairing_ok


def surface_hypotheses_report(k: Complex2, target: SurfaceId) -> SurfaceHypothesesReport:
    betti = betti_numbers(k)
    return SurfaceHypothesesReport(
        target=target,
        edge_degrees_ok=bool(k.edges) and all(k.edge_degree(e) == 2 for e in k.edges),
        betti=betti,
        betti_ok=betti == expected_betti(target),
        cup_pairing_ok=has_property_a(k).holds,
        classification=classify(k),
    )


# ------------------------------------------------------------ constructions

def wedge(k1: Complex2, v1: Label, k2: Complex2, v2: Label) -> Complex2:
    """One-point union identifying v2 with v1.

    With disjoint label sets the labels are kept as they are; on any clash
    the two sides are namespaced with 'L.'/'R.' string prefixes first.
    """
    if not k1.has_vertex(v1):
        raise ValueError(f"vertex {v1!r} is not in the first complex")
    if not k2.has_vertex(v2):
        raise ValueError(f"vertex {v2!r} is not in the second complex")
    shared = set(k1.vertices) & set(k2.vertices)
    if not shared or (v1 == v2 and shared == {v1}):
        k2r = k2 if v1 == v2 else k2.relabeled({v2: v1})
    else:
        k1 = k1.relabeled({v: f"L.{v}" for v in k1.vertices})
        k2r = k2.relabeled({v: f"R.{v}" for v in k2.vertices})
        k2r = k2r.relabeled({f"R.{v2}": f"L.{v1}"})
        v1 = f"L.{v1}"
    return Complex2(k1.vertices + k2r.vertices,
                    k1.edges + k2r.edges,
                    k1.triangles + k2r.triangles)


def attach_circle(k: Complex2, v: Label) -> Complex2:
    """Wedge on a triangle-free 3-cycle at v using two fresh vertices."""
    if not k.has_vertex(v):
        raise ValueError(f"vertex {v!r} is not in the complex")
    if all(isinstance(u, int) for u in k.vertices):
        top = max(k.vertices)
        a, b = top + 1, top + 2
    else:
        n = 0
        while f"c{n}.a" in k.vertices or f"c{n}.b" in k.vertices:
            n += 1
        a, b = f"c{n}.a", f"c{n}.b"
    return Complex2(k.vertices + (a, b),
                    k.edges + (canon_edge(v, a), canon_edge(v, b), canon_edge(a, b)),
                    k.triangles)


def fundamental_class_cochain(k: Complex2) -> CochainVector:
    """A 2-cochain generating H^2 of a closed surface.

    The indicator of any single triangle works: it evaluates to 1 on the
    sum-of-all-triangles cycle and coboundaries evaluate to 0 on cycles.
    The canonically smallest triangle is used.
    """
    if not classify(k).is_surface:
        raise ValueError("not a closed surface")
    return cochain(k, 2, [k.triangles[0]])


# ------------------------------------------------------------ catalog

def _subdivide(k: Complex2):
    """One barycentric subdivision with integer labels.

    Returns (subdivided, vertex_map, edge_midpoint_map): original vertices
    and edges keep track of their images so boundary paths can be refined.
    """
    new_id: dict = {}
    for v in k.vertices:
        new_id[(0, (v,))] = len(new_id)
    for e in k.edges:
        new_id[(1, e)] = len(new_id)
    for t in k.triangles:
        new_id[(2, t)] = len(new_id)
    tris = []
    for t in k.triangles:
        tid = new_id[(2, t)]
        for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            eid = new_id[(1, e)]
            for v in e:
                tris.append((new_id[(0, (v,))], eid, tid))
    extra_edges = []
    for e in k.maximal_edges():
        eid = new_id[(1, e)]
        extra_edges.extend(((new_id[(0, (e[0],))], eid), (new_id[(0, (e[1],))], eid)))
    extra_vertices = [new_id[(0, (v,))] for v in k.isolated_vertices()]
    sub = Complex2.from_triangles(tris, extra_edges, extra_vertices)
    vmap = {v: new_id[(0, (v,))] for v in k.vertices}
    emid = {e: new_id[(1, e)] for e in k.edges}
    return sub, vmap, emid


def _refine_path(path: list, vmap: dict, emid: dict) -> list:
    out = [vmap[path[0]]]
    for u, w in zip(path, path[1:]):
        out.append(emid[canon_edge(u, w)])
        out.append(vmap[w])
    return out


def _polygon_scheme_complex(word: list[tuple[str, int]]) -> Complex2:
    """Glue a polygon's sides by a letter scheme and triangulate.

    The polygon is coned from a center, barycentrically subdivided twice
    (which makes the side identifications simplicial), and the side paths
    are then merged by union-find.  Words shorter than 3 sides are not
    representable this way.
    """
    m = len(word)
    if m < 3:
        raise ValueError(f"need at least 3 sides, got {m}")
    counts: dict[str, int] = {}
    for letter, exp in word:
        if exp not in (1, -1):
            raise ValueError(f"exponent {exp} not in (1, -1)")
        counts[letter] = counts.get(letter, 0) + 1
    if any(c != 2 for c in counts.values()):
        raise ValueError("every letter must appear exactly twice")

    disk = Complex2.from_triangles([(0, 1 + i, 1 + (i + 1) % m) for i in range(m)])
    paths = {i: [1 + i, 1 + (i + 1) % m] for i in range(m)}
    for _ in range(2):
        disk, vmap, emid = _subdivide(disk)
        paths = {i: _refine_path(p, vmap, emid) for i, p in paths.items()}

    parent = list(range(disk.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    sides: dict[str, list[tuple[int, list]]] = {}
    for i, (letter, exp) in enumerate(word):
        sides.setdefault(letter, []).append((exp, paths[i]))
    for letter, pair in sides.items():
        (e1, p1), (e2, p2) = pair
        q1 = p1 if e1 == 1 else p1[::-1]
        q2 = p2 if e2 == 1 else p2[::-1]
        for x, y in zip(q1, q2):
            union(x, y)

    quotient = {v: find(v) for v in range(disk.n_vertices)}
    return Complex2.from_triangles(
        [tuple(quotient[v] for v in t) for t in disk.triangles])


def _orientable_word(genus: int) -> list[tuple[str, int]]:
    word = []
    for i in range(genus):
        word += [(f"a{i}", 1), (f"b{i}", 1), (f"a{i}", -1), (f"b{i}", -1)]
    return word


def _nonorientable_word(genus: int) -> list[tuple[str, int]]:
    word = []
    for i in range(genus):
        word += [(f"a{i}", 1), (f"a{i}", 1)]
    return word


_catalog_cache: dict[SurfaceId, Complex2] = {}


def catalog(surface: SurfaceId) -> Complex2:
    """A model triangulation of the surface, validated before it is returned.

    The six smallest surfaces (sphere, projective plane, torus, and the
    non-orientable genus 2 and 3 and orientable genus 2 surfaces) are
    stored minimal triangulations whose triangle counts meet
    minimal_triangle_count exactly; higher genera are built on demand from
    a polygon gluing scheme with two barycentric subdivisions and are not
    minimal.
    """
    if surface in _catalog_cache:
        return _catalog_cache[surface]
    stored = catalog_data.MINIMAL_TRIANGULATIONS.get(surface.name)
    if stored is not None:
        k = Complex2.from_triangles(stored)
        if k.n_triangles != minimal_triangle_count(surface):
            raise AssertionError(f"stored {surface} entry has {k.n_triangles} triangles")
    elif surface.orientable:
        k = _polygon_scheme_complex(_orientable_word(surface.genus))
    else:
        k = _polygon_scheme_complex(_nonorientable_word(surface.genus))
    got = classify(k)
    if got.surface != surface:
        raise AssertionError(f"catalog entry for {surface} classified as {got.surface}")
    _catalog_cache[surface] = k
    return k
