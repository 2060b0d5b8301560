"""Finite 2-dimensional simplicial complexes.

A Complex2 is an immutable value: vertex labels (ints or strings), edges,
and triangles, all stored in a single canonical order (integer labels
sort numerically and come before string labels, which sort
lexicographically).  Editing operations return new complexes; simplex ids
are positions in the canonical order and are NOT stable across edits, so
anything that must survive an edit is recorded by vertex tuple instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "Label",
    "SimplexId",
    "Complex2",
    "label_key",
    "canon_edge",
    "canon_triangle",
]

Label = Union[int, str]
Edge = tuple[Label, Label]
Triangle = tuple[Label, Label, Label]


def label_key(label: Label):
    """Sort key giving the canonical vertex order."""
    if isinstance(label, int):
        return (0, label, "")
    if isinstance(label, str):
        return (1, 0, label)
    raise TypeError(f"vertex label {label!r} is not an int or str")


def canon_edge(a: Label, b: Label) -> Edge:
    u, v = sorted((a, b), key=label_key)
    return (u, v)


def canon_triangle(a: Label, b: Label, c: Label) -> Triangle:
    u, v, w = sorted((a, b, c), key=label_key)
    return (u, v, w)


@dataclass(frozen=True)
class SimplexId:
    """Position of a simplex in the canonical order of one complex value."""

    dimension: int
    index: int

    def __post_init__(self) -> None:
        if self.dimension not in (0, 1, 2):
            raise ValueError(f"dimension {self.dimension} not in (0, 1, 2)")
        if self.index < 0:
            raise ValueError(f"negative index {self.index}")


class Complex2:
    """An abstract simplicial complex of dimension at most 2."""

    __slots__ = ("vertices", "edges", "triangles",
                 "_vertex_index", "_edge_index", "_triangle_index",
                 "_tris_at_edge", "_edges_at_vertex", "_tris_at_vertex")

    def __init__(self,
                 vertices: Iterable[Label],
                 edges: Iterable[Sequence[Label]] = (),
                 triangles: Iterable[Sequence[Label]] = ()) -> None:
        tri_set = set()
        for t in triangles:
            if len(set(t)) != 3:
                raise ValueError(f"degenerate triangle {tuple(t)!r}")
            tri_set.add(canon_triangle(*t))
        edge_set = set()
        for e in edges:
            if len(set(e)) != 2:
                raise ValueError(f"degenerate edge {tuple(e)!r}")
            edge_set.add(canon_edge(*e))
        vert_set = set(vertices)
        for v in vert_set:
            label_key(v)  # type check
        for t in tri_set:
            for e in combinations(t, 2):
                if e not in edge_set:
                    raise ValueError(f"edge {e!r} of triangle {t!r} is missing; "
                                     "use from_triangles to take closures")
        for e in edge_set:
            for v in e:
                if v not in vert_set:
                    raise ValueError(f"endpoint {v!r} of edge {e!r} is missing")

        self.vertices: tuple[Label, ...] = tuple(sorted(vert_set, key=label_key))
        self.edges: tuple[Edge, ...] = tuple(sorted(edge_set, key=lambda e: tuple(map(label_key, e))))
        self.triangles: tuple[Triangle, ...] = tuple(sorted(tri_set, key=lambda t: tuple(map(label_key, t))))
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._triangle_index = {t: i for i, t in enumerate(self.triangles)}

        tris_at_edge: dict[Edge, list[Triangle]] = {e: [] for e in self.edges}
        edges_at_vertex: dict[Label, list[Edge]] = {v: [] for v in self.vertices}
        tris_at_vertex: dict[Label, list[Triangle]] = {v: [] for v in self.vertices}
        for t in self.triangles:
            for e in combinations(t, 2):
                tris_at_edge[e].append(t)
            for v in t:
                tris_at_vertex[v].append(t)
        for e in self.edges:
            for v in e:
                edges_at_vertex[v].append(e)
        self._tris_at_edge = {e: tuple(ts) for e, ts in tris_at_edge.items()}
        self._edges_at_vertex = {v: tuple(es) for v, es in edges_at_vertex.items()}
        self._tris_at_vertex = {v: tuple(ts) for v, ts in tris_at_vertex.items()}

    # ------------------------------------------------------------ building

    @classmethod
    def from_triangles(cls,
                       triangles: Iterable[Sequence[Label]],
                       extra_edges: Iterable[Sequence[Label]] = (),
                       extra_vertices: Iterable[Label] = ()) -> "Complex2":
        """Build the closure of the given triangles plus loose edges/vertices."""
        tris = []
        edges = set()
        verts = set(extra_vertices)
        for e in extra_edges:
            if len(set(e)) != 2:
                raise ValueError(f"degenerate edge {tuple(e)!r}")
            edges.add(canon_edge(*e))
        for t in triangles:
            if len(set(t)) != 3:
                raise ValueError(f"degenerate triangle {tuple(t)!r}")
            t = canon_triangle(*t)
            tris.append(t)
            edges.update(combinations(t, 2))
        verts.update(v for e in edges for v in e)
        return cls(verts, edges, tris)

    def relabeled(self, mapping: Mapping[Label, Label]) -> "Complex2":
        """Apply an injective vertex relabeling; unmapped labels are kept."""
        image = [mapping.get(v, v) for v in self.vertices]
        if len(set(image)) != len(image):
            raise ValueError("relabeling is not injective on the vertex set")
        return Complex2(image,
                        [tuple(mapping.get(v, v) for v in e) for e in self.edges],
                        [tuple(mapping.get(v, v) for v in t) for t in self.triangles])

    # ------------------------------------------------------------ queries

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_triangles

    def has_vertex(self, v: Label) -> bool:
        return v in self._vertex_index

    def has_edge(self, e: Sequence[Label]) -> bool:
        return canon_edge(*e) in self._edge_index

    def has_triangle(self, t: Sequence[Label]) -> bool:
        return canon_triangle(*t) in self._triangle_index

    def simplex(self, sid: SimplexId):
        """The vertex tuple (or label, in dimension 0) behind an id."""
        pool = (self.vertices, self.edges, self.triangles)[sid.dimension]
        if sid.index >= len(pool):
            raise ValueError(f"{sid} out of range")
        return pool[sid.index]

    def simplex_id(self, simplex) -> SimplexId:
        if isinstance(simplex, (int, str)):
            return SimplexId(0, self._vertex_index[simplex])
        vs = tuple(simplex)
        if len(vs) == 2:
            return SimplexId(1, self._edge_index[canon_edge(*vs)])
        if len(vs) == 3:
            return SimplexId(2, self._triangle_index[canon_triangle(*vs)])
        raise ValueError(f"not a simplex: {simplex!r}")

    def _as_edge(self, e) -> Edge:
        if isinstance(e, SimplexId):
            if e.dimension != 1:
                raise ValueError(f"{e} is not an edge id")
            return self.edges[e.index]
        edge = canon_edge(*e)
        if edge not in self._edge_index:
            raise ValueError(f"edge {edge!r} is not in the complex")
        return edge

    def _as_triangle(self, t) -> Triangle:
        if isinstance(t, SimplexId):
            if t.dimension != 2:
                raise ValueError(f"{t} is not a triangle id")
            return self.triangles[t.index]
        tri = canon_triangle(*t)
        if tri not in self._triangle_index:
            raise ValueError(f"triangle {tri!r} is not in the complex")
        return tri

    def edge_degree(self, e) -> int:
        """Number of triangles containing the edge."""
        return len(self._tris_at_edge[self._as_edge(e)])

    def triangles_at_edge(self, e) -> tuple[Triangle, ...]:
        return self._tris_at_edge[self._as_edge(e)]

    def edges_at_vertex(self, v: Label) -> tuple[Edge, ...]:
        return self._edges_at_vertex[v]

    def triangles_at_vertex(self, v: Label) -> tuple[Triangle, ...]:
        return self._tris_at_vertex[v]

    def maximal_edges(self) -> tuple[Edge, ...]:
        """Edges contained in no triangle, in canonical order."""
        return tuple(e for e in self.edges if not self._tris_at_edge[e])

    def isolated_vertices(self) -> tuple[Label, ...]:
        return tuple(v for v in self.vertices if not self._edges_at_vertex[v])

    def link_of_vertex(self, v: Label) -> tuple[tuple[Label, ...], tuple[Edge, ...]]:
        """The link graph: neighbouring vertices and opposite edges of triangles."""
        if v not in self._vertex_index:
            raise ValueError(f"vertex {v!r} is not in the complex")
        nodes = sorted({u for e in self._edges_at_vertex[v] for u in e if u != v}, key=label_key)
        opp = sorted((canon_edge(*(set(t) - {v})) for t in self._tris_at_vertex[v]),
                     key=lambda e: tuple(map(label_key, e)))
        return tuple(nodes), tuple(opp)

    def connected_components(self) -> tuple[tuple[Label, ...], ...]:
        """Vertex sets of the components of the 1-skeleton, canonically ordered."""
        seen: set[Label] = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for e in self._edges_at_vertex[u]:
                    for w in e:
                        if w not in comp:
                            comp.add(w)
                            stack.append(w)
            seen |= comp
            comps.append(tuple(sorted(comp, key=label_key)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    # ------------------------------------------------------------ edits

    def remove_open_triangle(self, t) -> "Complex2":
        """Drop one 2-simplex, keeping all of its faces.  chi drops by 1."""
        tri = self._as_triangle(t)
        return Complex2(self.vertices, self.edges,
                        [u for u in self.triangles if u != tri])

    def delete_maximal_edge(self, e) -> "Complex2":
        """Drop a triangle-free edge, keeping its endpoints.  chi grows by 1."""
        edge = self._as_edge(e)
        if self._tris_at_edge[edge]:
            raise ValueError(f"edge {edge!r} lies in a triangle, not maximal")
        return Complex2(self.vertices,
                        [f for f in self.edges if f != edge],
                        self.triangles)

    def remove_isolated_vertex(self, v: Label) -> "Complex2":
        if v not in self._vertex_index:
            raise ValueError(f"vertex {v!r} is not in the complex")
        if self._edges_at_vertex[v] or self._tris_at_vertex[v]:
            raise ValueError(f"vertex {v!r} is not isolated")
        return Complex2([u for u in self.vertices if u != v], self.edges, self.triangles)

    def contract_maximal_edge(self, e) -> "Complex2":
        """Identify the endpoints of a maximal edge.

        Requires the endpoints to lie in different components of the complex
        with the edge removed; the quotient is then automatically simplicial
        (a common neighbour would be a connecting path) and chi is preserved.
        The surviving label is the canonically smaller endpoint.
        """
        edge = self._as_edge(e)
        if self._tris_at_edge[edge]:
            raise ValueError(f"edge {edge!r} lies in a triangle, not maximal")
        keep, gone = edge
        cut = self.delete_maximal_edge(edge)
        for comp in cut.connected_components():
            if keep in comp and gone in comp:
                raise ValueError(f"endpoints of {edge!r} stay connected without it; "
                                 "contraction would change homotopy")
        mapped_edges = [canon_edge(*(keep if v == gone else v for v in f)) for f in cut.edges]
        mapped_tris = [canon_triangle(*(keep if v == gone else v for v in t)) for t in cut.triangles]
        if len(set(mapped_edges)) != len(mapped_edges) or len(set(mapped_tris)) != len(mapped_tris):
            raise ValueError(f"contracting {edge!r} would identify distinct simplices")
        return Complex2([v for v in cut.vertices if v != gone], mapped_edges, mapped_tris)

    # ------------------------------------------------------------ value

    def _key(self):
        return (self.vertices, self.edges, self.triangles)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Complex2) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (f"Complex2(alpha0={self.n_vertices}, alpha1={self.n_edges}, "
                f"alpha2={self.n_triangles})")
