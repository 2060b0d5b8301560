"""Reduction of a 2-complex while preserving chosen 2-cochain functionals.

The pipeline removes triangles lying in cycles the functionals cannot see
(kills), performs free-face collapses, and eliminates edges belonging to
no triangle, by contraction when the edge is a bridge and by deletion
otherwise.  Each deletion splits off a circle wedge summand, so after m
deletions the fundamental group of the input is the free product of the
output's fundamental group with a free group of rank m.

The one invariant everything here is built around: the functionals stay
surjective on the cycle space of 2-chains after every single step.  It is
re-checked after each step, not just trusted, along with the Betti
bookkeeping (kills lower b2 only, deletions lower b1 only).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .complex2 import Complex2, Triangle, canon_triangle
from .gf2 import Gf2Matrix, Gf2Vector
from .homology import CochainVector, betti_numbers, boundary_matrix, homology_summary

__all__ = [
    "PreservationSpec",
    "kill_step",
    "collapse_all",
    "eliminate_maximal_edges",
    "EliminationResult",
    "ReductionTrace",
    "simplify_pipeline",
]


@dataclass(frozen=True)
class PreservationSpec:
    """A family of functionals on 2-chains, each given by its triangle support.

    Supports may mention triangles that are no longer present; evaluation
    silently restricts to the complex at hand.  The family is meaningful
    for reduction when its restriction to the cycle space is surjective.
    """

    supports: tuple[frozenset, ...]

    @classmethod
    def from_triangle_lists(cls, lists: Iterable[Iterable]) -> "PreservationSpec":
        sups = []
        for sup in lists:
            for t in sup:
                if len(set(t)) != 3:
                    raise ValueError(f"degenerate triangle {tuple(t)!r} in a support")
            sups.append(frozenset(canon_triangle(*t) for t in sup))
        return cls(tuple(sups))

    @classmethod
    def from_cochain_vectors(cls, k: Complex2,
                             vectors: Iterable[CochainVector]) -> "PreservationSpec":
        sups = []
        for v in vectors:
            if v.dimension != 2:
                raise ValueError("functionals must be 2-cochains")
            sups.append(frozenset(k.triangles[i] for i in v.coeffs.support()))
        return cls(tuple(sups))

    @classmethod
    def dual_basis(cls, k: Complex2, rank: Optional[int] = None) -> "PreservationSpec":
        """The first `rank` members of a dual basis for the 2-cocycle classes.

        With the full rank (the default) nothing is killable: the spec pins
        every 2-cycle class of the complex.
        """
        summary = homology_summary(k)
        if rank is None:
            rank = summary.b2
        if not 0 <= rank <= summary.b2:
            raise ValueError(f"rank {rank} outside 0..{summary.b2}")
        return cls.from_cochain_vectors(k, summary.cocycle_reps[2][:rank])

    @property
    def rank(self) -> int:
        return len(self.supports)

    def evaluation_matrix(self, k: Complex2) -> Gf2Matrix:
        """Row i evaluates functional i on the triangle basis of C2(k)."""
        rows = []
        for sup in self.supports:
            bits = 0
            for j, t in enumerate(k.triangles):
                if t in sup:
                    bits |= 1 << j
            rows.append(bits)
        return Gf2Matrix(len(self.supports), k.n_triangles, tuple(rows))

    def _cycle_values(self, k: Complex2) -> tuple[Gf2Matrix, list[Gf2Vector]]:
        """Evaluations on a basis of the cycle space, column per basis cycle."""
        cycles = boundary_matrix(k, 2).kernel_basis()
        ev = self.evaluation_matrix(k)
        cols = Gf2Matrix.from_rows([ev.apply(z) for z in cycles],
                                   n_cols=self.rank).transpose()
        return cols, cycles

    def is_surjective_on_cycles(self, k: Complex2) -> bool:
        values, _ = self._cycle_values(k)
        return values.rank() == self.rank

    def mapped(self, relabel: dict) -> "PreservationSpec":
        return PreservationSpec(tuple(
            frozenset(canon_triangle(*(relabel.get(v, v) for v in t)) for t in sup)
            for sup in self.supports))


def _invisible_cycle(k: Complex2, spec: PreservationSpec) -> Optional[Gf2Vector]:
    """A nonzero 2-cycle on which every functional vanishes, or None."""
    values, cycles = spec._cycle_values(k)
    kernel = values.kernel_basis()
    if not kernel:
        return None
    invisible = Gf2Vector(k.n_triangles)
    for j in kernel[0].support():
        invisible ^= cycles[j]
    return invisible


def kill_step(k: Complex2, spec: PreservationSpec) -> tuple[Complex2, Triangle]:
    """Remove one triangle from a cycle invisible to every functional.

    The cycle is the first kernel vector of the evaluation on the cycle
    space; the canonically smallest triangle in its support is removed.
    Adding the invisible cycle to any preimage shows surjectivity
    survives, and only b2 changes (down by one).

    Raises ValueError when the functionals are not surjective or already
    see the whole cycle space (no excess to kill).
    """
    if not spec.is_surjective_on_cycles(k):
        raise ValueError("functionals are not surjective on the cycle space")
    invisible = _invisible_cycle(k, spec)
    if invisible is None:
        raise ValueError("no excess cycles: every 2-cycle is seen by the functionals")
    sigma = k.triangles[min(invisible.support())]
    return k.remove_open_triangle(sigma), sigma


def collapse_all(k: Complex2) -> tuple[Complex2, tuple]:
    """Free-face collapses to a fixpoint; returns the (face, coface) pairs.

    An edge in exactly one triangle collapses with that triangle; a vertex
    in exactly one edge collapses with that edge; edge collapses are
    preferred and scanning is in canonical order.  Cycles of 2-chains are
    untouched: a cycle must vanish on the triangle of any free edge.
    """
    pairs = []
    while True:
        free_edge = next((e for e in k.edges if k.edge_degree(e) == 1), None)
        if free_edge is not None:
            t = k.triangles_at_edge(free_edge)[0]
            k = Complex2(k.vertices,
                         (e for e in k.edges if e != free_edge),
                         (u for u in k.triangles if u != t))
            pairs.append((free_edge, t))
            continue
        free_vertex = next(
            (v for v in k.vertices if len(k.edges_at_vertex(v)) == 1), None)
        if free_vertex is not None:
            e = k.edges_at_vertex(free_vertex)[0]
            k = Complex2((v for v in k.vertices if v != free_vertex),
                         (f for f in k.edges if f != e),
                         k.triangles)
            pairs.append((free_vertex, e))
            continue
        return k, tuple(pairs)


@dataclass
class EliminationResult:
    """Outcome of draining maximal edges (and the collapses that follow)."""

    result: Complex2
    spec: Optional[PreservationSpec]  # input spec mapped through contractions
    collapses: tuple
    contractions: tuple
    deleted_edges: tuple
    snapshots: tuple

    @property
    def free_rank(self) -> int:
        """Rank m of the split-off free factor: one circle per deleted edge."""
        return len(self.deleted_edges)


def eliminate_maximal_edges(k: Complex2,
                            spec: Optional[PreservationSpec] = None) -> EliminationResult:
    """Remove every triangle-free edge, then collapse, to a joint fixpoint.

    A maximal edge whose endpoints fall into different components without
    it is contracted (a homotopy equivalence); otherwise it closes a cycle
    and is deleted, splitting off a circle wedge summand.  Functionals in
    `spec`, when given, are renamed through each contraction.  The books
    are asserted: b1 drops by exactly the number of deletions, b0 and b2
    do not move, and the output has no free faces and no maximal edges.
    """
    b_in = betti_numbers(k)
    chi_in = k.euler_characteristic()
    collapses: list = []
    contractions: list = []
    deleted: list = []
    snapshots: list = []
    while True:
        loose = k.maximal_edges()
        if loose:
            e = loose[0]
            keep, gone = e
            cut = k.delete_maximal_edge(e)
            separated = all(
                not (keep in comp and gone in comp)
                for comp in cut.connected_components())
            if separated:
                k = k.contract_maximal_edge(e)
                if spec is not None:
                    spec = spec.mapped({gone: keep})
                contractions.append(e)
                snapshots.append(("contract", betti_numbers(k)))
            else:
                k = cut
                deleted.append(e)
                snapshots.append(("delete", betti_numbers(k)))
            continue
        k2, pairs = collapse_all(k)
        if pairs:
            k = k2
            collapses.extend(pairs)
            snapshots.append(("collapse", betti_numbers(k)))
            continue
        break

    b_out = betti_numbers(k)
    assert b_out == (b_in[0], b_in[1] - len(deleted), b_in[2])
    assert k.euler_characteristic() == chi_in + len(deleted)
    assert not k.maximal_edges()
    assert all(k.edge_degree(e) != 1 for e in k.edges)
    return EliminationResult(
        result=k,
        spec=spec,
        collapses=tuple(collapses),
        contractions=tuple(contractions),
        deleted_edges=tuple(deleted),
        snapshots=tuple(snapshots),
    )


@dataclass
class ReductionTrace:
    """Everything the pipeline did, with the books that justify it.

    Snapshots hold ("input" | "kill" | "collapse" | "contract" | "delete",
    (b0, b1, b2)) after each step; across the kill entries b0 and b1 stay
    fixed while b2 steps down by one each time.
    """

    input_complex: Complex2
    result: Complex2
    spec: PreservationSpec  # final functionals, renamed through contractions
    killed_triangles: tuple[Triangle, ...]
    collapses: tuple
    contractions: tuple
    deleted_edges: tuple
    snapshots: tuple
    input_disconnected: bool

    @property
    def free_rank(self) -> int:
        """Rank m of the split-off free factor: one circle per deleted edge."""
        return len(self.deleted_edges)


def simplify_pipeline(k: Complex2, spec: Optional[PreservationSpec] = None,
                      target_rank: Optional[int] = None) -> ReductionTrace:
    """Kills first, then collapses and maximal-edge elimination to a fixpoint.

    Without an explicit spec a dual basis of the requested rank is used
    (full rank when target_rank is None, which disables kills).  Raises
    ValueError when the spec is not surjective on cycles to begin with.

    The result evaluates the functionals identically on its cycle space,
    satisfies chi(result) = chi(input) - |killed| + free_rank, and has
    pi1(input) = pi1(result) * F(free_rank) componentwise; the trace flags
    disconnected inputs since the free-product reading is per component.
    """
    if spec is None:
        spec = PreservationSpec.dual_basis(k, target_rank)
    elif target_rank is not None and spec.rank != target_rank:
        raise ValueError("target_rank disagrees with the explicit spec")
    if not spec.is_surjective_on_cycles(k):
        raise ValueError("functionals are not surjective on the cycle space")

    input_complex = k
    snapshots: list = [("input", betti_numbers(k))]
    killed: list[Triangle] = []
    while _invisible_cycle(k, spec) is not None:
        b_before = betti_numbers(k)
        k, sigma = kill_step(k, spec)
        killed.append(sigma)
        b_after = betti_numbers(k)
        snapshots.append(("kill", b_after))
        assert b_after == (b_before[0], b_before[1], b_before[2] - 1)
        assert spec.is_surjective_on_cycles(k)

    k, pairs = collapse_all(k)
    if pairs:
        snapshots.append(("collapse", betti_numbers(k)))
    elimination = eliminate_maximal_edges(k, spec)
    k = elimination.result
    spec = elimination.spec
    snapshots.extend(elimination.snapshots)
    assert spec.is_surjective_on_cycles(k)

    b_in = snapshots[0][1]
    b_out = betti_numbers(k)
    assert k.euler_characteristic() == (
        input_complex.euler_characteristic() - len(killed) + elimination.free_rank)
    assert b_out == (b_in[0], b_in[1] - elimination.free_rank, b_in[2] - len(killed))
    return ReductionTrace(
        input_complex=input_complex,
        result=k,
        spec=spec,
        killed_triangles=tuple(killed),
        collapses=pairs + elimination.collapses,
        contractions=elimination.contractions,
        deleted_edges=elimination.deleted_edges,
        snapshots=tuple(snapshots),
        input_disconnected=not input_complex.is_connected() and input_complex.n_vertices > 0,
    )
