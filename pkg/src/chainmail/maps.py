"""Simplicial maps, fibres over closed simplices, and induced chain maps.

The main instance is ``phi_map``: from the directed-forest complex of the
directed augmented tree to the doubly disconnecting complex of the same
tree, sending each directed edge to its tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .complex import ComplexError, SimplicialComplex
from .graphs import Tree, delta_complex, direct_augmented, dumps_graph
from .homology import (
    boundary_columns,
    face_index,
    homology_report,
    matches_point,
    sparse_rank,
)
from .strata import disconnecting_complex

__all__ = [
    "ChainMapError",
    "SimplicialMap",
    "QuillenReport",
    "identity_map",
    "phi_map",
    "quillen_report",
    "check_chain_map",
    "is_simplicial",
    "fiber_subcomplex",
    "verify_quillen_fibers",
    "induced_chain_map",
    "mapping_cone_betti",
    "rational_homology_iso",
]


class ChainMapError(RuntimeError):
    """Induced chain map does not commute with the boundary (a bug, not a math failure)."""


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    assignment: Mapping[int, int]

    def __post_init__(self):
        missing = self.source.vertices - set(self.assignment)
        if missing:
            raise ComplexError(f"assignment is not total; missing {sorted(missing)}")
        stray = {self.assignment[v] for v in self.source.vertices} - self.target.vertices
        if stray:
            raise ComplexError(f"assignment leaves the target vertex set: {sorted(stray)}")

    def image(self, sigma) -> frozenset[int]:
        return frozenset(self.assignment[v] for v in sigma)


def identity_map(K: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(K, K, {v: v for v in K.vertices})


def phi_map(T: Tree) -> SimplicialMap:
    """Tail map from directed forests of the directed augmented tree to its D_2 complex."""
    source = delta_complex(direct_augmented(T))
    target = disconnecting_complex(T, 2)
    assignment = {label: edge[0] for label, edge in source.labels.items()}
    return SimplicialMap(source, target, assignment)


def is_simplicial(f: SimplicialMap) -> bool:
    return all(f.image(F) in f.target for F in f.source.facets)


def fiber_subcomplex(f: SimplicialMap, S) -> SimplicialComplex:
    """All source faces whose image lies in the closed simplex S."""
    S = frozenset(S)
    if S not in f.target:
        raise ComplexError(f"{sorted(S)} is not a face of the target")
    return f.source.induced(v for v in f.source.vertices if f.assignment[v] in S)


@dataclass
class QuillenReport:
    n_faces_checked: int = 0
    non_cone_fibers: list[dict] = field(default_factory=list)
    homology_match: bool | None = None
    tree: str | None = None

    @property
    def all_cones(self) -> bool:
        return not self.non_cone_fibers

    def as_dict(self) -> dict:
        return {
            "tree": self.tree,
            "n_faces_checked": self.n_faces_checked,
            "non_cone_fibers": self.non_cone_fibers,
            "homology_match": self.homology_match,
        }


def verify_quillen_fibers(f: SimplicialMap, *, compare_homology: bool = True) -> QuillenReport:
    """Check that the fibre over every nonempty closed target simplex is a cone.

    A fibre that is not a cone is recorded together with whether its
    reduced homology vanishes.
    """
    src_order = f.source.vertex_order
    src_masks = f.source.facet_masks()
    report = QuillenReport()
    for S in f.target.faces():
        if not S:
            continue
        S_set = frozenset(S)
        W = 0
        for i, v in enumerate(src_order):
            if f.assignment[v] in S_set:
                W |= 1 << i
        pieces = sorted({F & W for F in src_masks}, key=lambda m: -m.bit_count())
        tops: list[int] = []
        for m in pieces:
            if not any(m & t == m for t in tops):
                tops.append(m)
        common = W
        for t in tops:
            common &= t
        report.n_faces_checked += 1
        if not common:
            fibre = fiber_subcomplex(f, S)
            report.non_cone_fibers.append(
                {"face": list(S), "homologically_contractible": matches_point(fibre)}
            )
    if compare_homology:
        report.homology_match = homology_report(f.source) == homology_report(f.target)
    return report


def quillen_report(T: Tree) -> QuillenReport:
    report = verify_quillen_fibers(phi_map(T))
    report.tree = dumps_graph(T)
    return report


# -- chain level -----------------------------------------------------------


def _perm_sign(seq: list[int]) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def induced_chain_map(f: SimplicialMap, d: int) -> list[dict[int, int]]:
    """Columns of the degree-d chain map; simplices collapsed by f go to zero."""
    rows = face_index(f.target, d)
    cols = []
    for sigma in f.source.faces(d):
        image = [f.assignment[v] for v in sigma]
        if len(set(image)) < len(image):
            cols.append({})
            continue
        tau = tuple(sorted(image))
        cols.append({rows[tau]: _perm_sign(image)})
    return cols


def _compose(left: list[dict[int, int]], right: list[dict[int, int]]) -> list[dict[int, int]]:
    # (left o right), both column-sparse
    out = []
    for col in right:
        acc: dict[int, int] = {}
        for k, a in col.items():
            for i, b in left[k].items():
                acc[i] = acc.get(i, 0) + a * b
        out.append({i: v for i, v in acc.items() if v})
    return out


def check_chain_map(f: SimplicialMap) -> None:
    for d in range(0, f.source.dim + 1):
        lhs = _compose(boundary_columns(f.target, d), induced_chain_map(f, d))
        rhs = _compose(induced_chain_map(f, d - 1), boundary_columns(f.source, d))
        if lhs != rhs:
            raise ChainMapError(f"induced chain map does not commute with the boundary in degree {d}")


def mapping_cone_betti(f: SimplicialMap) -> dict[int, int]:
    """Rational Betti numbers of the mapping cone of the reduced chain map.

    They all vanish exactly when f induces isomorphisms on rational
    homology in every degree; a nonzero entry in degree d means f_d is not
    surjective or f_{d-1} is not injective.
    """
    if not is_simplicial(f):
        raise ComplexError("map is not simplicial")
    check_chain_map(f)
    C, D = f.source, f.target
    lo, hi = -1, max(C.dim + 1, D.dim)

    def cone_boundary(d: int) -> tuple[list[dict[int, int]], int]:
        # Cone_d = C_{d-1} + D_d  ->  Cone_{d-1} = C_{d-2} + D_{d-1}
        n_c_lower = len(C.faces(d - 2))
        cols = []
        for col_bd, col_f in zip(boundary_columns(C, d - 1), induced_chain_map(f, d - 1)):
            entry = {i: -v for i, v in col_bd.items()}
            for i, v in col_f.items():
                entry[n_c_lower + i] = v
            cols.append(entry)
        for col in boundary_columns(D, d):
            cols.append({n_c_lower + i: v for i, v in col.items()})
        return cols, len(cols)

    ranks = {}
    dims = {}
    for d in range(lo, hi + 2):
        cols, n = cone_boundary(d)
        dims[d] = n
        ranks[d] = sparse_rank(cols) if d > lo else 0
    return {d: dims[d] - ranks[d] - ranks.get(d + 1, 0) for d in range(lo, hi + 1)}


def rational_homology_iso(f: SimplicialMap) -> bool:
    return not any(mapping_cone_betti(f).values())
