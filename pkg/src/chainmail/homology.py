"""Exact integral reduced homology.

Boundary operators use the reduced convention: the empty face is the
unique (-1)-simplex and every vertex has boundary equal to it. All
arithmetic is on Python integers.

Two Smith normal form routines are provided. ``smith_normal_form`` is the
dense algorithm with smallest-entry pivoting and can return the unimodular
transforms. ``sparse_invariant_factors`` first removes unit pivots by exact
Schur-complement steps (each contributes an invariant factor 1) and hands
the residual block to the dense routine; boundary matrices of the sizes
met here (a few thousand columns) are only tractable this way.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .complex import ComplexError, SimplicialComplex

__all__ = [
    "HomologyGroup",
    "boundary_matrix",
    "boundary_columns",
    "face_index",
    "smith_normal_form",
    "smith_decomposition",
    "sparse_invariant_factors",
    "sparse_rank",
    "bareiss_rank",
    "reduced_homology",
    "homology_report",
    "matches_sphere",
    "matches_point",
]

SparseColumn = dict[int, int]


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    betti: int
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion


# -- boundary operators ----------------------------------------------------


def face_index(K: SimplicialComplex, d: int) -> dict[tuple[int, ...], int]:
    return {f: i for i, f in enumerate(K.faces(d))}


def boundary_columns(K: SimplicialComplex, d: int) -> list[SparseColumn]:
    """Columns of the boundary map from d-faces to (d-1)-faces, as sparse dicts."""
    if d < 0:
        return [{} for _ in K.faces(d)]
    rows = face_index(K, d - 1)
    cols = []
    for sigma in K.faces(d):
        col = {}
        for j in range(len(sigma)):
            col[rows[sigma[:j] + sigma[j + 1 :]]] = -1 if j % 2 else 1
        cols.append(col)
    return cols


def boundary_matrix(K: SimplicialComplex, d: int) -> np.ndarray:
    """Dense boundary matrix; rows are (d-1)-faces, columns d-faces, both in lex order."""
    if K.is_void:
        raise ComplexError("the void complex has no chain complex")
    if d < 0:
        raise ComplexError("boundary maps start in degree 0")
    M = np.zeros((len(K.faces(d - 1)), len(K.faces(d))), dtype=object)
    for j, col in enumerate(boundary_columns(K, d)):
        for i, v in col.items():
            M[i, j] = v
    return M


# -- Smith normal form -----------------------------------------------------


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _dense_snf(A: list[list[int]], ncols: int, track: bool):
    m, n = len(A), ncols
    U = _identity(m) if track else None
    V = _identity(n) if track else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        ra, rs = A[dst], A[src]
        for k in range(n):
            if rs[k]:
                ra[k] -= q * rs[k]
        if track:
            ua, us = U[dst], U[src]
            for k in range(m):
                if us[k]:
                    ua[k] -= q * us[k]

    def add_col(dst, src, q):  # col dst -= q * col src
        for row in A:
            if row[src]:
                row[dst] -= q * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                if row[j] and (best is None or abs(row[j]) < best[0]):
                    best = (abs(row[j]), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // p)
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // p)
            rest = [(abs(A[i][t]), i, None) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), None, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda r: r[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if track:
                U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


def _to_rows(M) -> tuple[list[list[int]], int]:
    arr = np.asarray(M, dtype=object)
    if arr.ndim != 2:
        raise ComplexError("expected a 2-dimensional matrix")
    return [[int(x) for x in row] for row in arr], arr.shape[1]


def smith_normal_form(M) -> tuple[tuple[int, ...], int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` and the rank."""
    rows, n = _to_rows(M)
    D, _, _ = _dense_snf(rows, n, track=False)
    factors = tuple(D[i][i] for i in range(min(len(D), n)) if D[i][i])
    return factors, len(factors)


def smith_decomposition(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(D, U, V)`` with U, V unimodular and ``U @ M @ V == D``."""
    rows, n = _to_rows(M)
    D, U, V = _dense_snf(rows, n, track=True)
    as_arr = lambda X, c: np.array(X, dtype=object).reshape(len(X), c)
    return as_arr(D, n), as_arr(U, len(U)), as_arr(V, n)


def sparse_invariant_factors(columns: Sequence[SparseColumn]) -> list[int]:
    """Nonzero invariant factors of the matrix given column-wise, in divisibility order."""
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, dict[int, int]] = defaultdict(dict)
    for c, col in enumerate(columns):
        entries = {r: v for r, v in col.items() if v}
        if entries:
            cols[c] = entries
            for r, v in entries.items():
                rows[r][c] = v
    units = 0
    progress = True
    while progress and cols:
        progress = False
        for c in sorted(cols, key=lambda c: len(cols[c])):
            col = cols.get(c)
            if col is None:
                continue
            pivot_row = None
            for r, v in col.items():
                if (v == 1 or v == -1) and (pivot_row is None or len(rows[r]) < len(rows[pivot_row])):
                    pivot_row = r
            if pivot_row is None:
                continue
            _unit_pivot(rows, cols, pivot_row, c)
            units += 1
            progress = True
    if not cols:
        return [1] * units
    live_rows = sorted({r for col in cols.values() for r in col})
    rindex = {r: i for i, r in enumerate(live_rows)}
    col_keys = sorted(cols)
    dense = [[0] * len(col_keys) for _ in live_rows]
    for j, c in enumerate(col_keys):
        for r, v in cols[c].items():
            dense[rindex[r]][j] = v
    D, _, _ = _dense_snf(dense, len(col_keys), track=False)
    residual = [D[i][i] for i in range(min(len(D), len(col_keys))) if D[i][i]]
    return [1] * units + residual


def _unit_pivot(rows, cols, r: int, c: int) -> None:
    # Schur complement on a +-1 pivot, then drop row r and column c.
    prow = rows[r]
    p = prow[c]
    for r2, a in list(cols[c].items()):
        if r2 == r:
            continue
        q = a * p
        target = rows[r2]
        for c2, b in prow.items():
            v = target.get(c2, 0) - q * b
            if v:
                target[c2] = v
                cols[c2][r2] = v
            else:
                target.pop(c2, None)
                cols[c2].pop(r2, None)
    for c2 in prow:
        colc2 = cols[c2]
        colc2.pop(r, None)
        if not colc2 or c2 == c:
            del cols[c2]
    del rows[r]


def sparse_rank(columns: Sequence[SparseColumn]) -> int:
    return len(sparse_invariant_factors(columns))


def bareiss_rank(M) -> int:
    """Rank over Q by fraction-free elimination (independent of the SNF code)."""
    A, n = _to_rows(M)
    m = len(A)
    r, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        if r == m:
            break
    return r


# -- homology ---------------------------------------------------------------


def reduced_homology(K: SimplicialComplex) -> list[HomologyGroup]:
    """Reduced integral homology in degrees -1 .. dim K."""
    if K.is_void:
        raise ComplexError("reduced homology of the void complex is undefined")
    top = K.dim
    factors = {d: sparse_invariant_factors(boundary_columns(K, d)) for d in range(0, top + 1)}
    groups = []
    for d in range(-1, top + 1):
        rank_d = len(factors.get(d, []))
        into = factors.get(d + 1, [])
        betti = len(K.faces(d)) - rank_d - len(into)
        groups.append(HomologyGroup(d, betti, tuple(f for f in into if f > 1)))
    return groups


def homology_report(K: SimplicialComplex) -> dict[str, dict]:
    """``{degree: {"betti": b, "torsion": [...]}}`` with trivial degrees omitted."""
    return {
        str(g.degree): {"betti": g.betti, "torsion": list(g.torsion)}
        for g in reduced_homology(K)
        if not g.is_trivial
    }


def matches_sphere(K: SimplicialComplex, d: int) -> bool:
    """Reduced homology is Z in degree d and zero elsewhere."""
    groups = reduced_homology(K)
    if not any(g.degree == d for g in groups):
        return False
    return all(g.betti == (g.degree == d) and not g.torsion for g in groups)


def matches_point(K: SimplicialComplex) -> bool:
    return all(g.is_trivial for g in reduced_homology(K))
