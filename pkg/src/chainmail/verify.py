"""Verification suites over the complex families.

Every suite returns a :class:`VerificationReport`. The checks are
certificates at the level of integral homology and explicit isomorphisms,
never of homotopy type, and the report says so.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .complex import SimplicialComplex, are_isomorphic, from_facets, from_minimal_nonfaces
from .graphs import (
    Tree,
    delta_complex,
    direct_augmented,
    double_directed_string,
    dumps_graph,
    path_graph,
    independence_complex,
    string_edge_labels,
    string_tree,
)
from .homology import (
    boundary_columns,
    bareiss_rank,
    homology_report,
    reduced_homology,
    smith_normal_form,
)
from .maps import _compose, is_simplicial, phi_map, rational_homology_iso, verify_quillen_fibers
from .posets import order_complex, p_poset
from .strata import delta_lambda, disconnecting_complex, hook
from .trees import canonical_form, random_tree, trees_up_to

__all__ = [
    "SCHEMA_VERSION",
    "VerificationReport",
    "SUITES",
    "delta_L",
    "expected_sphere_string",
    "expected_sphere_hook",
    "suite_string_spheres",
    "suite_hook_spheres",
    "suite_hook_vs_string",
    "suite_tail_map",
    "suite_string_identity",
    "suite_descriptions",
    "suite_kernel",
    "corpus",
]

SCHEMA_VERSION = 1
CERTIFICATE = "homology-verified"


@dataclass
class VerificationReport:
    suite: str
    params: dict = field(default_factory=dict)
    cases: list[dict] = field(default_factory=list)
    wall_time: float | None = None

    def add(self, instance: str, expected, computed, passed: bool, key=None) -> None:
        self.cases.append(
            {
                "key": key if key is not None else instance,
                "instance": instance,
                "expected": expected,
                "computed": computed,
                "pass": bool(passed),
            }
        )

    @property
    def summary(self) -> dict:
        passed = sum(c["pass"] for c in self.cases)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def as_dict(self, timing: bool = False) -> dict:
        cases = sorted(self.cases, key=lambda c: _sort_key(c["key"]))
        out = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "certificate": CERTIFICATE,
            "params": self.params,
            "summary": self.summary,
            "cases": [{k: v for k, v in c.items() if k != "key"} for c in cases],
        }
        if timing and self.wall_time is not None:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out


def _sort_key(key):
    return key if isinstance(key, tuple) else (key,)


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - t0
        return report

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- expected homotopy types ---------------------------------------------------


def expected_sphere_string(t: int) -> int | None:
    """Sphere dimension predicted for the directed-forest complex of L_t; None means a point."""
    k, r = divmod(t, 3)
    return {0: 2 * k - 1, 1: 2 * k, 2: None}[r]


def expected_sphere_hook(k: int, t: int) -> int | None:
    """Sphere dimension predicted for the hook partition (k, 1^t); None means a point."""
    m, r = divmod(t, k)
    if r == 0:
        return 2 * m - 1
    if r == 1:
        return 2 * m
    return None


def _sphere_profile(d: int | None) -> dict:
    return {} if d is None else {str(d): {"betti": 1, "torsion": []}}


def delta_L(t: int) -> SimplicialComplex:
    """Directed-forest complex of L_t with edges labelled along the string."""
    return delta_complex(double_directed_string(t), string_edge_labels(t))


# -- suites -----------------------------------------------------------------


@_timed
def suite_string_spheres(max_t: int = 9) -> VerificationReport:
    report = VerificationReport("prop13", {"max_t": max_t})
    for t in range(0, max_t + 1):
        want = _sphere_profile(expected_sphere_string(t))
        got = homology_report(delta_L(t))
        report.add(f"Delta(L_{t})", want, got, got == want, key=(t,))
    return report


@_timed
def suite_hook_spheres(ks: Iterable[int] = (2, 3, 4), max_t: int = 8) -> VerificationReport:
    ks = tuple(ks)
    report = VerificationReport("prop15", {"k": list(ks), "max_t": max_t})
    for k in ks:
        for t in range(0, max_t + 1):
            want = _sphere_profile(expected_sphere_hook(k, t))
            got = homology_report(delta_lambda(hook(k, t)))
            report.add(f"delta_({k},1^{t})", want, got, got == want, key=(k, t))
    return report


@_timed
def suite_hook_vs_string(max_t: int = 9) -> VerificationReport:
    report = VerificationReport("eq21", {"max_t": max_t})
    for t in range(0, max_t + 1):
        lhs = homology_report(delta_lambda(hook(3, t)))
        rhs = homology_report(delta_L(t))
        report.add(f"delta_(3,1^{t}) vs Delta(L_{t})", rhs, lhs, lhs == rhs, key=(t,))
    return report


def check_tree(T: Tree) -> dict:
    """Claims for the tail map of one tree: simplicial, cone fibres, homology, rational iso."""
    f = phi_map(T)
    simplicial = is_simplicial(f)
    fibres = verify_quillen_fibers(f)
    try:
        rational = rational_homology_iso(f) if simplicial else False
    except Exception as exc:  # reported, not raised: a failing case must not abort the suite
        rational = f"error: {exc}"
    return {
        "simplicial": simplicial,
        "all_fibres_cones": fibres.all_cones,
        "fibres_checked": fibres.n_faces_checked,
        "homology_match": fibres.homology_match,
        "rational_iso": rational,
        "source_homology": homology_report(f.source),
        "target_homology": homology_report(f.target),
    }


@_timed
def suite_tail_map(
    max_n: int = 8, random_trees: int = 0, random_size: int = 8, seed: int | None = None
) -> VerificationReport:
    report = VerificationReport(
        "thm32",
        {"max_n": max_n, "random_trees": random_trees, "random_size": random_size, "seed": seed},
    )
    trees = [(f"unlabeled n={len(T.vertices)} {canonical_form(T)}", T) for T in trees_up_to(max_n)]
    if random_trees:
        rng = random.Random(seed)
        for i in range(random_trees):
            T = random_tree(random_size, rng.randrange(2**32))
            trees.append((f"random #{i} n={random_size} {canonical_form(T)}", T))
    want = {"simplicial": True, "all_fibres_cones": True, "homology_match": True, "rational_iso": True}
    for name, T in trees:
        got = check_tree(T)
        passed = all(got[k] is True for k in want)
        got["tree"] = dumps_graph(T)
        report.add(name, want, got, passed, key=(len(T.vertices), name))
    return report


@_timed
def suite_string_identity(max_k: int = 4, max_t: int = 8) -> VerificationReport:
    report = VerificationReport("sec4-string", {"max_k": max_k, "max_t": max_t})
    for k in range(1, max_k + 1):
        for t in range(max(k - 1, 0), max_t + 1):
            D = disconnecting_complex(string_tree(t), k)
            delta = delta_lambda(hook(k + 1, t + 2 - k))
            iso = are_isomorphic(D, delta, match_unused=True)
            computed = None if iso is None else {str(a): b for a, b in sorted(iso.items())}
            report.add(
                f"D_{k}(string_{t}) vs delta_({k + 1},1^{t + 2 - k})",
                "vertex bijection",
                computed,
                iso is not None,
                key=(k, t),
            )
    return report


def _face_set(K: SimplicialComplex) -> set[tuple[int, ...]]:
    return set(K.faces())


@_timed
def suite_descriptions(max_t: int = 6) -> VerificationReport:
    report = VerificationReport("descriptions", {"max_t": max_t})
    for t in range(1, max_t + 1):
        faces = _face_set(delta_L(t))
        n = 2 * t
        sparse = from_minimal_nonfaces(range(1, n + 1), [(i, i + 1) for i in range(1, n)])
        chains = order_complex(p_poset(t))
        indep = independence_complex(path_graph(n))
        for label, other in (("forbidden pairs", sparse), ("order complex P_t", chains), ("independence path", indep)):
            same = faces == _face_set(other)
            report.add(f"Delta(L_{t}) vs {label}", "equal face sets", same, same, key=(t, label))
    return report


def corpus(max_t: int = 6) -> list[tuple[str, SimplicialComplex]]:
    """Complexes used by the kernel property checks."""
    out: list[tuple[str, SimplicialComplex]] = [
        ("hollow triangle", from_facets({1, 2, 3}, [{1, 2}, {2, 3}, {1, 3}])),
        ("full triangle", from_facets({1, 2, 3}, [{1, 2, 3}])),
        ("empty complex", from_facets(set(), [], empty=True)),
    ]
    for t in range(0, max_t + 1):
        out.append((f"Delta(L_{t})", delta_L(t)))
        out.append((f"delta_(3,1^{t})", delta_lambda(hook(3, t))))
        out.append((f"delta_(2,1^{t})", delta_lambda(hook(2, t))))
        out.append((f"D_3(string_{t})", disconnecting_complex(string_tree(t), 3)))
        if t >= 1:
            out.append((f"order P_{t}", order_complex(p_poset(t))))
    for T in trees_up_to(6):
        name = canonical_form(T)
        out.append((f"Delta(T~) {name}", delta_complex(direct_augmented(T))))
        out.append((f"D_2 {name}", disconnecting_complex(T, 2)))
    return [(n, K) for n, K in out if not K.is_void]


def _boundary_squares_to_zero(K: SimplicialComplex) -> bool:
    for d in range(1, K.dim + 1):
        prod = _compose(boundary_columns(K, d - 1), boundary_columns(K, d))
        if any(prod):
            return False
    return True


@_timed
def suite_kernel(seed: int = 0, n_matrices: int = 100, max_t: int = 6) -> VerificationReport:
    report = VerificationReport("kernel", {"seed": seed, "n_matrices": n_matrices, "max_t": max_t})
    for name, K in corpus(max_t):
        ok = _boundary_squares_to_zero(K)
        report.add(f"d∘d=0 {name}", True, ok, ok, key=("boundary", name))
        betti_sum = sum((-1) ** g.degree * g.betti for g in reduced_homology(K))
        chi = K.reduced_euler_characteristic()
        report.add(f"euler {name}", chi, betti_sum, chi == betti_sum, key=("euler", name))
    rng = random.Random(seed)
    for i in range(n_matrices):
        rows, cols = rng.randint(1, 10), rng.randint(1, 10)
        M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        factors, rank = smith_normal_form(M)
        chain = all(b % a == 0 for a, b in zip(factors, factors[1:])) and all(f > 0 for f in factors)
        oracle = bareiss_rank(M)
        report.add(
            f"snf random #{i} {rows}x{cols}",
            {"rank": oracle, "divisibility": True},
            {"rank": rank, "divisibility": chain},
            chain and rank == oracle,
            key=("snf", i),
        )
    return report


SUITES = {
    "prop13": suite_string_spheres,
    "prop15": suite_hook_spheres,
    "eq21": suite_hook_vs_string,
    "thm32": suite_tail_map,
    "sec4-string": suite_string_identity,
    "descriptions": suite_descriptions,
    "kernel": suite_kernel,
}
