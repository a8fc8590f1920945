"""Command line entry point: ``chainmail build|homology|verify|quillen|realize-poset|trees``.

Exit codes: 0 success / all cases pass, 1 some case failed (or no poset
found), 2 usage, input or capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complex import CapacityError, ComplexError, dumps, loads
from .graphs import (
    DirectedGraph,
    Graph,
    _max_edges,
    delta_complex,
    dumps_graph,
    independence_complex,
    loads_graph,
)
from .homology import homology_report
from .maps import quillen_report
from .posets import dumps_poset, exists_realizing_poset, order_complex, p_poset
from .strata import Partition, delta_lambda, disconnecting_complex
from .trees import MAX_ENUMERATION, enumerate_trees
from .verify import SUITES, delta_L

FAMILIES = ("delta-L", "delta-lambda", "disconnecting", "order-P", "independence", "delta-of-graph")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise ComplexError(f"--{name.replace('_', '-')} is required for family {args.family}")
    return value


def cmd_build(args) -> int:
    fam = args.family
    if fam == "delta-L":
        K = delta_L(_need(args, "t"))
    elif fam == "delta-lambda":
        K = delta_lambda(Partition.parse(_need(args, "lam")))
    elif fam == "disconnecting":
        T = loads_graph(_read(_need(args, "tree")), as_tree=True)
        K = disconnecting_complex(T, _need(args, "k"))
    elif fam == "order-P":
        K = order_complex(p_poset(_need(args, "t")))
    elif fam == "independence":
        G = loads_graph(_read(_need(args, "graph")))
        if not isinstance(G, Graph):
            raise ComplexError("independence complexes need an undirected graph")
        K = independence_complex(G)
    else:
        G = loads_graph(_read(_need(args, "graph")))
        if not isinstance(G, DirectedGraph):
            raise ComplexError("delta-of-graph needs a directed graph")
        K = delta_complex(G)
    if K.is_void:
        summary = ["f-vector: ()", "euler: undefined (void complex)"]
    else:
        summary = [f"f-vector: {K.f_vector()}", f"euler: {K.euler_characteristic()}"]
    if args.out:
        Path(args.out).write_text(dumps(K, summary))
        print("\n".join(summary))
    else:
        sys.stdout.write(dumps(K, summary))
    return 0


def cmd_homology(args) -> int:
    K = loads(_read(args.complex))
    print(json.dumps(homology_report(K), indent=2))
    return 0


def _refuse_if_too_large(args) -> None:
    limit = _max_edges()
    if args.suite in ("prop13", "eq21") and 2 * args.max_t > limit:
        raise CapacityError(f"Delta(L_{args.max_t}) has {2 * args.max_t} edges; limit is {limit}")
    if args.suite == "thm32":
        n = max(args.all_trees_up_to, args.tree_size if args.random_trees else 0)
        if n > MAX_ENUMERATION or 3 * (n - 1) > limit:
            raise CapacityError(f"trees on {n} vertices exceed the configured capacity")


def cmd_verify(args) -> int:
    _refuse_if_too_large(args)
    suite = args.suite
    if suite == "prop13":
        report = SUITES[suite](max_t=args.max_t)
    elif suite == "eq21":
        report = SUITES[suite](max_t=args.max_t)
    elif suite == "prop15":
        ks = [int(k) for k in args.k.split(",")] if args.k else list(range(2, args.max_k + 1))
        report = SUITES[suite](ks=ks, max_t=args.max_t)
    elif suite == "thm32":
        report = SUITES[suite](
            max_n=args.all_trees_up_to,
            random_trees=args.random_trees,
            random_size=args.tree_size,
            seed=args.seed,
        )
    elif suite == "sec4-string":
        report = SUITES[suite](max_k=args.max_k, max_t=args.max_t)
    elif suite == "descriptions":
        report = SUITES[suite](max_t=args.max_t)
    else:
        report = SUITES[suite](seed=args.seed or 0)
    text = json.dumps(report.as_dict(timing=args.timing), indent=2)
    if args.report:
        Path(args.report).write_text(text + "\n")
    else:
        print(text)
    s = report.summary
    print(f"{suite}: {s['passed']}/{s['total']} cases pass (homology-verified)", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_quillen(args) -> int:
    T = loads_graph(_read(args.tree), as_tree=True)
    report = quillen_report(T)
    print(json.dumps(report.as_dict(), indent=2))
    return 0 if report.all_cones and report.homology_match else 1


def cmd_realize_poset(args) -> int:
    if args.graph:
        G = loads_graph(_read(args.graph))
        if not isinstance(G, DirectedGraph):
            raise ComplexError("expected a directed graph")
        K = delta_complex(G)
    else:
        K = loads(_read(args.complex))
    P = exists_realizing_poset(K)
    if P is None:
        print("no realizing poset")
        return 1
    if K.labels:
        print("# element labels: " + ", ".join(f"{v}={K.labels[v]}" for v in sorted(K.labels)))
    sys.stdout.write(dumps_poset(P))
    return 0


def cmd_trees(args) -> int:
    for T in enumerate_trees(args.n):
        sys.stdout.write(dumps_graph(T) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chainmail", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a complex and write it in the facet text format")
    b.add_argument("--family", required=True, choices=FAMILIES)
    b.add_argument("--t", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--lambda", dest="lam", help="comma-separated parts, e.g. 3,1,1")
    b.add_argument("--tree", help="tree file (undirected graph format)")
    b.add_argument("--graph", help="graph file")
    b.add_argument("--out", help="output path (default: stdout)")
    b.set_defaults(func=cmd_build)

    h = sub.add_parser("homology", help="reduced integral homology of a complex file as JSON")
    h.add_argument("complex", help="complex file or - for stdin")
    h.set_defaults(func=cmd_homology)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-t", type=int, default=None)
    v.add_argument("--max-k", type=int, default=4)
    v.add_argument("--k", help="comma-separated k values for prop15")
    v.add_argument("--all-trees-up-to", type=int, default=8)
    v.add_argument("--random-trees", type=int, default=0)
    v.add_argument("--tree-size", type=int, default=8)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.add_argument("--timing", action="store_true", help="include wall time in the report")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("quillen", help="fibre report for the tail map of a tree")
    q.add_argument("--tree", required=True)
    q.set_defaults(func=cmd_quillen)

    r = sub.add_parser("realize-poset", help="search for a poset whose order complex is given")
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="directed graph; its directed-forest complex is tested")
    src.add_argument("--complex", help="complex file")
    r.set_defaults(func=cmd_realize_poset)

    tr = sub.add_parser("trees", help="list unlabeled trees on n vertices")
    tr.add_argument("--n", type=int, required=True)
    tr.set_defaults(func=cmd_trees)
    return parser


_DEFAULT_MAX_T = {"prop13": 9, "eq21": 9, "prop15": 8, "sec4-string": 8, "descriptions": 6}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_t is None:
        args.max_t = _DEFAULT_MAX_T.get(args.suite, 0)
    try:
        return args.func(args)
    except (ValueError, CapacityError, OSError) as exc:
        print(f"chainmail: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
