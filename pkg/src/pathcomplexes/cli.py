"""Command-line interface.

Exit codes: 0 success, 1 check failure, 2 usage or parse error,
3 resource guard tripped.  All output is deterministic: facets, edge
lists and certificates are ordered by edge index, never by hash order.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .digraph import Digraph
from .errors import GraphParseError, ResourceLimitError
from .graphio import format_graph, parse_graph
from .grapes import (BaseCase, ConeWitness, GrapeNode, SandwichWitness,
                     is_combinatorial_grape, is_strong_grape)
from .pathcomplex import (build_pf, build_pf_r, build_pm, build_pm_r,
                          check_divisibility, chi_pf_closed, chi_pm_closed,
                          fpoly_pf_dc, fpoly_pm_dc, homotopy_pf, homotopy_pm)
from .verify import CorpusSpec, verify_corpus


def _load_graph(path: str) -> Digraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc.strerror}")
    return parse_graph(text)


def _build(g: Digraph, which: str):
    return build_pm(g) if which == "pm" else build_pf(g)


def _edge_names(g: Digraph, edge_ids) -> str:
    labels = g.label_map()
    return " ".join(labels[e] for e in sorted(edge_ids))


def _cmd_analyze(args) -> int:
    g = _load_graph(args.file)
    cycle = g.find_cycle()
    print(f"cycle: {'yes' if cycle is not None else 'no'}")
    useless = g.useless_edges()
    print(f"useless-edges: {_edge_names(g, useless) if useless else '(none)'}")
    nonsinks = g.nonsinks()
    ordered = [str(v) for v in g.vertices if v in nonsinks]
    print(f"nonsinks: {' '.join(ordered) if ordered else '(none)'}")
    packing, _ = g.max_disjoint_quasi_cycles()
    print(f"quasi-cycle-packing: {packing}")
    print(f"min-cut: {'n/a' if g.s == g.t else g.min_st_cutset_size()}")
    shortest = g.shortest_st_path_length()
    print(f"shortest-path-length: {'none' if shortest is None else shortest}")
    return 0


def _cmd_fpoly(args) -> int:
    g = _load_graph(args.file)
    if args.method == "dc":
        poly = fpoly_pm_dc(g) if args.complex == "pm" else fpoly_pf_dc(g)
    else:
        poly = _build(g, args.complex).f_polynomial()
    print(poly.pretty())
    return 0


def _cmd_chi(args) -> int:
    g = _load_graph(args.file)
    report = chi_pm_closed(g) if args.complex == "pm" else chi_pf_closed(g)
    print(f"{report.value} {report.case_tag} {report.parity}")
    return 0


def _cmd_homotopy(args) -> int:
    g = _load_graph(args.file)
    cls = homotopy_pm(g) if args.complex == "pm" else homotopy_pf(g)
    print(cls.describe())
    return 0


def _cmd_facets(args) -> int:
    g = _load_graph(args.file)
    c = _build(g, args.complex)
    facets = c.facets()
    if not facets:
        print("(no faces)")
        return 0
    for facet in facets:
        print(_edge_names(g, facet) if facet else "(empty)")
    return 0


def _cmd_dual_check(args) -> int:
    g = _load_graph(args.file)
    ok = build_pf(g).alexander_dual() == build_pm(g)
    print("dual-check: ok" if ok else "dual-check: FAILED")
    return 0 if ok else 1


def _cmd_divis(args) -> int:
    g = _load_graph(args.file)
    report = check_divisibility(g)
    print(f"kappa: {report.kappa}")
    print(f"pm-divisible: {'yes' if report.pm_ok else 'no'}")
    print(f"pm-remainder: {report.pm_remainder.pretty()}")
    print(f"pf-divisible: {'yes' if report.pf_ok else 'no'}")
    print(f"pf-remainder: {report.pf_remainder.pretty()}")
    return 0


def _format_certificate(node: GrapeNode, labels: dict[int, str],
                        indent: int = 0) -> list[str]:
    pad = "  " * indent

    def name(x: int) -> str:
        return labels.get(x, str(x))

    if isinstance(node, BaseCase):
        return [f"{pad}base {{{' '.join(name(x) for x in node.ground)}}}"]
    side = node.side_condition
    if isinstance(side, ConeWitness):
        cond = f"cone={side.side} cone-apex={name(side.apex)}"
    else:
        assert isinstance(side, SandwichWitness)
        cond = f"sandwich={name(side.element)}"
        if side.vacuous:
            cond += " vacuous"
    lines = [f"{pad}split apex={name(node.apex)} {cond}"]
    lines += _format_certificate(node.link_child, labels, indent + 1)
    lines += _format_certificate(node.deletion_child, labels, indent + 1)
    return lines


def _cmd_grape(args) -> int:
    g = _load_graph(args.file)
    c = _build(g, args.complex)
    recognize = is_strong_grape if args.mode == "strong" else is_combinatorial_grape
    cert = recognize(c)
    if cert is None:
        print("not-a-grape")
    else:
        for line in _format_certificate(cert, g.label_map()):
            print(line)
    return 0


def _cmd_homology(args) -> int:
    g = _load_graph(args.file)
    betti = _build(g, args.complex).gf2_reduced_betti()
    if not betti.entries:
        print("betti: none")
    else:
        print("betti: " + " ".join(f"{d}:{b}" for d, b in betti.entries))
    return 0


def _cmd_rgen(args) -> int:
    g = _load_graph(args.file)
    build = build_pm_r if args.complex == "pm" else build_pf_r
    c = build(g, args.r)
    print(f"chi: {c.reduced_euler_characteristic()}")
    print(f"facets: {len(c.facets())}")
    return 0


def _cmd_verify(args) -> int:
    spec = CorpusSpec(graph_count=args.count, max_vertices=args.max_vertices,
                      max_edges=args.max_edges, seed=args.seed)
    report = verify_corpus(spec)
    for line in report.to_lines():
        print(line)
    for block in report.failure_payloads():
        print(block, file=sys.stderr)
    return 1 if report.counts()["fail"] else 0


def _cmd_show(args) -> int:
    # Round-trips a graph file; handy for checking what the parser saw.
    print(format_graph(_load_graph(args.file)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcomplexes",
        description="Path-free and path-missing complexes of a directed graph.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("analyze", _cmd_analyze, help="structural summary of the graph")
    p.add_argument("file")

    p = add("fpoly", _cmd_fpoly, help="f-polynomial of a complex")
    p.add_argument("file")
    p.add_argument("--complex", choices=("pm", "pf"), required=True)
    p.add_argument("--method", choices=("dc", "brute"), default="dc")

    p = add("chi", _cmd_chi, help="closed-form reduced Euler characteristic")
    p.add_argument("file")
    p.add_argument("--complex", choices=("pm", "pf"), required=True)

    p = add("homotopy", _cmd_homotopy, help="empty/contractible/sphere classification")
    p.add_argument("file")
    p.add_argument("--complex", choices=("pm", "pf"), required=True)

    p = add("facets", _cmd_facets, help="maximal faces, one per line")
    p.add_argument("file")
    p.add_argument("--complex", choices=("pm", "pf"), required=True)

    p = add("dual-check", _cmd_dual_check,
            help="confirm the two complexes are Alexander duals")
    p.add_argument("file")

    p = add("divis", _cmd_divis,
            help="divisibility of both f-polynomials by (1+x)^kappa")
    p.add_argument("file")

    p = add("grape", _cmd_grape, help="grape certificate or not-a-grape")
    p.add_argument("file")
    p.add_argument("--complex", choices=("pm", "pf"), required=True)
    p.add_argument("--mode", choices=("strong", "combinatorial"), default="strong")

    p = add("homology", _cmd_homology, help="reduced Betti numbers over GF(2)")
    p.add_argument("file")
    p.add_argument("--complex", choices=("pm", "pf"), required=True)

    p = add("rgen", _cmd_rgen, help="r-edge-disjoint generalized complex")
    p.add_argument("file")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--complex", choices=("pm", "pf"), required=True)

    p = add("verify", _cmd_verify, help="run the check harness over a corpus")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--max-vertices", type=int, default=6)

    p = add("show", _cmd_show, help="parse and re-serialize a graph file")
    p.add_argument("file")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
