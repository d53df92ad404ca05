"""Command-line front end: ``rtw <subcommand> ...``.

Exit status is 0 on success, 1 when a verification or construction check
fails, and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import verification
from .constructions import (ConstructionError, GBESpec, be_graph, check_be_graph, gbe_graph, h_graph,
                            independence_number, pseudo_erdos_graph, turan_graph, u_graph)
from .genclique import find_generalized_K, max_generalized_clique
from .lagrangian import BudgetError, beta_search, maximize_exact, maximize_iterative
from .model import ColoredGraph, EdgeColor, Graph, ModelError, WCCG, load
from .ramsey import cayley_coloring, enumerate_ramsey, nice_coloring
from .reduction import cluster_weights, symmetrize, two_color_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEED_MAX = 2 ** 64 - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def num(x) -> dict:
    x = Fraction(x)
    return {"exact": str(x), "approx": float(x)}


def _seed(text: str) -> int:
    try:
        s = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= s <= SEED_MAX:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return s


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(data, out: str | None = None) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str, kinds: tuple[type, ...]):
    obj = load(path)
    if not isinstance(obj, kinds):
        names = " or ".join(k.__name__ for k in kinds)
        raise ModelError(f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


# -------------------------------------------------------------- subcommands

def cmd_lagrangian(args) -> int:
    W = _load(args.file, (WCCG,))
    if args.method == "exact":
        r = maximize_exact(W)
        data = {"method": "exact", "t": W.t, "g_max": num(r.g_max), "two_g": num(r.two_g),
                "witness": [num(x) for x in r.witness.u], "interior": r.interior,
                "dense": r.dense, "kkt_supports": [list(s) for s in r.kkt_supports]}
    else:
        r = maximize_iterative(W)
        data = {"method": "iterative", "t": W.t, "g_max": {"approx": r.g_max},
                "two_g": {"approx": 2 * r.g_max}, "witness": list(r.witness),
                "interior": r.interior, "converged": r.converged, "iterations": r.iterations}
    if args.json:
        _emit(data)
        return EXIT_OK

    def show(x):
        return f"{x['exact']} ({x['approx']:.12g})" if "exact" in x else f"{x['approx']:.12g}"
    print(f"g_max    {show(data['g_max'])}")
    print(f"2g       {show(data['two_g'])}")
    if args.method == "exact":
        print("witness  " + " ".join(x["exact"] for x in data["witness"]))
    else:
        print("witness  " + " ".join(f"{x:.9g}" for x in data["witness"]))
    print(f"interior {str(data['interior']).lower()}")
    return EXIT_OK


def cmd_genclique(args) -> int:
    W = _load(args.file, (WCCG,))
    color = EdgeColor.parse(args.color)
    if args.target is None:
        _emit(max_generalized_clique(W, color).to_json())
        return EXIT_OK
    wit = find_generalized_K(W, color, args.target)
    out = {"color": color.value, "target": args.target, "found": wit is not None}
    if wit is not None:
        out.update(wit.to_json())
    _emit(out)
    return EXIT_OK


def cmd_ramsey(args) -> int:
    classes = enumerate_ramsey(args.n, args.red, args.blue)
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        for i, c in enumerate(classes):
            (d / f"ramsey_n{args.n}_r{args.red}_b{args.blue}_{i:03d}.json").write_text(
                json.dumps(c.to_json(), indent=2) + "\n", encoding="utf-8")
    if args.count_only:
        print(len(classes))
    else:
        _emit({"n": args.n, "red": args.red, "blue": args.blue, "count": len(classes),
               "classes": [c.to_json() for c in classes]})
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.kind
    try:
        if kind == "turan":
            obj = turan_graph(args.n, args.parts).to_json()
        elif kind == "cayley":
            if args.k is not None:
                g = nice_coloring(args.k)
            elif args.n is not None and args.blue_set is not None:
                g = cayley_coloring(args.n, args.blue_set)
            else:
                raise UsageError("cayley needs --k, or --n with --blue-set")
            obj = g.to_json()
        elif kind == "pseudo-erdos":
            obj = pseudo_erdos_graph(args.n, args.seed).to_json()
        elif kind in ("u-graph", "h-graph"):
            fn = u_graph if kind == "u-graph" else h_graph
            obj = fn(args.n, args.p, args.q, seed=args.seed).to_json()
        elif kind == "be":
            sg = be_graph(args.n, args.dim, args.eps, args.seed)
            check_be_graph(sg)
            obj = sg.graph.to_json()
            obj["classes"] = [list(c) for c in sg.classes]
            obj["mu"] = sg.mu
        else:
            base = _load(args.base, (WCCG,))
            sizes = args.sizes if args.sizes is not None else [args.size] * base.t
            spec = GBESpec(base, tuple(sizes), args.dim, args.mu, args.seed)
            obj = gbe_graph(spec).to_json()
    except ConstructionError as exc:
        print(f"construction check failed: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {list(exc.witness)}", file=sys.stderr)
        return EXIT_FAIL
    _emit(obj, args.out)
    return EXIT_OK


def cmd_alpha(args) -> int:
    obj = _load(args.file, (Graph, ColoredGraph))
    if isinstance(obj, ColoredGraph):
        g = obj.color_graph(EdgeColor.parse(args.color)) if args.color else obj.underlying()
    else:
        g = obj
    a, wit = independence_number(g)
    _emit({"n": g.n, "alpha": a, "witness": wit})
    return EXIT_OK


def cmd_partition(args) -> int:
    g = _load(args.file, (ColoredGraph,))
    r = two_color_partition(g, Fraction(args.delta))
    _emit({"n": g.n, "delta": num(Fraction(args.delta)), "U1": list(r.U1), "U2": list(r.U2),
           "extractions": r.extractions, "alpha1": r.alpha1, "alpha2": r.alpha2})
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load(args.file, (ColoredGraph,))
    try:
        spec = json.loads(Path(args.parts_file).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelError(f"malformed JSON in {args.parts_file}: {exc}") from None
    if isinstance(spec, list):
        spec = {"parts": spec}
    if not isinstance(spec, dict) or "parts" not in spec:
        raise ModelError("parts file must be a list of parts or an object with \"parts\"")
    eps = Fraction(args.eps) if args.eps is not None else None
    h = cluster_weights(g, spec["parts"], Fraction(args.mu), spec.get("vertex_colors"), eps)
    rep = symmetrize(h)
    _emit({"cluster": h.to_json(), "quotient": rep.quotient.to_json(),
           "class_of": list(rep.class_of), "class_weights": [num(x) for x in rep.class_weights.u],
           "masses": [num(x) for x in rep.masses], "steps": [list(s) for s in rep.steps]})
    return EXIT_OK


def cmd_beta(args) -> int:
    r = beta_search(args.red, args.blue, args.tmax)
    _emit({"red": args.red, "blue": args.blue, "tmax": args.tmax, "two_g": num(r.two_g),
           "g": num(r.two_g / 2), "witness": r.witness.to_json() if r.witness else None,
           "leaves": r.leaves, "nodes": r.nodes})
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verification.run_suite(args.suite, args.seed, args.threads, args.fault)
    text = verification.report_json(report) if args.json else verification.report_table(report)
    sys.stdout.write(text)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0, help="64-bit unsigned seed (default 0)")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker processes (default: available cores)")

    p = _Parser(prog="rtw", description="Weighted-graph Lagrangians, generalized cliques, "
                                        "Ramsey colorings and sphere constructions.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("lagrangian", parents=[common], help="maximize g over the simplex")
    s.add_argument("file")
    s.add_argument("--method", choices=("exact", "iterative"), default="exact")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_lagrangian)

    s = sub.add_parser("genclique", parents=[common], help="largest generalized clique")
    s.add_argument("file")
    s.add_argument("--color", choices=("red", "blue"), required=True)
    s.add_argument("--target", type=_positive)
    s.set_defaults(func=cmd_genclique)

    s = sub.add_parser("ramsey", help="Ramsey coloring enumeration")
    rsub = s.add_subparsers(dest="action", parser_class=_Parser)
    e = rsub.add_parser("enum", parents=[common], help="isomorphism classes of Ramsey colorings")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--red", type=int, required=True, help="forbidden red clique size")
    e.add_argument("--blue", type=int, required=True, help="forbidden blue clique size")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--out", help="directory for one JSON file per class")
    e.set_defaults(func=cmd_ramsey)

    s = sub.add_parser("construct", parents=[common], help="build a graph")
    s.add_argument("kind", choices=("turan", "cayley", "pseudo-erdos", "u-graph", "h-graph", "be", "gbe"))
    s.add_argument("--n", type=int)
    s.add_argument("--parts", type=int, help="turan: number of parts")
    s.add_argument("--k", type=int, help="cayley: nice coloring parameter")
    s.add_argument("--blue-set", type=_int_list, help="cayley: blue differences mod n")
    s.add_argument("--p", type=int, default=3, help="u-graph/h-graph: forbidden blue clique size")
    s.add_argument("--q", type=int, default=3, help="u-graph/h-graph: Ramsey pattern parameter")
    s.add_argument("--dim", type=int, default=20)
    s.add_argument("--eps", type=float, default=0.1, help="be: mu = eps / sqrt(dim)")
    s.add_argument("--mu", type=float, default=0.3, help="gbe: distance margin")
    s.add_argument("--base", help="gbe: base WCCG file")
    s.add_argument("--size", type=int, help="gbe: common class size")
    s.add_argument("--sizes", type=_int_list, help="gbe: comma-separated class sizes")
    s.add_argument("--out", help="output file (default stdout)")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("alpha", parents=[common], help="exact independence number")
    s.add_argument("file")
    s.add_argument("--color", choices=("red", "blue"), help="use one color class of a colored graph")
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("partition", parents=[common], help="two-color partition")
    s.add_argument("file")
    s.add_argument("--delta", required=True, help="rational such as 1/5")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("reduce", parents=[common], help="cluster weighting and symmetrization")
    s.add_argument("file")
    s.add_argument("--parts-file", required=True)
    s.add_argument("--mu", required=True, help="rational such as 1/20")
    s.add_argument("--eps", help="enable the exact regularity check with this epsilon")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("beta", parents=[common], help="weighted Ramsey density search")
    s.add_argument("--red", type=int, required=True)
    s.add_argument("--blue", type=int, required=True)
    s.add_argument("--tmax", type=int, required=True)
    s.set_defaults(func=cmd_beta)

    s = sub.add_parser("verify", parents=[common], help="run a check suite")
    s.add_argument("--suite", choices=tuple(verification.SUITES), default="paper")
    s.add_argument("--json", action="store_true")
    s.add_argument("--fault", action="append", default=[], help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            parser.print_usage(sys.stderr)
            print("rtw: error: a subcommand is required", file=sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ModelError, ValueError, BudgetError, OSError, ZeroDivisionError) as exc:
        print(f"rtw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
