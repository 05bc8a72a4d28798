"""Command line entry point.

Every command prints one JSON document ``{command, status, payload, timing}`` on
stdout and a one-line summary on stderr (suppressed by ``--json-only``).  Exit
codes: 0 ok, 1 violation, 2 none, 3 budget-exceeded, 4 error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bounds, cliques, graph, homomorphism, relations, search
from ._bitset import BudgetExceeded

EXIT_CODES = {"ok": 0, "violation": 1, "none": 2, "budget-exceeded": 3, "error": 4}
DEFAULT_BUDGET = 10**8


class CommandError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError(message)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _is_mng(text):
    for line in text.splitlines():
        if line.strip():
            return line.split()[0] == "mng"
    return False


def read_mixed(path, strict=True) -> graph.MixedGraph:
    """Load ``.mng`` or graph6 (read as a (0,1) graph) from a path or ``-``."""
    text = _read_text(path)
    if _is_mng(text):
        return graph.parse_mng(text, strict=strict)
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    return graph.parse_graph6(first).as_mixed()


def read_underlying(spec) -> graph.SimpleGraph:
    try:
        return graph.named_graph(spec)
    except ValueError:
        pass
    if os.path.exists(spec) or spec == "-":
        G = read_mixed(spec)
        return graph.underlying(G)
    return graph.parse_graph6(spec)


def _gen(args):
    if args.name == "wagner03":
        G = search.wagner_03()
        U = graph.underlying(G)
    elif args.name == "petersen04":
        U = graph.named_graph("petersen")
        G = search.edge_colored_graph(U, search.edge_color(U, 4), n=4)
    else:
        U = graph.named_graph(args.name)
        G = U.as_mixed()
    payload = {
        "name": args.name,
        "order": U.order,
        "edges": [list(e) for e in U.edge_list()],
        "graph6": graph.to_graph6(U),
        "mng": graph.serialize_mng(G),
    }
    return "ok", payload, f"{args.name}: {U.order} vertices, {len(U.edges)} edges"


def _convert(args):
    text = _read_text(args.input)
    if _is_mng(text):
        G = graph.parse_mng(text)
        target = args.to or "graph6"
    else:
        G = graph.parse_graph6(next(ln for ln in text.splitlines() if ln.strip())).as_mixed()
        target = args.to or "mng"
    if target == "graph6":
        out = graph.to_graph6(graph.underlying(G))
    else:
        out = graph.serialize_mng(G)
    return "ok", {"format": target, "data": out}, f"converted to {target}"


def _validate(args):
    G = read_mixed(args.input, strict=False)
    viol = graph.validate(G)
    payload = {"valid": not viol, "violations": [{"message": v.message, "pair": list(v.pair) if v.pair else None} for v in viol]}
    return ("violation" if viol else "ok"), payload, f"{len(viol)} violation(s)"


def _see_graph(args):
    sg = relations.see_graph(read_mixed(args.input))
    return "ok", sg.to_json(), f"see-graph with {len(sg.witnesses)} edges"


def _chi(args):
    G = read_mixed(args.input)
    k, part = homomorphism.chi_mn(G, budget=args.budget)
    payload = {"value": k, "witness": list(part.classes), "exhaustive": True}
    return "ok", payload, f"chi = {k}"


def _hom(args):
    G, H = read_mixed(args.source), read_mixed(args.target)
    f = homomorphism.hom_exists(G, H, budget=args.budget)
    payload = {"value": f is not None, "witness": f, "exhaustive": True}
    return ("ok" if f is not None else "none"), payload, "homomorphism found" if f else "no homomorphism"


def _quotient(args):
    G = read_mixed(args.input)
    try:
        H, f = homomorphism.quotient_pair(G, args.u, args.v)
    except homomorphism.IdentificationConflict as exc:
        return "violation", {"conflict": exc.kind, "at": exc.at}, f"conflict: {exc}"
    return "ok", {"mng": graph.serialize_mng(H), "mapping": f}, f"quotient has {H.order} vertices"


def _omega_r(args):
    k, cert = cliques.omega_r(read_mixed(args.input))
    payload = {"value": k, "witness": cert.to_json(), "exhaustive": True}
    return "ok", payload, f"omega_r = {k}"


def _omega_a(args):
    k, verts = cliques.omega_a(read_mixed(args.input), budget=args.budget)
    return "ok", {"value": k, "witness": list(verts), "exhaustive": True}, f"omega_a = {k}"


def _is_clique(args):
    G = read_mixed(args.input)
    check = cliques.is_relative_clique(G, range(G.order))
    payload = {"value": check.ok, "failing_pair": list(check.failing_pair) if check.failing_pair else None}
    return ("ok" if check.ok else "violation"), payload, "is an (m,n)-clique" if check.ok else "not an (m,n)-clique"


def _bounds(args):
    p = args.p
    lo, hi = bounds.planar_bounds(p)
    payload = {"p": p, "planar": {"lower": lo, "upper": hi}, "outerplanar": bounds.outerplanar_bound(p)}
    if args.delta is not None:
        payload["max_degree_relative"] = bounds.max_degree_rel_bound(p, args.delta)
        payload["see_degeneracy"] = bounds.see_degeneracy_bound(p, args.delta)
        payload["delta"] = args.delta
    if args.m is not None and args.n is not None:
        if 2 * args.m + args.n != p:
            raise CommandError("--p must equal 2m+n")
        payload["path"] = bounds.path_bound(args.m, args.n)
        payload["forest"] = bounds.forest_bound(args.m, args.n)
    return "ok", payload, f"bounds for p={p}"


def _lemma32(args):
    rep = bounds.verify_lemma32(read_mixed(args.input))
    return ("ok" if rep.holds else "violation"), rep.to_json(), f"degeneracy {rep.observed} vs bound {rep.bound}"


def _detect(args):
    G = read_mixed(args.input)
    R = [int(x) for x in args.set.split(",") if x.strip()] if args.set else []
    fn = bounds.detect_F1 if args.which == "f1" else bounds.detect_F2
    try:
        wit = fn(G, R)
    except ValueError as exc:
        return "violation", {"error": str(exc)}, str(exc)
    if wit is None:
        return "none", {"value": None}, f"no {args.which.upper()} configuration"
    return "ok", {"value": wit.to_json()}, f"{args.which.upper()} at center {wit.center}"


def _search(args):
    U = read_underlying(args.underlying)
    out = search.maximize_omega_r(U, args.m, args.n, budget=args.budget, floor=args.floor)
    status = "ok" if out.exhaustive else "budget-exceeded"
    return status, out.to_json(), f"best omega_r {out.value}, exhaustive={out.exhaustive}"


def _edge_color(args):
    U = read_underlying(args.underlying)
    colors = search.edge_color(U, args.k)
    if colors is None:
        return "none", {"value": None, "exhaustive": True}, f"no proper {args.k}-edge-coloring"
    payload = {"value": [[u, v, c] for (u, v), c in zip(U.edge_list(), colors)], "exhaustive": True}
    return "ok", payload, f"proper {args.k}-edge-coloring found"


def _thm41(args):
    rep = search.verify_theorem41(args.case, budget=args.budget, sweep_order=args.sweep_order, threads=args.threads)
    ok = rep.lower_confirmed and rep.upper_confirmed
    if not rep.upper_exhaustive:
        status = "budget-exceeded"
    else:
        status = "ok" if ok else "violation"
    return status, rep.to_json(), f"case {args.case}: lower={rep.lower_value} upper-range-max={rep.upper_max_found}"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--json-only", action="store_true")

    parser = _Parser(prog="mixedclique", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, handler, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(handler=handler)
        return sp

    add("gen", _gen, "emit a named graph").add_argument("name")
    sp = add("convert", _convert, "convert between .mng and graph6")
    sp.add_argument("input")
    sp.add_argument("--to", choices=["mng", "graph6"])
    add("validate", _validate, "report invariant violations").add_argument("input")
    add("see-graph", _see_graph, "see-graph with witnesses").add_argument("input")
    add("chi", _chi, "exact colored mixed chromatic number").add_argument("input")
    sp = add("hom", _hom, "find a homomorphism")
    sp.add_argument("source")
    sp.add_argument("target")
    sp = add("quotient", _quotient, "identify two vertices")
    sp.add_argument("input")
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    add("omega-r", _omega_r, "relative clique number").add_argument("input")
    add("omega-a", _omega_a, "absolute clique number").add_argument("input")
    add("is-clique", _is_clique, "exit 0 iff the graph is an (m,n)-clique").add_argument("input")
    sp = add("bounds", _bounds, "closed-form bounds")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--delta", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    add("verify-lemma32", _lemma32, "see-graph degeneracy against its bound").add_argument("input")
    sp = add("detect", _detect, "forbidden configuration detectors")
    sp.add_argument("which", choices=["f1", "f2"])
    sp.add_argument("input")
    sp.add_argument("--set", default="")
    sp = add("search", _search, "maximize omega_r over colorings of an underlying graph")
    sp.add_argument("--underlying", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--floor", type=int, default=0)
    sp = add("edge-color", _edge_color, "proper edge coloring")
    sp.add_argument("underlying")
    sp.add_argument("--k", type=int, required=True)
    sp = add("verify-thm41", _thm41, "subcubic extremal values")
    sp.add_argument("--case", required=True, choices=sorted(search.THEOREM41_CASES))
    sp.add_argument("--sweep-order", type=int)
    return parser


def run(argv):
    """Execute one command; returns ``(result_dict, exit_code, summary)``."""
    start = time.perf_counter()
    command = " ".join(argv)
    summary = ""
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "handler", None):
            raise CommandError("no subcommand given")
        status, payload, summary = args.handler(args)
    except BudgetExceeded as exc:
        status, payload, summary = "budget-exceeded", {"value": None, "exhaustive": False, "nodes": exc.nodes}, str(exc)
    except (CommandError, ValueError, OSError, StopIteration) as exc:
        status, payload, summary = "error", {"error": str(exc) or type(exc).__name__}, f"error: {exc}"
    result = {
        "command": command,
        "status": status,
        "payload": payload,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    return result, EXIT_CODES[status], summary


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result, code, summary = run(argv)
    sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
    if "--json-only" not in argv:
        sys.stderr.write(f"[{result['status']}] {summary}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
