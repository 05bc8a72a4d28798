"""Exhaustive searches over colorings of a fixed underlying graph.

``maximize_omega_r`` assigns one of the ``p = 2m + n`` type codes to every edge
of an underlying graph.  Colorings are explored up to color permutation and
global arc reversal (see :func:`mixedclique.graph.type_assignments`).  A pair of
non-adjacent vertices is *dead* once every common neighbor has both legs
assigned with the same type toward it; the clique number of the graph of
non-dead pairs bounds every completion of the partial coloring.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from ._bitset import max_clique_size
from .bounds import max_degree_rel_bound
from .cliques import omega_a, omega_r
from .graph import MixedGraph, SimpleGraph, enumerate_subcubic, named_graph, reverse_code, serialize_mng

DEFAULT_BUDGET = 10**8


@dataclass
class SearchOutcome:
    """Best value above ``floor`` (None if nothing beat it) with a witness coloring."""

    value: Optional[int]
    witness: Optional[MixedGraph]
    exhaustive: bool
    nodes: int
    seconds: float = 0.0
    floor: int = 0

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": serialize_mng(self.witness) if self.witness is not None else None,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "floor": self.floor,
        }


def search_edge_order(U: SimpleGraph) -> list:
    """Edges in breadth-first discovery order, so vertices complete early."""
    seen = [False] * U.order
    listed = set()
    out = []
    for root in range(U.order):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for u in queue:
            for w in U.neighbors(u):
                e = (min(u, w), max(u, w))
                if e not in listed:
                    listed.add(e)
                    out.append((u, w))
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return out


def maximize_omega_r(U: SimpleGraph, m: int, n: int, budget: int = DEFAULT_BUDGET,
                     floor: int = 0, reduced: bool = True) -> SearchOutcome:
    """Largest relative clique number over all ``(m, n)`` colorings of ``U``.

    Only colorings beating ``floor`` are reported; pass the best value known so
    far to turn the search into a check for anything larger.
    """
    start = time.perf_counter()
    p = 2 * m + n
    order = U.order
    edges = search_edge_order(U)
    if p == 0:
        if edges:
            raise ValueError("a graph with edges needs 2m+n >= 1")
        value = 1 if order else 0
        return SearchOutcome(value if value > floor else None, MixedGraph(m, n, order) if value > floor else None,
                             True, 0, time.perf_counter() - start, floor)
    eidx = {}
    for i, (u, w) in enumerate(edges):
        eidx[(u, w)] = (i, False)
        eidx[(w, u)] = (i, True)

    # pair id -> list of (edge a-v index, reversed?, edge b-v index, reversed?)
    pair_ids = {}
    pair_ends = []
    alive = []
    masks = [0] * order
    for u, w in U.edge_list():
        masks[u] |= 1 << w
        masks[w] |= 1 << u
    triples_by_edge = [[] for _ in edges]
    for v in range(order):
        nb = U.neighbors(v)
        for a, b in combinations(nb, 2):
            if U.has_edge(a, b):
                continue
            key = (a, b)
            if key not in pair_ids:
                pair_ids[key] = len(pair_ends)
                pair_ends.append(key)
                alive.append(0)
            pid = pair_ids[key]
            alive[pid] += 1
            ia, ra = eidx[(a, v)]
            ib, rb = eidx[(b, v)]
            tri = (pid, ia, ra, ib, rb)
            triples_by_edge[ia].append(tri)
            triples_by_edge[ib].append(tri)
    for pid, (a, b) in enumerate(pair_ends):
        masks[a] |= 1 << b
        masks[b] |= 1 << a

    codes = [-1] * len(edges)
    best = floor
    best_codes = None
    nodes = 0
    exhausted = False
    top_possible = max_clique_size(masks, floor)
    if top_possible <= floor:
        return SearchOutcome(None, None, True, 0, time.perf_counter() - start, floor)
    ceiling = top_possible
    nedges = len(edges)

    def toward(i, rev):
        c = codes[i]
        return reverse_code(c, n) if rev else c

    def assign(i, code):
        codes[i] = code
        died = []
        for pid, ia, ra, ib, rb in triples_by_edge[i]:
            other = ib if ia == i else ia
            if codes[other] < 0:
                continue
            if toward(ia, ra) == toward(ib, rb):
                alive[pid] -= 1
                if alive[pid] == 0:
                    a, b = pair_ends[pid]
                    masks[a] &= ~(1 << b)
                    masks[b] &= ~(1 << a)
                    died.append(pid)
        return died

    def unassign(i):
        for pid, ia, ra, ib, rb in triples_by_edge[i]:
            other = ib if ia == i else ia
            if codes[other] < 0:
                continue
            if toward(ia, ra) == toward(ib, rb):
                if alive[pid] == 0:
                    a, b = pair_ends[pid]
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
                alive[pid] += 1
        codes[i] = -1

    def choices(top_edge, top_arc):
        if reduced:
            for c in range(1, min(top_edge + 1, n) + 1):
                yield c - 1, max(top_edge, c), top_arc
            for c in range(1, min(top_arc + 1, m) + 1):
                base = n + 2 * (c - 1)
                yield base, top_edge, max(top_arc, c)
                if top_arc > 0:
                    yield base + 1, top_edge, max(top_arc, c)
        else:
            for code in range(p):
                yield code, top_edge, top_arc

    def dfs(i, bound, top_edge, top_arc):
        nonlocal best, best_codes, nodes, exhausted
        if i == nedges:
            if bound > best:
                best = bound
                best_codes = list(codes)
            return
        for code, te, ta in choices(top_edge, top_arc):
            if best >= ceiling:
                return
            nodes += 1
            if nodes > budget:
                exhausted = True
                return
            died = assign(i, code)
            nb = bound
            if died:
                nb = max_clique_size(masks, best)
            if nb > best:
                dfs(i + 1, nb, te, ta)
            unassign(i)
            if exhausted:
                return

    dfs(0, top_possible, 0, 0)
    witness = None
    value = None
    if best_codes is not None:
        value = best
        witness = MixedGraph.from_codes(m, n, order, edges, best_codes)
    return SearchOutcome(value, witness, not exhausted, nodes, time.perf_counter() - start, floor)


# --------------------------------------------------------------------------
# Sweeps over many underlying graphs


@dataclass
class SweepOutcome:
    value: Optional[int]
    witness: Optional[MixedGraph]
    underlying: Optional[SimpleGraph]
    exhaustive: bool
    graphs: int
    nodes: int
    seconds: float = 0.0
    floor: int = 0

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": serialize_mng(self.witness) if self.witness is not None else None,
            "exhaustive": self.exhaustive,
            "graphs": self.graphs,
            "nodes": self.nodes,
            "floor": self.floor,
        }


def _one(args):
    U, m, n, budget, floor = args
    return maximize_omega_r(U, m, n, budget=budget, floor=floor)


def sweep_max_omega_r(graphs: Iterable[SimpleGraph], m: int, n: int, floor: int = 0,
                      budget: int = DEFAULT_BUDGET, threads: int = 1, stop_above: Optional[int] = None) -> SweepOutcome:
    """Largest relative clique number over all colorings of all ``graphs``.

    The incumbent carries from graph to graph; graphs with no more vertices than
    the incumbent are skipped.  ``budget`` applies to each graph separately.
    ``stop_above`` ends the sweep as soon as some value reaches it.  With
    ``threads > 1`` graphs are solved independently in worker processes and
    the witness is the first graph in input order attaining the maximum, which
    is the graph a sequential run reports as well.
    """
    start = time.perf_counter()
    graphs = list(graphs)
    best, best_w, best_u = floor, None, None
    nodes, exhaustive = 0, True
    if threads > 1 and stop_above is None:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_one, [(U, m, n, budget, floor) for U in graphs if U.order > floor]))
        live = [U for U in graphs if U.order > floor]
        for U, out in zip(live, results):
            nodes += out.nodes
            exhaustive &= out.exhaustive
            if out.value is not None and out.value > best:
                best, best_w, best_u = out.value, out.witness, U
    else:
        for U in graphs:
            if U.order <= best:
                continue
            out = maximize_omega_r(U, m, n, budget=budget, floor=best)
            nodes += out.nodes
            exhaustive &= out.exhaustive
            if out.value is not None:
                best, best_w, best_u = out.value, out.witness, U
                if stop_above is not None and best >= stop_above:
                    break
    value = best if best_w is not None else None
    return SweepOutcome(value, best_w, best_u, exhaustive, len(graphs), nodes, time.perf_counter() - start, floor)


# --------------------------------------------------------------------------
# Edge colorings and the 2-path structure


def edge_color(U: SimpleGraph, k: int):
    """A proper ``k``-edge-coloring as colors ``1..k`` aligned with ``U.edge_list()``, or None.

    Exhaustive backtracking with colors introduced in first-use order; a None
    answer certifies that no proper coloring exists.
    """
    if k < 1:
        raise ValueError("k must be positive")
    edges = U.edge_list()
    if not edges:
        return []
    if U.max_degree() > k:
        return None
    used = [0] * U.order
    colors = [0] * len(edges)

    def rec(i, top):
        if i == len(edges):
            return True
        u, v = edges[i]
        taken = used[u] | used[v]
        for c in range(1, min(top + 1, k) + 1):
            bit = 1 << c
            if taken & bit:
                continue
            colors[i] = c
            used[u] |= bit
            used[v] |= bit
            if rec(i + 1, max(top, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        colors[i] = 0
        return False

    return list(colors) if rec(0, 0) else None


def is_proper_edge_coloring(U: SimpleGraph, colors) -> bool:
    edges = U.edge_list()
    if len(colors) != len(edges):
        return False
    for (e, ce), (f, cf) in combinations(zip(edges, colors), 2):
        if ce == cf and set(e) & set(f):
            return False
    return True


def unique_two_path_check(U: SimpleGraph) -> bool:
    """Adjacent pairs share no neighbor and non-adjacent pairs share exactly one."""
    for a, b in combinations(range(U.order), 2):
        common = len(U.adj[a] & U.adj[b])
        if common != (0 if U.has_edge(a, b) else 1):
            return False
    return True


def edge_colored_graph(U: SimpleGraph, colors, n: Optional[int] = None) -> MixedGraph:
    """The ``(0, n)`` graph with edge ``U.edge_list()[i]`` colored ``colors[i]``."""
    n = max(colors, default=1) if n is None else n
    return MixedGraph(0, n, U.order, [("e", u, v, c) for (u, v), c in zip(U.edge_list(), colors)])


def wagner_03() -> MixedGraph:
    """Wagner graph as a (0,3) graph: chords color 1, rim edges ``{i, i+1}`` color 2 for even i, 3 for odd."""
    recs = [("e", i, i + 4, 1) for i in range(4)]
    recs += [("e", i, (i + 1) % 8, 2 if i % 2 == 0 else 3) for i in range(8)]
    return MixedGraph(0, 3, 8, recs)


# --------------------------------------------------------------------------
# Subcubic extremal values

THEOREM41_CASES = {
    "a": (1, 0, 7),
    "b": (0, 2, 7),
    "c": (0, 3, 8),
    "d": (0, 4, 10),
    "e": (2, 0, 10),
    "f": (1, 1, 10),
}


@dataclass(frozen=True)
class TheoremCase:
    case: str
    m: int
    n: int
    claimed: int

    @classmethod
    def get(cls, case: str) -> "TheoremCase":
        if case not in THEOREM41_CASES:
            raise ValueError(f"unknown case {case!r}; expected one of a..f")
        m, n, claimed = THEOREM41_CASES[case]
        return cls(case, m, n, claimed)


@dataclass
class CaseReport:
    case: TheoremCase
    lower_value: Optional[int]
    lower_witness: Optional[MixedGraph]
    lower_method: str
    upper_max_found: Optional[int]
    upper_range: str
    upper_exhaustive: bool
    notes: list = field(default_factory=list)
    nodes: int = 0

    @property
    def lower_confirmed(self) -> bool:
        return self.lower_value is not None and self.lower_value >= self.case.claimed

    @property
    def upper_confirmed(self) -> bool:
        return self.upper_exhaustive and (self.upper_max_found is None or self.upper_max_found <= self.case.claimed)

    def to_json(self) -> dict:
        return {
            "case": self.case.case,
            "m": self.case.m,
            "n": self.case.n,
            "claimed": self.case.claimed,
            "lower": {
                "value": self.lower_value,
                "confirmed": self.lower_confirmed,
                "method": self.lower_method,
                "witness": serialize_mng(self.lower_witness) if self.lower_witness is not None else None,
            },
            "upper": {
                "max_found_above_claim": self.upper_max_found,
                "confirmed_on_range": self.upper_confirmed,
                "exhaustive": self.upper_exhaustive,
                "range": self.upper_range,
            },
            "notes": self.notes,
            "nodes": self.nodes,
        }


def cubic_graphs(nmax: int = 10) -> list:
    return [g for g in enumerate_subcubic(nmax) if g.order >= 4 and all(g.degree(v) == 3 for v in range(g.order))]


def verify_theorem41(case: str, budget: int = DEFAULT_BUDGET, sweep_order: Optional[int] = None,
                     threads: int = 1, upper: bool = True) -> CaseReport:
    """Confirm one case of the subcubic table at desk scale.

    Lower bounds come from explicit witnesses.  Upper bounds for a, b and c are
    confirmed only on the swept range; for d, e and f the maximum-degree bound
    already equals the claimed value.  The report states which applies.
    """
    tc = TheoremCase.get(case)
    m, n, claim = tc.m, tc.n, tc.claimed
    notes = []
    nodes = 0
    if case in ("a", "b"):
        lo = sweep_max_omega_r(enumerate_subcubic(7), m, n, floor=claim - 1, budget=budget, stop_above=claim)
        nodes += lo.nodes
        lower_value = lo.value
        lower_witness = lo.witness
        lower_method = "coloring sweep over connected subcubic graphs on at most 7 vertices"
        order = sweep_order or 8
        if upper:
            up = sweep_max_omega_r(enumerate_subcubic(order), m, n, floor=claim, budget=budget, threads=threads)
            nodes += up.nodes
            upper_max, upper_exh = up.value, up.exhaustive
        else:
            upper_max, upper_exh = None, False
        upper_range = f"all connected subcubic graphs on at most {order} vertices, all colorings up to symmetry"
    else:
        if case == "c":
            G = wagner_03()
            lower_value, _ = omega_r(G)
            lower_witness = G
            lower_method = "Wagner graph: chords color 1, rim alternating colors 2 and 3"
        elif case == "d":
            pet = named_graph("petersen")
            coloring = edge_color(pet, 4)
            G = edge_colored_graph(pet, coloring, n=4)
            lower_value, _ = omega_r(G)
            lower_witness = G
            lower_method = "Petersen graph with a proper 4-edge-coloring"
            notes.append(f"absolute clique number of the witness: {omega_a(G)[0]}")
        else:
            out = maximize_omega_r(named_graph("petersen"), m, n, budget=budget, floor=claim - 1)
            nodes += out.nodes
            lower_value, lower_witness = out.value, out.witness
            lower_method = "coloring search over the Petersen graph"
        order = sweep_order or 10
        if case == "c" and upper:
            graphs = cubic_graphs(order)
            up = sweep_max_omega_r(graphs, m, n, floor=claim, budget=budget, threads=threads)
            nodes += up.nodes
            upper_max, upper_exh = up.value, up.exhaustive
            upper_range = f"all {len(graphs)} connected cubic graphs on at most {order} vertices (Petersen, Wagner and cubical included), all colorings up to symmetry"
        elif case == "c":
            upper_max, upper_exh = None, False
            upper_range = "not swept"
        else:
            cap = max_degree_rel_bound(2 * m + n, 3)
            upper_max, upper_exh = None, cap <= claim
            upper_range = f"every subcubic graph: the maximum-degree bound for p={2 * m + n}, delta=3 is {cap}"
    if case in ("a", "b", "c"):
        notes.append("upper bound confirmed only on the stated range, not for the whole family")
    return CaseReport(tc, lower_value, lower_witness, lower_method, upper_max, upper_range, upper_exh, notes, nodes)
