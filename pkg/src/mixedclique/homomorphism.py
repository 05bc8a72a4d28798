"""Colored homomorphisms, pair quotients, and the exact colored mixed chromatic number.

The chromatic number is found by partition search: a partition of the vertices
is the fiber structure of a homomorphism iff every class is independent and all
connections between two classes share one adjacency type.  The quotient by such
a partition is then itself a valid target, so the least number of classes is the
least order of a homomorphic image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ._bitset import BudgetExceeded
from .cliques import omega_r
from .bounds import forest_bound, path_bound
from .graph import MixedGraph, enumerate_trees, named_graph, reverse_code, type_assignments
from .relations import see_masks

CHI_MAX_ORDER = 12


class IdentificationConflict(Exception):
    """Two vertices cannot be identified: they are adjacent or see each other."""

    def __init__(self, kind: str, at: Optional[int] = None):
        self.kind = kind
        self.at = at
        super().__init__(kind if at is None else f"{kind} at {at}")


@dataclass(frozen=True)
class Partition:
    k: int
    classes: tuple

    def members(self) -> list:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.classes):
            out[c].append(v)
        return out


def _check_shape(G, H, f):
    if (G.m, G.n) != (H.m, H.n):
        raise ValueError(f"(m,n) mismatch: {(G.m, G.n)} vs {(H.m, H.n)}")
    if len(f) != G.order:
        raise ValueError(f"mapping has {len(f)} entries for {G.order} vertices")
    if any(not 0 <= x < H.order for x in f):
        raise ValueError("mapping image out of target range")


def is_homomorphism(G: MixedGraph, H: MixedGraph, f: Sequence[int]) -> bool:
    _check_shape(G, H, f)
    for u, v in G.pairs():
        fu, fv = f[u], f[v]
        if fu == fv or H.code(fu, fv) != G.code(u, v):
            return False
    return True


def hom_exists(G: MixedGraph, H: MixedGraph, budget: int = 10**7):
    """The lexicographically smallest homomorphism ``G -> H`` as a list, or None.

    Raises :class:`BudgetExceeded` when more than ``budget`` partial maps are tried.
    """
    if (G.m, G.n) != (H.m, H.n):
        raise ValueError(f"(m,n) mismatch: {(G.m, G.n)} vs {(H.m, H.n)}")
    n = G.order
    f = [-1] * n
    earlier = [[u for u in G.neighbors(v) if u < v] for v in range(n)]
    gcodes, hcodes = G._codes, H._codes
    nodes = 0

    def place(v):
        nonlocal nodes
        if v == n:
            return True
        for x in range(H.order):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes - 1)
            ok = True
            for u in earlier[v]:
                if hcodes[x].get(f[u]) != gcodes[v][u]:
                    ok = False
                    break
            if ok:
                f[v] = x
                if place(v + 1):
                    return True
        f[v] = -1
        return False

    return list(f) if place(0) else None


def quotient_pair(G: MixedGraph, u: int, v: int):
    """Identify ``u`` and ``v``; return ``(H, mapping)``.

    The merged vertex keeps index ``min(u, v)``, the vertex ``max(u, v)`` is removed
    and later vertices shift down by one.  Raises :class:`IdentificationConflict`
    with kind ``"loop"`` for adjacent vertices and ``"type clash"`` (at the
    smallest offending common neighbor) when they see each other.
    """
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if G.has_connection(u, v):
        raise IdentificationConflict("loop")
    for x in G.neighbors(u):
        cv = G.code(v, x)
        if cv is not None and cv != G.code(u, x):
            raise IdentificationConflict("type clash", x)
    lo, hi = min(u, v), max(u, v)
    f = [x if x < hi else x - 1 for x in range(G.order)]
    f[hi] = lo
    seen = set()
    records = []
    for kind, a, b, c in G.connections():
        rec = (kind, f[a], f[b], c)
        if kind == "e" and rec[1] > rec[2]:
            rec = ("e", rec[2], rec[1], c)
        if rec not in seen:
            seen.add(rec)
            records.append(rec)
    return MixedGraph(G.m, G.n, G.order - 1, records), f


def _partition_search(G, k, order, smasks, counter, budget):
    n = G.order
    cls = [-1] * n
    members = [0] * k
    rel = {}
    codes = G._codes
    nbrs = [G.neighbors(z) for z in range(n)]
    colors_n = G.n

    def place(i, used):
        if i == n:
            return True
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded(counter[0])
        z = order[i]
        for c in range(min(used + 1, k)):
            if members[c] & smasks[z]:
                continue
            added = []
            ok = True
            for y in nbrs[z]:
                d = cls[y]
                if d < 0:
                    continue
                t = codes[z][y]
                cur = rel.get((c, d))
                if cur is None:
                    rel[(c, d)] = t
                    rel[(d, c)] = reverse_code(t, colors_n)
                    added.append((c, d))
                elif cur != t:
                    ok = False
                    break
            if ok:
                cls[z] = c
                members[c] |= 1 << z
                if place(i + 1, max(used, c + 1)):
                    return True
                cls[z] = -1
                members[c] &= ~(1 << z)
            for c0, d0 in added:
                del rel[(c0, d0)]
                del rel[(d0, c0)]
        return False

    if place(0, 0):
        return list(cls)
    return None


def _first_use(labels):
    relabel = {}
    return [relabel.setdefault(c, len(relabel)) for c in labels]


def chi_mn(G: MixedGraph, budget: int = 10**7):
    """Exact colored mixed chromatic number with the lexicographically smallest partition.

    The optimum is located with vertices ordered by decreasing see-degree; the
    reported partition is then the first one found in vertex-index order.
    """
    if G.order > CHI_MAX_ORDER:
        raise ValueError(f"chromatic number search is limited to order {CHI_MAX_ORDER}")
    if G.order == 0:
        return 0, Partition(0, ())
    smasks = see_masks(G)
    lower = max(1, omega_r(G)[0])
    by_degree = sorted(range(G.order), key=lambda z: (-smasks[z].bit_count(), z))
    counter = [0]
    k = lower
    while _partition_search(G, k, by_degree, smasks, counter, budget) is None:
        k += 1
    labels = _partition_search(G, k, list(range(G.order)), smasks, counter, budget)
    return k, Partition(k, tuple(_first_use(labels)))


def quotient_by_partition(G: MixedGraph, part: Partition) -> MixedGraph:
    """The image of ``G`` under the class map; valid whenever the partition is."""
    seen = {}
    for kind, a, b, c in G.connections():
        ca, cb = part.classes[a], part.classes[b]
        key = (min(ca, cb), max(ca, cb))
        rec = ("e", key[0], key[1], c) if kind == "e" else ("a", ca, cb, c)
        seen.setdefault(key, rec)
    return MixedGraph(G.m, G.n, part.k, seen.values())


# --------------------------------------------------------------------------
# Family checks


@dataclass
class FamilyReport:
    family: str
    m: int
    n: int
    size_cap: int
    bound: int
    attained: int
    witness: Optional[MixedGraph]
    graphs_checked: int

    @property
    def holds(self) -> bool:
        return self.attained <= self.bound

    def to_json(self) -> dict:
        from .graph import serialize_mng
        return {
            "family": self.family,
            "m": self.m,
            "n": self.n,
            "size_cap": self.size_cap,
            "bound": self.bound,
            "attained": self.attained,
            "holds": self.holds,
            "graphs_checked": self.graphs_checked,
            "witness": serialize_mng(self.witness) if self.witness is not None else None,
        }


def family_chi_check(family: str, m: int, n: int, size_cap: int, budget: int = 10**8) -> FamilyReport:
    """Largest chromatic number over all colorings of paths or trees up to ``size_cap`` vertices.

    Trees stand in for forests: every forest is a subgraph of some tree and the
    chromatic number cannot drop when edges are added.  Colorings are taken up to
    color permutation and global arc reversal, which preserve the chromatic number.
    """
    p = 2 * m + n
    if not 1 <= p <= 4:
        raise ValueError("family checks need 1 <= 2m+n <= 4")
    if not 1 <= size_cap <= 10:
        raise ValueError("size_cap must lie in 1..10")
    if family == "paths":
        bound = path_bound(m, n)
        members = [named_graph(f"path({k})") for k in range(1, size_cap + 1)]
    elif family == "forests":
        bound = forest_bound(m, n)
        members = list(enumerate_trees(size_cap))
    else:
        raise ValueError(f"unknown family {family!r}")
    best, witness, checked = 0, None, 0
    for U in members:
        edges = U.edge_list()
        for codes in type_assignments(len(edges), m, n):
            G = MixedGraph.from_codes(m, n, U.order, edges, codes)
            val, _ = chi_mn(G, budget=budget)
            checked += 1
            if val > best:
                best, witness = val, G
    return FamilyReport(family, m, n, size_cap, bound, best, witness, checked)

