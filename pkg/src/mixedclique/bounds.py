"""Closed-form bounds, degeneracy, and detectors for the planar forbidden configurations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ._bitset import lex_first_clique
from .graph import MixedGraph, SimpleGraph, code_to_type, underlying


def _p(m: int, n: int) -> int:
    return 2 * m + n


def degeneracy(H: SimpleGraph):
    """Degeneracy and a minimum-degree elimination order (ties to the smallest vertex)."""
    deg = [H.degree(v) for v in range(H.order)]
    alive = set(range(H.order))
    order = []
    k = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        order.append(v)
        alive.discard(v)
        for w in H.adj[v]:
            if w in alive:
                deg[w] -= 1
    return k, order


def max_degree_rel_bound(p: int, delta: int) -> int:
    """Upper bound on the relative clique number for maximum degree ``delta``."""
    if p < 2:
        raise ValueError("the bound needs p = 2m+n >= 2")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    return (p - 1) * delta * delta // p + delta + 1


def see_degeneracy_bound(p: int, delta: int) -> int:
    return max_degree_rel_bound(p, delta) - 1


def planar_bounds(p: int):
    """``(lower, upper)`` for the relative clique number of planar graphs."""
    if p < 2:
        raise ValueError("the bound needs p = 2m+n >= 2")
    return 3 * p * p + p + 1, 42 * p * p + 8


def outerplanar_bound(p: int) -> int:
    if p < 2:
        raise ValueError("the bound needs p = 2m+n >= 2")
    return 3 * p + 1


def path_bound(m: int, n: int) -> int:
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("need m, n >= 0 and not both zero")
    eps = 1 if n == 0 or n % 2 else 2
    return 2 * m + n + eps


def forest_bound(m: int, n: int) -> int:
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("need m, n >= 0 and not both zero")
    if n == 0:
        return 2 * m + 1
    return 2 * (m + n // 2 + 1)


@dataclass
class BoundReport:
    m: int
    n: int
    delta: int
    bound: int
    observed: int
    witness: Optional[list] = None
    extra: dict = field(default_factory=dict)

    @property
    def p(self) -> int:
        return _p(self.m, self.n)

    @property
    def holds(self) -> bool:
        return self.observed <= self.bound

    def to_json(self) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "delta": self.delta,
            "bound": self.bound,
            "observed": self.observed,
            "holds": self.holds,
            "witness": self.witness,
        }
        out.update(self.extra)
        return out


def verify_lemma32(G: MixedGraph) -> BoundReport:
    """Compare the degeneracy of the see-graph with its closed-form bound.

    On a violation the witness is the vertex set that remained when the
    elimination first met a minimum degree above the bound.
    """
    from .relations import see_graph

    p = _p(G.m, G.n)
    delta = G.max_degree()
    bound = see_degeneracy_bound(p, delta)
    sg = see_graph(G).as_simple()
    k, order = degeneracy(sg)
    witness = None
    if k > bound:
        deg = [sg.degree(v) for v in range(sg.order)]
        alive = set(range(sg.order))
        for v in order:
            if min(deg[x] for x in alive) > bound:
                witness = sorted(alive)
                break
            alive.discard(v)
            for w in sg.adj[v]:
                if w in alive:
                    deg[w] -= 1
    return BoundReport(G.m, G.n, delta, bound, k, witness, {"elimination_order": order})


# --------------------------------------------------------------------------
# Forbidden configurations


@dataclass(frozen=True)
class ConfigurationWitness:
    center: int
    vertices: tuple
    agreed_type: Optional[str] = None

    def to_json(self) -> dict:
        return {"center": self.center, "vertices": list(self.vertices), "agreed_type": self.agreed_type}


def _require_relative_clique(G, R):
    from .cliques import is_relative_clique

    check = is_relative_clique(G, R)
    if not check:
        raise ValueError(f"not a relative clique: pair {check.failing_pair} does not see")


def _independent_subset(U: SimpleGraph, candidates, size):
    """Lexicographically first ``size`` pairwise non-adjacent vertices among ``candidates``."""
    cand = sorted(candidates)
    if len(cand) < size:
        return None
    masks = []
    for i, a in enumerate(cand):
        mk = 0
        for j, b in enumerate(cand):
            if i != j and not U.has_edge(a, b):
                mk |= 1 << j
        masks.append(mk)
    found = lex_first_clique(masks, size)
    return None if found is None else tuple(cand[i] for i in found)


def detect_F1(G: MixedGraph, R):
    """A center and ``2p+1`` independent vertices of ``R`` all reaching it with one type."""
    R = sorted(set(R))
    _require_relative_clique(G, R)
    size = 2 * _p(G.m, G.n) + 1
    U = underlying(G)
    inside = set(R)
    for a in range(G.order):
        groups = {}
        for x in G.neighbors(a):
            if x in inside:
                groups.setdefault(G.code(x, a), []).append(x)
        for code in sorted(groups):
            found = _independent_subset(U, groups[code], size)
            if found is not None:
                return ConfigurationWitness(a, found, str(code_to_type(code, G.n)))
    return None


def detect_F2(G: MixedGraph, R):
    """A center with ``2p^2+1`` pairwise non-adjacent neighbors in ``R``."""
    R = sorted(set(R))
    _require_relative_clique(G, R)
    p = _p(G.m, G.n)
    size = 2 * p * p + 1
    U = underlying(G)
    inside = set(R)
    for a in range(G.order):
        found = _independent_subset(U, [x for x in G.neighbors(a) if x in inside], size)
        if found is not None:
            return ConfigurationWitness(a, found)
    return None
