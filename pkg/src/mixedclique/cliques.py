"""Relative and absolute clique numbers of colored mixed graphs.

A vertex set is a relative clique iff its members pairwise see each other, so the
relative clique number is the ordinary clique number of the see-graph.  An
absolute clique additionally needs every special-2-path witness inside the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ._bitset import BudgetExceeded, iter_cliques_lex, lex_first_clique, max_clique_size
from .graph import MixedGraph
from .relations import DIRECT, see_graph, see_masks


@dataclass(frozen=True)
class CliqueCertificate:
    """A vertex set with a witness for every pair: ``DIRECT`` or a midpoint."""

    vertices: tuple
    witnesses: dict = field(default_factory=dict)

    def verify(self, G: MixedGraph, absolute: bool = False) -> bool:
        inside = set(self.vertices)
        for a, b in combinations(self.vertices, 2):
            wit = self.witnesses.get((min(a, b), max(a, b)))
            if wit is None:
                return False
            if wit == DIRECT:
                if not G.has_connection(a, b):
                    return False
                continue
            ta, tb = G.code(a, wit), G.code(b, wit)
            if ta is None or tb is None or ta == tb:
                return False
            if absolute and wit not in inside:
                return False
        return True

    def to_json(self) -> dict:
        pairs = []
        for (a, b), wit in sorted(self.witnesses.items()):
            pairs.append({"u": a, "v": b, "witness": wit if wit == DIRECT else {"via": wit}})
        return {"vertices": list(self.vertices), "pairs": pairs}


@dataclass(frozen=True)
class CliqueCheck:
    ok: bool
    certificate: Optional[CliqueCertificate] = None
    failing_pair: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def _certificate(G, vertices, absolute=False):
    vertices = tuple(sorted(vertices))
    inside = set(vertices)
    wit = {}
    for a, b in combinations(vertices, 2):
        if G.has_connection(a, b):
            wit[(a, b)] = DIRECT
            continue
        choice = None
        for v in G.neighbors(a):
            cb = G.code(b, v)
            if cb is not None and cb != G.code(a, v) and (not absolute or v in inside):
                choice = v
                break
        if choice is None:
            return None, (a, b)
        wit[(a, b)] = choice
    return CliqueCertificate(vertices, wit), None


def is_relative_clique(G: MixedGraph, R) -> CliqueCheck:
    cert, bad = _certificate(G, R)
    if cert is None:
        return CliqueCheck(False, failing_pair=bad)
    return CliqueCheck(True, certificate=cert)


def omega_r(G: MixedGraph):
    """Relative clique number with the lexicographically smallest maximum clique."""
    if G.order == 0:
        return 0, CliqueCertificate(())
    masks = see_masks(G)
    k = max_clique_size(masks)
    verts = lex_first_clique(masks, k)
    cert, _ = _certificate(G, verts)
    return k, cert


def omega_r_value(G: MixedGraph, floor: int = 0) -> int:
    return max_clique_size(see_masks(G), floor)


def is_mn_clique(G: MixedGraph) -> bool:
    """Every non-adjacent pair is joined by a special 2-path."""
    return see_graph(G).is_complete()


def _midpoint_masks(G):
    n = G.order
    mid = [[0] * n for _ in range(n)]
    codes = G._codes
    for v in range(n):
        nbrs = G.neighbors(v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if codes[a][v] != codes[b][v]:
                    mid[a][b] |= 1 << v
                    mid[b][a] |= 1 << v
    return mid


def is_absolute_clique_set(G: MixedGraph, S) -> bool:
    """Whether the subgraph induced by ``S`` is an (m,n)-clique."""
    mid = _midpoint_masks(G)
    smask = sum(1 << v for v in set(S))
    for a, b in combinations(sorted(set(S)), 2):
        if not G.has_connection(a, b) and not mid[a][b] & smask:
            return False
    return True


def omega_a(G: MixedGraph, budget: int = 10**7):
    """Absolute clique number and the lexicographically smallest largest set.

    Candidates are cliques of the see-graph, tried from the relative clique
    number downward; each is re-validated with internal witnesses only.
    Raises :class:`BudgetExceeded` after ``budget`` candidates.
    """
    if G.order == 0:
        return 0, ()
    masks = see_masks(G)
    mid = _midpoint_masks(G)
    top = max_clique_size(masks)
    tried = 0
    for k in range(top, 0, -1):
        for clique in iter_cliques_lex(masks, k):
            tried += 1
            if tried > budget:
                raise BudgetExceeded(tried - 1)
            smask = 0
            for v in clique:
                smask |= 1 << v
            ok = True
            for i, a in enumerate(clique):
                for b in clique[i + 1:]:
                    if not G.has_connection(a, b) and not mid[a][b] & smask:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return k, tuple(clique)
    return 1, (0,)

