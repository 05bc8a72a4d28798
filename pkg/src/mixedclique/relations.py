"""Special 2-paths, the "sees" relation, agreement, and the see-graph.

A 2-path ``u - v - w`` is special when the two legs reach the midpoint with
different adjacency types, i.e. ``toward(u, v) != toward(w, v)``.  Comparing both
legs *toward the midpoint* is what makes two consecutive same-colored arcs
``u -> v -> w`` special while two same-colored arcs into ``v`` are not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import AdjacencyType, MixedGraph, SimpleGraph

DIRECT = "direct"

Witness = Union[str, int]


def adjacency_type_toward(G: MixedGraph, x: int, v: int) -> Optional[AdjacencyType]:
    return G.toward(x, v)


def is_special_two_path(G: MixedGraph, u: int, v: int, w: int) -> bool:
    if u == w or v in (u, w):
        raise ValueError("a 2-path needs three distinct vertices")
    tu, tw = G.code(u, v), G.code(w, v)
    if tu is None or tw is None:
        raise ValueError(f"missing leg in 2-path {u}-{v}-{w}")
    return tu != tw


def see_witness(G: MixedGraph, u: int, w: int) -> Optional[Witness]:
    """``DIRECT`` if adjacent, else the smallest midpoint of a special 2-path, else None."""
    if u == w:
        raise ValueError("a vertex does not see itself")
    if G.has_connection(u, w):
        return DIRECT
    nb_w = G._codes[w]
    for v in G.neighbors(u):
        tw = nb_w.get(v)
        if tw is not None and G._codes[u][v] != tw:
            return v
    return None


def sees(G: MixedGraph, u: int, w: int) -> bool:
    return see_witness(G, u, w) is not None


def agree_on(G: MixedGraph, a: int, b: int, c: int) -> bool:
    if a == b:
        raise ValueError("agreement is defined for distinct vertices")
    ta, tb = G.code(a, c), G.code(b, c)
    if ta is None or tb is None:
        raise ValueError(f"{a} and {b} must both be adjacent to {c}")
    return ta == tb


@dataclass(frozen=True)
class SeeGraph:
    """The simple graph of seeing pairs, with one witness per edge."""

    order: int
    witnesses: dict = field(default_factory=dict)

    @property
    def edges(self) -> list:
        return sorted(self.witnesses)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.witnesses

    def witness(self, u: int, v: int) -> Optional[Witness]:
        return self.witnesses.get((min(u, v), max(u, v)))

    def masks(self) -> list:
        """Neighborhood bitmasks, ``masks[v] >> u & 1`` iff u sees v."""
        out = [0] * self.order
        for u, v in self.witnesses:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def degree(self, v: int) -> int:
        return bin(self.masks()[v]).count("1")

    def is_complete(self) -> bool:
        return len(self.witnesses) == self.order * (self.order - 1) // 2

    def as_simple(self) -> SimpleGraph:
        return SimpleGraph(self.order, self.witnesses)

    def to_json(self) -> dict:
        edges = []
        for (u, v), wit in sorted(self.witnesses.items()):
            edges.append({"u": u, "v": v, "witness": wit if wit == DIRECT else {"via": wit}})
        return {"order": self.order, "edges": edges}


def see_graph(G: MixedGraph) -> SeeGraph:
    wit = {}
    for u, v in G.pairs():
        wit[(u, v)] = DIRECT
    # increasing midpoints, so the first witness recorded is the smallest
    for v in range(G.order):
        nbrs = G.neighbors(v)
        codes = G._codes
        for i, a in enumerate(nbrs):
            ta = codes[a][v]
            for b in nbrs[i + 1:]:
                if codes[b][v] != ta:
                    wit.setdefault((a, b), v)
    return SeeGraph(G.order, wit)


def see_masks(G: MixedGraph) -> list:
    """Bitmask form of the see relation, without witnesses (hot path for searches)."""
    order = G.order
    masks = [0] * order
    codes = G._codes
    for v in range(order):
        for a in G.neighbors(v):
            masks[v] |= 1 << a
        nbrs = G.neighbors(v)
        for i, a in enumerate(nbrs):
            ta = codes[a][v]
            for b in nbrs[i + 1:]:
                if codes[b][v] != ta:
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
    return masks
