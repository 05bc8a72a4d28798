"""Colored mixed graphs, plain simple graphs, and the text formats they use.

An ``(m, n)``-colored mixed graph puts exactly one connection on every edge of a
simple underlying graph: either an undirected edge with a color in ``1..n`` or an
arc with a color in ``1..m``.  Vertices are dense 0-based integers.

Search code works on integer *type codes* rather than :class:`AdjacencyType`
values.  For an ordered pair ``(x, y)`` the code is

* ``c - 1`` for an edge of color ``c``,
* ``n + 2(c - 1)`` for an arc ``x -> y`` of color ``c``,
* ``n + 2(c - 1) + 1`` for an arc ``y -> x`` of color ``c``,

so a graph with ``p = 2m + n`` has codes ``0..p-1``.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional

MAX_COLORS = 16
MAX_TYPES = 32
GRAPH6_MAX_ORDER = 62


class MngFormatError(ValueError):
    """Raised for text that is not a well-formed ``.mng`` document."""


class Graph6Error(ValueError):
    """Raised for malformed or unsupported graph6 input."""


class AdjacencyType(NamedTuple):
    """Type of the connection from ``x`` toward ``y`` for an ordered pair.

    ``kind`` is ``"edge"``, ``"out"`` (arc ``x -> y``) or ``"in"`` (arc ``y -> x``).
    """

    kind: str
    color: int

    @classmethod
    def edge(cls, color: int) -> "AdjacencyType":
        return cls("edge", color)

    @classmethod
    def arc_out(cls, color: int) -> "AdjacencyType":
        return cls("out", color)

    @classmethod
    def arc_in(cls, color: int) -> "AdjacencyType":
        return cls("in", color)

    def reversed(self) -> "AdjacencyType":
        if self.kind == "edge":
            return self
        return AdjacencyType("in" if self.kind == "out" else "out", self.color)

    def code(self, n: int) -> int:
        if self.kind == "edge":
            return self.color - 1
        return n + 2 * (self.color - 1) + (self.kind == "in")

    def __str__(self) -> str:
        return {"edge": "e", "out": "a>", "in": "a<"}[self.kind] + str(self.color)


def code_to_type(code: int, n: int) -> AdjacencyType:
    if code < n:
        return AdjacencyType("edge", code + 1)
    k = code - n
    return AdjacencyType("in" if k & 1 else "out", k // 2 + 1)


def reverse_code(code: int, n: int) -> int:
    return code if code < n else n + ((code - n) ^ 1)


class Violation(NamedTuple):
    message: str
    pair: Optional[tuple]


class MixedGraph:
    """An immutable ``(m, n)``-colored mixed graph.

    ``records`` holds tuples ``("e", u, v, color)`` for edges and
    ``("a", tail, head, color)`` for arcs.  The constructor is lenient: malformed
    records are kept so that :func:`validate` can report them, but only the first
    record for each vertex pair participates in adjacency queries.
    """

    __slots__ = ("m", "n", "order", "records", "_pairs", "_toward", "_codes", "_nbrs")

    def __init__(self, m: int, n: int, order: int, records: Iterable = ()):
        self.m = int(m)
        self.n = int(n)
        self.order = int(order)
        normed = []
        for kind, u, v, color in records:
            if kind not in ("e", "a"):
                raise ValueError(f"unknown connection kind {kind!r}")
            u, v, color = int(u), int(v), int(color)
            if kind == "e" and u > v:
                u, v = v, u
            normed.append((kind, u, v, color))
        self.records = tuple(normed)
        self._pairs = {}
        for rec in self.records:
            _, u, v, _ = rec
            key = (min(u, v), max(u, v))
            self._pairs.setdefault(key, rec)
        self._toward = [dict() for _ in range(max(self.order, 0))]
        self._codes = [dict() for _ in range(max(self.order, 0))]
        for (a, b), (kind, u, v, color) in self._pairs.items():
            if a == b or a < 0 or b >= self.order:
                continue
            if kind == "e":
                t = AdjacencyType("edge", color)
                self._toward[u][v] = t
                self._toward[v][u] = t
            else:
                self._toward[u][v] = AdjacencyType("out", color)
                self._toward[v][u] = AdjacencyType("in", color)
        for x in range(self.order):
            for y, t in self._toward[x].items():
                self._codes[x][y] = t.code(self.n)
        self._nbrs = [tuple(sorted(d)) for d in self._toward]

    @classmethod
    def from_codes(cls, m: int, n: int, order: int, edges, codes) -> "MixedGraph":
        """Build a graph from ``edges[i] = (u, v)`` carrying type code ``codes[i]`` from u toward v."""
        records = []
        for (u, v), code in zip(edges, codes):
            t = code_to_type(code, n)
            if t.kind == "edge":
                records.append(("e", u, v, t.color))
            elif t.kind == "out":
                records.append(("a", u, v, t.color))
            else:
                records.append(("a", v, u, t.color))
        return cls(m, n, order, records)

    @property
    def p(self) -> int:
        return 2 * self.m + self.n

    def toward(self, x: int, y: int) -> Optional[AdjacencyType]:
        return self._toward[x].get(y)

    def code(self, x: int, y: int) -> Optional[int]:
        return self._codes[x].get(y)

    def neighbors(self, v: int) -> tuple:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._nbrs), default=0)

    def has_connection(self, u: int, v: int) -> bool:
        return v in self._toward[u]

    def pairs(self) -> list:
        """Sorted adjacent pairs ``(u, v)`` with ``u < v``."""
        return sorted(k for k in self._pairs if k[0] != k[1] and 0 <= k[0] and k[1] < self.order)

    def connections(self) -> list:
        """Records in serialization order, one per distinct pair."""
        return [self._pairs[k] for k in sorted(self._pairs)]

    def permute_colors(self, edge_perm=None, arc_perm=None) -> "MixedGraph":
        """Relabel colors; ``edge_perm[c-1]`` is the new color of edge color ``c``."""
        recs = []
        for kind, u, v, c in self.records:
            if kind == "e" and edge_perm is not None:
                c = edge_perm[c - 1]
            elif kind == "a" and arc_perm is not None:
                c = arc_perm[c - 1]
            recs.append((kind, u, v, c))
        return MixedGraph(self.m, self.n, self.order, recs)

    def reverse_arcs(self) -> "MixedGraph":
        recs = [(k, v, u, c) if k == "a" else (k, u, v, c) for k, u, v, c in self.records]
        return MixedGraph(self.m, self.n, self.order, recs)

    def _key(self):
        return (self.m, self.n, self.order, frozenset(self.records), len(self.records))

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"MixedGraph(m={self.m}, n={self.n}, order={self.order}, connections={len(self.records)})"


def validate(G: MixedGraph) -> list:
    """Return every invariant violation of ``G``; an empty list means the graph is valid."""
    out = []
    if not 0 <= G.m <= MAX_COLORS:
        out.append(Violation("m out of range", None))
    if not 0 <= G.n <= MAX_COLORS:
        out.append(Violation("n out of range", None))
    if 2 * G.m + G.n > MAX_TYPES:
        out.append(Violation("p out of range", None))
    if G.order < 0:
        out.append(Violation("negative order", None))
    seen = set()
    for kind, u, v, c in G.records:
        pair = (u, v)
        key = (min(u, v), max(u, v))
        if u == v:
            out.append(Violation("loop", pair))
        if not (0 <= u < G.order and 0 <= v < G.order):
            out.append(Violation("vertex out of range", pair))
        if key in seen:
            out.append(Violation("duplicate pair", pair))
        seen.add(key)
        if kind == "e":
            if G.n == 0:
                out.append(Violation("edges forbidden when n=0", pair))
            elif not 1 <= c <= G.n:
                out.append(Violation("edge color out of range", pair))
        else:
            if G.m == 0:
                out.append(Violation("arcs forbidden when m=0", pair))
            elif not 1 <= c <= G.m:
                out.append(Violation("arc color out of range", pair))
    return out


# --------------------------------------------------------------------------
# .mng text format


def serialize_mng(G: MixedGraph) -> str:
    lines = [f"mng {G.m} {G.n} {G.order}"]
    for kind, u, v, c in G.connections():
        lines.append(f"{kind} {u} {v} {c}")
    return "\n".join(lines) + "\n"


def parse_mng(text: str, strict: bool = True) -> MixedGraph:
    """Parse ``.mng`` text.

    With ``strict=False`` only the syntax is checked, so that range, loop and
    duplicate problems survive into the graph for :func:`validate` to report.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MngFormatError("malformed header: empty input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "mng":
        raise MngFormatError(f"malformed header: {lines[0]!r}")
    try:
        m, n, order = (int(x) for x in head[1:])
    except ValueError:
        raise MngFormatError(f"malformed header: {lines[0]!r}") from None
    if strict and (min(m, n, order) < 0 or m > MAX_COLORS or n > MAX_COLORS):
        raise MngFormatError(f"malformed header: {lines[0]!r}")
    records = []
    seen = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 4 or parts[0] not in ("e", "a"):
            raise MngFormatError(f"line {lineno}: malformed record {ln!r}")
        try:
            u, v, c = (int(x) for x in parts[1:])
        except ValueError:
            raise MngFormatError(f"line {lineno}: malformed record {ln!r}") from None
        if not strict:
            records.append((parts[0], u, v, c))
            continue
        if not (0 <= u < order and 0 <= v < order):
            raise MngFormatError(f"line {lineno}: vertex out of range")
        if u == v:
            raise MngFormatError(f"line {lineno}: loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MngFormatError(f"line {lineno}: duplicate pair {key}")
        seen.add(key)
        limit = n if parts[0] == "e" else m
        if not 1 <= c <= limit:
            raise MngFormatError(f"line {lineno}: color out of range")
        records.append((parts[0], u, v, c))
    return MixedGraph(m, n, order, records)


# --------------------------------------------------------------------------
# Simple graphs


class SimpleGraph:
    """Immutable loop-free simple graph on vertices ``0..order-1``."""

    __slots__ = ("order", "edges", "adj")

    def __init__(self, order: int, edges: Iterable = ()):
        self.order = int(order)
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {(u, v)} out of range")
            es.add((min(u, v), max(u, v)))
        self.edges = frozenset(es)
        adj = [set() for _ in range(self.order)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(a) for a in adj)

    def edge_list(self) -> list:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def distances_from(self, s: int) -> list:
        dist = [-1] * self.order
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def girth(self) -> Optional[int]:
        best = None
        for s in range(self.order):
            dist = [-1] * self.order
            parent = [-1] * self.order
            dist[s] = 0
            queue = [s]
            for u in queue:
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        cyc = dist[u] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
        return best

    def as_mixed(self, m: int = 0, n: int = 1, color: int = 1) -> MixedGraph:
        """All edges as undirected edges of one color."""
        return MixedGraph(m, n, self.order, [("e", u, v, color) for u, v in self.edge_list()])

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"SimpleGraph(order={self.order}, edges={len(self.edges)})"


def underlying(G: MixedGraph) -> SimpleGraph:
    return SimpleGraph(G.order, G.pairs())


# --------------------------------------------------------------------------
# graph6


def parse_graph6(line) -> SimpleGraph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] in ":;":
        raise Graph6Error("unsupported extension: sparse6")
    if s[0] == "&":
        raise Graph6Error("unsupported extension: digraph6")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise Graph6Error("character outside graph6 range")
    if s[0] == "~":
        raise Graph6Error(f"unsupported: order above {GRAPH6_MAX_ORDER}")
    order = ord(s[0]) - 63
    nbits = order * (order - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"bad length: expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, order):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph(order, edges)


def to_graph6(g: SimpleGraph) -> str:
    if g.order > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"order above {GRAPH6_MAX_ORDER}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.order + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# --------------------------------------------------------------------------
# Named graphs

_FAMILY = re.compile(r"^(path|cycle|complete|star)\s*[(:]?\s*(\d+)\s*\)?$")


def named_graph(name: str) -> SimpleGraph:
    """Build a named graph with its documented vertex numbering.

    * ``petersen``: outer cycle 0..4, inner pentagram 5..9 (``{5+i, 5+(i+2)%5}``), spokes ``{i, i+5}``.
    * ``wagner``: cycle 0..7 plus chords ``{i, i+4}``.
    * ``cubical``: the 3-cube, vertices are 3-bit words, edges join words at Hamming distance 1.
    * ``path(k)``, ``cycle(k)``, ``complete(k)``: on ``k`` vertices; ``star(k)``: center 0 and leaves 1..k.
    """
    key = name.strip().lower()
    if key == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        return SimpleGraph(10, edges)
    if key == "wagner":
        edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
        return SimpleGraph(8, edges)
    if key in ("cubical", "cube", "q3"):
        edges = [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)]
        return SimpleGraph(8, edges)
    match = _FAMILY.match(key)
    if not match:
        raise ValueError(f"unknown graph name {name!r}")
    family, k = match.group(1), int(match.group(2))
    if family == "path":
        _check_k(k, 1, GRAPH6_MAX_ORDER)
        return SimpleGraph(k, [(i, i + 1) for i in range(k - 1)])
    if family == "cycle":
        _check_k(k, 3, GRAPH6_MAX_ORDER)
        return SimpleGraph(k, [(i, (i + 1) % k) for i in range(k)])
    if family == "complete":
        _check_k(k, 1, GRAPH6_MAX_ORDER)
        return SimpleGraph(k, combinations(range(k), 2))
    _check_k(k, 1, GRAPH6_MAX_ORDER - 1)
    return SimpleGraph(k + 1, [(0, i) for i in range(1, k + 1)])


def _check_k(k, lo, hi):
    if not lo <= k <= hi:
        raise ValueError(f"k={k} out of range [{lo}, {hi}]")


# --------------------------------------------------------------------------
# Canonical forms and enumeration


def _refine(adj, colors):
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == k:
            return new
        colors, k = new, len(ranks)


def canonical_form(g: SimpleGraph) -> tuple:
    """Canonical certificate ``(order, sorted relabeled edges)``.

    Color refinement followed by individualization of the first non-singleton
    cell; the certificate is the least one over all leaves of the search tree.
    Two graphs are isomorphic iff their certificates are equal.
    """
    adj = [tuple(a) for a in g.adj]
    edges = list(g.edges)
    n = g.order
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        counts = Counter(colors)
        if len(counts) == n:
            cert = tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in edges))
            if best is None or cert < best:
                best = cert
            return
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                search([2 * c + (c == target and u != v) for u, c in enumerate(colors)])

    search([0] * n)
    return (n, best if best is not None else ())


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.order != h.order or len(g.edges) != len(h.edges):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _subcubic_level(order: int) -> tuple:
    if order == 1:
        return ((1, ()),)
    found = set()
    for _, cert in _subcubic_level(order - 1):
        g = SimpleGraph(order - 1, cert)
        free = [v for v in range(order - 1) if g.degree(v) < 3]
        new = order - 1
        for r in (1, 2, 3):
            for attach in combinations(free, r):
                child = SimpleGraph(order, list(cert) + [(a, new) for a in attach])
                found.add(canonical_form(child))
    return tuple(sorted(found))


def enumerate_subcubic(nmax: int) -> Iterator[SimpleGraph]:
    """Yield one canonically labeled representative per isomorphism class of
    connected graphs with maximum degree at most 3 and ``1..nmax`` vertices.

    Graphs of order ``k`` come from graphs of order ``k-1`` by adding a vertex
    joined to one to three vertices of degree below 3; every connected graph has
    a non-cut vertex, so this reaches every class.
    """
    if not 1 <= nmax <= 10:
        raise ValueError("nmax must lie in 1..10")
    for order in range(1, nmax + 1):
        for n, cert in _subcubic_level(order):
            yield SimpleGraph(n, cert)


@lru_cache(maxsize=None)
def _tree_level(order: int) -> tuple:
    if order == 1:
        return ((1, ()),)
    found = set()
    for _, cert in _tree_level(order - 1):
        for v in range(order - 1):
            found.add(canonical_form(SimpleGraph(order, list(cert) + [(v, order - 1)])))
    return tuple(sorted(found))


def enumerate_trees(nmax: int) -> Iterator[SimpleGraph]:
    """One representative per isomorphism class of trees on ``1..nmax`` vertices."""
    if not 1 <= nmax <= 12:
        raise ValueError("nmax must lie in 1..12")
    for order in range(1, nmax + 1):
        for n, cert in _tree_level(order):
            yield SimpleGraph(n, cert)


def type_assignments(num_edges: int, m: int, n: int, reduced: bool = True) -> Iterator[tuple]:
    """Every assignment of a type code to each of ``num_edges`` ordered edges.

    With ``reduced`` only one representative per orbit of the group generated by
    edge-color permutations, arc-color permutations and global arc reversal is
    produced: colors of each kind appear in first-use order and the first arc
    points forward.  Invariants of the see relation are constant on orbits.
    """
    p = 2 * m + n
    if p == 0:
        if num_edges == 0:
            yield ()
        return
    if not reduced:
        def rec_all(prefix):
            if len(prefix) == num_edges:
                yield tuple(prefix)
                return
            for code in range(p):
                prefix.append(code)
                yield from rec_all(prefix)
                prefix.pop()
        yield from rec_all([])
        return

    def rec(prefix, top_edge, top_arc):
        if len(prefix) == num_edges:
            yield tuple(prefix)
            return
        for c in range(1, min(top_edge + 1, n) + 1):
            prefix.append(c - 1)
            yield from rec(prefix, max(top_edge, c), top_arc)
            prefix.pop()
        for c in range(1, min(top_arc + 1, m) + 1):
            dirs = (0,) if top_arc == 0 else (0, 1)
            for d in dirs:
                prefix.append(n + 2 * (c - 1) + d)
                yield from rec(prefix, top_edge, max(top_arc, c))
                prefix.pop()

    yield from rec([], 0, 0)
