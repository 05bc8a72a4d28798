"""Bitset maximum-clique routines shared by the clique and search modules.

Graphs are lists of neighborhood masks: bit ``u`` of ``masks[v]`` is set iff
``u`` and ``v`` are adjacent.
"""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A search ran out of node budget before it could finish exhaustively."""

    def __init__(self, nodes, message="node budget exceeded"):
        super().__init__(f"{message} after {nodes} nodes")
        self.nodes = nodes


def bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _color_classes(masks, cand):
    """Greedy sequential coloring of ``cand``; returns vertices and their color numbers."""
    order = []
    colors = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~masks[v] & ~low
            uncolored ^= low
            order.append(v)
            colors.append(color)
    return order, colors


def color_bound(masks, cand) -> int:
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            q &= ~masks[low.bit_length() - 1] & ~low
            uncolored &= ~low
    return color


def max_clique_size(masks, floor: int = 0) -> int:
    """Size of a maximum clique, or ``floor`` if no clique is larger than ``floor``."""
    n = len(masks)
    if n == 0:
        return floor
    # relabel so that bit order follows decreasing degree
    perm = sorted(range(n), key=lambda v: -masks[v].bit_count())
    pos = {v: i for i, v in enumerate(perm)}
    rm = [0] * n
    for v in range(n):
        mv = 0
        for u in bits(masks[v]):
            mv |= 1 << pos[u]
        rm[pos[v]] = mv
    best = floor

    def expand(size, cand):
        nonlocal best
        order, colors = _color_classes(rm, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            nxt = cand & rm[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def lex_first_clique(masks, k: int):
    """Lexicographically smallest sorted vertex list of a ``k``-clique, or None."""
    n = len(masks)
    if k == 0:
        return []
    if k == 1:
        return [0] if n else None
    above = [~((1 << (v + 1)) - 1) for v in range(n)]

    def dfs(chosen, cand):
        need = k - len(chosen)
        if need == 0:
            return chosen
        if cand.bit_count() < need or color_bound(masks, cand) < need:
            return None
        for v in bits(cand):
            got = dfs(chosen + [v], cand & masks[v] & above[v])
            if got is not None:
                return got
            cand &= ~(1 << v)
            if cand.bit_count() < need:
                return None
        return None

    return dfs([], (1 << n) - 1)


def iter_cliques_lex(masks, k: int):
    """All ``k``-cliques as sorted vertex lists, in lexicographic order."""
    n = len(masks)
    above = [~((1 << (v + 1)) - 1) for v in range(n)]

    def rec(chosen, cand):
        need = k - len(chosen)
        if need == 0:
            yield chosen
            return
        if cand.bit_count() < need:
            return
        for v in bits(cand):
            yield from rec(chosen + [v], cand & masks[v] & above[v])
            cand &= ~(1 << v)
            if cand.bit_count() < need:
                return

    if k == 0:
        yield []
        return
    yield from rec([], (1 << n) - 1)
