"""Graph isomorphism by color refinement plus backtracking.

Intended for the small instances this library needs (circular-graph
recognition and family cross-checks).  Deterministic: for fixed inputs the
same bijection is returned every time.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .graphs import Graph, iter_bits


_PROFILE_MAX_ORDER = 600


def _pair_profiles(g: Graph) -> list[tuple]:
    """Per-vertex signature: degree plus the sorted multiset of
    common-neighbor counts against every other vertex.

    Isomorphism-invariant, and much finer than plain degrees on regular
    graphs, where 1-WL refinement alone cannot split anything.
    """
    rows = g.rows
    n = g.order
    return [
        (
            rows[v].bit_count(),
            tuple(sorted((rows[v] & rows[u]).bit_count() for u in range(n) if u != v)),
        )
        for v in range(n)
    ]


def _refine_colors(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Joint iterated neighbor-color refinement (1-WL) of both graphs.

    Color ids are comparable across the two graphs.  Initial colors come
    from common-neighbor profiles on small graphs, degrees otherwise.
    """
    if g.order <= _PROFILE_MAX_ORDER:
        gp, hp = _pair_profiles(g), _pair_profiles(h)
        palette = {s: i for i, s in enumerate(sorted(set(gp) | set(hp)))}
        gc = [palette[s] for s in gp]
        hc = [palette[s] for s in hp]
    else:
        gc = g.degrees()
        hc = h.degrees()
    ncolors = len(set(gc) | set(hc))
    while True:
        gsig = [
            (gc[v], tuple(sorted(gc[w] for w in iter_bits(g.row(v)))))
            for v in range(g.order)
        ]
        hsig = [
            (hc[v], tuple(sorted(hc[w] for w in iter_bits(h.row(v)))))
            for v in range(h.order)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(gsig) | set(hsig)))}
        gc = [palette[s] for s in gsig]
        hc = [palette[s] for s in hsig]
        if len(palette) == ncolors:
            return gc, hc
        ncolors = len(palette)


def are_isomorphic(g: Graph, h: Graph) -> Optional[list[int]]:
    """A vertex bijection pi with adj_g(u,v) <=> adj_h(pi(u),pi(v)), or None.

    pi is returned as a list: pi[u] is the image of u.
    """
    if g.order != h.order:
        return None
    n = g.order
    if n == 0:
        return []
    if g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None

    gc, hc = _refine_colors(g, h)
    if Counter(gc) != Counter(hc):
        return None

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(hc[v], []).append(v)

    class_size = Counter(gc)
    unmapped = sorted(range(n), key=lambda v: (class_size[gc[v]], gc[v], v))

    mapping = [-1] * n
    state = {"mapped_g": 0, "mapped_h": 0}

    def pick() -> int:
        # most already-mapped neighbors first; ties by static order
        mg = state["mapped_g"]
        best, best_key = -1, (-1, 0)
        for rank, u in enumerate(unmapped):
            if mapping[u] >= 0:
                continue
            key = ((g.row(u) & mg).bit_count(), -rank)
            if key > best_key:
                best, best_key = u, key
        return best

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = pick()
        need = 0
        for w in iter_bits(g.row(v) & state["mapped_g"]):
            need |= 1 << mapping[w]
        for cand in by_color[gc[v]]:
            if (state["mapped_h"] >> cand) & 1:
                continue
            if h.row(cand) & state["mapped_h"] != need:
                continue
            mapping[v] = cand
            state["mapped_g"] |= 1 << v
            state["mapped_h"] |= 1 << cand
            if extend(depth + 1):
                return True
            mapping[v] = -1
            state["mapped_g"] &= ~(1 << v)
            state["mapped_h"] &= ~(1 << cand)
        return False

    if extend(0):
        return list(mapping)
    return None
