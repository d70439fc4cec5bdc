"""Baseline solvers for general temporal graphs.

``d_approx_solve`` solves each single-edge temporal subgraph exactly and
takes the union (a d-approximation on always degree-at-most-d graphs).
``d_approx_s_solve`` is the engineered variant: the same solution computed
by walking the appearance lists instead of every time step.
``d1_approx_solve`` covers two-edge paths through their middle vertex, a
(d-1)-approximation.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .graph import (
    Cover,
    TemporalGraph,
    VertexAppearance,
    _check_delta,
    _edge_demand_windows,
)
from .errors import BadDeltaError


def single_edge_exact(appearances, T: int, delta: int):
    """Minimum set of chosen appearance steps covering every demand window.

    Greedy canonical form: walk demand windows left to right and, on the
    first uncovered one, take the largest appearance inside it.  Returns
    the chosen time steps in increasing order.
    """
    if not (1 <= delta <= T) and not (T == 0 and delta >= 1):
        raise BadDeltaError(f"delta {delta} outside [1, {T}]")
    apps = list(appearances)
    chosen = []
    last_start = T - delta + 1
    last = 0
    j = 0
    while j < len(apps):
        a = apps[j]
        t = max(last + 1, a - delta + 1)
        if t > last_start:
            break
        window_end = t + delta - 1
        pick = apps[bisect_right(apps, window_end) - 1]
        chosen.append(pick)
        last = pick
        j = bisect_right(apps, pick)
    return chosen


def chosen_endpoint(g: TemporalGraph, eid: int) -> int:
    """Endpoint hosting a single-edge cover: larger degree, ties to the
    smaller vertex id.  Shared endpoints shrink the union."""
    e = g.edges[eid]
    du = len(g.adjacency[e.u])
    dv = len(g.adjacency[e.v])
    if du != dv:
        return e.u if du > dv else e.v
    return min(e.u, e.v)


def d_approx_solve(g: TemporalGraph, delta: int) -> Cover:
    """Per-edge exact single-edge covers, union taken; iterates every time
    step of every edge (the original per-edge, per-step traversal)."""
    _check_delta(g, delta)
    T = g.T
    last_start = T - delta + 1
    cover = set()
    for eid, edge in enumerate(g.edges):
        active = bytearray(T + 1)
        for a in edge.appearances:
            active[a] = 1
        v = chosen_endpoint(g, eid)
        latest = 0  # largest appearance <= current window end
        for s in range(1, delta):
            if active[s]:
                latest = s
        last_chosen = 0
        for t in range(1, last_start + 1):
            window_end = t + delta - 1
            if active[window_end]:
                latest = window_end
            if latest >= t and last_chosen < t:
                cover.add(VertexAppearance(v, latest))
                last_chosen = latest
    return cover


def d_approx_s_solve(g: TemporalGraph, delta: int) -> Cover:
    """Same contract and same output set as ``d_approx_solve``; skips time
    steps without an edge appearance by walking the appearance lists."""
    _check_delta(g, delta)
    cover = set()
    for eid, edge in enumerate(g.edges):
        v = chosen_endpoint(g, eid)
        for t in single_edge_exact(edge.appearances, g.T, delta):
            cover.add(VertexAppearance(v, t))
    return cover


def d1_approx_solve(g: TemporalGraph, delta: int) -> Cover:
    """Cover two-edge paths through their shared (middle) vertex.

    Demands are processed in (window, edge) order against a ledger of
    still-unsatisfied window starts.  For an open demand we scan the edge's
    in-window appearances from latest to earliest for an adjacent edge that
    is active there and still has an open demand around that step; the
    shared endpoint then covers both.  Without such a partner we fall back
    to the single-edge rule.  The greedy never looks back, so an early
    pairing pick can end up subsumed by later picks; that slack is what the
    windowed star solver exploits on dense instances.
    """
    _check_delta(g, delta)
    T = g.T
    last_start = T - delta + 1
    app_sets = g.appearance_sets()

    ledger = {}  # eid -> set of unsatisfied window starts
    order = []
    for eid, edge in enumerate(g.edges):
        starts = _edge_demand_windows(edge.appearances, T, delta)
        ledger[eid] = set(starts)
        for t in starts:
            order.append((t, eid))
    order.sort()

    adjacent_cache = {}

    def adjacent_edges(eid):
        cached = adjacent_cache.get(eid)
        if cached is None:
            e = g.edges[eid]
            cached = sorted(
                f for f in set(g.adjacency[e.u]) | set(g.adjacency[e.v]) if f != eid
            )
            adjacent_cache[eid] = cached
        return cached

    def has_open_demand_around(fid, tp):
        lo = max(1, tp - delta + 1)
        hi = min(tp, last_start)
        open_starts = ledger[fid]
        return any(w in open_starts for w in range(lo, hi + 1))

    def settle(v, tp):
        for fid in g.adjacency[v]:
            if tp in app_sets[fid]:
                lo = max(1, tp - delta + 1)
                hi = min(tp, last_start)
                open_starts = ledger[fid]
                for w in range(lo, hi + 1):
                    open_starts.discard(w)

    cover = set()
    for t, eid in order:
        if t not in ledger[eid]:
            continue
        edge = g.edges[eid]
        apps = edge.appearances
        lo = bisect_left(apps, t)
        hi = bisect_right(apps, t + delta - 1)
        in_window = apps[lo:hi]

        picked = None
        for tp in reversed(in_window):
            for fid in adjacent_edges(eid):
                if tp in app_sets[fid] and has_open_demand_around(fid, tp):
                    f = g.edges[fid]
                    shared = ({edge.u, edge.v} & {f.u, f.v}).pop()
                    picked = (shared, tp)
                    break
            if picked:
                break
        if picked is None:
            picked = (chosen_endpoint(g, eid), in_window[-1])

        cover.add(VertexAppearance(*picked))
        settle(*picked)
    return cover
