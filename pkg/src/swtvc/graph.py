"""Temporal graph data model and sliding-window cover semantics.

A temporal graph is an underlying static graph whose edges carry strictly
increasing lists of discrete time labels (the steps at which the edge is
active).  Vertices are dense 0-based ids; time steps are 1-based and run up
to the lifetime ``T``.  The structure is indexed both ways: per time step
(all active edge ids) and per vertex (all incident edge ids), so snapshot
and adjacency lookups are direct array accesses.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    BadDeltaError,
    OutOfRangeLabelError,
    OutOfRangeVertexError,
    NotAStarError,
    SelfLoopError,
)


class VertexAppearance(NamedTuple):
    """A vertex at one time step; the atom of every cover."""

    vertex: int
    time: int


class Demand(NamedTuple):
    """An (edge, window) pair that must be covered.

    ``window_start`` is the first time step of the window; the window spans
    ``[window_start, window_start + delta - 1]``.
    """

    edge: int
    window_start: int


class UnderlyingEdge(NamedTuple):
    u: int
    v: int
    appearances: tuple  # strictly increasing time labels

    def endpoints(self):
        return (self.u, self.v)


#: A cover is a duplicate-free set of vertex appearances.
Cover = set


@dataclass(frozen=True)
class TemporalGraph:
    """Immutable temporal graph with per-step and per-vertex edge indices.

    ``time_index[t]`` (t in 1..T) holds the ids of edges active at step t;
    index 0 is unused.  ``adjacency[v]`` holds the ids of edges incident to
    vertex v (each edge id appears at both endpoints).
    """

    n: int
    T: int
    edges: tuple  # tuple[UnderlyingEdge, ...]
    time_index: tuple  # tuple[tuple[int, ...], ...], length T + 1
    adjacency: tuple  # tuple[tuple[int, ...], ...], length n

    @property
    def m(self) -> int:
        return len(self.edges)

    def appearance_sets(self):
        """Per-edge frozensets of time labels, for O(1) activity tests."""
        return [frozenset(e.appearances) for e in self.edges]


def build_graph(n: int, T: int, edge_list: Iterable) -> TemporalGraph:
    """Construct a TemporalGraph from ``(u, v, appearance_list)`` triples.

    Endpoints are canonicalized to u < v and duplicate (u, v) entries are
    merged into one edge with the union of their labels.  Edge ids follow
    first-appearance order of the canonical pair in the input.
    """
    if n < 0 or T < 0:
        raise OutOfRangeLabelError(f"n and T must be nonnegative, got n={n} T={T}")
    merged: dict = {}
    order: list = []
    for u, v, labels in edge_list:
        if u == v:
            raise SelfLoopError(f"self-loop on vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeVertexError(f"endpoint out of range in ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key not in merged:
            merged[key] = set()
            order.append(key)
        for t in labels:
            if not (1 <= t <= T):
                raise OutOfRangeLabelError(f"label {t} outside [1, {T}] on edge {key}")
            merged[key].add(t)

    edges = []
    for key in order:
        labels = tuple(sorted(merged[key]))
        if not labels:
            raise OutOfRangeLabelError(f"edge {key} has no appearances")
        edges.append(UnderlyingEdge(key[0], key[1], labels))

    time_index = [[] for _ in range(T + 1)]
    adjacency = [[] for _ in range(n)]
    for eid, edge in enumerate(edges):
        for t in edge.appearances:
            time_index[t].append(eid)
        adjacency[edge.u].append(eid)
        adjacency[edge.v].append(eid)

    return TemporalGraph(
        n=n,
        T=T,
        edges=tuple(edges),
        time_index=tuple(tuple(ids) for ids in time_index),
        adjacency=tuple(tuple(ids) for ids in adjacency),
    )


def edges_at(g: TemporalGraph, t: int) -> tuple:
    """Ids of the edges active at time step ``t`` (direct index lookup)."""
    if not (1 <= t <= g.T):
        raise OutOfRangeLabelError(f"time step {t} outside [1, {g.T}]")
    return g.time_index[t]


def star_center_at(g: TemporalGraph, t: int) -> Optional[int]:
    """Common endpoint of all edges active at ``t``.

    Returns None for an empty snapshot.  A single-edge snapshot yields the
    endpoint with the smaller vertex id.  Raises NotAStarError when no
    vertex is shared by every active edge.
    """
    active = edges_at(g, t)
    if not active:
        return None
    first = g.edges[active[0]]
    if len(active) == 1:
        return min(first.u, first.v)
    common = {first.u, first.v}
    for eid in active[1:]:
        e = g.edges[eid]
        common &= {e.u, e.v}
        if not common:
            raise NotAStarError(t)
    # two or more distinct edges share at most one endpoint
    return next(iter(common))


def validate_always_star(g: TemporalGraph) -> Optional[int]:
    """None if every nonempty snapshot is a star, else the first offending t."""
    for t in range(1, g.T + 1):
        try:
            star_center_at(g, t)
        except NotAStarError:
            return t
    return None


def _check_delta(g: TemporalGraph, delta: int) -> None:
    if not (1 <= delta <= g.T) and not (g.T == 0 and delta >= 1):
        raise BadDeltaError(f"delta {delta} outside [1, {g.T}]")


def _edge_demand_windows(appearances: Sequence[int], T: int, delta: int):
    """Sorted window starts whose window contains an appearance."""
    last_start = T - delta + 1
    starts: set = set()
    for a in appearances:
        lo = max(1, a - delta + 1)
        hi = min(a, last_start)
        if lo <= hi:
            starts.update(range(lo, hi + 1))
    return sorted(starts)


def demands(g: TemporalGraph, delta: int) -> list:
    """All (edge, window) demands, sorted by (window_start, edge id)."""
    _check_delta(g, delta)
    out = []
    for eid, edge in enumerate(g.edges):
        for t in _edge_demand_windows(edge.appearances, g.T, delta):
            out.append((t, eid))
    out.sort()
    return [Demand(edge=eid, window_start=t) for t, eid in out]


def validate_cover(g: TemporalGraph, delta: int, cover: Cover) -> Optional[Demand]:
    """None when ``cover`` is a valid delta-TVC, else the first uncovered demand.

    A demand (e, t) is covered when the cover holds some (w, t') with w an
    endpoint of e, t' in lambda(e) and t' inside the window starting at t.
    Failures are reported in (window_start, edge id) order.
    """
    _check_delta(g, delta)
    for va in cover:
        v, t = va
        if not (0 <= v < g.n):
            raise OutOfRangeVertexError(f"appearance vertex {v} outside [0, {g.n})")
        if not (1 <= t <= g.T):
            raise OutOfRangeLabelError(f"appearance time {t} outside [1, {g.T}]")

    # per-edge sorted list of cover times that actually touch the edge
    covering: dict = {}
    app_sets = g.appearance_sets()
    for v, t in cover:
        for eid in g.adjacency[v]:
            if t in app_sets[eid]:
                covering.setdefault(eid, []).append(t)
    for times in covering.values():
        times.sort()

    for d in demands(g, delta):
        times = covering.get(d.edge)
        if not times:
            return d
        lo, hi = d.window_start, d.window_start + delta - 1
        i = bisect_left(times, lo)
        if i == len(times) or times[i] > hi:
            return d
    return None


def max_snapshot_degree(g: TemporalGraph) -> int:
    """Largest vertex degree over all snapshots (the class parameter d)."""
    best = 0
    for t in range(1, g.T + 1):
        deg: dict = {}
        for eid in g.time_index[t]:
            e = g.edges[eid]
            deg[e.u] = deg.get(e.u, 0) + 1
            deg[e.v] = deg.get(e.v, 0) + 1
        if deg:
            best = max(best, max(deg.values()))
    return best
