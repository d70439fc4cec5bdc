"""Approximation algorithms for always-star temporal graphs.

Both solvers only ever pick star-center appearances, so their output is a
subset of "one center per nonempty snapshot".  ``star_sc_solve`` takes all
of them; ``star_acov_solve`` slides a window over the lifetime and drops
centers whose edges are covered by other centers inside the window.
"""

from __future__ import annotations

from .graph import (
    Cover,
    TemporalGraph,
    VertexAppearance,
    _check_delta,
    star_center_at,
)

_EXCLUDED, _AVAILABLE, _INCLUDED = 0, 1, 2


def _centers(g: TemporalGraph):
    """Per-time-step star center (None for empty snapshots).

    Raises NotAStarError on the first non-star snapshot, so calling this
    doubles as the always-star precondition check.
    """
    return [None] + [star_center_at(g, t) for t in range(1, g.T + 1)]


def star_sc_solve(g: TemporalGraph, delta: int) -> Cover:
    """Cover containing the star center of every nonempty snapshot.

    ``delta`` only parameterizes the validity claim; the construction does
    not consult it.  Valid for every window size by definition.
    """
    _check_delta(g, delta)
    centers = _centers(g)
    return {
        VertexAppearance(centers[t], t)
        for t in range(1, g.T + 1)
        if centers[t] is not None
    }


def star_acov_solve(g: TemporalGraph, delta: int) -> Cover:
    """Sliding-window solver keeping only centers that are actually needed.

    A ring buffer of ``delta`` slots mirrors the current window.  Each slot
    carries the active edges of one time step plus an inclusion status:
    included centers are in the output (and stay there), excluded ones are
    argued away for the current window only, available ones are undecided.
    Per window, a center is forced in when one of its edges cannot be
    covered by any other non-excluded center in the window; otherwise the
    slot is excluded and each of its edges is charged to an already
    included slot or to the latest available slot where the edge is
    active.  Exclusion does not carry over: the next window re-examines
    the slot from scratch, because its former coverers may have slid out.
    """
    _check_delta(g, delta)
    centers = _centers(g)
    T = g.T
    if T == 0:
        return set()

    slot_edges = [frozenset()] * delta
    status = [_AVAILABLE] * delta

    def load(idx, t):
        es = frozenset(g.time_index[t])
        slot_edges[idx] = es
        status[idx] = _AVAILABLE if es else _EXCLUDED

    # preload time steps [1, delta - 1]; during window t the slot
    # (first + i) % delta holds time step t + i
    first = delta - 1
    for t in range(1, delta):
        load(t - 1, t)

    cover = set()
    for t in range(1, T - delta + 1 + 1):
        load(first, t + delta - 1)
        first = (first + 1) % delta

        # exclusions were only valid for the previous window
        for idx in range(delta):
            if status[idx] == _EXCLUDED and slot_edges[idx]:
                status[idx] = _AVAILABLE

        for i in range(delta):
            idx = (first + i) % delta
            if status[idx] == _INCLUDED or not slot_edges[idx]:
                continue

            def coverers(eid):
                """Offsets of an included and of the latest available slot
                != i where the edge is active (either may be None)."""
                included = None
                latest = None
                for j in range(delta):
                    if j == i:
                        continue
                    jdx = (first + j) % delta
                    if eid not in slot_edges[jdx]:
                        continue
                    if status[jdx] == _INCLUDED:
                        included = j
                    elif status[jdx] == _AVAILABLE:
                        latest = j
                return included, latest

            plans = [(eid, *coverers(eid)) for eid in sorted(slot_edges[idx])]
            if any(inc is None and lat is None for _, inc, lat in plans):
                cover.add(VertexAppearance(centers[t + i], t + i))
                status[idx] = _INCLUDED
                continue

            status[idx] = _EXCLUDED
            # most constrained edge first, so one inclusion serves the rest
            plans.sort(key=lambda p: (p[2] if p[2] is not None else delta, p[0]))
            for eid, inc, lat in plans:
                covered = inc is not None or any(
                    status[(first + j) % delta] == _INCLUDED
                    and eid in slot_edges[(first + j) % delta]
                    for j in range(delta) if j != i
                )
                if covered:
                    continue
                jdx = (first + lat) % delta
                cover.add(VertexAppearance(centers[t + lat], t + lat))
                status[jdx] = _INCLUDED

    return cover
