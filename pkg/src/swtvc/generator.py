"""Seeded, reproducible instance generation.

``generate_always_star`` evolves one star across the lifetime: leaves
persist between snapshots with high probability, so consecutive snapshots
overlap the way real contact sequences do instead of being independent
draws.  All randomness comes from a Mersenne Twister seeded per config
(``random.Random(seed)``, never the process-global generator), so identical
configs yield identical graphs on every platform.  The two ``worst_case_*``
builders produce the adversarial families that realize the approximation
ratios exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadConfigError
from .graph import TemporalGraph, build_graph


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for the always-star generator.

    ``d`` bounds the number of leaves in any snapshot; ``underlying_star``
    pins one fixed center (vertex 0) across the whole lifetime;
    ``empty_snapshot_prob`` is the chance a snapshot carries no edges.
    ``persistence`` is the chance each leaf survives into the next
    snapshot; ``center_switch_prob`` is the chance (without the
    ``underlying_star`` flag) that the center moves, dropping all leaves.
    """

    n: int
    T: int
    d: int
    seed: int
    underlying_star: bool = False
    empty_snapshot_prob: float = 0.0
    persistence: float = 0.9
    center_switch_prob: float = 0.1

    def validate(self):
        if self.n < 1 or self.T < 0 or self.d < 0 or self.seed < 0:
            raise BadConfigError(f"negative or empty dimension in {self}")
        if self.d > 0 and self.n < 2:
            raise BadConfigError("need n >= 2 to place any edge")
        if self.d > self.n - 1:
            raise BadConfigError(f"d={self.d} exceeds n-1={self.n - 1}")
        for name in ("empty_snapshot_prob", "persistence", "center_switch_prob"):
            if not (0.0 <= getattr(self, name) <= 1.0):
                raise BadConfigError(f"{name} outside [0, 1]")


def generate_always_star(cfg: GeneratorConfig) -> TemporalGraph:
    """Random always-star temporal graph; deterministic per config."""
    cfg.validate()
    rng = random.Random(cfg.seed)
    labels = {}  # (u, v) -> list of time steps
    center = 0 if cfg.underlying_star else rng.randrange(cfg.n)
    leaves = []
    for t in range(1, cfg.T + 1):
        if cfg.d == 0:
            continue
        if cfg.empty_snapshot_prob and rng.random() < cfg.empty_snapshot_prob:
            continue
        if not cfg.underlying_star and rng.random() < cfg.center_switch_prob:
            center = rng.randrange(cfg.n)
            leaves = []
        leaves = [l for l in leaves if rng.random() < cfg.persistence]
        k = rng.randint(1, cfg.d)
        candidates = [v for v in range(cfg.n) if v != center and v not in leaves]
        rng.shuffle(candidates)
        while len(leaves) < k and candidates:
            leaves.append(candidates.pop())
        del leaves[k:]
        for leaf in leaves:
            key = (center, leaf) if center < leaf else (leaf, center)
            labels.setdefault(key, []).append(t)
    edge_list = [(u, v, ts) for (u, v), ts in sorted(labels.items())]
    return build_graph(cfg.n, cfg.T, edge_list)


def worst_case_acov_instance(delta: int, reps: int, leaves: int = None) -> TemporalGraph:
    """Periodic family on which the sliding-window solver hits ratio delta-1.

    The lifetime is ``reps * delta``; snapshots repeat with period delta.
    The first snapshot of each period contains all edges, the remaining
    delta-1 snapshots split the edges into disjoint nonempty groups.  The
    center is vertex 0 throughout.
    """
    if delta < 2 or reps < 1:
        raise BadConfigError(f"need delta >= 2 and reps >= 1, got {delta}, {reps}")
    if leaves is None:
        leaves = delta - 1
    if leaves < delta - 1:
        raise BadConfigError(f"need leaves >= delta-1, got {leaves}")

    groups = delta - 1
    base, rem = divmod(leaves, groups)
    group_of = []
    for gidx in range(groups):
        group_of.extend([gidx] * (base + (1 if gidx < rem else 0)))

    T = reps * delta
    edge_list = []
    for i in range(leaves):
        ts = []
        for r in range(reps):
            start = r * delta
            ts.append(start + 1)  # all edges in the period's first snapshot
            ts.append(start + 2 + group_of[i])
        edge_list.append((0, i + 1, sorted(ts)))
    return build_graph(leaves + 1, T, edge_list)


def worst_case_sc_instance(delta: int) -> TemporalGraph:
    """Static single-edge star realizing the 2*delta-1 ratio: one edge
    active at every step of a lifetime of 2*delta-1."""
    if delta < 2:
        raise BadConfigError(f"need delta >= 2, got {delta}")
    T = 2 * delta - 1
    return build_graph(2, T, [(0, 1, list(range(1, T + 1)))])
