"""File formats: the native temporal-graph format, cover files, and
conversion of raw timestamped contact lists (SNAP style).

Native format, line oriented text:
    n m T
    u v k t1 t2 ... tk      (one line per edge, u < v, k >= 1, labels increasing)
Lines starting with '#' are comments; blank lines are ignored.

Cover files hold one ``v t`` pair per line.
"""

from __future__ import annotations

from pathlib import Path

from .errors import (
    DuplicateAppearanceError,
    EmptyInputError,
    NegativeTimestampError,
    ParseError,
)
from .graph import Cover, TemporalGraph, VertexAppearance, build_graph


def write_native(g: TemporalGraph, path) -> None:
    lines = [f"{g.n} {g.m} {g.T}"]
    for e in g.edges:
        apps = " ".join(str(t) for t in e.appearances)
        lines.append(f"{e.u} {e.v} {len(e.appearances)} {apps}")
    Path(path).write_text("\n".join(lines) + "\n")


def parse_native(path) -> TemporalGraph:
    rows = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError(1, "missing header line")

    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 3:
        raise ParseError(lineno, f"header must be 'n m T', got {header!r}")
    try:
        n, m, T = (int(p) for p in parts)
    except ValueError:
        raise ParseError(lineno, f"non-integer header field in {header!r}")

    if len(rows) - 1 != m:
        raise ParseError(lineno, f"expected {m} edge lines, found {len(rows) - 1}")

    edge_list = []
    for lineno, line in rows[1:]:
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}")
        if len(nums) < 4:
            raise ParseError(lineno, "edge line needs 'u v k t1 ... tk'")
        u, v, k = nums[0], nums[1], nums[2]
        labels = nums[3:]
        if len(labels) != k:
            raise ParseError(lineno, f"declared {k} labels, found {len(labels)}")
        if k < 1:
            raise ParseError(lineno, "edge must have at least one label")
        if u >= v:
            raise ParseError(lineno, f"endpoints must satisfy u < v, got {u} {v}")
        if any(b <= a for a, b in zip(labels, labels[1:])):
            raise ParseError(lineno, f"labels not strictly increasing: {labels}")
        edge_list.append((u, v, labels))

    return build_graph(n, T, edge_list)


def convert_snap(path, bucket_seconds: int = 3600, keep_gaps: bool = True) -> TemporalGraph:
    """Build a temporal graph from ``src dst timestamp`` contact lines.

    Directions are dropped (endpoints canonicalized), self-loops and extra
    columns discarded, external keys remapped to dense ids in
    first-appearance order.  Timestamps are bucketed relative to the
    dataset minimum; with ``keep_gaps`` empty buckets stay as empty
    snapshots, otherwise time steps are compacted to the nonempty buckets.
    """
    if bucket_seconds <= 0:
        raise ParseError(0, f"bucket_seconds must be positive, got {bucket_seconds}")
    contacts = []
    ids = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) < 3:
            raise ParseError(lineno, f"need 'src dst timestamp', got {line!r}")
        src, dst = fields[0], fields[1]
        try:
            ts = int(float(fields[2]))
        except ValueError:
            raise ParseError(lineno, f"bad timestamp {fields[2]!r}")
        if ts < 0:
            raise NegativeTimestampError(f"line {lineno}: timestamp {ts} < 0")
        if src == dst:
            continue
        for key in (src, dst):
            if key not in ids:
                ids[key] = len(ids)
        contacts.append((ids[src], ids[dst], ts))

    if not contacts:
        raise EmptyInputError(f"no usable contacts in {path}")

    min_ts = min(ts for _, _, ts in contacts)
    labels = {}
    for a, b, ts in contacts:
        key = (a, b) if a < b else (b, a)
        t = (ts - min_ts) // bucket_seconds + 1
        labels.setdefault(key, set()).add(t)

    if not keep_gaps:
        used = sorted({t for ts in labels.values() for t in ts})
        remap = {t: i + 1 for i, t in enumerate(used)}
        labels = {key: {remap[t] for t in ts} for key, ts in labels.items()}

    T = max(t for ts in labels.values() for t in ts)
    edge_list = [(u, v, sorted(ts)) for (u, v), ts in sorted(labels.items())]
    return build_graph(len(ids), T, edge_list)


def write_cover(cover: Cover, path) -> None:
    lines = [f"{v} {t}" for v, t in sorted(cover, key=lambda a: (a[1], a[0]))]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))


def parse_cover(path) -> Cover:
    cover = set()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"cover line must be 'v t', got {line!r}")
        try:
            v, t = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}")
        va = VertexAppearance(v, t)
        if va in cover:
            raise DuplicateAppearanceError(f"line {lineno}: repeated appearance {va}")
        cover.add(va)
    return cover
