"""One side of a design as a graph on lattice vertices: split it into closed
cycles and boundary-cut open paths, and count cycles up to lattice isometry.

Cycle shape is compared through a canonical form of the edge-direction
sequence (alphabet 0..5, counterclockwise from +x): the lexicographically
least string over all cyclic rotations, both traversal directions, and the 12
point symmetries of the lattice. Two cycles get the same signature exactly
when some lattice isometry maps one onto the other.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .grid import DIRECTION_INDEX, SegmentId, segment_endpoints
from .stitcher import Design


@dataclass(frozen=True)
class Cycle:
    """A closed stitch path; vertices[n] neighbors vertices[n+1] and the last
    vertex neighbors the first. Stored in a canonical rotation: starts at the
    least vertex and proceeds toward its lesser cycle-neighbor."""

    vertices: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_vertices(cls, verts: list[tuple[int, int]]) -> "Cycle":
        n = len(verts)
        start = min(range(n), key=lambda idx: verts[idx])
        nxt, prv = verts[(start + 1) % n], verts[(start - 1) % n]
        if prv < nxt:
            ordered = [verts[(start - idx) % n] for idx in range(n)]
        else:
            ordered = [verts[(start + idx) % n] for idx in range(n)]
        return cls(tuple(ordered))

    def directions(self) -> list[int]:
        out = []
        for a, b in zip(self.vertices, self.vertices[1:] + self.vertices[:1]):
            out.append(DIRECTION_INDEX[(b[0] - a[0], b[1] - a[1])])
        return out


@dataclass(frozen=True)
class MotifCensus:
    counts: dict[str, int]
    open_paths: int

    def total_cycles(self) -> int:
        return sum(self.counts.values())


def _adjacency(segments: frozenset[SegmentId]) -> dict[tuple[int, int], list[tuple[int, int]]]:
    adj: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for seg in segments:
        u, v = segment_endpoints(seg)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def build_components(design: Design, side: str) -> tuple[list[Cycle], list[tuple[tuple[int, int], ...]]]:
    """Decompose one side into cycles and open paths.

    Stitch graphs have maximum degree 2, so every component is a simple path
    or a simple cycle; open paths can only occur where the window boundary
    cut a loop. Deterministic: seeds are visited in sorted vertex order.
    """
    adj = _adjacency(design.side(side))
    seen: set[tuple[int, int]] = set()
    cycles: list[Cycle] = []
    paths: list[tuple[tuple[int, int], ...]] = []

    def walk(start: tuple[int, int]) -> list[tuple[int, int]]:
        out = [start]
        seen.add(start)
        prev = None
        cur = start
        while True:
            nxt = None
            for nb in adj[cur]:
                if nb != prev:
                    nxt = nb
                    break
            if nxt is None or nxt == start:
                return out
            if nxt in seen:
                return out
            out.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt

    for v in sorted(adj):
        if v in seen or len(adj[v]) != 1:
            continue
        paths.append(tuple(walk(v)))
    for v in sorted(adj):
        if v not in seen:
            cycles.append(Cycle.from_vertices(walk(v)))
    return cycles, paths


def _least_rotation(s: str) -> str:
    """Booth's algorithm: lexicographically least cyclic rotation of s."""
    d = s + s
    n = len(s)
    f = [-1] * len(d)
    k = 0
    for j in range(1, len(d)):
        sj = d[j]
        i = f[j - k - 1]
        while i != -1 and sj != d[k + i + 1]:
            if sj < d[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != d[k + i + 1]:
            if sj < d[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return d[k:k + n]


def _direction_variants(dirs: list[int]) -> list[str]:
    variants = []
    rev = [(dd + 3) % 6 for dd in reversed(dirs)]
    for seq in (dirs, rev):
        for r in range(6):
            variants.append("".join(str((dd + r) % 6) for dd in seq))
            variants.append("".join(str((r - dd) % 6) for dd in seq))
    return variants


def motif_signature(cycle: Cycle) -> str:
    """Canonical form of the cycle's edge-direction sequence, invariant under
    translation, the 12 lattice point symmetries, and traversal direction."""
    return min(_least_rotation(v) for v in _direction_variants(cycle.directions()))


def cycle_matches(cycle: Cycle, reference: Cycle) -> bool:
    return motif_signature(cycle) == motif_signature(reference)


def motif_census(design: Design, side: str) -> MotifCensus:
    """Count closed components per signature class; open paths are reported
    separately and never classified (they are window artifacts)."""
    cycles, paths = build_components(design, side)
    counts = Counter(motif_signature(c) for c in cycles)
    ordered = dict(sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0])))
    return MotifCensus(ordered, len(paths))
