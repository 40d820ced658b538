"""Triangular-lattice geometry: vertices, line families, segments, windows.

Lattice coordinates: vertex (i, j) sits at Cartesian (i + j/2, j*sqrt(3)/2).
The three line families and their integer coordinates through (i, j):

    family A: direction (1, 0),        line coordinate a = j
    family B: direction (1/2, r3/2),   line coordinate b = i
    family C: direction (-1/2, r3/2),  line coordinate c = i + j

so c = a + b always. A design is "dilute" when only every second line of each
family carries stitches; with presence parities (A, B, C) = (0, 0, 1) every
vertex lies on exactly 0 or 2 present lines.
"""
from __future__ import annotations

import math
from enum import IntEnum
from typing import Iterator, NamedTuple

from .errors import NotAStitchLineError, WindowError

SQRT3_2 = math.sqrt(3.0) / 2.0

# Unit edge directions, counterclockwise from the +x axis (indices 0..5).
DIRECTIONS: tuple[tuple[int, int], ...] = (
    (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
DIRECTION_INDEX = {d: n for n, d in enumerate(DIRECTIONS)}


class Family(IntEnum):
    A = 0
    B = 1
    C = 2


class LineId(NamedTuple):
    family: int
    k: int


class SegmentId(NamedTuple):
    family: int
    k: int
    s: int


class GridConvention(NamedTuple):
    """Parity conventions fixing presence of lines and stitch alternation.

    presence_parity picks which alternate lines are present per family.
    phase_base/phase_slope anchor how stitch alternation on one present line
    relates to the next; their default values come from the calibration
    search (cli module) and are frozen here.
    """

    presence_parity: tuple[int, int, int] = (0, 0, 1)
    phase_base: tuple[int, int, int] = (0, 0, 0)
    phase_slope: tuple[int, int, int] = (1, 1, 1)


DEFAULT_CONVENTION = GridConvention()

EMPTY = "empty"
VISITED = "visited"


class Window(NamedTuple):
    i_min: int
    i_max: int
    j_min: int
    j_max: int

    def contains(self, v: tuple[int, int]) -> bool:
        return self.i_min <= v[0] <= self.i_max and self.j_min <= v[1] <= self.j_max

    def is_interior(self, v: tuple[int, int]) -> bool:
        """True when all six lattice neighbors of v lie in the window."""
        i, j = v
        return (self.i_min < i < self.i_max and self.j_min < j < self.j_max
                and self.contains((i + 1, j - 1)) and self.contains((i - 1, j + 1)))

    @property
    def i_count(self) -> int:
        return self.i_max - self.i_min + 1

    @property
    def j_count(self) -> int:
        return self.j_max - self.j_min + 1

    def vertex_count(self) -> int:
        return self.i_count * self.j_count

    def vertices(self) -> Iterator[tuple[int, int]]:
        for i in range(self.i_min, self.i_max + 1):
            for j in range(self.j_min, self.j_max + 1):
                yield (i, j)

    def validate(self, max_vertices: int = 20_000_000) -> "Window":
        if self.i_min > self.i_max or self.j_min > self.j_max:
            raise WindowError(f"degenerate window {self}")
        if self.vertex_count() > max_vertices:
            raise WindowError(f"window {self} exceeds {max_vertices} vertices")
        return self


def vertex_to_cartesian(v: tuple[int, int]) -> tuple[float, float]:
    i, j = v
    return (i + j / 2.0, j * SQRT3_2)


def lines_through(v: tuple[int, int]) -> tuple[LineId, LineId, LineId]:
    i, j = v
    return (LineId(Family.A, j), LineId(Family.B, i), LineId(Family.C, i + j))


def is_line_present(line: LineId, conv: GridConvention = DEFAULT_CONVENTION) -> bool:
    return line.k % 2 == conv.presence_parity[line.family]


def present_line_ordinal(line: LineId, conv: GridConvention = DEFAULT_CONVENTION) -> int:
    """Index of a present line among the present lines of its family, so
    consecutive present lines get consecutive ordinals."""
    if not is_line_present(line, conv):
        raise NotAStitchLineError(f"line {line} carries no stitching")
    return (line.k - conv.presence_parity[line.family]) // 2


def vertex_degree_class(v: tuple[int, int], conv: GridConvention = DEFAULT_CONVENTION) -> str:
    n = sum(1 for line in lines_through(v) if is_line_present(line, conv))
    if n == 0:
        return EMPTY
    if n == 2:
        return VISITED
    raise AssertionError(f"convention {conv} places {v} on {n} present lines")


def segment_endpoints(seg: SegmentId) -> tuple[tuple[int, int], tuple[int, int]]:
    f, k, s = seg
    if f == Family.A:
        return (s, k), (s + 1, k)
    if f == Family.B:
        return (k, s), (k, s + 1)
    return (k - s, s), (k - s - 1, s + 1)


def segment_between(u: tuple[int, int], v: tuple[int, int]) -> SegmentId:
    """The unique SegmentId whose endpoints are the neighboring vertices u, v."""
    d = (v[0] - u[0], v[1] - u[1])
    if d not in DIRECTION_INDEX:
        raise ValueError(f"{u} and {v} are not lattice neighbors")
    if DIRECTION_INDEX[d] >= 3:
        u, v = v, u
        d = (-d[0], -d[1])
    if d == (1, 0):
        return SegmentId(Family.A, u[1], u[0])
    if d == (0, 1):
        return SegmentId(Family.B, u[0], u[1])
    return SegmentId(Family.C, u[0] + u[1], u[1])


def segment_direction(seg: SegmentId) -> tuple[int, int]:
    return DIRECTIONS[seg.family]
