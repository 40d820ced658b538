"""Turn offset words into concrete designs: which unit segments are stitched
on the front of the fabric and which on the back.

Every present line carries a running stitch, alternating front/back along the
line. The line's offset bit decides which side the stitch at s = 0 lands on,
and phase_base/phase_slope (grid conventions) fix how that alternation lines
up across parallel lines. A segment is a front stitch exactly when

    s + phase_base[F] + phase_slope[F] * ordinal + bit(line)    is odd.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import WordError
from .grid import (DEFAULT_CONVENTION, Family, GridConvention, LineId,
                   SegmentId, Window, is_line_present, present_line_ordinal)
from .words import Word, koch_word, palindromic_period

CONSTANT = "constant"
PERIODIC = "periodic"
KOCH = "koch"


@dataclass(frozen=True)
class DirectionSpec:
    """Offset bits for the present lines of one family.

    kind "constant": every line gets ``bit``.
    kind "periodic": line with ordinal m gets word[(m + phase) mod len].
    kind "koch": periodic with word = koch_word(order) followed by its
    reversal, the sequence actually stitched when working the word forwards
    and backwards.
    """

    kind: str
    bit: int = 0
    word: Word | None = None
    order: int | None = None
    phase: int = 0

    @classmethod
    def constant(cls, bit: int, phase: int = 0) -> "DirectionSpec":
        return cls(CONSTANT, bit=bit, phase=phase)

    @classmethod
    def periodic(cls, word: Word | str, phase: int = 0) -> "DirectionSpec":
        if isinstance(word, str):
            word = Word.parse(word)
        if len(word) == 0:
            raise WordError("periodic direction needs a non-empty word")
        return cls(PERIODIC, word=word, phase=phase)

    @classmethod
    def koch(cls, order: int, phase: int = 0) -> "DirectionSpec":
        return cls(KOCH, order=order, word=koch_word(order), phase=phase)

    def bit_sequence(self) -> Word:
        """The periodic bit sequence indexed by present-line ordinal."""
        if self.kind == CONSTANT:
            return Word(1, self.bit)
        if self.kind == PERIODIC:
            assert self.word is not None
            return self.word
        assert self.kind == KOCH and self.word is not None
        return palindromic_period(self.word)


@dataclass(frozen=True)
class StitchPattern:
    specs: tuple[DirectionSpec, DirectionSpec, DirectionSpec]
    convention: GridConvention = DEFAULT_CONVENTION

    @classmethod
    def uniform(cls, spec: DirectionSpec,
                convention: GridConvention = DEFAULT_CONVENTION) -> "StitchPattern":
        return cls((spec, spec, spec), convention)


def line_bit(line: LineId, pattern: StitchPattern) -> int:
    spec = pattern.specs[line.family]
    m = present_line_ordinal(line, pattern.convention)
    return spec.bit_sequence().cyclic(m + spec.phase)


def is_front(seg: SegmentId, pattern: StitchPattern) -> bool:
    f, k, s = seg
    conv = pattern.convention
    m = present_line_ordinal(LineId(f, k), conv)
    bit = line_bit(LineId(f, k), pattern)
    return (s + conv.phase_base[f] + conv.phase_slope[f] * m + bit) % 2 == 1


@dataclass(frozen=True)
class Design:
    """A finite-window materialization of a stitch pattern."""

    window: Window
    front: frozenset[SegmentId]
    back: frozenset[SegmentId]
    pattern: StitchPattern = field(repr=False)

    def side(self, which: str) -> frozenset[SegmentId]:
        if which == "front":
            return self.front
        if which == "back":
            return self.back
        raise ValueError(f"side must be 'front' or 'back', got {which!r}")


def _line_ranges(window: Window, family: int, parity: int):
    """Yield (k, s_lo, s_hi) for present lines: segment positions s in
    [s_lo, s_hi] have both endpoints inside the window."""
    if family == Family.A:
        for k in range(window.j_min, window.j_max + 1):
            if k % 2 == parity:
                yield k, window.i_min, window.i_max - 1
    elif family == Family.B:
        for k in range(window.i_min, window.i_max + 1):
            if k % 2 == parity:
                yield k, window.j_min, window.j_max - 1
    else:
        for k in range(window.i_min + window.j_min, window.i_max + window.j_max + 1):
            if k % 2 == parity:
                # endpoints (k-s, s) and (k-s-1, s+1)
                lo = max(window.j_min, k - window.i_max)
                hi = min(window.j_max - 1, k - window.i_min - 1)
                if lo <= hi:
                    yield k, lo, hi


def generate_design(window: Window, pattern: StitchPattern) -> Design:
    """Enumerate every present-line segment with both endpoints in the window
    and split them into front and back stitches."""
    window.validate()
    conv = pattern.convention
    front: list[SegmentId] = []
    back: list[SegmentId] = []
    for f in (Family.A, Family.B, Family.C):
        spec = pattern.specs[f]
        seq = spec.bit_sequence()
        parity = conv.presence_parity[f]
        base, slope = conv.phase_base[f], conv.phase_slope[f]
        for k, s_lo, s_hi in _line_ranges(window, f, parity):
            m = (k - parity) // 2
            row = (base + slope * m + seq.cyclic(m + spec.phase)) % 2
            # front stitches sit at s with (s + row) odd
            first_front = s_lo if (s_lo + row) % 2 == 1 else s_lo + 1
            first_back = s_lo if (s_lo + row) % 2 == 0 else s_lo + 1
            front.extend(SegmentId(f, k, s) for s in range(first_front, s_hi + 1, 2))
            back.extend(SegmentId(f, k, s) for s in range(first_back, s_hi + 1, 2))
    return Design(window, frozenset(front), frozenset(back), pattern)


def dual(design: Design) -> Design:
    """The design formed on the reverse of the fabric."""
    return Design(design.window, design.back, design.front, design.pattern)
