"""Translation lattice, point symmetries, wallpaper group, and self-duality.

Isometries of the triangular lattice are affine maps v -> M v + t in lattice
coordinates, where M is one of the 12 integer point-group matrices (6
rotations by multiples of 60 degrees, optionally preceded by the reflection
across the +x axis) and t is an integer translation.

All symmetry claims are certified on a finite window: a candidate isometry g
is accepted only if the stitched segments agree exactly with their g-images
wherever both are visible, and only if that overlap is big enough to contain
a full period cell of the design (otherwise the test would be vacuous and an
OverlapTooSmallError is raised). Periodicity extends a certified patch
symmetry to the whole plane.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, gcd, pi, sin

from .errors import OverlapTooSmallError
from .grid import SQRT3_2, Family, SegmentId, Window, segment_between, segment_endpoints
from .stitcher import Design, StitchPattern
from .words import minimal_period

Matrix = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix = ((1, 0), (0, 1))
ROT60: Matrix = ((0, -1), (1, 1))        # 60 degrees counterclockwise
MIRROR_X: Matrix = ((1, 1), (0, -1))     # reflection across the +x axis


def _matmul(p: Matrix, q: Matrix) -> Matrix:
    return tuple(tuple(sum(p[r][k] * q[k][c] for k in range(2)) for c in range(2))
                 for r in range(2))  # type: ignore[return-value]


def _matpow(p: Matrix, n: int) -> Matrix:
    out = IDENTITY
    for _ in range(n):
        out = _matmul(out, p)
    return out


ROTATIONS: tuple[Matrix, ...] = tuple(_matpow(ROT60, r) for r in range(6))


def point_matrix(rotation: int, reflect: bool) -> Matrix:
    """Reflection across +x first (when requested), then rotation."""
    return _matmul(ROTATIONS[rotation % 6], MIRROR_X) if reflect else ROTATIONS[rotation % 6]


@dataclass(frozen=True)
class LatticeIsometry:
    rotation: int = 0
    reflect: bool = False
    translation: tuple[int, int] = (0, 0)
    center: tuple[Fraction, Fraction] | None = None
    role: str = ""

    def matrix(self) -> Matrix:
        return point_matrix(self.rotation, self.reflect)

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        m, t = self.matrix(), self.translation
        return (m[0][0] * v[0] + m[0][1] * v[1] + t[0],
                m[1][0] * v[0] + m[1][1] * v[1] + t[1])


WALLPAPER_GROUPS = ("p1", "p2", "p3", "p3m1", "p31m", "p6", "p6mm",
                    "cm", "cmm", "pm", "pg", "pmm", "pmg", "pgg",
                    "p4", "p4m", "p4g", "Unknown")


def pattern_period(pattern: StitchPattern) -> dict[int, int]:
    """Minimal period of each family's bit sequence over present-line
    ordinals. The design repeats when every family's lines shift by a
    multiple of its period (possibly combined across families)."""
    return {int(f): minimal_period(pattern.specs[f].bit_sequence())
            for f in (Family.A, Family.B, Family.C)}


def _row_shift_period(pattern: StitchPattern, f: int) -> int:
    """Smallest ordinal shift d leaving family f's front/back row parity
    unchanged: bit(m+d) must equal bit(m) xor (slope*d mod 2) for all m."""
    seq = pattern.specs[f].bit_sequence()
    slope = pattern.convention.phase_slope[f]
    p = len(seq)
    for d in range(1, 2 * p + 1):
        eps = (slope * d) % 2
        if all(seq.cyclic(m + d) == seq.cyclic(m) ^ eps for m in range(p)):
            return d
    raise AssertionError("unreachable: 2p always satisfies the condition")


def translation_basis(pattern: StitchPattern) -> tuple[tuple[int, int], tuple[int, int]]:
    """Generators of the design's full translation lattice.

    A translation (2a, 2b) shifts present-line ordinals by b (family A),
    a (family B) and a+b (family C); odd translations move present lines onto
    absent ones and never preserve the design. Solving the three row-parity
    congruences gives a basis in Hermite-like form (2*a1, 0), (2*e, 2*b2).
    """
    pa = _row_shift_period(pattern, Family.A)
    pb = _row_shift_period(pattern, Family.B)
    pc = _row_shift_period(pattern, Family.C)
    a1 = pb * pc // gcd(pb, pc)
    g = gcd(pb, pc)
    b2 = pa * g // gcd(pa, g)
    e = next(a for a in range(a1) if a % pb == 0 and (a + b2) % pc == 0)
    return (2 * a1, 0), (2 * e, 2 * b2)


def period_cell(pattern: StitchPattern) -> tuple[int, int]:
    g1, g2 = translation_basis(pattern)
    return g1[0], g2[1]


def _apply(m: Matrix, t: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
    return (m[0][0] * v[0] + m[0][1] * v[1] + t[0],
            m[1][0] * v[0] + m[1][1] * v[1] + t[1])


def _invert(m: Matrix, t: tuple[int, int]) -> tuple[Matrix, tuple[int, int]]:
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    mi: Matrix = ((m[1][1] // det, -m[0][1] // det),
                  (-m[1][0] // det, m[0][0] // det))
    ti = _apply(mi, (0, 0), t)
    return mi, (-ti[0], -ti[1])


def _overlap_has_cell(win: Window, m: Matrix, t: tuple[int, int],
                      cell: tuple[int, int]) -> bool:
    """Is there an integer-anchored period cell visible on both sides of g?"""
    ci, cj = cell

    def fits(x: int, y: int) -> bool:
        for dx, dy in ((0, 0), (ci, 0), (0, cj), (ci, cj)):
            u = (x + dx, y + dy)
            if not win.contains(u) or not win.contains(_apply(m, t, u)):
                return False
        return True

    cx = (win.i_min + win.i_max) // 2
    cy = (win.j_min + win.j_max) // 2
    for ax in (cx - ci // 2, cx - ci // 2 - (t[0] + 1) // 2):
        for ay in (cy - cj // 2, cy - cj // 2 - (t[1] + 1) // 2):
            for dx in (0, -ci, ci):
                for dy in (0, -cj, cj):
                    if fits(ax + dx, ay + dy):
                        return True
    for x in range(win.i_min, win.i_max - ci + 1):
        for y in range(win.j_min, win.j_max - cj + 1):
            if fits(x, y):
                return True
    return False


def _segment_sets_match(source: frozenset[SegmentId], target: frozenset[SegmentId],
                        win: Window, m: Matrix, t: tuple[int, int]) -> bool:
    """Exact agreement of target with the g-image of source on the overlap:
    g maps source onto target wherever both ends are visible, both ways."""
    mi, ti = _invert(m, t)
    for seg in source:
        u, v = segment_endpoints(seg)
        gu, gv = _apply(m, t, u), _apply(m, t, v)
        if win.contains(gu) and win.contains(gv) and segment_between(gu, gv) not in target:
            return False
    for seg in target:
        u, v = segment_endpoints(seg)
        gu, gv = _apply(mi, ti, u), _apply(mi, ti, v)
        if win.contains(gu) and win.contains(gv) and segment_between(gu, gv) not in source:
            return False
    return True


def is_symmetry(design: Design, iso: LatticeIsometry) -> bool:
    """Certify that iso maps the front stitches exactly onto themselves on
    the window overlap. Requires the overlap to contain at least one full
    period cell; raises OverlapTooSmallError otherwise. The identity is a
    symmetry of any design."""
    m, t = iso.matrix(), iso.translation
    if m == IDENTITY and t == (0, 0):
        return True
    cell = period_cell(design.pattern)
    if not _overlap_has_cell(design.window, m, t, cell):
        raise OverlapTooSmallError(
            f"overlap of {design.window} with its image leaves no {cell} period cell")
    return _segment_sets_match(design.front, design.front, design.window, m, t)


def _maps_front_to_back(design: Design, m: Matrix, t: tuple[int, int]) -> bool:
    cell = period_cell(design.pattern)
    if not _overlap_has_cell(design.window, m, t, cell):
        raise OverlapTooSmallError(
            f"overlap of {design.window} with its image leaves no {cell} period cell")
    return _segment_sets_match(design.front, design.back, design.window, m, t)


def _rotation_about(step: int, c: tuple[Fraction, Fraction]) -> LatticeIsometry | None:
    """Rotation by step*60 degrees about c, when that is a lattice isometry
    (integer translation part)."""
    m = ROTATIONS[step]
    tx = c[0] - (m[0][0] * c[0] + m[0][1] * c[1])
    ty = c[1] - (m[1][0] * c[0] + m[1][1] * c[1])
    if tx.denominator != 1 or ty.denominator != 1:
        return None
    return LatticeIsometry(rotation=step, reflect=False,
                           translation=(int(tx), int(ty)), center=c)


def _candidate_centers(cell: tuple[int, int], kinds: str, anchor: tuple[int, int]):
    """Rotation-center candidates in one period cell near the anchor:
    lattice vertices (v), edge midpoints (e), triangle barycenters (t).
    Centers repeat modulo the translation lattice, so one cell anchored at
    the window middle covers every class while keeping the certified overlap
    inside the window."""
    out = []
    for i in range(anchor[0], anchor[0] + cell[0]):
        for j in range(anchor[1], anchor[1] + cell[1]):
            fi, fj = Fraction(i), Fraction(j)
            if "v" in kinds:
                out.append((fi, fj))
            if "e" in kinds:
                out.append((fi + Fraction(1, 2), fj))
                out.append((fi, fj + Fraction(1, 2)))
                out.append((fi + Fraction(1, 2), fj + Fraction(1, 2)))
            if "t" in kinds:
                out.append((fi + Fraction(1, 3), fj + Fraction(1, 3)))
                out.append((fi + Fraction(2, 3), fj + Fraction(2, 3)))
    return out


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


class _Engine:
    """Bounded symmetry search for one design side."""

    def __init__(self, design: Design):
        self.design = design
        self.basis = translation_basis(design.pattern)
        self.cell = (self.basis[0][0], self.basis[1][1])
        win = design.window
        self.anchor = ((win.i_min + win.i_max) // 2, (win.j_min + win.j_max) // 2)

    def check(self, iso: LatticeIsometry) -> bool:
        return is_symmetry(self.design, iso)

    def rotation_hits(self) -> tuple[int, list[LatticeIsometry]]:
        """Maximal rotation order and every verified center at that order."""
        for step, order, kinds in ((1, 6, "v"), (2, 3, "vt"), (3, 2, "ve")):
            hits = []
            for c in _candidate_centers(self.cell, kinds, self.anchor):
                iso = _rotation_about(step, c)
                if iso is not None and self.check(iso):
                    hits.append(iso)
            if hits:
                return order, hits
        return 1, []

    def _centered_translation(self, m: Matrix) -> tuple[int, int]:
        """Translation part aiming the fixed locus of m at the window
        middle, so certified overlaps exist on off-center windows too."""
        cx, cy = self.anchor
        return (cx - (m[0][0] * cx + m[0][1] * cy),
                cy - (m[1][0] * cx + m[1][1] * cy))

    def reflection_survey(self) -> dict[int, dict[str, LatticeIsometry]]:
        """Per axis direction r (axis angle 30*r degrees): a verified mirror
        and/or proper glide witness, when they exist.

        Translation parts are scanned over one period cell around the value
        that parks the axis at the window middle; a hit whose doubled glide
        vector t + M t lies in (M + I) * Lambda is equivalent, modulo
        lattice translations, to a pure mirror on a parallel axis."""
        out: dict[int, dict[str, LatticeIsometry]] = {}
        for r in range(6):
            m = point_matrix(r, True)
            bt = self._centered_translation(m)
            found: dict[str, LatticeIsometry] = {}
            for ti in range(self.cell[0]):
                for tj in range(self.cell[1]):
                    t = (bt[0] + ti, bt[1] + tj)
                    iso = LatticeIsometry(rotation=r, reflect=True, translation=t)
                    if not self.check(iso):
                        continue
                    w = _apply(m, t, t)
                    if self._in_image_lattice(m, w):
                        if "mirror" not in found:
                            found["mirror"] = self._pure_mirror(r, m, t, w)
                    elif "glide" not in found:
                        found["glide"] = iso
                if len(found) == 2:
                    break
            if found:
                out[r] = found
        return out

    def _image_lattice(self, m: Matrix) -> tuple[tuple[int, int], list[int]]:
        """(M + I) * Lambda is rank 1 for reflections: returns a primitive
        direction u and the integer coefficients of the basis images."""
        mi = ((m[0][0] + 1, m[0][1]), (m[1][0], m[1][1] + 1))
        imgs = [_apply(mi, (0, 0), g) for g in self.basis]
        nz = [u for u in imgs if u != (0, 0)]
        if not nz:
            return (0, 0), [0, 0]
        ux, uy = nz[0]
        d = gcd(abs(ux), abs(uy))
        ux, uy = ux // d, uy // d
        coef = []
        for vx, vy in imgs:
            coef.append(vx // ux if ux else vy // uy)
        return (ux, uy), coef

    def _in_image_lattice(self, m: Matrix, w: tuple[int, int]) -> bool:
        u, coef = self._image_lattice(m)
        if u == (0, 0):
            return w == (0, 0)
        g = gcd(coef[0], coef[1])
        if w == (0, 0):
            return True
        if w[0] * u[1] != w[1] * u[0]:
            return False
        mm = w[0] // u[0] if u[0] else w[1] // u[1]
        if (mm * u[0], mm * u[1]) != w:
            return False
        return g != 0 and mm % g == 0

    def _kernel_vector(self, m: Matrix) -> tuple[int, int]:
        """Primitive lattice vector annihilated by M + I (the perpendicular
        direction of a reflection axis). Shifting a pure mirror by it moves
        the axis without reintroducing a glide component."""
        u, coef = self._image_lattice(m)
        g = gcd(coef[0], coef[1]) or 1
        x, y = coef[1] // g, -coef[0] // g
        return (x * self.basis[0][0] + y * self.basis[1][0],
                x * self.basis[0][1] + y * self.basis[1][1])

    def _pure_mirror(self, r: int, m: Matrix, t: tuple[int, int],
                     w: tuple[int, int]) -> LatticeIsometry:
        """Shift a mirror-class hit by a lattice translation so its glide
        vector vanishes; the fixed axis then passes through t'/2."""
        if w == (0, 0):
            lam = (0, 0)
        else:
            u, coef = self._image_lattice(m)
            g, x0, y0 = _egcd(coef[0], coef[1])
            mm = w[0] // u[0] if u[0] else w[1] // u[1]
            f = -mm // g
            x, y = x0 * f, y0 * f
            lam = (x * self.basis[0][0] + y * self.basis[1][0],
                   x * self.basis[0][1] + y * self.basis[1][1])
        tt = (t[0] + lam[0], t[1] + lam[1])
        n = self._kernel_vector(m)
        if n != (0, 0):
            tt = min(((tt[0] + k * n[0], tt[1] + k * n[1]) for k in range(-12, 13)),
                     key=lambda v: (self._axis_to_anchor(r, v), v))
        assert _apply(m, tt, tt) == (0, 0), "glide vector did not cancel"
        center = (Fraction(tt[0], 2), Fraction(tt[1], 2))
        iso = LatticeIsometry(rotation=r, reflect=True, translation=tt, center=center)
        assert self.check(iso)
        return iso

    def _axis_to_anchor(self, r: int, t: tuple[int, int]) -> float:
        """Distance from the window middle to the mirror axis of the pure
        reflection (r, t); used only to pick the best certified witness."""
        ax, ay = cos(pi * r / 6), sin(pi * r / 6)
        def cart(x: float, y: float) -> tuple[float, float]:
            return x + y / 2, y * SQRT3_2
        px, py = cart(*self.anchor)
        qx, qy = cart(t[0] / 2, t[1] / 2)
        return abs((px - qx) * ay - (py - qy) * ax)

    def on_mirror(self, c: tuple[Fraction, Fraction]) -> bool:
        """Does some verified mirror axis pass through the point c?"""
        for r in range(6):
            m = point_matrix(r, True)
            tx = c[0] - (m[0][0] * c[0] + m[0][1] * c[1])
            ty = c[1] - (m[1][0] * c[0] + m[1][1] * c[1])
            if tx.denominator != 1 or ty.denominator != 1:
                continue
            iso = LatticeIsometry(rotation=r, reflect=True,
                                  translation=(int(tx), int(ty)), center=c)
            if self.check(iso):
                return True
        return False


def classify_wallpaper(design: Design) -> tuple[str, list[LatticeIsometry]]:
    """Wallpaper group of the design's front, with verified witnesses.

    Bounded search: translation generators come from the word periods, the
    maximal rotation order is taken over all center candidates in one period
    cell, and mirror/glide axes are scanned over translations in one cell.
    The standard decision tree then names the group. Every returned witness
    passes is_symmetry; nothing is trusted unverified.
    """
    eng = _Engine(design)
    win = design.window
    ci, cj = eng.cell
    if win.i_count < 3 * ci or win.j_count < 3 * cj:
        raise OverlapTooSmallError(
            f"window {win} spans fewer than 3 period cells {eng.cell} per direction")

    witnesses: list[LatticeIsometry] = []
    for g in eng.basis:
        iso = LatticeIsometry(translation=g, role="translation")
        if not is_symmetry(design, iso):
            raise AssertionError(f"translation basis {g} failed verification")
        witnesses.append(iso)

    order, rot_hits = eng.rotation_hits()
    if rot_hits:
        first = rot_hits[0]
        witnesses.append(LatticeIsometry(first.rotation, False, first.translation,
                                         first.center, role=f"rotation-{order}"))

    survey = eng.reflection_survey()
    mirrors = {r: d["mirror"] for r, d in survey.items() if "mirror" in d}
    glides = {r: d["glide"] for r, d in survey.items() if "glide" in d}
    for r, iso in sorted(mirrors.items()):
        witnesses.append(LatticeIsometry(iso.rotation, True, iso.translation,
                                         iso.center, role="mirror"))
    for r, iso in sorted(glides.items()):
        witnesses.append(LatticeIsometry(iso.rotation, True, iso.translation,
                                         None, role="glide"))

    has_mirror = bool(mirrors)
    has_glide = bool(glides)

    if order == 6:
        group = "p6mm" if has_mirror else "p6"
    elif order == 3:
        if not has_mirror:
            group = "p3"
        elif all(eng.on_mirror(h.center) for h in rot_hits):
            group = "p3m1"
        else:
            group = "p31m"
    elif order == 2:
        if not has_mirror:
            group = "pgg" if has_glide else "p2"
        elif any(r in mirrors and (r + 3) % 6 in mirrors for r in range(3)):
            group = "pmm" if all(eng.on_mirror(h.center) for h in rot_hits) else "cmm"
        else:
            group = "pmg"
    else:
        if has_mirror:
            group = "cm" if has_glide else "pm"
        else:
            group = "pg" if has_glide else "p1"

    for iso in witnesses:
        if not is_symmetry(design, iso):
            raise AssertionError(f"witness {iso} failed re-verification")
    if group == "p6mm" and len(mirrors) < 2:
        return "Unknown", witnesses
    return group, witnesses


def is_self_dual(design: Design) -> tuple[bool, LatticeIsometry | None]:
    """Search for a lattice isometry mapping the front onto the back: the 12
    point operations composed with translations in one period cell, in a
    fixed canonical order. The witness is re-verified before returning."""
    eng = _Engine(design)
    for reflect in (False, True):
        for rotation in range(6):
            bt = eng._centered_translation(point_matrix(rotation, reflect))
            for ti in range(eng.cell[0]):
                for tj in range(eng.cell[1]):
                    iso = LatticeIsometry(rotation, reflect, (bt[0] + ti, bt[1] + tj),
                                          role="self-dual")
                    if _maps_front_to_back(design, iso.matrix(), iso.translation):
                        return True, iso
    return False, None
