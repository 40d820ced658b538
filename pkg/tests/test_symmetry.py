from fractions import Fraction

import pytest

from isostitch import (DirectionSpec, LatticeIsometry, OverlapTooSmallError,
                       StitchPattern, Window, classify_wallpaper, dual,
                       generate_design, is_self_dual, is_symmetry,
                       pattern_period, period_cell, translation_basis)
from isostitch.symmetry import IDENTITY, MIRROR_X, ROT60, point_matrix


def _design(word: str, half: int | None = None):
    pat = StitchPattern.uniform(DirectionSpec.periodic(word))
    if half is None:
        ci, cj = period_cell(pat)
        half = max(4 * max(ci, cj), 24)
    return generate_design(Window(-half, half, -half, half), pat)


def test_point_matrices():
    assert point_matrix(0, False) == IDENTITY
    assert point_matrix(1, False) == ROT60
    m = ROT60
    for _ in range(5):
        m = tuple(tuple(sum(ROT60[r][k] * m[k][c] for k in range(2))
                        for c in range(2)) for r in range(2))
    assert m == IDENTITY
    assert point_matrix(0, True) == MIRROR_X


def test_sixfold_rotation_has_order_six():
    iso = LatticeIsometry(rotation=1)
    v = (3, 1)
    out = v
    for _ in range(6):
        out = iso.apply(out)
    assert out == v


def test_pattern_periods():
    for word, period in (("0", 1), ("01", 2), ("0001", 4)):
        pat = StitchPattern.uniform(DirectionSpec.periodic(word))
        assert pattern_period(pat) == {0: period, 1: period, 2: period}


def test_translation_lattice_from_word_periods():
    assert translation_basis(
        StitchPattern.uniform(DirectionSpec.periodic("0"))) == ((4, 0), (0, 4))
    assert translation_basis(
        StitchPattern.uniform(DirectionSpec.periodic("01"))) == ((2, 0), (0, 2))
    assert translation_basis(
        StitchPattern.uniform(DirectionSpec.periodic("0001"))) == ((8, 0), (0, 8))
    assert period_cell(StitchPattern.uniform(DirectionSpec.koch(3))) == (36, 36)


def test_identity_is_a_symmetry_of_any_design():
    d = _design("0", 2)
    assert is_symmetry(d, LatticeIsometry())


def test_basis_translations_are_symmetries_and_odd_ones_are_not():
    d = _design("0")
    g1, g2 = translation_basis(d.pattern)
    assert is_symmetry(d, LatticeIsometry(translation=g1))
    assert is_symmetry(d, LatticeIsometry(translation=g2))
    assert not is_symmetry(d, LatticeIsometry(translation=(1, 0)))
    assert not is_symmetry(d, LatticeIsometry(translation=(2, 0)))


def test_overlap_too_small_raises():
    d = _design("0", 4)
    with pytest.raises(OverlapTooSmallError):
        is_symmetry(d, LatticeIsometry(translation=(8, 0)))
    with pytest.raises(OverlapTooSmallError):
        classify_wallpaper(_design("0", 5))


def test_rotation_that_is_not_a_symmetry_returns_false():
    d = _design("0001")
    assert not is_symmetry(d, LatticeIsometry(rotation=1))


def test_hexagram_classifies_p6mm_on_both_sides():
    d = _design("0")
    for side in (d, dual(d)):
        group, witnesses = classify_wallpaper(side)
        assert group == "p6mm"
        assert all(is_symmetry(side, w) for w in witnesses)


def test_triangle_word_classifies_p3m1():
    d = _design("0001")
    group, witnesses = classify_wallpaper(d)
    assert group == "p3m1"
    group_back, _ = classify_wallpaper(dual(d))
    assert group_back == "p3m1"


def test_alternating_word_classifies_p3m1():
    d = _design("01")
    group, _ = classify_wallpaper(d)
    assert group == "p3m1"


def test_classification_works_on_corner_anchored_windows():
    pat = StitchPattern.uniform(DirectionSpec.periodic("0"))
    d = generate_design(Window(0, 39, 0, 39), pat)
    group, _ = classify_wallpaper(d)
    assert group == "p6mm"


def test_witness_roles_and_geometry():
    d = _design("0")
    group, witnesses = classify_wallpaper(d)
    roles = [w.role for w in witnesses]
    assert roles.count("translation") == 2
    assert "rotation-6" in roles
    mirrors = [w for w in witnesses if w.role == "mirror"]
    assert len(mirrors) == 6
    for w in mirrors:
        m = point_matrix(w.rotation, True)
        t = w.translation
        image = (m[0][0] * t[0] + m[0][1] * t[1] + t[0],
                 m[1][0] * t[0] + m[1][1] * t[1] + t[1])
        assert image == (0, 0), "mirror witnesses carry no glide component"
        assert w.center == (Fraction(t[0], 2), Fraction(t[1], 2))
    rot = next(w for w in witnesses if w.role == "rotation-6")
    assert rot.center is not None
    c = rot.center
    assert c[0].denominator == 1 and c[1].denominator == 1


def test_rotation_witness_for_threefold_group_sits_on_triangle_center_or_vertex():
    d = _design("0001")
    _, witnesses = classify_wallpaper(d)
    rot = next(w for w in witnesses if w.role.startswith("rotation"))
    assert rot.role == "rotation-3"
    denominators = {rot.center[0].denominator, rot.center[1].denominator}
    assert denominators <= {1, 3}


def test_self_duality_of_alternating_word():
    d = _design("01")
    found, witness = is_self_dual(d)
    assert found
    assert witness is not None
    assert (witness.rotation, witness.reflect, witness.translation) == (1, False, (0, 1))


def test_reference_words_that_are_not_self_dual():
    for word in ("0", "0001"):
        found, witness = is_self_dual(_design(word))
        assert not found and witness is None


def test_self_dual_witness_maps_front_onto_back():
    d = _design("01")
    _, witness = is_self_dual(d)
    from isostitch.grid import segment_between, segment_endpoints
    moved = set()
    for seg in d.front:
        u, v = segment_endpoints(seg)
        gu, gv = witness.apply(u), witness.apply(v)
        if d.window.contains(gu) and d.window.contains(gv):
            moved.add(segment_between(gu, gv))
    assert moved <= d.back
    assert len(moved) > len(d.back) // 2
