from hypothesis import given
from hypothesis import strategies as st

from isostitch import (Cycle, DirectionSpec, StitchPattern, Window,
                       build_components, cycle_matches, generate_design,
                       koch_polygon, motif_census, motif_signature)
from isostitch.design_graph import _least_rotation


def _design(word: str, hi: int):
    pat = StitchPattern.uniform(DirectionSpec.periodic(word))
    return generate_design(Window(0, hi, 0, hi), pat)


def _histogram(census) -> list[tuple[int, int]]:
    out: dict[int, int] = {}
    for sig, n in census.counts.items():
        out[len(sig)] = out.get(len(sig), 0) + n
    return sorted(out.items())


def test_hexagram_design_census_small_window():
    d = _design("0", 20)
    assert len(d.front) == 320
    census = motif_census(d, "front")
    assert _histogram(census) == [(12, 16)]


def test_hexagram_design_census_forty_window():
    d = _design("0", 39)
    front = motif_census(d, "front")
    assert _histogram(front) == [(12, 81)]
    assert len(front.counts) == 1
    assert front.open_paths == 39
    back = motif_census(d, "back")
    assert _histogram(back) == [(3, 200), (6, 81)]


def test_triangle_word_census():
    d = _design("0001", 39)
    assert _histogram(motif_census(d, "front")) == [(3, 131), (30, 16)]
    assert _histogram(motif_census(d, "back")) == [(3, 200), (24, 16)]


def test_every_front_cycle_of_the_hexagram_design_is_a_hexagram():
    d = _design("0", 39)
    hexagram = koch_polygon(1).cycle
    cycles, paths = build_components(d, "front")
    assert len(cycles) == 81
    assert all(cycle_matches(c, hexagram) for c in cycles)
    assert len(paths) == 39


def test_cycle_canonical_form_is_traversal_independent():
    verts = [(0, 0), (1, 0), (1, 1), (0, 2), (-1, 2), (-1, 1)]
    for k in range(6):
        rotated = verts[k:] + verts[:k]
        assert Cycle.from_vertices(rotated) == Cycle.from_vertices(verts)
        assert Cycle.from_vertices(rotated[::-1]) == Cycle.from_vertices(verts)


def test_cycle_directions_are_unit_steps_closing_up():
    cyc = koch_polygon(2).cycle
    dirs = cyc.directions()
    assert len(dirs) == len(cyc.vertices) == 48
    assert all(0 <= d < 6 for d in dirs)


def _transform(verts, rotation, reflect, t):
    from isostitch.symmetry import point_matrix
    m = point_matrix(rotation, reflect)
    return [(m[0][0] * i + m[0][1] * j + t[0], m[1][0] * i + m[1][1] * j + t[1])
            for i, j in verts]


@given(st.integers(0, 5), st.booleans(),
       st.tuples(st.integers(-7, 7), st.integers(-7, 7)),
       st.sampled_from([1, 2]))
def test_signature_is_isometry_invariant(rotation, reflect, t, order):
    base = koch_polygon(order).cycle
    moved = Cycle.from_vertices(_transform(list(base.vertices), rotation, reflect, t))
    assert motif_signature(moved) == motif_signature(base)
    assert cycle_matches(moved, base)


def test_different_motifs_have_different_signatures():
    assert motif_signature(koch_polygon(1).cycle) != motif_signature(koch_polygon(2).cycle)
    triangle = Cycle.from_vertices([(0, 0), (1, 0), (0, 1)])
    hexagon = Cycle.from_vertices([(0, 0), (1, 0), (1, 1), (0, 2), (-1, 2), (-1, 1)])
    assert motif_signature(triangle) != motif_signature(hexagon)


@given(st.text(alphabet="012345", min_size=1, max_size=60))
def test_booth_least_rotation_matches_naive(s):
    naive = min(s[k:] + s[:k] for k in range(len(s)))
    assert _least_rotation(s) == naive


def test_census_count_ordering_is_deterministic():
    d = _design("0001", 39)
    census = motif_census(d, "front")
    keys = list(census.counts)
    assert keys == sorted(keys, key=lambda sig: (len(sig), sig))
    assert census.total_cycles() == sum(census.counts.values())
