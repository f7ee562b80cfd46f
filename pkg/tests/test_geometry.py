import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridbend.geometry import (
    COORD_LIMIT,
    CoordinateOverflow,
    Kind,
    collinear,
    interior_lattice_count,
    point_on_segment,
    segments_intersect,
)
from oracles import brute_intersection, random_segment_pair

coord = st.integers(-6, 6)
point = st.tuples(coord, coord, coord)
segment = st.tuples(point, point).filter(lambda s: s[0] != s[1])


@pytest.mark.parametrize("p,q,r,expected", [
    ((0, 0, 0), (1, 1, 1), (2, 2, 2), True),
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), False),
    ((0, 0, 0), (2, 4, 6), (3, 6, 9), True),
])
def test_collinear(p, q, r, expected):
    assert collinear(p, q, r) is expected


def test_point_on_segment():
    s = ((0, 0, 0), (2, 2, 2))
    assert point_on_segment((1, 1, 1), s, include_endpoints=False)
    assert not point_on_segment((0, 0, 0), s, include_endpoints=False)
    assert point_on_segment((0, 0, 0), s, include_endpoints=True)
    for mode in (True, False):
        assert not point_on_segment((1, 1, 0), s, include_endpoints=mode)
    assert not point_on_segment((3, 3, 3), s)


def test_shared_endpoint():
    r = segments_intersect(((0, 0, 0), (1, 1, 1)), ((1, 1, 1), (2, 0, 0)))
    assert r.kind == Kind.POINT
    assert r.grid_point() == (1, 1, 1)


def test_crossing_point():
    # t(4,2,2) = (4,0,0) + u(-4,2,2)  ->  t = u = 1/2
    r = segments_intersect(((0, 0, 0), (4, 2, 2)), ((4, 0, 0), (0, 2, 2)))
    assert r.kind == Kind.POINT
    assert r.point == (2, 1, 1)
    assert r.integral


def test_fractional_crossing():
    r = segments_intersect(((0, 0, 0), (1, 1, 0)), ((1, 0, 0), (0, 1, 0)))
    assert r.kind == Kind.POINT
    assert r.point == (Fraction(1, 2), Fraction(1, 2), 0)
    assert not r.integral
    assert r.grid_point() is None


def test_overlap_and_parallel():
    assert segments_intersect(((0, 0, 0), (3, 3, 3)), ((2, 2, 2), (5, 5, 5))).kind == Kind.OVERLAP
    assert segments_intersect(((0, 0, 0), (2, 2, 2)), ((0, 0, 1), (2, 2, 3))).kind == Kind.DISJOINT


def test_collinear_touching_and_apart():
    r = segments_intersect(((0, 0, 0), (1, 2, 3)), ((1, 2, 3), (2, 4, 6)))
    assert r.kind == Kind.POINT and r.point == (1, 2, 3)
    assert segments_intersect(((0, 0, 0), (1, 2, 3)), ((2, 4, 6), (3, 6, 9))).kind == Kind.DISJOINT


def test_skew_lines_are_disjoint():
    assert segments_intersect(((0, 0, 0), (2, 0, 0)), ((1, -1, 1), (1, 1, 1))).kind == Kind.DISJOINT


def test_coordinate_limit():
    big = COORD_LIMIT
    r = segments_intersect(((-big, -big, -big), (big, big, big)), ((-big, big, 0), (big, -big, 0)))
    assert r.kind == Kind.POINT and r.point == (0, 0, 0)
    with pytest.raises(CoordinateOverflow):
        segments_intersect(((0, 0, 0), (big + 1, 0, 0)), ((0, 1, 0), (1, 1, 0)))


@pytest.mark.parametrize("s,expected", [
    (((0, 0, 0), (2, 2, 2)), 1),
    (((0, 0, 0), (1, 5, 7)), 0),
    (((0, 0, 0), (4, 6, 2)), 1),
])
def test_interior_lattice_count(s, expected):
    assert interior_lattice_count(s) == expected


def test_interior_lattice_count_by_enumeration():
    # (4,6,2) has gcd 2: the only interior lattice point is (2,3,1)
    s = ((0, 0, 0), (4, 6, 2))
    pts = [p for p in itertools.product(range(5), range(7), range(3))
           if point_on_segment(p, s, include_endpoints=False)]
    assert pts == [(2, 3, 1)]


@given(segment, segment)
def test_symmetry_and_endpoint_order(s1, s2):
    base = segments_intersect(s1, s2)
    r1, r2 = (s1[1], s1[0]), (s2[1], s2[0])
    for a, b in [(s2, s1), (r1, s2), (s1, r2), (r2, r1)]:
        other = segments_intersect(a, b)
        assert other.kind == base.kind
        assert other.point == base.point


@given(segment, segment, point)
def test_translation_invariance(s1, s2, t):
    move = lambda s: tuple(tuple(p[i] + t[i] for i in range(3)) for p in s)
    a = segments_intersect(s1, s2)
    b = segments_intersect(move(s1), move(s2))
    assert a.kind == b.kind
    if a.point is not None:
        assert b.point == tuple(a.point[i] + t[i] for i in range(3))


@given(segment, segment)
def test_matches_elimination_oracle(s1, s2):
    kind, pt = brute_intersection(s1, s2)
    r = segments_intersect(s1, s2)
    assert r.kind.name.lower() == kind
    assert r.point == pt


def test_matches_oracle_on_biased_sample():
    rng = random.Random(11)
    for _ in range(5000):
        s1, s2 = random_segment_pair(rng)
        kind, pt = brute_intersection(s1, s2)
        r = segments_intersect(s1, s2)
        assert (r.kind.name.lower(), r.point) == (kind, pt), (s1, s2)


@settings(max_examples=200)
@given(st.tuples(st.integers(-12, 12), st.integers(-12, 12), st.integers(-12, 12)),
       st.tuples(st.integers(-12, 12), st.integers(-12, 12), st.integers(-12, 12)))
def test_lattice_count_matches_bounding_box_scan(p, q):
    if p == q:
        return
    ranges = [range(min(p[i], q[i]), max(p[i], q[i]) + 1) for i in range(3)]
    count = sum(point_on_segment(g, (p, q), include_endpoints=False)
                for g in itertools.product(*ranges))
    assert interior_lattice_count((p, q)) == count


@given(point, st.integers(-6, 6), st.integers(-6, 6), st.sampled_from([0, 1, 2]))
def test_unit_step_is_visible(p, a, b, axis):
    d = [a, b]
    d.insert(axis, 1)
    q = tuple(p[i] + d[i] for i in range(3))
    assert interior_lattice_count((p, q)) == 0
