import random

import pytest

from gridbend import (
    Drawing,
    DrawOptions,
    Graph,
    Placement,
    PolylineEdge,
    ViolationKind,
    draw_graph,
    verify,
)
from gridbend.analysis import bounding_box, complete_on_line
from oracles import naive_drawing_ok

V = ViolationKind


def drawing(positions, edges, bends):
    g = Graph(len(positions), tuple(edges))
    return Drawing(g, Placement(tuple(positions)), tuple(PolylineEdge(e, b) for e, b in zip(g.edges, bends)))


def kinds(report):
    return sorted(v.kind for v in report.violations)


def test_valid_k2(k2):
    r = verify(draw_graph(*k2))
    assert r.passed and r.counts == {}
    assert r.to_json() == {"pass": True, "counts": {}, "violations": []}


def test_bend_on_vertex():
    d = drawing([(0, 0, 0), (4, 1, 0), (2, 5, 1)], [(0, 1)], [(2, 5, 1)])
    r = verify(d)
    assert V.BEND_ON_VERTEX in kinds(r)
    bov = [v for v in r.violations if v.kind == V.BEND_ON_VERTEX][0]
    assert bov.edges == (0,) and bov.vertices == (2,)


def test_segment_through_vertex():
    d = drawing([(0, 0, 0), (4, 1, 0), (1, 1, 1)], [(0, 1)], [(2, 2, 2)])
    r = verify(d)
    assert kinds(r) == [V.SEGMENT_THROUGH_VERTEX]
    assert r.violations[0].vertices == (2,)
    assert r.violations[0].point == (1, 1, 1)


def test_shared_bend_is_a_crossing():
    d = drawing([(0, 0, 0), (4, 0, 0), (0, 4, 0), (4, 4, 0)], [(0, 1), (2, 3)],
                [(2, 2, 3), (2, 2, 3)])
    r = verify(d)
    assert set(kinds(r)) == {V.EDGE_PAIR_INTERSECTION}
    assert all(v.edges == (0, 1) and v.point == (2, 2, 3) for v in r.violations)
    assert r.counts == {"EdgePairIntersection": 4}
    assert r.involving_edge(1) and not r.involving_edge(2)


def test_self_overlap():
    # w lies between v and the bend, so the two halves overlap
    d = drawing([(0, 0, 0), (2, 0, 1)], [(0, 1)], [(4, 0, 2)])
    r = verify(d)
    assert V.SELF_OVERLAP in kinds(r)
    assert [v.contact for v in r.violations if v.kind == V.SELF_OVERLAP] == ["overlap"]


def test_degenerate_and_duplicate():
    d = drawing([(0, 0, 0), (3, 1, 0), (0, 0, 0)], [(0, 1)], [(3, 1, 0)])
    r = verify(d)
    assert V.DEGENERATE_SEGMENT in kinds(r)
    assert V.DUPLICATE_POSITION in kinds(r)
    dup = [v for v in r.violations if v.kind == V.DUPLICATE_POSITION][0]
    assert dup.vertices == (0, 2)


def test_contact_at_shared_vertex_is_allowed():
    d = drawing([(0, 0, 0), (4, 1, 0), (1, 4, 0)], [(0, 1), (0, 2)], [(2, -3, 1), (-2, 2, 1)])
    assert verify(d).passed


def test_overlap_from_shared_vertex_is_not_allowed():
    # both edges leave vertex 0 along the same ray
    d = drawing([(0, 0, 0), (5, 0, 7), (7, 3, 3)], [(0, 1), (0, 2)], [(1, 1, 1), (2, 2, 2)])
    r = verify(d)
    pair = [v for v in r.violations if v.kind == V.EDGE_PAIR_INTERSECTION]
    assert pair and pair[0].contact == "overlap" and pair[0].vertices == (0,)


def test_fractional_crossing_point_is_reported():
    d = drawing([(0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 1, 0)], [(0, 1), (2, 3)],
                [(5, 5, 3), (-3, 9, 1)])
    r = verify(d)
    assert r.passed == naive_drawing_ok(d.placement.positions, d.graph.edges, d.bends)


def _instance(rng, n, side):
    cells = rng.sample(range(side ** 3), n)
    pos = tuple((c % side + 1, c // side % side + 1, c // side ** 2 + 1) for c in cells)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, tuple(sorted(rng.sample(pairs, rng.randint(1, len(pairs)))))), Placement(pos)


def test_mutations_are_caught():
    rng = random.Random(17)
    caught = 0
    for trial in range(150):
        g, pl = _instance(rng, rng.randint(3, 7), 4)
        d = draw_graph(g, pl, DrawOptions(z_start=1))
        assert verify(d).passed
        box = bounding_box(d)
        i = rng.randrange(g.m)
        bend = tuple(rng.randint(box.lo[k], box.hi[k]) for k in range(3))
        if bend in (pl[g.edges[i][0]], pl[g.edges[i][1]]):
            continue
        routed = list(d.routed)
        routed[i] = PolylineEdge(routed[i].edge, bend)
        mutated = Drawing(g, pl, tuple(routed))
        report = verify(mutated)
        assert report.passed == naive_drawing_ok(pl.positions, g.edges, mutated.bends), trial
        if not report.passed:
            caught += 1
            assert report.involving_edge(i)
            assert all(i in v.edges for v in report.violations)
    assert caught > 20


@pytest.mark.parametrize("threads", [2, 4, 7])
def test_thread_partitioning_is_deterministic(threads):
    g, pl = complete_on_line(12)
    d = draw_graph(g, pl)
    routed = list(d.routed)
    routed[3] = PolylineEdge(routed[3].edge, routed[10].bend)
    bad = Drawing(g, pl, tuple(routed))
    assert verify(d, threads=threads) == verify(d)
    assert verify(bad, threads=threads) == verify(bad)
    assert not verify(bad).passed


def test_verify_is_pure(k2):
    d = draw_graph(*k2)
    assert verify(d) == verify(d)
