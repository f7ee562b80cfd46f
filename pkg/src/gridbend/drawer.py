"""Incremental one-bend router.

Each edge ``vw`` gets a vertical candidate line through ``(x, y)`` where ``x``
is next to v's x-coordinate (avoiding w's) and ``y`` is next to w's
y-coordinate (avoiding v's).  Every point on that line sees both endpoints
without passing another grid point.  The bend is the lowest point on the
line, scanning upward from ``z_start``, that

1. is not a vertex position,
2. lets ``v -> bend`` avoid every drawn segment (touching a segment of an
   edge incident to v exactly at v is allowed),
3. does the same for ``w -> bend``,
4. is not collinear with v and w.
"""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field, replace
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

import numpy as np

from . import _backend
from .geometry import GridPoint, collinear
from .model import BendRecord, Drawing, Graph, Placement, PolylineEdge

log = logging.getLogger(__name__)


class Anchor(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class DrawOptions:
    """``order`` is ``"input"`` or ``"random"`` (shuffled with ``seed``).

    ``z_start=None`` starts the scan at the lowest vertex z-coordinate.
    """

    order: str = "input"
    seed: int = 0
    z_start: Optional[int] = None
    bound_check: bool = False

    def __post_init__(self):
        if self.order not in ("input", "random"):
            raise ValueError(f"unknown edge order {self.order!r}")


def choose_anchor(v_pos, w_pos) -> Anchor:
    a, b, _ = v_pos
    p, q, _ = w_pos
    x = a - 1 if a - 1 != p else a + 1
    y = q - 1 if q - 1 != b else q + 1
    return Anchor(x, y)


@dataclass(frozen=True)
class BoundBox:
    lo: Tuple[int, int, int]
    hi: Tuple[int, int, int]

    def contains(self, pt) -> bool:
        return all(self.lo[i] <= pt[i] <= self.hi[i] for i in range(3))


@dataclass
class DrawState:
    """Mutable routing state shared across :func:`draw_edge` calls."""

    placement: Placement
    capacity: int = 16
    segs: np.ndarray = field(init=False)
    owners: np.ndarray = field(init=False)
    count: int = 0
    window: Optional[int] = None
    region: Optional[BoundBox] = None
    log: List[BendRecord] = field(default_factory=list)
    bends: Dict[Tuple[int, int], GridPoint] = field(default_factory=dict)
    _column: Dict[Tuple[int, int], Set[int]] = field(init=False)

    def __post_init__(self):
        self.segs = np.zeros((max(self.capacity, 2), 6), dtype=np.int64)
        self.owners = np.full((max(self.capacity, 2), 2), -1, dtype=np.int64)
        self._column = {}
        for x, y, z in self.placement.positions:
            self._column.setdefault((x, y), set()).add(z)

    def is_vertex(self, pt) -> bool:
        return pt[2] in self._column.get((pt[0], pt[1]), ())

    def incident_mask(self, v: int) -> np.ndarray:
        own = self.owners[: self.count]
        return (own[:, 0] == v) | (own[:, 1] == v)

    def add(self, v: int, w: int, bend: GridPoint) -> None:
        if self.count + 2 > len(self.segs):
            grow = len(self.segs)
            self.segs = np.concatenate([self.segs, np.zeros((grow, 6), dtype=np.int64)])
            self.owners = np.concatenate([self.owners, np.full((grow, 2), -1, dtype=np.int64)])
        pv, pw = self.placement[v], self.placement[w]
        self.segs[self.count] = (*pv, *bend)
        self.segs[self.count + 1] = (*pw, *bend)
        self.owners[self.count: self.count + 2] = (v, w)
        self.count += 2
        self.bends[(min(v, w), max(v, w))] = bend


def _blocked(state: DrawState, start, bend, mask) -> bool:
    seg = (*start, *bend)
    return _backend.kernels.first_blocking(seg, state.segs, mask, state.count) >= 0


def is_bend_feasible(state: DrawState, v: int, w: int, bend) -> bool:
    pv, pw = state.placement[v], state.placement[w]
    if state.is_vertex(bend):
        return False
    if collinear(pv, bend, pw):
        return False
    if _blocked(state, pv, bend, state.incident_mask(v)):
        return False
    return not _blocked(state, pw, bend, state.incident_mask(w))


def default_z_start(placement: Placement) -> int:
    return min((p.z for p in placement.positions), default=0)


def candidate_lines(v_pos, w_pos) -> List[Anchor]:
    """Admissible anchor lines, preferred one first.

    After the :func:`choose_anchor` line come the other ``x``/``y`` choices,
    then the same with v and w swapped (``x`` next to w, ``y`` next to v).
    Every one of them keeps both segments visible and non-vertical.
    """
    a, b, _ = v_pos
    p, q, _ = w_pos
    lines = [Anchor(x, y) for x in (a - 1, a + 1) if x != p for y in (q - 1, q + 1) if y != b]
    for x in (p - 1, p + 1):
        for y in (b - 1, b + 1):
            if x != a and y != q and Anchor(x, y) not in lines:
                lines.append(Anchor(x, y))
    return lines


def _feasible(state: DrawState, pv, pw, bend, mask_v, mask_w) -> bool:
    return not (state.is_vertex(bend) or collinear(pv, bend, pw)
                or _blocked(state, pv, bend, mask_v)
                or _blocked(state, pw, bend, mask_w))


def _visible(a, b) -> bool:
    return math.gcd(math.gcd(b[0] - a[0], b[1] - a[1]), b[2] - a[2]) == 1


def _shell(center, r: int):
    # upper half of the cube surface at Chebyshev radius r
    cx, cy, cz = center
    for dz in range(0, r + 1):
        for dx in range(-r, r + 1):
            for dy in range(-r, r + 1):
                if max(abs(dx), abs(dy), abs(dz)) == r:
                    yield GridPoint(cx + dx, cy + dy, cz + dz)


def _off_column(pv, pw, cand) -> bool:
    # a usable off-line bend keeps both segments non-vertical and visible
    return ((cand.x, cand.y) not in ((pv.x, pv.y), (pw.x, pw.y))
            and _visible(pv, cand) and _visible(pw, cand))


def _region_points(region: Optional[BoundBox], near, z0: int):
    if region is None:
        return
    xs = sorted(range(region.lo[0], region.hi[0] + 1), key=lambda x: (abs(x - near[0]), x))
    ys = sorted(range(region.lo[1], region.hi[1] + 1), key=lambda y: (abs(y - near[1]), y))
    cells = sorted(((x, y) for x in xs for y in ys),
                   key=lambda c: (abs(c[0] - near[0]) + abs(c[1] - near[1]), c))
    for z in range(max(z0, region.lo[2]), region.hi[2] + 1):
        for x, y in cells:
            yield GridPoint(x, y, z)


def draw_edge(state: DrawState, v: int, w: int, z_start: Optional[int] = None) -> GridPoint:
    """Route edge ``vw`` and commit its bend.

    The preferred anchor line is scanned upward from ``z_start`` over a window
    of ``state.window`` points (default ``n + 2*drawn_segments + 1``, enough
    whenever no drawn segment shares a vertical plane with an endpoint and the
    line).  A drawn segment in such a plane can shadow an unbounded stretch of
    the line, so on exhaustion the other admissible lines are tried with the
    same window.  After that come the points of ``state.region`` (if set) from
    ``z_start`` up, and finally grid points with ``z >= z_start`` in growing
    cubes around the preferred start point, which always succeeds.
    """
    pv, pw = state.placement[v], state.placement[w]
    z0 = default_z_start(state.placement) if z_start is None else z_start
    mask_v = state.incident_mask(v)
    mask_w = state.incident_mask(w)
    window = state.window or len(state.placement) + 2 * state.count + 1
    rejected = 0
    bend = None
    lines = candidate_lines(pv, pw)
    for stage, (x, y) in enumerate(lines):
        for z in range(z0, z0 + window):
            cand = GridPoint(x, y, z)
            if _feasible(state, pv, pw, cand, mask_v, mask_w):
                bend = cand
                break
            rejected += 1
        if bend is not None:
            break
    else:
        stage = len(lines)
        x, y = lines[0]
        for cand in _region_points(state.region, (x, y), z0):
            if _off_column(pv, pw, cand) and _feasible(state, pv, pw, cand, mask_v, mask_w):
                bend = cand
                break
            rejected += 1
        r = 0
        while bend is None:
            r += 1
            stage = len(lines) + 1
            for cand in _shell((x, y, z0), r):
                if _off_column(pv, pw, cand) and _feasible(state, pv, pw, cand, mask_v, mask_w):
                    bend = cand
                    break
                rejected += 1
        log.warning("edge %s: every anchor line blocked in its window; bend %s found by search",
                    (v, w), tuple(bend))
    state.add(v, w, bend)
    state.log.append(BendRecord((min(v, w), max(v, w)), bend.z, rejected, fallback=stage))
    return bend


def bend_bound_box(graph: Graph, placement: Placement, z_start: int) -> BoundBox:
    """Region the bends are expected to occupy.

    For vertices in ``[1,X]x[1,Y]x[1,Z]`` and ``z_start=1`` this is
    ``[0,X+1]x[0,Y+1]x[1,max(Z, n+4m)]``.
    """
    pos = placement.positions
    lo = [min(p[i] for p in pos) for i in range(3)]
    hi = [max(p[i] for p in pos) for i in range(3)]
    z_hi = max(hi[2], z_start + graph.n + 4 * graph.m - 1)
    return BoundBox((lo[0] - 1, lo[1] - 1, min(lo[2], z_start)), (hi[0] + 1, hi[1] + 1, z_hi))


def edge_order(graph: Graph, opts: DrawOptions) -> List[int]:
    order = list(range(graph.m))
    if opts.order == "random":
        random.Random(opts.seed).shuffle(order)
    return order


def draw_graph(graph: Graph, placement: Placement, opts: DrawOptions = DrawOptions()) -> Drawing:
    graph.validate()
    placement.validate(graph.n)
    z_start = default_z_start(placement) if opts.z_start is None else opts.z_start
    region = bend_bound_box(graph, placement, z_start) if graph.n else None
    state = DrawState(placement, capacity=2 * graph.m, window=graph.n + 4 * graph.m,
                      region=region)
    box = region if opts.bound_check else None
    for i in edge_order(graph, opts):
        v, w = graph.edges[i]
        bend = draw_edge(state, v, w, z_start)
        if box is not None:
            inside = box.contains(bend)
            if not inside:
                log.warning("edge %s: bend %s outside expected box %s..%s",
                            graph.edges[i], tuple(bend), box.lo, box.hi)
            state.log[-1] = replace(state.log[-1], within_bound=inside)
    routed = tuple(PolylineEdge(e, state.bends[e]) for e in graph.edges)
    assert len(set(state.bends.values())) == len(routed), "coinciding bends"
    return Drawing(graph, placement, routed, stats=tuple(state.log))
