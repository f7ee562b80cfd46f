"""Post-hoc validity check for one-bend drawings.

Brute force over every segment pair and every vertex/segment pair.  Nothing
here is shared with the drawer besides the geometry predicates, so it also
serves as a standalone gate for drawings from elsewhere.
"""
from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import _backend
from .geometry import Kind, check_bounds, segments_intersect
from .model import Drawing


class ViolationKind(str, enum.Enum):
    BEND_ON_VERTEX = "BendOnVertex"
    SEGMENT_THROUGH_VERTEX = "SegmentThroughVertex"
    EDGE_PAIR_INTERSECTION = "EdgePairIntersection"
    SELF_OVERLAP = "SelfOverlap"
    DEGENERATE_SEGMENT = "DegenerateSegment"
    DUPLICATE_POSITION = "DuplicatePosition"


@dataclass(frozen=True)
class Violation:
    """One defect; ``edges`` and ``vertices`` are indices into the drawing."""

    kind: ViolationKind
    edges: Tuple[int, ...] = ()
    vertices: Tuple[int, ...] = ()
    point: Optional[Tuple[Fraction, ...]] = None
    contact: Optional[str] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "edges": list(self.edges), "vertices": list(self.vertices)}
        if self.point is not None:
            out["point"] = [int(c) if c.denominator == 1 else str(c) for c in self.point]
        if self.contact is not None:
            out["contact"] = self.contact
        return out


@dataclass(frozen=True)
class VerificationReport:
    violations: Tuple[Violation, ...] = ()
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def involving_edge(self, i: int) -> List[Violation]:
        return [v for v in self.violations if i in v.edges]

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "counts": dict(sorted(self.counts.items())),
            "violations": [v.to_json() for v in self.violations],
        }


def _pair_hits(rows: np.ndarray, threads: int) -> List[Tuple[int, int, int]]:
    k = len(rows)
    kernels = _backend.kernels
    if threads <= 1 or k < 64:
        return kernels.pair_hits(rows)
    # row i costs k - i tests; cut into chunks of roughly equal work
    cuts = [0]
    total = k * (k - 1) // 2
    per = total / (4 * threads)
    acc = 0
    for i in range(k):
        acc += k - 1 - i
        if acc >= per:
            cuts.append(i + 1)
            acc = 0
    if cuts[-1] != k:
        cuts.append(k)
    with ThreadPoolExecutor(threads) as pool:
        parts = pool.map(lambda c: kernels.pair_hits(rows, c[0], c[1]), zip(cuts, cuts[1:]))
        return [h for part in parts for h in part]


def verify(d: Drawing, threads: int = 1) -> VerificationReport:
    pos = d.placement.positions
    edges = d.graph.edges
    check_bounds(*pos, *d.bends)
    found: List[Violation] = []

    where: Dict[tuple, int] = {}
    for v, p in enumerate(pos):
        if p in where:
            found.append(Violation(ViolationKind.DUPLICATE_POSITION, vertices=(where[p], v),
                                   point=tuple(Fraction(c) for c in p)))
        else:
            where[p] = v

    # segment rows in drawing order; owner[k] = (edge index, side) for side 0 (u-bend) / 1 (bend-w)
    rows: List[tuple] = []
    owner: List[Tuple[int, int]] = []
    for i, r in enumerate(d.routed):
        u, w = r.edge
        b = r.bend
        hit = where.get(b)
        if hit is not None and hit not in (u, w):
            found.append(Violation(ViolationKind.BEND_ON_VERTEX, edges=(i,), vertices=(hit,),
                                   point=tuple(Fraction(c) for c in b)))
        for side, (a, c) in enumerate(((pos[u], b), (b, pos[w]))):
            if a == c:
                found.append(Violation(ViolationKind.DEGENERATE_SEGMENT, edges=(i,),
                                       vertices=((u, w)[side],)))
                continue
            rows.append((*a, *c))
            owner.append((i, side))

    seg_rows = np.array(rows, dtype=np.int64).reshape(-1, 6)
    kernels = _backend.kernels
    for v, k in kernels.vertex_hits(np.array(pos, dtype=np.int64).reshape(-1, 3), seg_rows):
        found.append(Violation(ViolationKind.SEGMENT_THROUGH_VERTEX, edges=(owner[k][0],),
                               vertices=(v,), point=tuple(Fraction(c) for c in pos[v])))

    for a, b, _ in sorted(_pair_hits(seg_rows, threads)):
        ea, eb = owner[a][0], owner[b][0]
        s1 = (rows[a][:3], rows[a][3:])
        s2 = (rows[b][:3], rows[b][3:])
        meet = segments_intersect(s1, s2)
        if ea == eb:
            bend = d.routed[ea].bend
            if meet.kind == Kind.POINT and meet.point == tuple(bend):
                continue
            found.append(Violation(ViolationKind.SELF_OVERLAP, edges=(ea,), vertices=edges[ea],
                                   point=meet.point, contact=meet.kind.name.lower()))
            continue
        common = set(edges[ea]) & set(edges[eb])
        if meet.kind == Kind.POINT and any(meet.point == tuple(pos[c]) for c in common):
            continue
        found.append(Violation(ViolationKind.EDGE_PAIR_INTERSECTION, edges=(ea, eb),
                               vertices=tuple(sorted(common)), point=meet.point,
                               contact=meet.kind.name.lower()))

    counts = Counter(v.kind.value for v in found)
    return VerificationReport(tuple(found), dict(counts))
