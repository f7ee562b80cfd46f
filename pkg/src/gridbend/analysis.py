"""Bounding-box volume, the volume upper bound, and the cutwidth lower bound.

Volume counts grid points: each axis contributes ``max - min + 1``.  This is
not the product of geometric side lengths.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .drawer import DrawOptions, draw_graph
from .geometry import collinear
from .model import Drawing, Graph, Placement
from .verifier import verify

MAX_BRUTE_N = 9


@dataclass(frozen=True)
class BoundingBox:
    lo: Tuple[int, int, int]
    hi: Tuple[int, int, int]

    @property
    def dims(self) -> Tuple[int, int, int]:
        return tuple(self.hi[i] - self.lo[i] + 1 for i in range(3))  # type: ignore[return-value]

    @property
    def volume(self) -> int:
        x, y, z = self.dims
        return x * y * z


def box_of(points) -> BoundingBox:
    points = list(points)
    if not points:
        raise ValueError("bounding box of an empty drawing")
    lo = tuple(min(p[i] for p in points) for i in range(3))
    hi = tuple(max(p[i] for p in points) for i in range(3))
    return BoundingBox(lo, hi)


def bounding_box(d: Drawing) -> BoundingBox:
    return box_of(list(d.placement.positions) + list(d.bends))


def upper_bound_volume(n: int, m: int, X: int, Y: int, Z: int) -> int:
    return (X + 2) * (Y + 2) * max(Z, n + 4 * m)


def cutwidth_bruteforce(g: Graph) -> int:
    """Exact cutwidth by trying every vertex ordering (up to reversal)."""
    n = g.n
    if n > MAX_BRUTE_N:
        raise ValueError(f"brute-force cutwidth is limited to n <= {MAX_BRUTE_N}, got {n}")
    if n < 2 or not g.edges:
        return 0
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    deg = [bin(a).count("1") for a in adj]
    best = g.m
    for order in itertools.permutations(range(n)):
        if order[0] > order[-1]:
            continue
        placed = 0
        cut = 0
        worst = 0
        for v in order[:-1]:
            # edges from v back into the prefix stop crossing, the rest start
            cut += deg[v] - 2 * bin(adj[v] & placed).count("1")
            placed |= 1 << v
            if cut > worst:
                worst = cut
                if worst >= best:
                    break
        if worst < best:
            best = worst
    return best


def cutwidth_complete(n: int) -> int:
    return n * n // 4


def line_lower_bound(n: int, k: int) -> Fraction:
    return Fraction(k * n, 2)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def all_collinear(points) -> bool:
    points = list(points)
    if len(points) < 3:
        return True
    p = points[0]
    q = next((x for x in points[1:] if x != p), None)
    if q is None:
        return True
    return all(collinear(p, q, r) for r in points)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    vertex_dims: Tuple[int, int, int]
    drawing_dims: Tuple[int, int, int]
    achieved_volume: int
    upper_bound_volume: int
    cutwidth: Optional[int]
    cutwidth_lower_bound: Optional[Fraction]
    collinear_input: bool
    verified: bool
    cutwidth_bruteforce: Optional[int] = None

    @property
    def ratio(self) -> Fraction:
        """Upper bound over achieved volume."""
        return Fraction(self.upper_bound_volume, self.achieved_volume)

    @property
    def cube_bound(self) -> Fraction:
        return Fraction(self.n ** 3, 8)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "vertex_dims": list(self.vertex_dims),
            "drawing_dims": list(self.drawing_dims),
            "achieved_volume": self.achieved_volume,
            "upper_bound_volume": self.upper_bound_volume,
            "cutwidth": self.cutwidth,
            "cutwidth_lower_bound": _frac(self.cutwidth_lower_bound),
            "n_cubed_over_8": _frac(self.cube_bound),
            "collinear_input": self.collinear_input,
            "verified": self.verified,
            "upper_over_achieved": _frac(self.ratio),
        }
        if self.cutwidth_bruteforce is not None:
            out["cutwidth_bruteforce"] = self.cutwidth_bruteforce
            out["cutwidth_agrees"] = self.cutwidth_bruteforce == self.cutwidth
        return out


def _frac(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else str(x)


def analyze(d: Drawing, brute_cutwidth: bool = False, threads: int = 1) -> BoundsReport:
    """Volume report for any drawing.

    The cutwidth comes from the closed form for complete graphs, otherwise
    from brute force when the graph is small enough.  ``collinear_input``
    tells whether the lower bound actually applies.
    """
    g = d.graph
    vbox = box_of(d.placement.positions)
    X, Y, Z = vbox.dims
    if is_complete(g):
        k = cutwidth_complete(g.n)
    elif g.n <= MAX_BRUTE_N:
        k = cutwidth_bruteforce(g)
    else:
        k = None
    brute = cutwidth_bruteforce(g) if brute_cutwidth else None
    box = bounding_box(d)
    return BoundsReport(
        n=g.n,
        m=g.m,
        vertex_dims=vbox.dims,
        drawing_dims=box.dims,
        achieved_volume=box.volume,
        upper_bound_volume=upper_bound_volume(g.n, g.m, X, Y, Z),
        cutwidth=k,
        cutwidth_lower_bound=None if k is None else line_lower_bound(g.n, k),
        collinear_input=all_collinear(d.placement.positions),
        verified=verify(d, threads=threads).passed,
        cutwidth_bruteforce=brute,
    )


def complete_on_line(n: int) -> Tuple[Graph, Placement]:
    g = Graph(n, tuple(itertools.combinations(range(n), 2)))
    return g, Placement(tuple((i + 1, 0, 0) for i in range(n)))


def kn_line_experiment(n: int, opts: DrawOptions = DrawOptions()) -> BoundsReport:
    """Draw K_n on (1,0,0)..(n,0,0) and check lower <= achieved <= upper."""
    if n < 2:
        raise ValueError("need n >= 2")
    g, pl = complete_on_line(n)
    report = analyze(draw_graph(g, pl, opts))
    if not report.verified:
        raise AssertionError(f"K_{n} drawing failed verification")
    if not report.cutwidth_lower_bound <= report.achieved_volume <= report.upper_bound_volume:
        raise AssertionError(
            f"K_{n}: volume {report.achieved_volume} outside "
            f"[{report.cutwidth_lower_bound}, {report.upper_bound_volume}]"
        )
    return report
