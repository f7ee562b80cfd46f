"""Graph, placement and drawing types with their JSON file formats.

Graph file::

    {"n": 3, "edges": [[0, 1], [1, 2]]}

Placement file::

    {"positions": [[1, 1, 1], [2, 2, 2], [3, 1, 2]]}

Drawing file: the union of both plus ``"bends"``, where ``bends[i]`` is the
bend of ``edges[i]``.  Only integers are accepted anywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence, Tuple

from .geometry import COORD_LIMIT, GridPoint, Segment

Edge = Tuple[int, int]


class InstanceError(ValueError):
    """Base class for malformed input files or objects."""


class ParseError(InstanceError):
    pass


class ValidationError(InstanceError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``; edges stored as ``(min, max)``."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((min(u, v), max(u, v)) for u, v in self.edges)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def validate(self) -> None:
        if type(self.n) is not int or self.n < 0:
            raise ValidationError(f"vertex count must be a non-negative integer, got {self.n!r}")
        seen = set()
        for i, (u, v) in enumerate(self.edges):
            for x in (u, v):
                if type(x) is not int or not 0 <= x < self.n:
                    raise ValidationError(f"edge {i} {[u, v]}: vertex index {x!r} out of range")
            if u == v:
                raise ValidationError(f"edge {i} {[u, v]}: self-loop")
            if (u, v) in seen:
                raise ValidationError(f"edge {i} {[u, v]}: duplicate edge")
            seen.add((u, v))


@dataclass(frozen=True)
class Placement:
    positions: Tuple[GridPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(GridPoint(*p) for p in self.positions))

    def __len__(self):
        return len(self.positions)

    def __getitem__(self, v: int) -> GridPoint:
        return self.positions[v]

    def validate(self, n: int | None = None) -> None:
        if n is not None and len(self.positions) != n:
            raise ValidationError(f"expected {n} positions, got {len(self.positions)}")
        seen = {}
        for v, p in enumerate(self.positions):
            _check_point(p, f"position of vertex {v}")
            if p in seen:
                raise ValidationError(
                    f"duplicate position {list(p)} for vertices {seen[p]} and {v}"
                )
            seen[p] = v


@dataclass(frozen=True)
class BendRecord:
    """Per-edge drawing statistics.

    ``fallback`` is the index of the anchor line that took the bend (0 for the
    preferred line).  With ``k`` admissible lines, ``k`` means the bend came from
    the scan of the expected bend region and ``k + 1`` from the unbounded search.
    """

    edge: Edge
    z: int
    rejected: int
    within_bound: bool | None = None
    fallback: int = 0


@dataclass(frozen=True)
class PolylineEdge:
    edge: Edge
    bend: GridPoint

    def __post_init__(self):
        object.__setattr__(self, "edge", (min(self.edge), max(self.edge)))
        object.__setattr__(self, "bend", GridPoint(*self.bend))

    def segments(self, placement: Placement) -> Tuple[Segment, Segment]:
        u, v = self.edge
        return Segment(placement[u], self.bend), Segment(self.bend, placement[v])


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    placement: Placement
    routed: Tuple[PolylineEdge, ...]
    stats: Tuple[BendRecord, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "routed", tuple(self.routed))

    @property
    def bends(self) -> Tuple[GridPoint, ...]:
        return tuple(r.bend for r in self.routed)

    def segments(self):
        """Yield ``(edge index, segment)`` in file order, two per edge."""
        for i, r in enumerate(self.routed):
            for s in r.segments(self.placement):
                yield i, s

    def validate(self) -> None:
        self.graph.validate()
        self.placement.validate(self.graph.n)
        if len(self.routed) != self.graph.m:
            raise ValidationError(
                f"{len(self.routed)} routed edges for a graph with {self.graph.m} edges"
            )
        for i, (e, r) in enumerate(zip(self.graph.edges, self.routed)):
            if r.edge != e:
                raise ValidationError(f"routed edge {i} is {list(r.edge)}, expected {list(e)}")
            _check_point(r.bend, f"bend of edge {i}")
            for v in e:
                if r.bend == self.placement[v]:
                    raise ValidationError(
                        f"edge {i} {list(e)}: bend {list(r.bend)} coincides with its endpoint {v}"
                    )


def _check_point(p: Sequence[Any], what: str) -> None:
    if len(p) != 3 or any(type(c) is not int for c in p):
        raise ValidationError(f"{what}: expected three integers, got {list(p)!r}")
    for c in p:
        if abs(c) > COORD_LIMIT:
            raise ValidationError(f"{what}: coordinate {c} exceeds 2^20")


def _reject_float(text: str):
    raise ParseError(f"non-integer number {text!r}")


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return data


def _field(data: dict, key: str, path) -> Any:
    if key not in data:
        raise ParseError(f"{path}: missing field {key!r}")
    return data[key]


def _int_rows(value: Any, width: int, what: str) -> list:
    if not isinstance(value, list):
        raise ValidationError(f"{what}: expected a list")
    for i, row in enumerate(value):
        if (not isinstance(row, list) or len(row) != width
                or any(type(c) is not int for c in row)):
            raise ValidationError(f"{what}[{i}]: expected {width} integers, got {row!r}")
    return value


def _graph_from(data: dict, path) -> Graph:
    n = _field(data, "n", path)
    if type(n) is not int or n < 0:
        raise ValidationError(f"{path}: 'n' must be a non-negative integer")
    edges = _int_rows(_field(data, "edges", path), 2, "edges")
    g = Graph(n, tuple(tuple(e) for e in edges))
    g.validate()
    return g


def _placement_from(data: dict, path, n: int) -> Placement:
    rows = _int_rows(_field(data, "positions", path), 3, "positions")
    for v, p in enumerate(rows):
        _check_point(p, f"position of vertex {v}")
    pl = Placement(tuple(tuple(p) for p in rows))
    pl.validate(n)
    return pl


def load_instance(graph_file, placement_file) -> Tuple[Graph, Placement]:
    g = _graph_from(_read_json(graph_file), graph_file)
    pl = _placement_from(_read_json(placement_file), placement_file, g.n)
    return g, pl


def load_drawing(file) -> Drawing:
    data = _read_json(file)
    g = _graph_from(data, file)
    pl = _placement_from(data, file, g.n)
    bends = _int_rows(_field(data, "bends", file), 3, "bends")
    if len(bends) != g.m:
        raise ValidationError(f"{len(bends)} bends for {g.m} edges")
    for i, b in enumerate(bends):
        _check_point(b, f"bend of edge {i}")
    d = Drawing(g, pl, tuple(PolylineEdge(e, tuple(b)) for e, b in zip(g.edges, bends)))
    d.validate()
    return d


def _dumps(obj: dict) -> str:
    # one key per line, compact arrays: diff-friendly and byte-stable
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _write(path, obj: dict) -> None:
    Path(path).write_text(_dumps(obj), encoding="utf-8")


def _lists(points: Iterable[Sequence[int]]) -> list:
    return [list(p) for p in points]


def graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": _lists(g.edges)}


def placement_json(pl: Placement) -> dict:
    return {"positions": _lists(pl.positions)}


def drawing_json(d: Drawing) -> dict:
    return {**graph_json(d.graph), **placement_json(d.placement), "bends": _lists(d.bends)}


def save_graph(g: Graph, file) -> None:
    _write(file, graph_json(g))


def save_placement(pl: Placement, file) -> None:
    _write(file, placement_json(pl))


def save_drawing(d: Drawing, file) -> None:
    _write(file, drawing_json(d))


def dumps_json(obj: dict) -> str:
    return _dumps(obj)
