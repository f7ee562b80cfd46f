"""``gridbend`` command line.

Exit codes: 0 success or pass, 1 verification failure, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
import time
from pathlib import Path

from . import _backend
from .analysis import MAX_BRUTE_N, analyze
from .drawer import DrawOptions, draw_graph
from .model import (
    Drawing,
    Graph,
    InstanceError,
    Placement,
    dumps_json,
    load_drawing,
    load_instance,
    save_drawing,
    save_graph,
    save_placement,
)
from .verifier import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def make_graph(family: str, n: int, m: int | None, rng: random.Random) -> Graph:
    if n < 0:
        raise UsageError("--n must be non-negative")
    if family != "gnm" and m is not None:
        raise UsageError("--m only applies to --family gnm")
    if family == "complete":
        return Graph(n, tuple(itertools.combinations(range(n), 2)))
    if family == "path":
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    if m is None:
        raise UsageError("--family gnm needs --m")
    pairs = list(itertools.combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise UsageError(f"m={m} is infeasible for n={n} (at most {len(pairs)} edges)")
    return Graph(n, tuple(sorted(rng.sample(pairs, m))))


def make_placement(text: str, n: int, rng: random.Random) -> Placement:
    if text == "line":
        return Placement(tuple((i + 1, 0, 0) for i in range(n)))
    if not text.startswith("box:"):
        raise UsageError(f"unknown placement {text!r}; use line or box:X,Y,Z")
    try:
        X, Y, Z = (int(t) for t in text[4:].split(","))
    except ValueError:
        raise UsageError(f"bad box {text!r}; expected box:X,Y,Z") from None
    if min(X, Y, Z) < 1:
        raise UsageError("box sides must be positive")
    if X * Y * Z < n:
        raise UsageError(f"box {X}x{Y}x{Z} has fewer than {n} grid points")
    cells = rng.sample(range(X * Y * Z), n)
    return Placement(tuple((c % X + 1, c // X % Y + 1, c // (X * Y) + 1) for c in cells))


def parse_order(text: str) -> DrawOptions:
    if text == "input":
        return DrawOptions()
    if text.startswith("random:"):
        try:
            return DrawOptions(order="random", seed=int(text[7:]))
        except ValueError:
            pass
    raise UsageError(f"bad --order {text!r}; use input or random:SEED")


def _emit(obj: dict, path: str | None) -> None:
    text = dumps_json(obj)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    g = make_graph(args.family, args.n, args.m, rng)
    pl = make_placement(args.placement, args.n, rng)
    save_graph(g, args.out_graph)
    save_placement(pl, args.out_placement)
    return EXIT_OK


def cmd_draw(args) -> int:
    g, pl = load_instance(args.graph, args.placement)
    opts = parse_order(args.order)
    opts = DrawOptions(opts.order, opts.seed, args.z_start, args.bound_check)
    t0 = time.perf_counter()
    d = draw_graph(g, pl, opts)
    elapsed = time.perf_counter() - t0
    save_drawing(d, args.out)
    outside = [r for r in d.stats if r.within_bound is False]
    if args.stats:
        _emit({
            "backend": _backend.kernels.BACKEND,
            "wall_time_s": round(elapsed, 6),
            "bound_violations": len(outside) if opts.bound_check else None,
            "edges": [
                {"edge": list(r.edge), "z": r.z, "rejected": r.rejected,
                 "fallback": r.fallback, "within_bound": r.within_bound}
                for r in d.stats
            ],
        }, args.stats)
    else:
        most = max((r.rejected for r in d.stats), default=0)
        print(f"drew {g.m} edges in {elapsed:.3f}s; max rejections {most}", file=sys.stderr)
    if outside:
        print(f"warning: {len(outside)} bends outside the expected box", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    d = load_drawing(args.drawing)
    report = verify(d, threads=args.threads)
    if args.report:
        _emit(report.to_json(), args.report)
    if report.passed:
        print(f"pass: {d.graph.m} edges, no violations")
        return EXIT_OK
    print(f"FAIL: {len(report.violations)} violations")
    for v in report.violations:
        print("  " + json.dumps(v.to_json(), separators=(",", ":")))
    return EXIT_FAIL


def cmd_analyze(args) -> int:
    d = load_drawing(args.drawing)
    if d.graph.n == 0:
        raise UsageError("cannot analyze a drawing without vertices")
    if args.brute_cutwidth and d.graph.n > MAX_BRUTE_N:
        raise UsageError(f"--brute-cutwidth supports n <= {MAX_BRUTE_N}")
    report = analyze(d, brute_cutwidth=args.brute_cutwidth, threads=args.threads)
    _emit(report.to_json(), args.report)
    return EXIT_OK if report.verified else EXIT_FAIL


def export_obj(d: Drawing) -> str:
    lines = [
        "# gridbend one-bend drawing",
        f"# vertices {d.graph.n} edges {d.graph.m}",
    ]
    lines += [f"v {x} {y} {z}" for x, y, z in d.placement.positions]
    lines += [f"v {x} {y} {z}" for x, y, z in d.bends]
    for i, (u, w) in enumerate(d.graph.edges):
        b = d.graph.n + i + 1
        lines.append(f"l {u + 1} {b}")
        lines.append(f"l {b} {w + 1}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    d = load_drawing(args.drawing)
    Path(args.out).write_text(export_obj(d), encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridbend", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and a placement")
    p.add_argument("--family", choices=["complete", "gnm", "path"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--placement", default="line", help="line or box:X,Y,Z")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-placement", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("draw", help="route every edge with one bend")
    p.add_argument("--graph", required=True)
    p.add_argument("--placement", required=True)
    p.add_argument("--order", default="input", help="input or random:SEED")
    p.add_argument("--z-start", type=int)
    p.add_argument("--bound-check", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--stats")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("verify", help="check a drawing for violations")
    p.add_argument("--drawing", required=True)
    p.add_argument("--report")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="volume and bound report")
    p.add_argument("--drawing", required=True)
    p.add_argument("--report")
    p.add_argument("--brute-cutwidth", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", help="write the drawing for an external viewer")
    p.add_argument("--drawing", required=True)
    p.add_argument("--format", choices=["obj"], default="obj")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
