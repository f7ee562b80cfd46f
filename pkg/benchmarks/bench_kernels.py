"""Time draw and verify on the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py --n 40 --m 300 --repeat 3
"""
import argparse
import random
import time

from gridbend import DrawOptions, Graph, Placement, draw_graph, verify
from gridbend import _backend


def instance(n, m, side, seed):
    rng = random.Random(seed)
    cells = rng.sample(range(side ** 3), n)
    pos = tuple((c % side + 1, c // side % side + 1, c // side ** 2 + 1) for c in cells)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, tuple(sorted(rng.sample(pairs, m)))), Placement(pos)


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=40)
    ap.add_argument("--m", type=int, default=300)
    ap.add_argument("--side", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    g, pl = instance(args.n, args.m, args.side, args.seed)
    opts = DrawOptions(z_start=1)
    rows = {}
    drawings = {}
    for name in _backend.available():
        previous = _backend.use(name)
        try:
            t_draw, d = best_of(args.repeat, lambda: draw_graph(g, pl, opts))
            t_verify, report = best_of(args.repeat, lambda: verify(d))
        finally:
            _backend.use(previous)
        assert report.passed
        rows[name] = (t_draw, t_verify)
        drawings[name] = d
    if len(drawings) > 1:
        assert len({d.bends for d in drawings.values()}) == 1, "backends disagree"

    print(f"n={args.n} m={args.m} side={args.side} best of {args.repeat}")
    print(f"{'backend':<8} {'draw s':>9} {'verify s':>9}")
    for name, (td, tv) in rows.items():
        print(f"{name:<8} {td:9.4f} {tv:9.4f}")
    if "cython" in rows:
        (pd, pv), (cd, cv) = rows["python"], rows["cython"]
        print(f"speedup  {pd / cd:8.1f}x {pv / cv:8.1f}x")


if __name__ == "__main__":
    main()
