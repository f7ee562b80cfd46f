"""Pure-Python batch kernels; same contract as the compiled ``_kernels``.

Segments are passed as rows ``(px, py, pz, qx, qy, qz)``.  Kind codes:
0 disjoint, 1 single point, 2 overlap.
"""
from __future__ import annotations

BACKEND = "python"


def _classify(p1x, p1y, p1z, q1x, q1y, q1z, p2x, p2y, p2z, q2x, q2y, q2z):
    # returns (kind, t_num, t_den); t locates the single point along segment 1
    d1x, d1y, d1z = q1x - p1x, q1y - p1y, q1z - p1z
    d2x, d2y, d2z = q2x - p2x, q2y - p2y, q2z - p2z
    rx, ry, rz = p2x - p1x, p2y - p1y, p2z - p1z
    nx = d1y * d2z - d1z * d2y
    ny = d1z * d2x - d1x * d2z
    nz = d1x * d2y - d1y * d2x
    if nx or ny or nz:
        if rx * nx + ry * ny + rz * nz:
            return 0, 0, 1
        nn = nx * nx + ny * ny + nz * nz
        t = ((ry * d2z - rz * d2y) * nx + (rz * d2x - rx * d2z) * ny
             + (rx * d2y - ry * d2x) * nz)
        if t < 0 or t > nn:
            return 0, 0, 1
        u = ((ry * d1z - rz * d1y) * nx + (rz * d1x - rx * d1z) * ny
             + (rx * d1y - ry * d1x) * nz)
        if u < 0 or u > nn:
            return 0, 0, 1
        return 1, t, nn
    if ry * d1z - rz * d1y or rz * d1x - rx * d1z or rx * d1y - ry * d1x:
        return 0, 0, 1
    dd = d1x * d1x + d1y * d1y + d1z * d1z
    ta = rx * d1x + ry * d1y + rz * d1z
    tb = (q2x - p1x) * d1x + (q2y - p1y) * d1y + (q2z - p1z) * d1z
    if ta > tb:
        ta, tb = tb, ta
    lo = ta if ta > 0 else 0
    hi = tb if tb < dd else dd
    if lo > hi:
        return 0, 0, 1
    if lo == hi:
        return 1, lo, dd
    return 2, 0, 1


def _rows(a):
    if hasattr(a, "tolist"):
        return a.tolist()
    return [tuple(int(c) for c in r) for r in a]


def segment_kind(a, b) -> int:
    return _classify(*a, *b)[0]


def _boxes_apart(a, b) -> bool:
    for i in range(3):
        if max(a[i], a[i + 3]) < min(b[i], b[i + 3]) or max(b[i], b[i + 3]) < min(a[i], a[i + 3]):
            return True
    return False


def first_blocking(seg, segs, excusable, count: int) -> int:
    """Index of the first of ``segs[:count]`` touching ``seg``, or -1.

    A touch consisting solely of ``seg``'s start point is ignored for rows
    flagged in ``excusable``.
    """
    seg = tuple(int(c) for c in seg)
    rows = _rows(segs[:count])
    flags = excusable[:count]
    for j, row in enumerate(rows):
        if _boxes_apart(seg, row):
            continue
        kind, t, _ = _classify(*seg, *row)
        if kind == 0:
            continue
        if kind == 1 and t == 0 and flags[j]:
            continue
        return j
    return -1


def pair_hits(segs, row_lo: int = 0, row_hi: int | None = None):
    """All ``(i, j, kind)`` with ``row_lo <= i < row_hi``, ``i < j`` and touching segments."""
    rows = _rows(segs)
    k = len(rows)
    if row_hi is None:
        row_hi = k
    lo = [(min(r[0], r[3]), min(r[1], r[4]), min(r[2], r[5])) for r in rows]
    hi = [(max(r[0], r[3]), max(r[1], r[4]), max(r[2], r[5])) for r in rows]
    out = []
    for i in range(row_lo, row_hi):
        a = rows[i]
        alo, ahi = lo[i], hi[i]
        for j in range(i + 1, k):
            blo, bhi = lo[j], hi[j]
            if (ahi[0] < blo[0] or bhi[0] < alo[0] or ahi[1] < blo[1] or bhi[1] < alo[1]
                    or ahi[2] < blo[2] or bhi[2] < alo[2]):
                continue
            kind = _classify(*a, *rows[j])[0]
            if kind:
                out.append((i, j, kind))
    return out


def vertex_hits(points, segs):
    """All ``(point index, segment index)`` with the point strictly inside the segment."""
    out = []
    pts = _rows(points)
    for j, r in enumerate(_rows(segs)):
        px, py, pz, qx, qy, qz = r
        dx, dy, dz = qx - px, qy - py, qz - pz
        dd = dx * dx + dy * dy + dz * dz
        xlo, xhi = min(px, qx), max(px, qx)
        ylo, yhi = min(py, qy), max(py, qy)
        zlo, zhi = min(pz, qz), max(pz, qz)
        for i, (x, y, z) in enumerate(pts):
            if x < xlo or x > xhi or y < ylo or y > yhi or z < zlo or z > zhi:
                continue
            wx, wy, wz = x - px, y - py, z - pz
            if dy * wz - dz * wy or dz * wx - dx * wz or dx * wy - dy * wx:
                continue
            t = wx * dx + wy * dy + wz * dz
            if 0 < t < dd:
                out.append((i, j))
    out.sort()
    return out
