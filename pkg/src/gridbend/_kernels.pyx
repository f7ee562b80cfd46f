# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels; same contract as ``gridbend._kernels_py``.

Differences and cross products fit in int64 for |coord| <= 2^20; products of
two cross products need ``__int128``.
"""
from libc.stdint cimport int64_t, uint8_t
from libcpp.vector cimport vector

import numpy as np

cdef extern from *:
    ctypedef long long i128 "__int128"

BACKEND = "cython"


cdef inline int _classify(const int64_t* a, const int64_t* b, int* at_start) noexcept nogil:
    cdef int64_t d1x = a[3] - a[0], d1y = a[4] - a[1], d1z = a[5] - a[2]
    cdef int64_t d2x = b[3] - b[0], d2y = b[4] - b[1], d2z = b[5] - b[2]
    cdef int64_t rx = b[0] - a[0], ry = b[1] - a[1], rz = b[2] - a[2]
    cdef int64_t nx = d1y * d2z - d1z * d2y
    cdef int64_t ny = d1z * d2x - d1x * d2z
    cdef int64_t nz = d1x * d2y - d1y * d2x
    cdef i128 nn, t, u
    cdef int64_t dd, ta, tb, lo, hi, tmp
    at_start[0] = 0
    if nx != 0 or ny != 0 or nz != 0:
        if <i128>rx * nx + <i128>ry * ny + <i128>rz * nz != 0:
            return 0
        nn = <i128>nx * nx + <i128>ny * ny + <i128>nz * nz
        t = (<i128>(ry * d2z - rz * d2y) * nx + <i128>(rz * d2x - rx * d2z) * ny
             + <i128>(rx * d2y - ry * d2x) * nz)
        if t < 0 or t > nn:
            return 0
        u = (<i128>(ry * d1z - rz * d1y) * nx + <i128>(rz * d1x - rx * d1z) * ny
             + <i128>(rx * d1y - ry * d1x) * nz)
        if u < 0 or u > nn:
            return 0
        at_start[0] = t == 0
        return 1
    if ry * d1z - rz * d1y != 0 or rz * d1x - rx * d1z != 0 or rx * d1y - ry * d1x != 0:
        return 0
    dd = d1x * d1x + d1y * d1y + d1z * d1z
    ta = rx * d1x + ry * d1y + rz * d1z
    tb = (b[3] - a[0]) * d1x + (b[4] - a[1]) * d1y + (b[5] - a[2]) * d1z
    if ta > tb:
        tmp = ta
        ta = tb
        tb = tmp
    lo = ta if ta > 0 else 0
    hi = tb if tb < dd else dd
    if lo > hi:
        return 0
    if lo == hi:
        at_start[0] = lo == 0
        return 1
    return 2


cdef inline bint _apart(const int64_t* lo, const int64_t* hi, Py_ssize_t i, Py_ssize_t j) noexcept nogil:
    cdef int k
    for k in range(3):
        if hi[3 * i + k] < lo[3 * j + k] or hi[3 * j + k] < lo[3 * i + k]:
            return True
    return False


def _as_rows(a):
    return np.ascontiguousarray(np.asarray(a, dtype=np.int64).reshape(-1, 6))


def segment_kind(a, b):
    cdef int64_t[::1] s = np.asarray(list(a) + list(b), dtype=np.int64)
    cdef int at_start
    return _classify(&s[0], &s[6], &at_start)


def first_blocking(seg, segs, excusable, Py_ssize_t count):
    cdef int64_t[::1] s = np.asarray(seg, dtype=np.int64)
    if count == 0:
        return -1
    cdef int64_t[:, ::1] rows = _as_rows(segs[:count])
    cdef uint8_t[::1] flags = np.ascontiguousarray(excusable[:count], dtype=np.uint8)
    cdef Py_ssize_t j
    cdef int k, kind, at_start
    cdef int64_t slo[3]
    cdef int64_t shi[3]
    cdef int64_t rlo, rhi
    cdef bint skip
    cdef Py_ssize_t found = -1
    for k in range(3):
        slo[k] = min(s[k], s[k + 3])
        shi[k] = max(s[k], s[k + 3])
    with nogil:
        for j in range(count):
            skip = False
            for k in range(3):
                rlo = min(rows[j, k], rows[j, k + 3])
                rhi = max(rows[j, k], rows[j, k + 3])
                if rhi < slo[k] or shi[k] < rlo:
                    skip = True
                    break
            if skip:
                continue
            kind = _classify(&s[0], &rows[j, 0], &at_start)
            if kind == 0:
                continue
            if kind == 1 and at_start and flags[j]:
                continue
            found = j
            break
    return found


def pair_hits(segs, Py_ssize_t row_lo=0, row_hi=None):
    cdef int64_t[:, ::1] rows = _as_rows(segs)
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t hi_row = k if row_hi is None else row_hi
    if k == 0:
        return []
    cdef int64_t[:, ::1] lo = np.ascontiguousarray(np.minimum(rows[:, :3], rows[:, 3:]))
    cdef int64_t[:, ::1] hi = np.ascontiguousarray(np.maximum(rows[:, :3], rows[:, 3:]))
    cdef vector[int64_t] out
    cdef Py_ssize_t i, j
    cdef int kind, at_start
    with nogil:
        for i in range(row_lo, hi_row):
            for j in range(i + 1, k):
                if _apart(&lo[0, 0], &hi[0, 0], i, j):
                    continue
                kind = _classify(&rows[i, 0], &rows[j, 0], &at_start)
                if kind != 0:
                    out.push_back(i)
                    out.push_back(j)
                    out.push_back(kind)
    return [(out[3 * i], out[3 * i + 1], <int>out[3 * i + 2]) for i in range(out.size() // 3)]


def vertex_hits(points, segs):
    cdef int64_t[:, ::1] pts = np.ascontiguousarray(np.asarray(points, dtype=np.int64).reshape(-1, 3))
    cdef int64_t[:, ::1] rows = _as_rows(segs)
    cdef Py_ssize_t n = pts.shape[0], k = rows.shape[0]
    cdef vector[int64_t] out
    cdef Py_ssize_t i, j
    cdef int64_t dx, dy, dz, wx, wy, wz, t, dd
    with nogil:
        for i in range(n):
            for j in range(k):
                if (pts[i, 0] < min(rows[j, 0], rows[j, 3]) or pts[i, 0] > max(rows[j, 0], rows[j, 3])
                        or pts[i, 1] < min(rows[j, 1], rows[j, 4]) or pts[i, 1] > max(rows[j, 1], rows[j, 4])
                        or pts[i, 2] < min(rows[j, 2], rows[j, 5]) or pts[i, 2] > max(rows[j, 2], rows[j, 5])):
                    continue
                dx = rows[j, 3] - rows[j, 0]
                dy = rows[j, 4] - rows[j, 1]
                dz = rows[j, 5] - rows[j, 2]
                wx = pts[i, 0] - rows[j, 0]
                wy = pts[i, 1] - rows[j, 1]
                wz = pts[i, 2] - rows[j, 2]
                if dy * wz - dz * wy != 0 or dz * wx - dx * wz != 0 or dx * wy - dy * wx != 0:
                    continue
                t = wx * dx + wy * dy + wz * dz
                dd = dx * dx + dy * dy + dz * dz
                if 0 < t < dd:
                    out.push_back(i)
                    out.push_back(j)
    return [(out[2 * i], out[2 * i + 1]) for i in range(out.size() // 2)]
