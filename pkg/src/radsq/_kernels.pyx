# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_kernels_py`` for the reference semantics."""
from array import array

from libc.stdint cimport int64_t, uint64_t

from . import _kernels_py


def rref_mod_p(flat, Py_ssize_t nrows, Py_ssize_t ncols, int64_t p):
    cdef int64_t[:] m = array("q", flat)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, t
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                t = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = t
        inv = _inv_mod(m[r * ncols + c], p)
        for j in range(c, ncols):
            m[r * ncols + j] = m[r * ncols + j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * ncols + c]
            if f == 0:
                continue
            for j in range(c, ncols):
                t = m[r * ncols + j]
                if t != 0:
                    m[i * ncols + j] = (m[i * ncols + j] - f * t % p + p) % p
        pivots.append(c)
        r += 1
    return list(m), pivots


cdef int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, rr = p, newr = a % p, q, tmp
    while newr != 0:
        q = rr // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = rr - q * newr
        rr = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def closed_walk_weight_masks(Py_ssize_t nv, src, tgt, int max_len):
    if 2 * max_len + 1 > 64:
        return _kernels_py.closed_walk_weight_masks(nv, src, tgt, max_len)
    cdef Py_ssize_t na = len(src), s, k, step
    cdef int64_t[:] sa = array("q", src)
    cdef int64_t[:] ta = array("q", tgt)
    cdef uint64_t[:] reach = array("Q", [0] * nv)
    cdef uint64_t[:] nxt = array("Q", [0] * nv)
    cdef uint64_t closed, ra, rb
    out = []
    for s in range(nv):
        for k in range(nv):
            reach[k] = 0
        reach[s] = (<uint64_t>1) << max_len
        closed = 0
        for step in range(max_len):
            for k in range(nv):
                nxt[k] = 0
            for k in range(na):
                ra = reach[sa[k]]
                rb = reach[ta[k]]
                nxt[ta[k]] |= ra << 1
                nxt[sa[k]] |= rb >> 1
            for k in range(nv):
                reach[k] = nxt[k]
            closed |= reach[s]
        out.append(int(closed))
    return out
