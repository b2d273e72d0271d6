# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pycore`` for the reference versions."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t


def factor_counts(bytes text, int max_len):
    cdef Py_ssize_t n = len(text)
    cdef const unsigned char[:] src = text
    cdef int32_t[:] code = np.full(256, -1, dtype=np.int32)
    cdef int sigma = 0
    cdef Py_ssize_t i
    for i in range(n):
        if code[src[i]] < 0:
            code[src[i]] = sigma
            sigma += 1
    if sigma == 0:
        sigma = 1
    cdef Py_ssize_t size = 2 * n + 2
    cdef int32_t[:] length = np.zeros(size, dtype=np.int32)
    cdef int32_t[:] link = np.full(size, -1, dtype=np.int32)
    cdef int32_t[:, :] nxt = np.full((size, sigma), -1, dtype=np.int32)
    cdef int32_t count = 1, last = 0, cur, p, q, clone
    cdef int c, j
    for i in range(n):
        c = code[src[i]]
        cur = count
        count += 1
        length[cur] = length[last] + 1
        p = last
        while p != -1 and nxt[p, c] == -1:
            nxt[p, c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = nxt[p, c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = count
                count += 1
                length[clone] = length[p] + 1
                for j in range(sigma):
                    nxt[clone, j] = nxt[q, j]
                link[clone] = link[q]
                while p != -1 and nxt[p, c] == q:
                    nxt[p, c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    cdef int64_t[:] diff = np.zeros(max_len + 2, dtype=np.int64)
    cdef int32_t lo, hi, v
    for v in range(1, count):
        lo = length[link[v]] + 1
        hi = length[v]
        if lo > max_len:
            continue
        diff[lo] += 1
        if hi > max_len:
            hi = max_len
        diff[hi + 1] -= 1
    out = [1] + [0] * max_len
    cdef int64_t run = 0
    cdef int ell
    for ell in range(1, max_len + 1):
        run += diff[ell]
        out[ell] = run
    return out


def min_window_spans(positions, int r_max):
    cdef cnp.int64_t[:] pos = np.asarray(positions, dtype=np.int64)
    cdef Py_ssize_t n = pos.shape[0], i
    cdef int r, d
    cdef int64_t best, span
    spans = [0] * (r_max + 1)
    for r in range(1, min(r_max, n) + 1):
        d = r - 1
        best = pos[d] - pos[0]
        for i in range(1, n - d):
            span = pos[i + d] - pos[i]
            if span < best:
                best = span
        spans[r] = best + 1
    return spans


cdef int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t result = 1, e = p - 2
    a %= p
    while e > 0:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


def nullspace_mod_p(rows, int ncols, int64_t p):
    if p >= (1 << 31):
        raise ValueError("modulus must be below 2**31")
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t width = ncols + m
    arr = np.zeros((m, width), dtype=np.int64)
    for i, row in enumerate(rows):
        if ncols:
            arr[i, :ncols] = np.asarray([v % p for v in row], dtype=np.int64)
        arr[i, ncols + i] = 1
    cdef int64_t[:, :] mat = arr
    cdef Py_ssize_t rank = 0, col, r, piv, k
    cdef int64_t inv, f
    for col in range(ncols):
        piv = -1
        for r in range(rank, m):
            if mat[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(width):
                f = mat[rank, k]
                mat[rank, k] = mat[piv, k]
                mat[piv, k] = f
        inv = _inv_mod(mat[rank, col], p)
        if inv != 1:
            for k in range(col, width):
                mat[rank, k] = (mat[rank, k] * inv) % p
        for r in range(m):
            if r != rank and mat[r, col] != 0:
                f = mat[r, col]
                for k in range(col, width):
                    if mat[rank, k] != 0:
                        mat[r, k] = (mat[r, k] - f * mat[rank, k]) % p
                        if mat[r, k] < 0:
                            mat[r, k] += p
        rank += 1
        if rank == m:
            break
    kernel = [[int(v) for v in arr[r, ncols:]] for r in range(rank, m)]
    return rank, kernel
