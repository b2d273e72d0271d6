"""Pure-Python versions of the hot kernels.

Each function here has a compiled twin in ``_ccore.pyx`` with the same
signature and results; ``tests/test_kernels.py`` checks they agree.
"""


def factor_counts(text: bytes, max_len: int) -> list:
    """Number of distinct substrings of ``text`` of each length 0..max_len.

    Builds a suffix automaton; a state with longest length L and suffix link
    length l contributes one distinct substring for every length in (l, L].
    """
    n = len(text)
    size = 2 * n + 2
    length = [0] * size
    link = [-1] * size
    nxt = [None] * size
    nxt[0] = {}
    count = 1
    last = 0
    for ch in text:
        cur = count
        count += 1
        length[cur] = length[last] + 1
        nxt[cur] = {}
        p = last
        while p != -1 and ch not in nxt[p]:
            nxt[p][ch] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = nxt[p][ch]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = count
                count += 1
                length[clone] = length[p] + 1
                nxt[clone] = dict(nxt[q])
                link[clone] = link[q]
                while p != -1 and nxt[p].get(ch) == q:
                    nxt[p][ch] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    diff = [0] * (max_len + 2)
    for v in range(1, count):
        lo = length[link[v]] + 1
        hi = length[v]
        if lo > max_len:
            continue
        diff[lo] += 1
        diff[min(hi, max_len) + 1] -= 1
    out = [1] + [0] * max_len
    run = 0
    for ell in range(1, max_len + 1):
        run += diff[ell]
        out[ell] = run
    return out


def min_window_spans(positions, r_max: int) -> list:
    """``spans[r]`` = least ``positions[i+r-1] - positions[i] + 1`` (0 if r too big)."""
    n = len(positions)
    spans = [0] * (r_max + 1)
    for r in range(1, min(r_max, n) + 1):
        d = r - 1
        spans[r] = min(positions[i + d] - positions[i] for i in range(n - d)) + 1
    return spans


def nullspace_mod_p(rows, ncols: int, p: int):
    """Left kernel of a dense matrix over GF(p).

    Returns ``(rank, kernel)`` where ``kernel`` is a list of coefficient
    vectors ``c`` (length ``len(rows)``) with ``sum(c[i] * rows[i]) == 0``.
    """
    m = len(rows)
    width = ncols + m
    mat = []
    for i, row in enumerate(rows):
        r = [v % p for v in row] + [0] * m
        r[ncols + i] = 1
        mat.append(r)
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, m):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = pow(prow[col], p - 2, p)
        if inv != 1:
            prow[:] = [(v * inv) % p for v in prow]
        for i in range(m):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                row = mat[i]
                mat[i] = [(a - f * b) % p for a, b in zip(row, prow)]
        rank += 1
        if rank == m:
            break
    kernel = [mat[i][ncols:width] for i in range(rank, m)]
    return rank, kernel
