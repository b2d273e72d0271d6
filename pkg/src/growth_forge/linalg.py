"""Sparse exact row reduction over a coefficient field.

Vectors are dicts ``key -> nonzero coefficient``.  Keys must be orderable by
the ``order`` function handed to :class:`Echelon`; the pivot of a row is its
least key under that order.
"""
from __future__ import annotations

import heapq

from ._kernels import nullspace_mod_p
from .fields import PrimeField


def _shortlex(key):
    return (len(key), key) if isinstance(key, str) else key


class Echelon:
    """Incrementally maintained echelon basis.

    With ``track=True`` every stored row remembers which inserted labels it
    is a combination of, so :meth:`reduce` can say how a vector in the span
    decomposes over the inserted generators.
    """

    def __init__(self, field, order=_shortlex, track: bool = False):
        self.field = field
        self.order = order
        self.track = track
        self.rows = {}  # pivot -> (row, combination)
        self.labels = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _pivot(self, vec):
        return min(vec, key=self.order)

    def reduce(self, vec, combo=None):
        """Reduce ``vec``; returns (residual, combination over labels).

        The combination ``c`` satisfies ``vec = residual + sum c[l] * row l``
        where row l is the l-th inserted vector.
        """
        F = self.field
        order = self.order
        vec = dict(vec)
        combo = dict(combo) if combo else {}
        # a row only touches keys at or above its pivot, so keys can be
        # visited in increasing order with a heap
        heap = [(order(k), k) for k in vec]
        heapq.heapify(heap)
        seen = set()
        while heap:
            _, key = heapq.heappop(heap)
            if key in seen:
                continue
            seen.add(key)
            f = vec.get(key)
            if f is None:
                continue
            hit = self.rows.get(key)
            if hit is None:
                continue
            row, rcombo = hit
            for k, c in row.items():
                nv = F.sub(vec.get(k, F.zero), F.mul(f, c))
                if nv == F.zero:
                    vec.pop(k, None)
                else:
                    if k not in vec and k not in seen:
                        heapq.heappush(heap, (order(k), k))
                    vec[k] = nv
            if self.track:
                for lbl, c in rcombo.items():
                    nv = F.add(combo.get(lbl, F.zero), F.mul(f, c))
                    if nv == F.zero:
                        combo.pop(lbl, None)
                    else:
                        combo[lbl] = nv
        return vec, combo

    def add(self, vec, label=None) -> bool:
        """Insert ``vec``; True if it enlarged the span."""
        F = self.field
        if self.track:
            self.labels.append(label)
        res, combo = self.reduce(vec)
        if not res:
            return False
        if self.track:
            # vec - sum(combo) = res, so res is vec's label minus the combination
            new = {len(self.labels) - 1: F.one}
            for lbl, c in combo.items():
                new[lbl] = F.sub(new.get(lbl, F.zero), c)
            combo = {k: v for k, v in new.items() if v != F.zero}
        p = self._pivot(res)
        inv = F.inv(res[p])
        res = {k: F.mul(v, inv) for k, v in res.items()}
        if self.track:
            combo = {k: F.mul(v, inv) for k, v in combo.items()}
        self.rows[p] = (res, combo)
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)[0]

    def basis(self):
        return [row for row, _ in self.rows.values()]

    def label(self, i):
        return self.labels[i]


def monomial_span(vectors) -> set:
    """Keys spanned when every vector is a single key (dedup fast path)."""
    out = set()
    for v in vectors:
        if len(v) != 1:
            raise ValueError("monomial_span needs single-key vectors")
        out.update(v)
    return out


def left_kernel(rows, field):
    """Left kernel of the matrix whose i-th row is the sparse vector ``rows[i]``.

    Returns ``(rank, kernel)``; each kernel vector is a list of coefficients
    ``c`` with ``sum(c[i] * rows[i]) == 0``.  GF(p) with p < 2**31 goes to the
    dense kernel; otherwise exact sparse elimination is used.
    """
    m = len(rows)
    if isinstance(field, PrimeField) and field.p < (1 << 31):
        keys = sorted({k for r in rows for k in r}, key=_shortlex)
        index = {k: i for i, k in enumerate(keys)}
        dense = []
        for r in rows:
            d = [0] * len(keys)
            for k, v in r.items():
                d[index[k]] = v
            dense.append(d)
        return nullspace_mod_p(dense, len(keys), field.p)
    ech = Echelon(field, track=True)
    kernel = []
    for i, r in enumerate(rows):
        res, combo = ech.reduce(r)
        if res:
            ech.add(r, label=i)
        else:
            ech.labels.append(i)
            vec = [field.zero] * m
            vec[i] = field.one
            for lbl, c in combo.items():
                j = ech.labels[lbl]
                vec[j] = field.sub(vec[j], c)
            kernel.append(vec)
    return m - len(kernel), kernel
