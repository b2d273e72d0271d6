"""Brute-force reference implementations, written independently of the package."""


def prefix(k, runs):
    """v_1 = x, v_{j+1} = v_j y^{runs[j-1]} v_j, as a plain string."""
    v = "x"
    for j in range(k - 1):
        v = v + "y" * runs[j] + v
    return v


def geo_runs(base, count=30):
    return [base ** (j + 1) for j in range(count)]


def factors(text, ell):
    return {text[i:i + ell] for i in range(len(text) - ell + 1)}


def complexity_table(text, n_max):
    return [1] + [len(factors(text, ell)) for ell in range(1, n_max + 1)]


def max_x_table(text, ell_max):
    """Largest count of x in any window of each length (windows slide over ``text``)."""
    out = [0]
    for ell in range(1, ell_max + 1):
        best = cur = text[:ell].count("x")
        for i in range(ell, len(text)):
            cur += (text[i] == "x") - (text[i - ell] == "x")
            if cur > best:
                best = cur
        out.append(best)
    return out


class Collector:
    """Group normal form by appending one generator letter at a time.

    State is (z, t, s, k) for z-part, t-part, s-part, u^k; relations are used
    one letter at a time, which is a different route from the package's
    block multiplication.
    """

    def __init__(self):
        self.z, self.t, self.s, self.k = {}, {}, {}, 0

    def _bump(self, d, i, e):
        d[i] = d.get(i, 0) + e
        if d[i] == 0:
            del d[i]

    def push(self, letter, index=0, e=1):
        if letter == "u":
            self.k += e
        elif letter == "z":
            self._bump(self.z, index, e)
        elif letter == "s":
            # u^k s_m = s_{m+k} u^k
            self._bump(self.s, index + self.k, e)
        elif letter == "t":
            m = index + self.k
            # s_n^a t_m^e = z_{n-m}^{ae} t_m^e s_n^a
            for n, a in self.s.items():
                self._bump(self.z, n - m, a * e)
            self._bump(self.t, m, e)
        return self

    def key(self):
        return (tuple(sorted(self.z.items())), tuple(sorted(self.t.items())),
                tuple(sorted(self.s.items())), self.k)


def collect(letters):
    c = Collector()
    for item in letters:
        c.push(*item)
    return c.key()


def letters_of(g):
    """Letters (kind, index, exp) of a package GroupElement in normal-form order."""
    out = [("z", i, e) for i, e in g.z.items]
    out += [("t", i, e) for i, e in g.t.items]
    out += [("s", i, e) for i, e in g.s.items]
    if g.u:
        out.append(("u", 0, g.u))
    return out


def rank(rows, p=None):
    """Rank of a list of dict rows by dense Gaussian elimination (Fractions or mod p)."""
    from fractions import Fraction

    keys = sorted({k for r in rows for k in r}, key=str)
    mat = [[Fraction(r.get(k, 0)) if p is None else r.get(k, 0) % p for k in keys] for r in rows]
    rk = 0
    for col in range(len(keys)):
        piv = next((i for i in range(rk, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        inv = 1 / mat[rk][col] if p is None else pow(mat[rk][col], -1, p)
        for i in range(len(mat)):
            if i != rk and mat[i][col] != 0:
                f = mat[i][col] * inv
                mat[i] = [a - f * b if p is None else (a - f * b) % p for a, b in zip(mat[i], mat[rk])]
        rk += 1
    return rk


def poly_mul(a, b, alive):
    """Product of dict polynomials over words, dropping dead words."""
    out = {}
    for u, cu in a.items():
        for w, cw in b.items():
            if alive(u + w):
                out[u + w] = out.get(u + w, 0) + cu * cw
    return {k: v for k, v in out.items() if v != 0}


def frame_dims(frame_polys, n_max, alive):
    """dim V^n by multiplying out every product of frame elements (naive)."""
    level = [{"": 1}]
    dims = []
    for n in range(n_max + 1):
        if n:
            level = [q for q in (poly_mul(a, f, alive) for a in level for f in frame_polys) if q]
            # keep a spanning set small by removing exact duplicates
            seen, uniq = set(), []
            for q in level:
                key = frozenset(q.items())
                if key not in seen:
                    seen.add(key)
                    uniq.append(q)
            level = uniq
        dims.append(rank(level))
    return dims
