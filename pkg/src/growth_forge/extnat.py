"""Natural numbers that may be far too large to write down in binary.

A value whose binary expansion fits in the materialization threshold (default
2**20 bits) is stored as a plain ``int``.  Anything larger is stored as a short
signed sum of power towers plus an exact remainder::

    value = sum(c_i * 2^^(h_i; t_i)) + low,        0 <= low < 2**threshold

where ``2^^(h; t)`` is ``2**2**...**t`` with ``h`` exponentiations.  Towers in
one value are kept pairwise far apart (their base-2 logarithms differ by at
least half the threshold and by more than the lower coefficient's
width), so the sign of a difference is the sign of its
leading coefficient and comparison never needs materialization.
"""
from __future__ import annotations

import re
from contextlib import contextmanager

_STATE = {"bits": 1 << 20}


def threshold_bits() -> int:
    return _STATE["bits"]


@contextmanager
def materialization_threshold(bits: int):
    """Temporarily change the threshold.

    Values built under different thresholds must not be mixed.
    """
    if bits < 16:
        raise ValueError("threshold must be at least 16 bits")
    old = _STATE["bits"]
    _STATE["bits"] = bits
    try:
        yield
    finally:
        _STATE["bits"] = old


def _lift(h: int, t: int):
    """Canonical form of 2^^(h; t): an ``int`` or a ``(height, top)`` pair."""
    thr = threshold_bits()
    while h > 0 and t + 1 <= thr:
        t = 1 << t
        h -= 1
    if h == 0:
        return t
    if t.bit_length() > thr:
        if t & (t - 1):
            raise OverflowError("tower top too wide to store")
        return _lift(h + 1, t.bit_length() - 1)
    return (h, t)


def _log_gap(a, b, cb):
    """log2(a) - log2(b) for towers a > b when ``cb * b`` could rival ``a``."""
    thr = threshold_bits()
    (ha, ta), (hb, tb) = a, b
    if ha == 1 and hb == 1:
        gap = ta - tb
    elif ha == 2 and hb == 1 and ta <= thr + 2:
        gap = (1 << ta) - tb
    else:
        return None
    return gap if gap < thr // 2 or gap <= abs(cb).bit_length() + 2 else None


def _bump(tower, k):
    """Tower equal to ``tower * 2**k`` if one exists, else None."""
    h, t = tower
    if h != 1:
        return None
    try:
        out = _lift(1, t + k)
    except OverflowError:
        return None
    return out if isinstance(out, tuple) else None


def _merge(terms: dict) -> dict:
    """Fold even coefficients into higher towers and close towers into the lower one."""
    terms = {t: c for t, c in terms.items() if c}
    changed = True
    while changed:
        changed = False
        items = sorted(terms.items(), reverse=True)
        for tw, c in items:
            if tw[0] != 1 or c & 1:
                continue
            k = (c & -c).bit_length() - 1
            while k and _bump(tw, k) is None:
                k -= 1
            if k:
                new = _bump(tw, k)
                del terms[tw]
                terms[new] = terms.get(new, 0) + (c >> k)
                terms = {t: v for t, v in terms.items() if v}
                changed = True
                break
        if changed:
            continue
        for (a, ca), (b, cb) in zip(items, items[1:]):
            gap = _log_gap(a, b, cb)
            if gap is not None:
                del terms[a]
                terms[b] = cb + (ca << gap)
                terms = {t: v for t, v in terms.items() if v}
                changed = True
                break
    return terms


def _spread(terms: dict, tw, c):
    """Add c * 2^^(1; t) to ``terms`` as signed single-bit terms (non-adjacent form)."""
    t = tw[1]
    i = 0
    while c:
        if c & 1:
            d = 2 - (c & 3)
            key = _lift(1, t + i)
            if not isinstance(key, tuple):
                raise OverflowError("coefficient too large for symbolic form")
            terms[key] = terms.get(key, 0) + d
            c -= d
        c >>= 1
        i += 1


def _normalize(terms: dict, low: int):
    """Return ``(sign, terms_tuple, low)`` for a signed combination."""
    thr = threshold_bits()
    q, low = divmod(low, 1 << thr)
    if q.bit_count() > 8192:
        raise OverflowError("integer too wide for symbolic form")
    # the part above 2**thr becomes signed 2^e terms, merged below
    _spread(terms, (1, thr), q)
    terms = _merge(terms)
    # coefficients may use up to twice the threshold; wider ones are respread
    cap = 2 * thr
    wide = [tw for tw, c in terms.items() if c.bit_length() > cap and tw[0] == 1]
    if wide:
        for tw in wide:
            c = terms.pop(tw)
            sign = 1 if c > 0 else -1
            part = {}
            _spread(part, tw, abs(c))
            for k, v in part.items():
                terms[k] = terms.get(k, 0) + sign * v
        terms = _merge(terms)
    items = tuple(sorted(terms.items(), reverse=True))
    for _, c in items:
        if c.bit_length() > cap:
            raise OverflowError("coefficient too large for symbolic form")
    if not items:
        return (1 if low else 0), (), low
    return (1 if items[0][1] > 0 else -1), items, low


class ExtendedNat:
    """Immutable natural number with exact and symbolic representations."""

    __slots__ = ("_n", "_terms", "_low")

    def __init__(self, value: int = 0):
        if isinstance(value, ExtendedNat):
            self._n, self._terms, self._low = value._n, value._terms, value._low
            return
        if not isinstance(value, int) or value < 0:
            raise ValueError("ExtendedNat needs a non-negative int")
        if value.bit_length() <= threshold_bits():
            self._n, self._terms, self._low = value, (), 0
        else:
            other = _from_parts({}, value)
            self._n, self._terms, self._low = other._n, other._terms, other._low

    @classmethod
    def _raw(cls, n, terms=(), low=0):
        obj = cls.__new__(cls)
        obj._n, obj._terms, obj._low = n, terms, low
        return obj

    @classmethod
    def tower(cls, height: int, top) -> "ExtendedNat":
        """2^^(height; top); ``top`` may itself be a pure tower."""
        if height < 0:
            raise ValueError("height must be non-negative")
        if isinstance(top, ExtendedNat):
            if top.is_exact:
                top = top._n
            else:
                pure = top.as_pure_tower()
                if pure is None:
                    raise OverflowError("tower top must be exact or a pure tower")
                return cls.tower(height + pure[0], pure[1])
        if height == 0:
            return cls(top)
        out = _lift(height, top)
        if isinstance(out, int):
            return cls(out)
        return cls._raw(None, ((out, 1),), 0)

    # -- inspection -----------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self._n is not None

    def to_int(self) -> int:
        if self._n is None:
            raise OverflowError(f"{self} is too large to materialize")
        return self._n

    __int__ = to_int

    def as_pure_tower(self):
        """``(height, top)`` when the value is a single tower, else None."""
        if self._n is not None:
            n = self._n
            if n > 1 and not n & (n - 1):
                e = n.bit_length() - 1
                inner = ExtendedNat(e).as_pure_tower()
                if inner is None:
                    return (1, e)
                return (inner[0] + 1, inner[1])
            return None
        if len(self._terms) == 1 and self._terms[0][1] == 1 and self._low == 0:
            return self._terms[0][0]
        return None

    def bit_length(self) -> "ExtendedNat":
        if self._n is not None:
            return ExtendedNat(self._n.bit_length())
        (h, t), c = self._terms[0]
        log = ExtendedNat(t) if h == 1 else ExtendedNat.tower(h - 1, t)
        # c is small and the leading tower dominates everything below it
        return log + (c.bit_length() if c > 0 else 0)

    def _parts(self):
        if self._n is not None:
            return {}, self._n
        return dict(self._terms), self._low

    # -- arithmetic ------------------------------------------------------
    def _combine(self, other, sign):
        if not isinstance(other, ExtendedNat):
            if not isinstance(other, int):
                return NotImplemented
            if self._n is not None:
                return None, self._n + sign * other
            terms, low = self._parts()
            return _normalize(terms, low + sign * other), None
        if self._n is not None and other._n is not None:
            return None, self._n + sign * other._n
        terms, low = self._parts()
        oterms, olow = other._parts()
        for t, c in oterms.items():
            terms[t] = terms.get(t, 0) + sign * c
        return _normalize(terms, low + sign * olow), None

    def __add__(self, other):
        res = self._combine(other, 1)
        if res is NotImplemented:
            return res
        norm, exact = res
        if norm is None:
            return ExtendedNat(exact)
        return _from_norm(norm)

    __radd__ = __add__

    def __sub__(self, other):
        res = self._combine(other, -1)
        if res is NotImplemented:
            return res
        norm, exact = res
        if norm is None:
            if exact < 0:
                raise ValueError("subtraction would go negative")
            return ExtendedNat(exact)
        return _from_norm(norm)

    def __rsub__(self, other):
        return ExtendedNat(other) - self

    def __mul__(self, k):
        if isinstance(k, ExtendedNat) and k.is_exact:
            k = k._n
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative multiplier")
        if self._n is not None:
            return ExtendedNat(self._n * k)
        if k == 0:
            return ExtendedNat(0)
        terms = {t: c * k for t, c in self._terms}
        return _from_norm(_normalize(terms, self._low * k))

    __rmul__ = __mul__

    def double(self) -> "ExtendedNat":
        return self * 2

    # -- ordering ----------------------------------------------------------
    def _cmp(self, other) -> int:
        if isinstance(other, int):
            if self._n is not None:
                return (self._n > other) - (self._n < other)
            other = ExtendedNat(other) if other >= 0 else None
            if other is None:
                return 1
        if self._n is not None and other._n is not None:
            return (self._n > other._n) - (self._n < other._n)
        norm, _ = self._combine(other, -1)
        return norm[0]

    def __eq__(self, other):
        if isinstance(other, ExtendedNat):
            if self._n is not None or other._n is not None:
                return self._n == other._n
            return self._cmp(other) == 0
        if isinstance(other, int):
            return self._n == other
        return NotImplemented

    def __hash__(self):
        if self._n is not None:
            return hash(self._n)
        # equal symbolic values share their leading tower
        return hash(self._terms[0][0])

    def __lt__(self, other):
        if not isinstance(other, (int, ExtendedNat)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (int, ExtendedNat)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (int, ExtendedNat)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (int, ExtendedNat)):
            return NotImplemented
        return self._cmp(other) >= 0

    def __bool__(self):
        return self._n != 0

    # -- text ------------------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"ExtendedNat({render(self)!r})"


def _from_norm(norm) -> ExtendedNat:
    sign, terms, low = norm
    if sign < 0:
        raise ValueError("subtraction would go negative")
    if not terms:
        return ExtendedNat(low)
    return ExtendedNat._raw(None, terms, low)


def _from_parts(terms, low) -> ExtendedNat:
    return _from_norm(_normalize(dict(terms), low))


def as_extnat(value) -> ExtendedNat:
    return value if isinstance(value, ExtendedNat) else ExtendedNat(value)


# -- rendering -----------------------------------------------------------------

_SMALL_BITS = 64


def _power_tower(e: int):
    """(h, t) with 2**e == 2^^(h; t) and t printable, or None."""
    if e.bit_length() <= _SMALL_BITS:
        return (1, e)
    if e & (e - 1):
        return None
    inner = _power_tower(e.bit_length() - 1)
    return (inner[0] + 1, inner[1]) if inner else None


def _render_power(e: int) -> str:
    ht = _power_tower(e)
    if ht is not None:
        return f"2^^({ht[0]};{ht[1]})"
    return f"2^^(1;{_render_int(e)})"


def _render_int(n: int) -> str:
    if n.bit_length() <= _SMALL_BITS:
        return str(n)
    b = n.bit_length() - 1
    below = n - (1 << b)
    above = (1 << (b + 1)) - n
    if below <= above:
        head = _render_power(b)
        return head if below == 0 else f"{head}+{_render_int(below)}"
    return f"{_render_power(b + 1)}-{_render_int(above)}"


def _render_tower(h: int, t: int) -> str:
    if t.bit_length() <= _SMALL_BITS:
        return f"2^^({h};{t})"
    ht = _power_tower(t.bit_length() - 1) if not t & (t - 1) else None
    if ht is not None:
        # 2^^(h; 2^^(h2; t2)) == 2^^(h + h2; t2)
        return f"2^^({h + ht[0]};{ht[1]})"
    return f"2^^({h};{_render_int(t)})"


def render(x: ExtendedNat) -> str:
    """Text form: decimal when small, otherwise ``2^^(h;t)`` sums."""
    if x.is_exact:
        return _render_int(x.to_int())
    out = []
    for (h, t), c in x._terms:
        body = _render_tower(h, t)
        mag = abs(c)
        piece = body if mag == 1 else f"{mag}*{body}"
        if not out:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(("+" if c > 0 else "-") + piece)
    if x._low:
        out.append("+" + _render_int(x._low))
    return "".join(out)


# -- parsing ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?!2\^\^)(\d+)|(2\^\^\()|(\^\^)|(.))")


def parse_extnat(text: str) -> ExtendedNat:
    """Inverse of :func:`render`; also accepts ``2^(e)`` and parentheses."""
    from .errors import ParseError

    pos = 0
    s = text.strip()

    def peek():
        m = _TOKEN.match(s, pos)
        if not m or m.end() == m.start():
            return None, pos
        return m, m.end()

    def expect(ch):
        nonlocal pos
        m, end = peek()
        if m is None or m.group(4) != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos = end

    def signed_sum():
        nonlocal pos
        terms, low = {}, 0
        sign = 1
        first = True
        while True:
            m, end = peek()
            if m is not None and m.group(4) in ("+", "-"):
                sign = 1 if m.group(4) == "+" else -1
                pos = end
            elif not first:
                break
            val = product()
            t, lo = ({}, val) if isinstance(val, int) else val._parts()
            for k, c in t.items():
                terms[k] = terms.get(k, 0) + sign * c
            low += sign * lo
            first = False
            sign = 1
            m, end = peek()
            if m is None or m.group(4) not in ("+", "-"):
                break
        sg, items, lo = _normalize(terms, low)
        if sg < 0:
            raise ParseError("negative value", pos)
        return _from_norm((sg, items, lo))

    def product():
        nonlocal pos
        val = atom()
        m, end = peek()
        while m is not None and m.group(4) == "*":
            pos = end
            rhs = atom()
            # literals stay plain ints so wide coefficients parse at any threshold
            if isinstance(val, int) and isinstance(rhs, int):
                val = val * rhs
            elif isinstance(val, int) or val.is_exact:
                val = rhs * int(val)
            elif isinstance(rhs, int) or rhs.is_exact:
                val = val * int(rhs)
            else:
                raise ParseError("product of two symbolic values", pos)
            m, end = peek()
        return val

    def atom():
        nonlocal pos
        m, end = peek()
        if m is None:
            raise ParseError("unexpected end of input", pos)
        if m.group(1) is not None:
            n = int(m.group(1))
            pos = end
            if n == 2:
                m2, end2 = peek()
                if m2 is not None and m2.group(4) == "^":
                    pos = end2
                    expect("(")
                    e = signed_sum()
                    expect(")")
                    return ExtendedNat.tower(1, e)
            return n
        if m.group(2) is not None:
            pos = end
            h = signed_sum()
            expect(";")
            t = signed_sum()
            expect(")")
            return ExtendedNat.tower(h.to_int(), t)
        if m.group(4) == "(":
            pos = end
            v = signed_sum()
            expect(")")
            return v
        raise ParseError(f"unexpected {m.group(0).strip()!r}", m.start())

    if not s:
        raise ParseError("empty number", 0)
    value = signed_sum()
    if pos != len(s):
        raise ParseError("trailing input", pos)
    return value
