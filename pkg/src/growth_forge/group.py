"""Normal forms in the group generated by u and s_n, t_n, z_n (n in Z).

Defining relations::

    s_n t_m = z_{n-m} t_m s_n
    the s_n commute, the t_n commute, the z_n are central
    u s_m u^-1 = s_{m+1},  u t_m u^-1 = t_{m+1},  u z_m = z_m u

Every element is written uniquely as (prod z_n^a) (prod t_n^b) (prod s_n^c) u^k.
"""
from __future__ import annotations

import re

from .errors import ParseError


class IndexedExponents:
    """Finitely supported map index -> nonzero exponent (immutable)."""

    __slots__ = ("items", "_hash")

    def __init__(self, mapping=None):
        if isinstance(mapping, IndexedExponents):
            self.items = mapping.items
        else:
            d = dict(mapping or {})
            self.items = tuple(sorted((int(i), int(e)) for i, e in d.items() if e))
        self._hash = None

    @classmethod
    def _from_items(cls, items):
        obj = cls.__new__(cls)
        obj.items = items
        obj._hash = None
        return obj

    def get(self, i, default=0):
        for k, e in self.items:
            if k == i:
                return e
        return default

    def as_dict(self) -> dict:
        return dict(self.items)

    def shift(self, k: int) -> "IndexedExponents":
        if not k:
            return self
        return IndexedExponents._from_items(tuple((i + k, e) for i, e in self.items))

    def __add__(self, other: "IndexedExponents") -> "IndexedExponents":
        if not other.items:
            return self
        if not self.items:
            return other
        d = dict(self.items)
        for i, e in other.items:
            d[i] = d.get(i, 0) + e
        return IndexedExponents._from_items(tuple(sorted((i, e) for i, e in d.items() if e)))

    def __neg__(self):
        return IndexedExponents._from_items(tuple((i, -e) for i, e in self.items))

    def __bool__(self):
        return bool(self.items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __eq__(self, other):
        return isinstance(other, IndexedExponents) and self.items == other.items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.items)
        return self._hash

    def __repr__(self):
        return f"IndexedExponents({dict(self.items)})"


_EMPTY = IndexedExponents()


class GroupElement:
    """z-part, t-part, s-part and u exponent of a normal form."""

    __slots__ = ("z", "t", "s", "u", "_hash")

    def __init__(self, z=None, t=None, s=None, u: int = 0):
        self.z = z if isinstance(z, IndexedExponents) else IndexedExponents(z)
        self.t = t if isinstance(t, IndexedExponents) else IndexedExponents(t)
        self.s = s if isinstance(s, IndexedExponents) else IndexedExponents(s)
        self.u = int(u)
        self._hash = None

    @classmethod
    def _raw(cls, z, t, s, u):
        obj = cls.__new__(cls)
        obj.z, obj.t, obj.s, obj.u = z, t, s, u
        obj._hash = None
        return obj

    # -- generators --------------------------------------------------------
    @classmethod
    def identity(cls):
        return cls._raw(_EMPTY, _EMPTY, _EMPTY, 0)

    @classmethod
    def s_(cls, n: int, e: int = 1):
        return cls(s={n: e})

    @classmethod
    def t_(cls, n: int, e: int = 1):
        return cls(t={n: e})

    @classmethod
    def z_(cls, n: int, e: int = 1):
        return cls(z={n: e})

    @classmethod
    def u_(cls, k: int = 1):
        return cls(u=k)

    # -- arithmetic ----------------------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, k: int):
        base = self if k >= 0 else inverse(self)
        out = GroupElement.identity()
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def inverse(self):
        return inverse(self)

    def is_identity(self) -> bool:
        return not (self.z or self.t or self.s or self.u)

    def key(self):
        return (self.z.items, self.t.items, self.s.items, self.u)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        return format_group(self)

    def __repr__(self):
        return f"GroupElement({format_group(self)!r})"


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """Product in normal form.

    Conjugating h's t- and s-parts past u^(g.u) shifts their indices; moving
    g's s-part right past the shifted t-part creates z_{n-m}^{a b} for every
    s_n^a, t_m^b pair.
    """
    k = g.u
    ht = h.t.shift(k)
    hs = h.s.shift(k)
    z = g.z + h.z
    if g.s and ht:
        extra = {}
        for n, a in g.s.items:
            for m, b in ht.items:
                extra[n - m] = extra.get(n - m, 0) + a * b
        z = z + IndexedExponents(extra)
    return GroupElement._raw(z, g.t + ht, g.s + hs, k + h.u)


def inverse(g: GroupElement) -> GroupElement:
    """(z t s u^k)^-1 = u^-k s^-1 t^-1 z^-1, brought back to normal form."""
    out = GroupElement._raw(_EMPTY, _EMPTY, _EMPTY, -g.u)
    out = multiply(out, GroupElement._raw(_EMPTY, _EMPTY, -g.s, 0))
    out = multiply(out, GroupElement._raw(_EMPTY, -g.t, _EMPTY, 0))
    return multiply(out, GroupElement._raw(-g.z, _EMPTY, _EMPTY, 0))


def conjugate_by_u(g: GroupElement, k: int) -> GroupElement:
    """u^k g u^-k."""
    return GroupElement._raw(g.z, g.t.shift(k), g.s.shift(k), g.u)


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g^-1 h^-1."""
    return multiply(multiply(g, h), multiply(inverse(g), inverse(h)))


GENERATORS = (GroupElement.s_(0), GroupElement.t_(0), GroupElement.u_(1))


def is_central(g: GroupElement) -> bool:
    """Commutes with s_0, t_0 and u, which generate the group."""
    return all(multiply(g, a) == multiply(a, g) for a in GENERATORS)


# -- text ---------------------------------------------------------------------

def _fmt_power(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def format_group(g: GroupElement) -> str:
    """Normal-form text, e.g. ``z(1) t(0) s(1)``; the identity is ``e``."""
    parts = []
    for letter, part in (("z", g.z), ("t", g.t), ("s", g.s)):
        for i, e in part.items:
            parts.append(_fmt_power(f"{letter}({i})", e))
    if g.u:
        parts.append(_fmt_power("u", g.u))
    return " ".join(parts) if parts else "e"


_GTOKEN = re.compile(
    r"\s*(?:([stz])\s*\(\s*([+-]?\d+)\s*\)|(u)|(e)|(1))(?:\s*\^\s*([+-]?\d+))?\s*\*?"
)


def parse_group(text: str) -> GroupElement:
    """Parse juxtaposed tokens ``s(n)``, ``t(n)``, ``z(n)``, ``u``, ``e``, each with optional ``^k``."""
    s = text.strip()
    if not s:
        raise ParseError("empty group word", 0)
    pos = 0
    out = GroupElement.identity()
    while pos < len(s):
        m = _GTOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected {s[pos]!r} in group word", pos)
        e = int(m.group(6)) if m.group(6) is not None else 1
        if m.group(1):
            n = int(m.group(2))
            tok = {"s": GroupElement.s_, "t": GroupElement.t_, "z": GroupElement.z_}[m.group(1)](n, e)
        elif m.group(3):
            tok = GroupElement.u_(e)
        else:
            tok = GroupElement.identity()
        out = multiply(out, tok)
        pos = m.end()
    return out
