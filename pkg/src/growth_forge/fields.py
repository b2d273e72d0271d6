"""Exact coefficient fields.

A field object works on raw Python values: ``Fraction``/``int`` for the
rationals and ``int`` residues for GF(p).  Keeping coefficients unboxed keeps
the sparse linear algebra cheap.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvalidArgument, ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Rationals:
    name = "rationals"
    zero = 0
    one = 1
    characteristic = 0

    def __call__(self, v):
        if isinstance(v, str):
            try:
                v = Fraction(v)
            except ValueError:
                raise ParseError(f"bad rational {v!r}") from None
        v = Fraction(v)
        return v.numerator if v.denominator == 1 else v

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        r = Fraction(1) / a
        return r.numerator if r.denominator == 1 else r

    def fmt(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    characteristic: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InvalidArgument(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"
        self.zero = 0
        self.one = 1 % p

    def __call__(self, v):
        if isinstance(v, str):
            v = Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"{v} has no image in GF({self.p})")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def fmt(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def parse_field(text: str):
    """``rationals`` (or ``QQ``) and ``gf:<p>``."""
    t = text.strip().lower()
    if t in ("rationals", "qq", "q"):
        return QQ
    if t.startswith("gf:"):
        try:
            return PrimeField(int(t[3:]))
        except ValueError:
            pass
    raise InvalidArgument(f"bad field {text!r}; use rationals or gf:<p>")
