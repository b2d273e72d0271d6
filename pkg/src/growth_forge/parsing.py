"""Text grammars for algebra, group and group-ring elements.

Algebra:    ``3*x*y^2 + y``, ``1/2*(x + y)^2 - 1``; letters may also be juxtaposed (``xyyx``).
Group:      ``s(1) t(0)^-1 u^2`` (see :func:`growth_forge.group.parse_group`).
Group ring: ``(x*y^2*x : z(1) t(0) s(1)) + 2*(y : e)``, ``(x : u)^2``.

A literal that multiplies out to a word outside the language is accepted and
becomes 0; a :class:`NonFactorWarning` says so.
"""
from __future__ import annotations

import re
import warnings
from fractions import Fraction

from .errors import ParseError
from .group import parse_group

__all__ = ["NonFactorWarning", "parse_algebra", "parse_group", "parse_groupring", "parse_element"]


class NonFactorWarning(UserWarning):
    """A product in the input text vanished because its word is not a factor."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([xy]+)|(\^)|([-+*/()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip()) if text[pos:].strip() else pos
            raise ParseError(f"unexpected {text[bad]!r}", bad)
        kind = "num" if m.group(1) else "word" if m.group(2) else "op"
        out.append((kind, m.group(0).strip(), m.start(0) + len(m.group(0)) - len(m.group(0).lstrip())))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over tokens; ``atom`` is supplied per grammar."""

    def __init__(self, text: str, tokens):
        self.text = text
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.next()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def integer(self) -> int:
        sign = 1
        if self.peek()[1] in ("-", "+"):
            sign = -1 if self.next()[1] == "-" else 1
        tok = self.next()
        if tok[0] != "num":
            raise ParseError("expected an integer exponent", tok[2])
        return sign * int(tok[1])


def _warn_if_vanished(before, after, what: str):
    if before and not after:
        warnings.warn(f"{what} is zero: its word is not a factor", NonFactorWarning, stacklevel=4)


# -- algebra -----------------------------------------------------------------------------

class _AlgebraParser(_Parser):
    def __init__(self, text, algebra):
        super().__init__(text, _tokenize(text))
        self.alg = algebra

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.next()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.next()[1] == "-" else 1
            acc = acc + self.term().scale(sign)
        return acc

    def term(self):
        start = self.peek()[2]
        acc = self.power()
        while self.peek()[1] in ("*", "/") or self.peek()[0] == "word" or self.peek()[1] == "(":
            op = self.peek()[1]
            if op == "/":
                self.next()
                tok = self.next()
                if tok[0] != "num" or int(tok[1]) == 0:
                    raise ParseError("expected a nonzero integer denominator", tok[2])
                acc = acc.scale(Fraction(1, int(tok[1])))
                continue
            if op == "*":
                self.next()
            rhs = self.power()
            prod = acc * rhs
            _warn_if_vanished(acc and rhs, prod, repr(self.text[start:self.peek()[2]].strip()))
            acc = prod
        return acc

    def power(self):
        start = self.peek()[2]
        base = self.atom()
        if self.peek()[1] == "^":
            self.next()
            k = self.integer()
            if k < 0:
                raise ParseError("negative powers are not defined here", self.toks[self.i - 1][2])
            out = base ** k
            _warn_if_vanished(base, out, repr(self.text[start:self.peek()[2]].strip()))
            return out
        return base

    def atom(self):
        kind, val, pos = self.next()
        if kind == "num":
            return self.alg.one.scale(int(val))
        if kind == "word":
            # a single letter binds to a following ^k, so split the run
            head, rest = val[:-1], val[-1]
            out = self.alg.one
            for ch in head:
                out = out * self.alg.monomial(ch)
            last = self.alg.monomial(rest)
            if self.peek()[1] == "^" and head:
                self.next()
                k = self.integer()
                if k < 0:
                    raise ParseError("negative powers are not defined here", pos)
                last = last ** k
            prod = out * last
            _warn_if_vanished(True, prod, f"monomial literal {val!r}")
            return prod
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_algebra(text: str, algebra):
    """Parse an algebra element; raises :class:`ParseError` with the offending position."""
    if not text.strip():
        raise ParseError("empty expression", 0)
    p = _AlgebraParser(text, algebra)
    out = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return out


# -- group ring --------------------------------------------------------------------------

def _matching_paren(text: str, i: int) -> int:
    depth = 0
    for j in range(i, len(text)):
        if text[j] == "(":
            depth += 1
        elif text[j] == ")":
            depth -= 1
            if depth == 0:
                return j
    raise ParseError("unbalanced parenthesis", i)


def _top_level_colon(text: str) -> int:
    depth = 0
    for j, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == ":" and depth == 0:
            return j
    return -1


def _word_part(text: str, offset: int):
    from .words import RunWord

    # "x*y^2*x" -> "x y^2 x"; stars inside symbolic exponents are kept
    out, depth = [], 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        out.append(" " if ch == "*" and depth == 0 else ch)
    try:
        return RunWord.parse("".join(out))
    except (ValueError, ParseError) as exc:
        raise ParseError(f"bad word part {text.strip()!r}: {exc}", offset) from None


class _RingParser:
    """Character-level descent; pair literals are ``(word : group)``."""

    def __init__(self, text, ring):
        self.s = text
        self.i = 0
        self.ring = ring

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expr(self):
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
        acc = self.term().scale(sign)
        while self.peek() and self.peek() in "+-":
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
            acc = acc + self.term().scale(sign)
        return acc

    def term(self):
        start = self.i
        acc = self.power()
        while self.peek() in ("*", "("):
            if self.peek() == "*":
                self.i += 1
            rhs = self.power()
            prod = acc * rhs
            _warn_if_vanished(acc and rhs, prod, repr(self.s[start:self.i].strip()))
            acc = prod
        return acc

    def number(self):
        m = re.compile(r"(\d+)(?:\s*/\s*(\d+))?").match(self.s, self.i)
        self.i = m.end()
        if m.group(2) is not None:
            if int(m.group(2)) == 0:
                raise ParseError("zero denominator", m.start(2))
            return Fraction(int(m.group(1)), int(m.group(2)))
        return int(m.group(1))

    def power(self):
        start = self.i
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            self.ws()
            m = re.compile(r"[+-]?\d+").match(self.s, self.i)
            if not m:
                raise ParseError("expected an integer exponent", self.i)
            self.i = m.end()
            k = int(m.group(0))
            if k < 0:
                raise ParseError("negative powers are not defined here", m.start())
            out = base ** k
            _warn_if_vanished(base, out, repr(self.s[start:self.i].strip()))
            return out
        return base

    def atom(self):
        ch = self.peek()
        if ch.isdigit():
            return self.ring.one.scale(self.number())
        if ch != "(":
            raise ParseError(f"unexpected {ch or 'end of input'!r}", self.i)
        close = _matching_paren(self.s, self.i)
        inner = self.s[self.i + 1:close]
        colon = _top_level_colon(inner)
        if colon < 0:
            sub = _RingParser(inner, self.ring)
            out = sub.expr()
            if sub.peek():
                raise ParseError(f"unexpected {sub.peek()!r}", self.i + 1 + sub.i)
            self.i = close + 1
            return out
        word = _word_part(inner[:colon], self.i + 1)
        try:
            group = parse_group(inner[colon + 1:])
        except ParseError:
            raise ParseError(f"bad group part {inner[colon + 1:].strip()!r}", self.i + colon + 2) from None
        self.i = close + 1
        out = self.ring.term(word, group)
        _warn_if_vanished(True, out, f"pair literal {inner.strip()!r}")
        return out


def parse_groupring(text: str, ring):
    """Parse a group-ring element such as ``(x*y^2*x : z(1) t(0) s(1)) + 2*(y : e)``."""
    if not text.strip():
        raise ParseError("empty expression", 0)
    p = _RingParser(text, ring)
    out = p.expr()
    if p.peek():
        raise ParseError(f"unexpected {p.peek()!r}", p.i)
    return out


def parse_element(text: str, grammar: str, context=None):
    """Dispatch on ``grammar`` in {"algebra", "group", "groupring"}."""
    if grammar == "group":
        return parse_group(text)
    if grammar == "algebra":
        from .algebra import MonomialAlgebra

        return parse_algebra(text, context or MonomialAlgebra())
    if grammar == "groupring":
        from .centre import GroupRing

        return parse_groupring(text, context or GroupRing())
    raise ValueError(f"unknown grammar {grammar!r}")
