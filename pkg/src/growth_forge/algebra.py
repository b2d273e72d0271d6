"""Monomial algebras K<x, y>/I where I is spanned by the forbidden words.

A *language* decides which words survive.  The main one is the factor
language of the infinite word (:class:`FactorLanguage`); the free algebra and
small regular controls are available for comparison runs.  Monomials are
plain strings over ``"xy"`` with ``""`` the identity.
"""
from __future__ import annotations

import re
from functools import lru_cache

from .config import DEFAULT_BUDGET, Budget
from .errors import InvalidArgument
from .fields import QQ
from .words import RunSequenceSpec, factor_set, is_factor_str, shortest_bridge

LETTERS = "xy"


def shortlex(word: str):
    return (len(word), word)


class FactorLanguage:
    """Words that occur in the infinite word for the given run sequence."""

    factorial = True

    def __init__(self, spec: RunSequenceSpec | None = None, budget: Budget = DEFAULT_BUDGET):
        self.spec = spec or RunSequenceSpec.geometric(2)
        self.budget = budget
        self.name = f"factors({self.spec})"

    def contains(self, word: str) -> bool:
        return is_factor_str(word, self.spec, self.budget)

    def words_of_length(self, ell: int):
        return sorted(factor_set(ell, self.spec, self.budget))

    def bridge(self, w1: str, w2: str, len_bound: int):
        return shortest_bridge(w1, w2, len_bound, self.spec, self.budget)

    def __eq__(self, other):
        return isinstance(other, FactorLanguage) and (self.spec, self.budget) == (other.spec, other.budget)

    def __hash__(self):
        return hash(("factors", self.spec, self.budget))


class FreeLanguage:
    """Every word survives: the free algebra."""

    factorial = True
    name = "free"

    def contains(self, word: str) -> bool:
        return True

    def words_of_length(self, ell: int):
        return _all_words(ell)

    def bridge(self, w1, w2, len_bound):
        return _bfs_bridge(self, w1, w2, len_bound)

    def __eq__(self, other):
        return isinstance(other, FreeLanguage)

    def __hash__(self):
        return hash("free")


class PatternLanguage:
    """Words matching a regular expression (must be closed under subwords).

    ``PatternLanguage.control()`` is the non-prime control {y^a, y^a x}.
    """

    factorial = True

    def __init__(self, pattern: str, name: str | None = None):
        self.pattern = pattern
        self._re = re.compile(pattern)
        self.name = name or f"pattern({pattern})"

    @classmethod
    def control(cls):
        return cls(r"y*x?", "control(y^a, y^a x)")

    def contains(self, word: str) -> bool:
        return self._re.fullmatch(word) is not None

    def words_of_length(self, ell: int):
        return [w for w in _all_words(ell) if self.contains(w)]

    def bridge(self, w1, w2, len_bound):
        return _bfs_bridge(self, w1, w2, len_bound)

    def __eq__(self, other):
        return isinstance(other, PatternLanguage) and other.pattern == self.pattern

    def __hash__(self):
        return hash(("pattern", self.pattern))


@lru_cache(maxsize=64)
def _all_words_cached(ell: int):
    if ell == 0:
        return ("",)
    prev = _all_words_cached(ell - 1)
    return tuple(w + c for w in prev for c in LETTERS)


def _all_words(ell: int):
    if ell > 22:
        raise InvalidArgument("refusing to list all words longer than 22 letters")
    return list(_all_words_cached(ell))


def _bfs_bridge(lang, w1: str, w2: str, len_bound: int):
    if not lang.contains(w1) or not lang.contains(w2):
        return None
    frontier = [""]
    for n in range(len_bound + 1):
        for w in frontier:
            if lang.contains(w1 + w + w2):
                return w
        if n == len_bound:
            break
        # factorial language: only extend words that can still occur
        frontier = [w + c for w in frontier for c in LETTERS if lang.contains(w + c)]
    return None


class MonomialAlgebra:
    """K<x, y> modulo the span of words outside ``language``."""

    def __init__(self, language=None, field=QQ):
        self.language = language or FactorLanguage()
        self.field = field

    @classmethod
    def for_spec(cls, spec: RunSequenceSpec, field=QQ, budget: Budget = DEFAULT_BUDGET):
        return cls(FactorLanguage(spec, budget), field)

    @classmethod
    def free(cls, field=QQ):
        return cls(FreeLanguage(), field)

    @classmethod
    def control(cls, field=QQ):
        return cls(PatternLanguage.control(), field)

    def alive(self, word: str) -> bool:
        return word == "" or self.language.contains(word)

    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def monomial(self, word: str, coeff=1) -> "AlgebraElement":
        if any(c not in LETTERS for c in word):
            raise InvalidArgument(f"bad monomial {word!r}")
        return AlgebraElement(self, {word: self.field(coeff)})

    @property
    def one(self):
        return self.monomial("")

    @property
    def zero(self):
        return AlgebraElement(self, {})

    @property
    def x(self):
        return self.monomial("x")

    @property
    def y(self):
        return self.monomial("y")

    def standard_frame(self) -> "Frame":
        return Frame([self.one, self.x, self.y])

    def parse(self, text: str) -> "AlgebraElement":
        from .parsing import parse_algebra

        return parse_algebra(text, self)

    def __eq__(self, other):
        return isinstance(other, MonomialAlgebra) and (self.language, self.field) == (other.language, other.field)

    def __hash__(self):
        return hash((self.language, self.field))

    def __repr__(self):
        return f"MonomialAlgebra({self.language.name}, {self.field.name})"


def format_monomial(word: str) -> str:
    if not word:
        return "1"
    parts = []
    for m in re.finditer(r"x+|y+", word):
        run = m.group(0)
        parts.append(run[0] if len(run) == 1 else f"{run[0]}^{len(run)}")
    return "*".join(parts)


class AlgebraElement:
    """Finite combination of surviving monomials with nonzero coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: MonomialAlgebra, terms):
        F = algebra.field
        clean = {}
        for w, c in terms.items():
            if c == F.zero or not algebra.alive(w):
                continue
            clean[w] = c
        self.algebra = algebra
        self.terms = clean

    @classmethod
    def _trusted(cls, algebra, terms):
        obj = cls.__new__(cls)
        obj.algebra = algebra
        obj.terms = terms
        return obj

    # -- ring operations ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise InvalidArgument("elements of different algebras")
            return other
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.algebra.monomial("", other) if other else self.algebra.zero
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.algebra.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = F.add(out.get(w, F.zero), c)
            if v == F.zero:
                out.pop(w, None)
            else:
                out[w] = v
        return AlgebraElement._trusted(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.algebra.field
        return AlgebraElement._trusted(self.algebra, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        F = self.algebra.field
        k = F(k)
        if k == F.zero:
            return self.algebra.zero
        return AlgebraElement._trusted(self.algebra, {w: F.mul(k, c) for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidArgument("negative power")
        out = self.algebra.one
        for _ in range(k):
            out = out * self
            if not out:
                break
        return out

    # -- inspection ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, AlgebraElement) else other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> str:
        """Shortlex-largest monomial."""
        return max(self.terms, key=shortlex)

    def support(self):
        return sorted(self.terms, key=shortlex)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"AlgebraElement({format_element(self)!r})"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in the quotient algebra; dead monomials are dropped."""
    alg = a.algebra
    F = alg.field
    out = {}
    alive = alg.alive
    for u, cu in a.terms.items():
        for w, cw in b.terms.items():
            word = u + w
            if not alive(word):
                continue
            v = F.add(out.get(word, F.zero), F.mul(cu, cw))
            if v == F.zero:
                out.pop(word, None)
            else:
                out[word] = v
    return AlgebraElement._trusted(alg, out)


def format_element(e: AlgebraElement) -> str:
    """Canonical text: shortlex term order, ``3*x*y^2 + y`` style."""
    if not e.terms:
        return "0"
    F = e.algebra.field
    out = []
    for w in e.support():
        c = e.terms[w]
        neg = F.characteristic == 0 and c < 0
        mag = -c if neg else c
        mono = format_monomial(w)
        if mag == 1:
            body = mono
        elif w == "":
            body = F.fmt(mag)
        else:
            body = f"{F.fmt(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class Frame:
    """Finite spanning set containing 1 that generates the algebra."""

    def __init__(self, elements):
        elements = list(elements)
        if not elements:
            raise InvalidArgument("frame must be nonempty")
        alg = elements[0].algebra
        if any(e.algebra != alg for e in elements):
            raise InvalidArgument("frame elements live in different algebras")
        if not any(e == alg.one for e in elements):
            raise InvalidArgument("frame must contain 1")
        self.algebra = alg
        self.elements = elements

    @classmethod
    def standard(cls, algebra: MonomialAlgebra) -> "Frame":
        return algebra.standard_frame()

    def monomial_words(self):
        """Frame words if every element is a monic monomial, else None."""
        words = []
        one = self.algebra.field.one
        for e in self.elements:
            if len(e.terms) == 1:
                (w, c), = e.terms.items()
                if c == one:
                    words.append(w)
                    continue
            elif not e.terms:
                continue
            return None
        return sorted(set(words), key=shortlex)

    def is_standard(self) -> bool:
        return self.monomial_words() == ["", "x", "y"]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "Frame([" + ", ".join(map(str, self.elements)) + "])"
