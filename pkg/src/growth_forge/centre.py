"""The subalgebra B of A[G] generated by x s0^{+-1}, x t0^{+-1}, x u^{+-1}, x and y.

Every product of generators is a single pair (word, group element): the word
spells the letters of the generators used and the group part multiplies the
group letters riding on the x's.  So V^n of B is spanned by pairs
(w, g) with w a factor of length <= n and g in the ball of radius c(w) in G,
where c(w) is the number of x's in w.  Distinct pairs are linearly
independent, which turns every dimension count below into a set count.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import FactorLanguage, MonomialAlgebra
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, ExpressibilityError, InvalidArgument
from .fields import QQ
from .group import GroupElement, is_central, multiply
from .growth import series_from_dims
from .words import (
    RunSequenceSpec,
    RunWord,
    _letter_gap,
    factor_x_profile,
    is_factor,
    max_x_occurrences,
    shortest_bridge,
)

E = GroupElement.identity()


# -- the group ring ----------------------------------------------------------------

class GroupRing:
    """A[G] for a monomial algebra A; only the language and field matter."""

    def __init__(self, algebra: MonomialAlgebra | None = None):
        self.algebra = algebra or MonomialAlgebra()

    @classmethod
    def for_spec(cls, spec: RunSequenceSpec, field=QQ, budget: Budget = DEFAULT_BUDGET):
        return cls(MonomialAlgebra.for_spec(spec, field, budget))

    @classmethod
    def free(cls, field=QQ):
        return cls(MonomialAlgebra.free(field))

    @property
    def field(self):
        return self.algebra.field

    @property
    def spec(self):
        lang = self.algebra.language
        return lang.spec if isinstance(lang, FactorLanguage) else None

    def alive(self, word: RunWord) -> bool:
        if not word.runs:
            return True
        lang = self.algebra.language
        if isinstance(lang, FactorLanguage):
            return is_factor(word, lang.spec, lang.budget)
        return lang.contains(word.materialize())

    def term(self, word, group: GroupElement = E, coeff=1) -> "GroupRingElement":
        if isinstance(word, str):
            word = RunWord.from_str(word)
        return GroupRingElement(self, {(word, group): self.field(coeff)})

    @property
    def one(self):
        return self.term(RunWord(), E)

    @property
    def zero(self):
        return GroupRingElement(self, {})

    def parse(self, text: str) -> "GroupRingElement":
        from .parsing import parse_groupring

        return parse_groupring(text, self)

    def __eq__(self, other):
        return isinstance(other, GroupRing) and self.algebra == other.algebra

    def __hash__(self):
        return hash(self.algebra)


class GroupRingElement:
    """Finite combination of (word, group element) pairs."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GroupRing, terms):
        F = ring.field
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if c != F.zero and ring.alive(k[0])}

    @classmethod
    def _trusted(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        F = self.ring.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = F.add(out.get(k, F.zero), c)
            if v == F.zero:
                out.pop(k, None)
            else:
                out[k] = v
        return GroupRingElement._trusted(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return GroupRingElement._trusted(self.ring, {k: F.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        F = self.ring.field
        k = F(k)
        if k == F.zero:
            return self.ring.zero
        return GroupRingElement._trusted(self.ring, {key: F.mul(k, c) for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            return multiply_AG(self, other)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def single(self):
        """(word, group, coeff) of a one-term element."""
        if len(self.terms) != 1:
            raise InvalidArgument("expected a single-term element")
        ((w, g), c), = self.terms.items()
        return w, g, c

    def __str__(self):
        return format_groupring(self)

    def __repr__(self):
        return f"GroupRingElement({format_groupring(self)!r})"


def multiply_AG(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    """(w1, g1)(w2, g2) = (w1 w2, g1 g2), extended bilinearly; dead words drop."""
    ring = p.ring
    F = ring.field
    out = {}
    for (w1, g1), c1 in p.terms.items():
        for (w2, g2), c2 in q.terms.items():
            w = w1.concat(w2)
            if not ring.alive(w):
                continue
            key = (w, multiply(g1, g2))
            v = F.add(out.get(key, F.zero), F.mul(c1, c2))
            if v == F.zero:
                out.pop(key, None)
            else:
                out[key] = v
    return GroupRingElement._trusted(ring, out)


def _word_text(w: RunWord) -> str:
    from .algebra import format_monomial

    if w.is_exact() and w.length() <= 4096:
        return format_monomial(w.materialize())
    return str(w).replace(" ", "*")


def _term_order(key):
    w, g = key
    if w.is_exact():
        return (0, w.length().to_int(), str(w), g.key())
    return (1, 0, str(w), g.key())


def format_groupring(e: GroupRingElement) -> str:
    if not e.terms:
        return "0"
    F = e.ring.field
    out = []
    for (w, g) in sorted(e.terms, key=_term_order):
        c = e.terms[(w, g)]
        neg = F.characteristic == 0 and c < 0
        mag = -c if neg else c
        body = f"({_word_text(w)} : {g})"
        if mag != 1:
            body = f"{F.fmt(mag)}*{body}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- generators of B ------------------------------------------------------------------

GENERATOR_NAMES = ("xs0", "xs0^-1", "xt0", "xt0^-1", "xu", "xu^-1", "x", "y")
_GROUP_LETTERS = {
    "s0": GroupElement.s_(0), "s0^-1": GroupElement.s_(0, -1),
    "t0": GroupElement.t_(0), "t0^-1": GroupElement.t_(0, -1),
    "u": GroupElement.u_(1), "u^-1": GroupElement.u_(-1),
}
# group letters riding on x, in generator order; "" is the plain x
X_LETTERS = ("s0", "s0^-1", "t0", "t0^-1", "u", "u^-1", "")


def generator_pair(name: str):
    """(letter, group element) of a named generator of B."""
    if name == "y":
        return "y", E
    if name == "x":
        return "x", E
    if name.startswith("x") and name[1:] in _GROUP_LETTERS:
        return "x", _GROUP_LETTERS[name[1:]]
    raise InvalidArgument(f"unknown generator {name!r}")


class BGenerators:
    """The eight fixed generators of B, in their canonical order."""

    names = GENERATOR_NAMES

    def __init__(self, ring: GroupRing):
        self.ring = ring
        self.elements = [ring.term(generator_pair(n)[0], generator_pair(n)[1]) for n in self.names]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def by_name(self, name: str) -> GroupRingElement:
        return self.elements[self.names.index(name)]


# Group part W of the frame: 1, s0^{+-1}, t0^{+-1}, u^{+-1}
W_LETTERS = [E] + [_GROUP_LETTERS[k] for k in ("s0", "s0^-1", "t0", "t0^-1", "u", "u^-1")]


# -- balls in G ---------------------------------------------------------------------------

_BALLS = [frozenset([E])]


# observed ratios |ball(c+1)| / |ball(c)| fall from 5.3 to about 4.4 by c = 7;
# 3 keeps the prediction below the true size
_BALL_GROWTH_FLOOR = 3
# |ball(c)| for c = 0..7, checked against group_ball in the tests
KNOWN_BALL_SIZES = (1, 7, 37, 187, 895, 4105, 18317, 80187)


def check_ball_budget(c: int, budget: Budget = DEFAULT_BUDGET):
    """Refuse radius c up front when even a slow growth estimate exceeds the span limit."""
    if c < len(_BALLS):
        size = len(_BALLS[c])
    elif c < len(KNOWN_BALL_SIZES):
        size = KNOWN_BALL_SIZES[c]
    else:
        top = max(len(_BALLS), len(KNOWN_BALL_SIZES)) - 1
        base = len(_BALLS[top]) if top < len(_BALLS) else KNOWN_BALL_SIZES[top]
        size = base * _BALL_GROWTH_FLOOR ** (c - top)
    if size > budget.span_limit:
        raise BudgetExceeded(f"ball of radius {c} in G has at least {size} elements, "
                             f"over span limit {budget.span_limit}")


def group_ball(c: int, budget: Budget = DEFAULT_BUDGET) -> frozenset:
    """All products of c letters from W (W contains the identity)."""
    check_ball_budget(c, budget)
    while len(_BALLS) <= c:
        prev = _BALLS[-1]
        # rough growth factor is about 4.5; refuse before running out of memory
        if len(prev) * 4 > budget.span_limit:
            raise BudgetExceeded(
                f"ball of radius {len(_BALLS)} in G would exceed span limit {budget.span_limit}"
            )
        nxt = {multiply(g, w) for g in prev for w in W_LETTERS}
        if len(nxt) > budget.span_limit:
            raise BudgetExceeded(f"ball of radius {len(_BALLS)} has {len(nxt)} elements")
        _BALLS.append(frozenset(nxt))
    # cached balls still answer to the caller's budget
    if len(_BALLS[c]) > budget.span_limit:
        raise BudgetExceeded(f"ball of radius {c} has {len(_BALLS[c])} elements")
    return _BALLS[c]


def ball_size(c: int, budget: Budget = DEFAULT_BUDGET) -> int:
    return len(group_ball(c, budget))


# -- growth of B -------------------------------------------------------------------------

def _free_x_profile(ell: int) -> dict:
    from math import comb

    return {c: comb(ell, c) for c in range(ell + 1)}


def b_dim_series(n_max: int, ring: GroupRing, budget: Budget = DEFAULT_BUDGET) -> list:
    """[dim V^0, ..., dim V^n_max] for B, V = span of 1 and the generators."""
    if n_max < 0:
        raise InvalidArgument("n must be >= 0")
    spec = ring.spec
    lang = ring.algebra.language
    if spec is not None:
        check_ball_budget(max_x_occurrences(n_max, spec), budget)
    elif lang.name == "free":
        check_ball_budget(n_max, budget)
    dims = [1]
    total = 1
    for ell in range(1, n_max + 1):
        if spec is not None:
            prof = factor_x_profile(ell, spec)
        elif lang.name == "free":
            prof = _free_x_profile(ell)
        else:
            prof = {}
            for w in lang.words_of_length(ell):
                prof[w.count("x")] = prof.get(w.count("x"), 0) + 1
        for c, cnt in prof.items():
            total += cnt * ball_size(c, budget)
        if total > budget.span_limit * 1000:
            raise BudgetExceeded(f"dim V^{ell} of B exceeds the reporting budget")
        dims.append(total)
    return dims


def b_dim_Vn(n: int, spec: RunSequenceSpec | GroupRing, budget: Budget = DEFAULT_BUDGET) -> int:
    ring = spec if isinstance(spec, GroupRing) else GroupRing.for_spec(spec)
    return b_dim_series(n, ring, budget)[n]


def b_dim_naive(n: int, ring: GroupRing, budget: Budget = DEFAULT_BUDGET) -> int:
    """Independent count: multiply out generator products level by level."""
    gens = BGenerators(ring)
    level = {(RunWord(), E)}
    seen = set(level)
    for _ in range(n):
        nxt = set()
        for w, g in level:
            base = ring.term(w, g)
            for gen in gens:
                for key in (base * gen).terms:
                    nxt.add(key)
        level = nxt
        seen |= nxt
        if len(seen) > budget.span_limit:
            raise BudgetExceeded("naive product set exceeds span limit")
    return len(seen)


@dataclass
class BGrowthReport:
    series: object
    epsilon: float
    window: tuple
    trend_holds: bool
    violations: list = field(default_factory=list)

    def summary(self) -> dict:
        s = self.series.summary()
        s.update({"epsilon": self.epsilon, "trend_window": list(self.window),
                  "trend_holds": self.trend_holds,
                  "violations": [{"n": n, "dim": d, "bound": b} for n, d, b in self.violations[:10]]})
        return s


def b_growth_report(n_max: int, spec: RunSequenceSpec | GroupRing, epsilon: float = 0.5,
                    budget: Budget = DEFAULT_BUDGET, window=None) -> BGrowthReport:
    """Series dim V^n for B with slope fit and the check dim V^n <= n^(2+eps) on the window."""
    ring = spec if isinstance(spec, GroupRing) else GroupRing.for_spec(spec)
    dims = b_dim_series(n_max, ring, budget)
    if window is None:
        window = (max(1, n_max // 2), n_max)
    series = series_from_dims(dims, label="B", window=window)
    lo, hi = window
    violations = []
    for n in range(max(lo, 1), hi + 1):
        bound = n ** (2 + epsilon)
        if dims[n] > bound:
            violations.append((n, dims[n], round(bound, 3)))
    return BGrowthReport(series, epsilon, tuple(window), not violations, violations)


# -- expressing group elements ---------------------------------------------------------------

_BFS_RADIUS = 5
_BFS_LETTERS = ("s0", "s0^-1", "t0", "t0^-1", "u", "u^-1")


@lru_cache(maxsize=1)
def _bfs_table():
    """Shortest letter words (over s0, t0, u and inverses) for the ball of radius 5."""
    best = {E: ()}
    frontier = [E]
    for _ in range(_BFS_RADIUS):
        nxt = []
        for g in frontier:
            word = best[g]
            for name in _BFS_LETTERS:
                h = multiply(g, _GROUP_LETTERS[name])
                if h not in best:
                    best[h] = word + (name,)
                    nxt.append(h)
        frontier = nxt
    return best


def _power_letters(letter: str, e: int):
    inv = {"s0": "s0^-1", "t0": "t0^-1", "u": "u^-1"}
    return [letter] * e if e >= 0 else [inv[letter]] * (-e)


def _free_reduce(letters):
    inv = {"s0": "s0^-1", "s0^-1": "s0", "t0": "t0^-1", "t0^-1": "t0", "u": "u^-1", "u^-1": "u"}
    out = []
    for a in letters:
        if out and inv[out[-1]] == a:
            out.pop()
        else:
            out.append(a)
    return out


def constructive_letters(g: GroupElement):
    """Letter word for g built from z_n = [s_n, t_0], s_n = u^n s0 u^-n, t_m = u^m t0 u^-m."""
    letters = []
    for n, a in g.z:
        if a > 0:
            one = (_power_letters("u", n) + ["s0"] + _power_letters("u", -n) + ["t0"]
                   + _power_letters("u", n) + ["s0^-1"] + _power_letters("u", -n) + ["t0^-1"])
        else:
            # z_n^-1 = t0 s_n t0^-1 s_n^-1
            one = (["t0"] + _power_letters("u", n) + ["s0"] + _power_letters("u", -n) + ["t0^-1"]
                   + _power_letters("u", n) + ["s0^-1"] + _power_letters("u", -n))
        letters += one * abs(a)
    for m, b in g.t:
        letters += _power_letters("u", m) + _power_letters("t0", b) + _power_letters("u", -m)
    for n, c in g.s:
        letters += _power_letters("u", n) + _power_letters("s0", c) + _power_letters("u", -n)
    letters += _power_letters("u", g.u)
    return _free_reduce(letters)


def group_letters_for(g: GroupElement):
    """Shortest letters from a radius-5 search when g is that close, else the constructive word."""
    table = _bfs_table()
    if g in table:
        return list(table[g])
    return constructive_letters(g)


def _product_of_letters(letters) -> GroupElement:
    out = E
    for name in letters:
        out = multiply(out, _GROUP_LETTERS[name])
    return out


def prefix_with_x_count(c: int, spec: RunSequenceSpec) -> RunWord:
    """Shortest prefix of the infinite word containing exactly c x's."""
    if c <= 0:
        return RunWord()
    runs = [("x", 1)]
    for i in range(1, c):
        runs += [("y", _letter_gap(spec, i)), ("x", 1)]
    return RunWord(runs)


@dataclass
class WitnessCertificate:
    """A generator sequence of B whose product is (word, group)."""

    index: int | None
    sequence: list  # generator names, "y^k" for y-paddings
    word: RunWord
    group: GroupElement

    def to_json(self) -> dict:
        return {"schema": "growth-forge/v1", "kind": "witness", "index": self.index,
                "generator sequence": list(self.sequence), "word part": str(self.word),
                "group part": str(self.group), "x count": str(self.word.count("x"))}

    def product(self, ring: GroupRing) -> GroupRingElement:
        return evaluate_sequence(self.sequence, ring)

    def verify(self, ring: GroupRing) -> bool:
        prod = self.product(ring)
        if len(prod.terms) != 1:
            return False
        (w, g), c = next(iter(prod.terms.items()))
        return w == self.word and g == self.group and c == ring.field.one and ring.alive(w)


def evaluate_sequence(sequence, ring: GroupRing) -> GroupRingElement:
    """Multiply out a generator sequence; ``y^k`` tokens stand for (y, e)^k."""
    word_runs = []
    group = E
    for tok in sequence:
        m = re.fullmatch(r"y\^(.+)", tok)
        if m:
            word_runs.append(("y", RunWord.parse("y^(" + m.group(1) + ")").runs[0][1]))
            continue
        letter, g = generator_pair(tok)
        word_runs.append((letter, 1))
        group = multiply(group, g)
    word = RunWord(word_runs)
    # the product of the pairs is (word, group) exactly when word survives
    return ring.term(word, group) if ring.alive(word) else ring.zero


def _pad_token(n) -> str:
    text = str(n)
    return f"y^{text}" if text.isdigit() else f"y^({text})"


def express_in_B(g: GroupElement, c_max: int, spec: RunSequenceSpec):
    """Generator sequence of B with product (w, g), w a factor with <= c_max x's.

    The x-carrying generators realise a letter word for g; consecutive ones
    are separated by the y-gaps of the shortest prefix with that many x's.
    Returns None if the letter word needs more than c_max x's.
    """
    letters = group_letters_for(g)
    if _product_of_letters(letters) != g:
        raise ExpressibilityError(f"letter word for {g} does not multiply back to it")
    c = len(letters)
    if c > c_max:
        return None
    if c == 0:
        return []
    seq = []
    for i, name in enumerate(letters):
        if i:
            seq.append(_pad_token(_letter_gap(spec, i)))
        seq.append("x" + name)
    return seq


def certificate_for(g: GroupElement, c_max: int, spec: RunSequenceSpec, index=None):
    seq = express_in_B(g, c_max, spec)
    if seq is None:
        return None
    return WitnessCertificate(index, seq, prefix_with_x_count(len(group_letters_for(g)), spec), g)


def central_witness(n: int, spec: RunSequenceSpec, c_max: int | None = None,
                    check_degree: int = 2) -> tuple:
    """(a_n, z_n) in B together with its certificate.

    Also checks at truncation that r (a_n, z_n) = (r a_n, z_n) and
    (a_n, z_n) r = (a_n r, z_n) for r running over the surviving words of
    length <= check_degree, and that z_n commutes with the generators.
    """
    if c_max is None:
        c_max = 4 * abs(n) + 4
    zn = GroupElement.z_(n)
    cert = certificate_for(zn, c_max, spec, index=n)
    if cert is None:
        raise ExpressibilityError(f"z_{n} needs more than {c_max} x's")
    ring = GroupRing.for_spec(spec)
    elem = cert.product(ring)
    if not cert.verify(ring) or not is_central(cert.group):
        raise ExpressibilityError(f"witness for z_{n} failed to verify")
    alg = ring.algebra
    for ell in range(check_degree + 1):
        for r in (alg.language.words_of_length(ell) if ell else [""]):
            rr = ring.term(r, E)
            left, right = rr * elem, elem * rr
            want_left = ring.term(RunWord.from_str(r).concat(cert.word), zn)
            want_right = ring.term(cert.word.concat(RunWord.from_str(r)), zn)
            if left != want_left or right != want_right:
                raise ExpressibilityError(f"bimodule check failed for z_{n} at r = {r!r}")
    for gen in W_LETTERS:
        if multiply(gen, zn) != multiply(zn, gen):
            raise ExpressibilityError(f"z_{n} is not central")
    return elem, cert


def _bridge_len_bound(w1: RunWord, w2: RunWord):
    total = w1.length() + w2.length()
    return total * 4 + 64


def join_with_padding(w1: RunWord, w2: RunWord, spec: RunSequenceSpec, len_bound=None):
    """Shortest bridge w with w1 w w2 a factor (w is a plain word, so (w, e) lies in B)."""
    if len_bound is None:
        len_bound = _bridge_len_bound(w1, w2)
    return shortest_bridge(w1, w2, len_bound, spec)


@dataclass
class IndependenceReport:
    ok: bool
    products: list  # (exponent vector, word part, group part)

    def to_json(self) -> dict:
        return {"schema": "growth-forge/v1", "kind": "independence", "ok": self.ok,
                "products": [{"exponents": list(e), "word part": str(w), "group part": str(g)}
                             for e, w, g in self.products]}


def independence_report(degree: int, indices, spec: RunSequenceSpec) -> IndependenceReport:
    """All products of <= degree witnesses, joined by plain-word paddings."""
    indices = sorted(set(indices))
    if degree < 0:
        raise InvalidArgument("degree must be >= 0")
    ring = GroupRing.for_spec(spec)
    wits = {n: central_witness(n, spec, check_degree=0)[0] for n in indices}
    products = []
    ok = True
    seen = {}
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(indices, total):
            acc = ring.one
            for n in combo:
                w_acc = acc.single()[0]
                w_n = wits[n].single()[0]
                pad = join_with_padding(w_acc, w_n, spec) if w_acc.runs else RunWord()
                if pad is None:
                    ok = False
                    break
                acc = acc * ring.term(pad, E) * wits[n]
                if not acc:
                    ok = False
                    break
            exps = tuple(combo.count(n) for n in indices)
            if not acc:
                ok = False
                products.append((exps, RunWord(), E))
                continue
            w, g, _ = acc.single()
            want = GroupElement(z={n: e for n, e in zip(indices, exps)})
            if g != want or g in seen:
                ok = False
            seen[g] = exps
            products.append((exps, w, g))
    return IndependenceReport(ok, products)


def independence_check(degree: int, indices, spec: RunSequenceSpec) -> bool:
    return independence_report(degree, indices, spec).ok


def prime_witness_B(b1: GroupRingElement, b2: GroupRingElement, len_bound, c_max=None,
                    spec: RunSequenceSpec | None = None):
    """A single term c = (w, e) of B with b1 c b2 != 0, or None.

    The group part stays e, so c lies in B for any factor w (it is a product
    of the generators x and y).  Candidate words are the shortest bridges
    between word parts of b1 and b2, tried in shortlex order.
    """
    if not b1 or not b2:
        raise InvalidArgument("prime_witness_B needs nonzero elements")
    ring = b1.ring
    spec = spec or ring.spec
    cands = set()
    for (w1, _), (w2, _) in itertools.product(b1.terms, b2.terms):
        w = shortest_bridge(w1, w2, len_bound, spec) if spec else None
        if w is not None and (c_max is None or w.count("x") <= c_max):
            cands.add(w)
    for w in sorted(cands, key=lambda r: (r.length().bit_length(), r.length(), str(r))):
        c = ring.term(w, E)
        if b1 * c * b2:
            return c
    return None


def x_ideal_nilpotency_B(d: int, k_max: int, spec: RunSequenceSpec | GroupRing,
                         budget: Budget = DEFAULT_BUDGET):
    """Least k <= k_max with (V^d x V^d)^k = 0 in B, else None.

    Products of pairs vanish exactly when their words die, so the search runs
    on word parts: V^d carries every surviving word of length <= d.
    """
    if d < 0 or k_max < 1:
        raise InvalidArgument("need d >= 0 and k_max >= 1")
    ring = spec if isinstance(spec, GroupRing) else GroupRing.for_spec(spec)
    alg = ring.algebra
    lang = alg.language
    short = [""]
    for ell in range(1, d + 1):
        short += lang.words_of_length(ell)
    block = sorted({u + "x" + w for u in short for w in short if alg.alive(u + "x" + w)})
    # b^k_max != 0 for a single block word already rules out vanishing
    if any(alg.alive(b * k_max) for b in block):
        return None
    cur = set(block)
    for k in range(1, k_max + 1):
        if not cur:
            return k
        if k == k_max:
            break
        cur = {a + b for a in cur for b in block if alg.alive(a + b)}
        if len(cur) > budget.span_limit:
            raise BudgetExceeded("word set for (V^d x V^d)^k exceeds span limit")
    return None


def forced_nilpotency_bound(d: int, spec: RunSequenceSpec, k_cap: int = 4096):
    """Least k with max_x(k (2d+1)) < k: words that long cannot carry k x's."""
    for k in range(1, k_cap + 1):
        if max_x_occurrences(k * (2 * d + 1), spec) < k:
            return k
    return None
