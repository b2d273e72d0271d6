"""Executable versions of the three growth lemmas for monomial algebras.

* :func:`annihilator_search`: kernel of a -> (a x_1, ..., a x_d) on V^n,
  where x_1..x_d is a basis of V^m z.
* :func:`two_sided_growth` / :func:`reduction_search`: dimension of
  V^n z V^n, and certified containments V^m z V^p in the sum of the
  V^i z V^j with (i, j) earlier in the order below.
* :func:`ideal_power_growth` / :func:`nilpotency_index`: growth of
  V^{dn} u^n V^{dn} and vanishing of (V^d u)^k.

Pairs are ordered by (i + j, i): (i, j) precedes (m, p) when i + j < m + p,
or the sums agree and i < m.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraElement, Frame, format_element, shortlex
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, InvalidArgument, NilpotentInput
from .growth import power_basis, power_word_levels
from .linalg import Echelon, left_kernel


def precedes(a, b) -> bool:
    """(i, j) strictly before (m, p) in the (sum, first) order."""
    (i, j), (m, p) = a, b
    return i + j < m + p or (i + j == m + p and i < m)


def pairs_in_order(bound: int):
    for s in range(bound + 1):
        for m in range(s + 1):
            yield m, s - m


def _require_nonzero(z: AlgebraElement, what: str = "z"):
    if not z:
        raise InvalidArgument(f"{what} must be nonzero")


def _single_word(z: AlgebraElement):
    """The word of a monic monomial, else None."""
    if len(z.terms) == 1:
        (w, c), = z.terms.items()
        if c == z.algebra.field.one:
            return w
    return None


def _span_basis(elements, field):
    ech = Echelon(field, order=shortlex)
    for e in elements:
        if e:
            ech.add(e.terms)
    return ech


# -- annihilators ----------------------------------------------------------------

@dataclass
class AnnihilatorStep:
    n: int
    dim_Vn: int
    d: int
    dim_target: int
    rank: int
    kernel_dim: int

    def rank_nullity_ok(self) -> bool:
        return self.kernel_dim == self.dim_Vn - self.rank and self.rank <= self.d * self.dim_target


@dataclass
class AnnihilatorResult:
    element: AlgebraElement | None
    m: int
    steps: list = field(default_factory=list)
    basis: list = field(default_factory=list)  # x_1..x_d

    def verify(self, z: AlgebraElement, frame: Frame, budget: Budget = DEFAULT_BUDGET) -> bool:
        """Re-expand a * v * z for every v in a basis of V^m."""
        if self.element is None:
            return False
        return all(not (self.element * v * z) for v in power_basis(frame, self.m, budget))


def _canonical_kernel_element(elements, field):
    # pivot at the shortlex-largest monomial, then keep the row whose leading
    # monomial is smallest
    def order(w):
        return (-len(w), tuple(-ord(c) for c in w))

    ech = Echelon(field, order=order)
    for e in elements:
        ech.add(e.terms)
    best = None
    for pivot, (row, _) in ech.rows.items():
        if best is None or shortlex(pivot) < shortlex(best[0]):
            best = (pivot, row)
    return best[1]


def annihilator_report(z: AlgebraElement, m: int, n_max: int, frame: Frame,
                       budget: Budget = DEFAULT_BUDGET) -> AnnihilatorResult:
    """Search n = 1..n_max for a nonzero a in V^n with a V^m z = 0."""
    _require_nonzero(z)
    if m < 0 or n_max < 1:
        raise InvalidArgument("need m >= 0 and n_max >= 1")
    alg = frame.algebra
    F = alg.field
    vm = power_basis(frame, m, budget)
    xs_ech = _span_basis([v * z for v in vm], F)
    xs = [AlgebraElement._trusted(alg, r) for r in xs_ech.basis()]
    result = AnnihilatorResult(None, m, basis=xs)
    for n in range(1, n_max + 1):
        vn = power_basis(frame, n, budget)
        target = _span_basis([v * z for v in power_basis(frame, n + m, budget)], F).rank
        rows = []
        for a in vn:
            row = {}
            for k, xk in enumerate(xs):
                for w, c in (a * xk).terms.items():
                    row[(k, w)] = c
            rows.append(row)
        if len(rows) * (len(xs) + 1) > budget.span_limit:
            raise BudgetExceeded("annihilator matrix exceeds span limit")
        rank, kernel = left_kernel(rows, F)
        result.steps.append(AnnihilatorStep(n, len(vn), len(xs), target, rank, len(kernel)))
        if kernel:
            elems = []
            for vec in kernel:
                e = alg.zero
                for c, a in zip(vec, vn):
                    if c != F.zero:
                        e = e + a.scale(c)
                elems.append(e)
            result.element = AlgebraElement._trusted(alg, _canonical_kernel_element(elems, F))
            return result
    return result


def annihilator_search(z: AlgebraElement, m: int, n_max: int, frame: Frame,
                       budget: Budget = DEFAULT_BUDGET):
    """Nonzero a with a V^m z = 0 found in some V^n, n <= n_max, else None."""
    return annihilator_report(z, m, n_max, frame, budget).element


# -- two-sided spans ----------------------------------------------------------------

def _sandwich_words_standard(lang, zw: str, m: int, p: int) -> set:
    """Surviving words u z w with |u| <= m and |w| <= p (standard frame)."""
    out = set()
    lz = len(zw)
    for L in range(lz, m + p + lz + 1):
        lo = max(0, L - lz - p)
        hi = min(m, L - lz)
        if lo > hi:
            continue
        for f in lang.words_of_length(L):
            for a in range(lo, hi + 1):
                if f.startswith(zw, a):
                    out.add(f)
                    break
    return out


def _sandwich_words(z: AlgebraElement, m: int, p: int, frame: Frame, budget: Budget):
    zw = _single_word(z)
    gens = frame.monomial_words()
    if zw is None or gens is None:
        return None
    alg = frame.algebra
    if gens == ["", "x", "y"]:
        return _sandwich_words_standard(alg.language, zw, m, p)
    levels = power_word_levels(frame, max(m, p), budget)
    out = set()
    for u in levels[m]:
        if not alg.alive(u + zw):
            continue
        for w in levels[p]:
            if alg.alive(u + zw + w):
                out.add(u + zw + w)
        if len(out) > budget.span_limit:
            raise BudgetExceeded("two-sided span exceeds span limit")
    return out


def sandwich_dim(z: AlgebraElement, m: int, p: int, frame: Frame,
                 budget: Budget = DEFAULT_BUDGET) -> int:
    """dim V^m z V^p."""
    words = _sandwich_words(z, m, p, frame, budget)
    if words is not None:
        return len(words)
    F = frame.algebra.field
    ech = Echelon(F, order=shortlex)
    left = power_basis(frame, m, budget)
    right = power_basis(frame, p, budget)
    for a in left:
        az = a * z
        if not az:
            continue
        for b in right:
            prod = az * b
            if prod:
                ech.add(prod.terms)
        if ech.rank > budget.span_limit:
            raise BudgetExceeded("two-sided span exceeds span limit")
    return ech.rank


def two_sided_growth(z: AlgebraElement, n: int, frame: Frame, budget: Budget = DEFAULT_BUDGET) -> int:
    """dim of span{a z b : a, b in V^n}."""
    _require_nonzero(z)
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    return sandwich_dim(z, n, n, frame, budget)


# -- reductions ---------------------------------------------------------------------

@dataclass
class ReductionRelation:
    """V^m z V^p lies in the sum of V^i z V^j over earlier pairs (i, j).

    ``rows`` has one entry per spanning element of V^m z V^p::

        {"monomial": text, "left": u, "right": w,
         "combination": [{"i", "j", "monomial", "left", "right", "coeff"}]}

    where each combination entry stands for coeff * (left * z * right) with
    left in V^i and right in V^j.
    """

    m: int
    p: int
    z: str
    rows: list

    def to_json(self) -> dict:
        return {"schema": "growth-forge/v1", "kind": "reduction", "z": self.z,
                "m": self.m, "p": self.p, "rows": self.rows}

    def verify(self, z: AlgebraElement, frame: Frame, budget: Budget = DEFAULT_BUDGET) -> bool:
        return verify_reduction(self, z, frame, budget)


def _word_in_power(word: str, i: int, frame: Frame, budget, cache) -> bool:
    key = i
    if key not in cache:
        gens = frame.monomial_words()
        if gens is not None:
            cache[key] = power_word_levels(frame, i, budget)[i]
        else:
            ech = _span_basis(power_basis(frame, i, budget), frame.algebra.field)
            cache[key] = ech
    got = cache[key]
    if isinstance(got, set):
        return word in got
    return got.contains({word: frame.algebra.field.one})


def verify_reduction(rel: ReductionRelation, z: AlgebraElement, frame: Frame,
                     budget: Budget = DEFAULT_BUDGET) -> bool:
    """Re-expand every certificate row and check it spans V^m z V^p."""
    alg = frame.algebra
    F = alg.field
    cache = {}
    covered = Echelon(F, order=shortlex)
    for row in rel.rows:
        lhs = alg.monomial(row["left"]) * z * alg.monomial(row["right"])
        if not _word_in_power(row["left"], rel.m, frame, budget, cache):
            return False
        if not _word_in_power(row["right"], rel.p, frame, budget, cache):
            return False
        total = alg.zero
        for term in row["combination"]:
            if not precedes((term["i"], term["j"]), (rel.m, rel.p)):
                return False
            if not _word_in_power(term["left"], term["i"], frame, budget, cache):
                return False
            if not _word_in_power(term["right"], term["j"], frame, budget, cache):
                return False
            piece = alg.monomial(term["left"]) * z * alg.monomial(term["right"])
            total = total + piece.scale(F(term["coeff"]))
        if total != lhs:
            return False
        if lhs:
            covered.add(lhs.terms)
    # the rows must account for the whole of V^m z V^p
    target = sandwich_dim(z, rel.m, rel.p, frame, budget)
    return covered.rank == target


def _first_positions(lang, zw: str, L: int) -> dict:
    """first occurrence index of zw -> list of words, over surviving words of length L."""
    out = {}
    for f in lang.words_of_length(L):
        a = f.find(zw)
        if a != -1:
            out.setdefault(a, []).append(f)
    return out


def _reduction_standard(z: AlgebraElement, zw: str, bound: int, frame: Frame):
    lang = frame.algebra.language
    lz = len(zw)
    firsts = {}
    for m, p in pairs_in_order(bound):
        L = m + lz + p
        if L not in firsts:
            firsts[L] = _first_positions(lang, zw, L)
        # a word of V^m z V^p outside earlier spans must have length m+|z|+p
        # and its first z at position m
        if m in firsts[L]:
            continue
        rows = []
        for f in sorted(_sandwich_words_standard(lang, zw, m, p), key=shortlex):
            a = f.find(zw)
            b = len(f) - lz - a
            lhs_a = next(i for i in range(len(f) - lz + 1)
                         if f.startswith(zw, i) and i <= m and len(f) - lz - i <= p)
            rows.append({
                "monomial": f,
                "left": f[:lhs_a],
                "right": f[lhs_a + lz:],
                "combination": [{"i": a, "j": b, "monomial": f, "left": f[:a],
                                 "right": f[a + lz:], "coeff": "1"}],
            })
        return ReductionRelation(m, p, format_element(z), rows)
    return None


def _reduction_general(z: AlgebraElement, bound: int, frame: Frame, budget: Budget):
    alg = frame.algebra
    F = alg.field
    bases = [power_basis(frame, i, budget) for i in range(bound + 1)]
    words = _basis_words(bases)
    ech = Echelon(F, order=shortlex, track=True)
    for m, p in pairs_in_order(bound):
        pieces = []
        for a in words[m]:
            az = alg.monomial(a) * z if isinstance(a, str) else a * z
            for b in words[p]:
                prod = az * (alg.monomial(b) if isinstance(b, str) else b)
                if prod:
                    pieces.append((a, b, prod))
        rows, ok = [], True
        for a, b, prod in pieces:
            res, combo = ech.reduce(prod.terms)
            if res:
                ok = False
                break
            comb = []
            for lbl, c in sorted(combo.items()):
                i, j, u, w = ech.label(lbl)
                comb.append({"i": i, "j": j,
                             "monomial": format_element(_sandwich(alg, u, z, w)),
                             "left": u, "right": w, "coeff": F.fmt(c)})
            rows.append({"monomial": format_element(prod), "left": a, "right": b,
                         "combination": comb})
        if ok:
            return ReductionRelation(m, p, format_element(z), rows)
        for a, b, prod in pieces:
            ech.add(prod.terms, label=(m, p, a, b))
        if ech.rank > budget.span_limit:
            raise BudgetExceeded("reduction search exceeds span limit")
    return None


def _sandwich(alg, u, z, w):
    return alg.monomial(u) * z * alg.monomial(w)


def _basis_words(bases):
    out = []
    for basis in bases:
        ws = []
        for e in basis:
            w = _single_word(e)
            if w is None:
                raise InvalidArgument("general reduction search needs a monomial frame")
            ws.append(w)
        out.append(ws)
    return out


def reduction_search(z: AlgebraElement, bound: int, frame: Frame,
                     budget: Budget = DEFAULT_BUDGET):
    """Least pair (m, p), m + p <= bound, with V^m z V^p inside earlier spans.

    Returns a :class:`ReductionRelation` (certificate included) or None.
    """
    _require_nonzero(z)
    if bound < 0:
        raise InvalidArgument("bound must be >= 0")
    zw = _single_word(z)
    if zw is not None and frame.is_standard():
        return _reduction_standard(z, zw, bound, frame)
    return _reduction_general(z, bound, frame, budget)


# -- ideal powers ---------------------------------------------------------------------

DEFAULT_POWER_BOUND = 64


def nilpotent_power(u: AlgebraElement, power_bound: int = DEFAULT_POWER_BOUND):
    """Least k <= power_bound with u^k = 0, else None."""
    p = u
    for k in range(1, power_bound + 1):
        if not p:
            return k
        p = p * u
    return None


def ideal_power_growth(u: AlgebraElement, d: int, n: int, frame: Frame,
                       power_bound: int = DEFAULT_POWER_BOUND,
                       budget: Budget = DEFAULT_BUDGET) -> int:
    """dim V^{dn} u^n V^{dn}; rejects u with u^k = 0 for some k <= power_bound."""
    _require_nonzero(u, "u")
    if d < 1 or n < 0:
        raise InvalidArgument("need d >= 1 and n >= 0")
    k = nilpotent_power(u, power_bound)
    if k is not None:
        raise NilpotentInput(f"u is nilpotent: u^{k} = 0", power=k)
    return sandwich_dim(u**n, d * n, d * n, frame, budget)


def nilpotency_index(u: AlgebraElement, d: int, k_max: int, frame: Frame,
                     budget: Budget = DEFAULT_BUDGET):
    """Least k <= k_max with (V^d u)^k = 0, else None."""
    _require_nonzero(u, "u")
    if d < 0 or k_max < 1:
        raise InvalidArgument("need d >= 0 and k_max >= 1")
    alg = frame.algebra
    uw = _single_word(u)
    gens = frame.monomial_words()
    if uw is not None and gens is not None:
        factor = sorted({v + uw for v in power_word_levels(frame, d, budget)[d]
                         if alg.alive(v + uw)}, key=shortlex)
        cur = set(factor)
        for k in range(1, k_max + 1):
            if not cur:
                return k
            if k == k_max:
                break
            cur = {w + s for w in cur for s in factor if alg.alive(w + s)}
            if len(cur) > budget.span_limit:
                raise BudgetExceeded("power span exceeds span limit")
        return None
    F = alg.field
    s_ech = _span_basis([v * u for v in power_basis(frame, d, budget)], F)
    factor = [AlgebraElement._trusted(alg, r) for r in s_ech.basis()]
    cur = factor
    for k in range(1, k_max + 1):
        if not cur:
            return k
        if k == k_max:
            break
        ech = _span_basis([a * s for a in cur for s in factor], F)
        if ech.rank > budget.span_limit:
            raise BudgetExceeded("power span exceeds span limit")
        cur = [AlgebraElement._trusted(alg, r) for r in ech.basis()]
    return None


# -- primeness -----------------------------------------------------------------------

def prime_witness(w1: str, w2: str, len_bound: int, algebra):
    """Shortest, then lex-least, word w with w1 w w2 nonzero and |w| <= len_bound."""
    for w in (w1, w2):
        if not isinstance(w, str) or not algebra.alive(w):
            raise InvalidArgument(f"{w!r} is not a nonzero monomial")
    if w1 == "" or w2 == "":
        return ""
    return algebra.language.bridge(w1, w2, len_bound)


def fitted_quadratic_constant(values) -> tuple:
    """(min dim/n^2, argmin) over (n, dim) pairs; the C of a C n^2 lower bound."""
    from fractions import Fraction

    best = None
    for n, dim in values:
        r = Fraction(dim, n * n)
        if best is None or r < best[0]:
            best = (r, n)
    return best


__all__ = [
    "AnnihilatorResult", "ReductionRelation", "annihilator_report", "annihilator_search",
    "fitted_quadratic_constant", "ideal_power_growth", "nilpotency_index", "pairs_in_order",
    "precedes", "prime_witness", "reduction_search", "sandwich_dim", "two_sided_growth",
    "verify_reduction",
]
