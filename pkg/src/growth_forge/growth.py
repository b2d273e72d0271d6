"""Frame powers V^n, their dimensions, and fitted growth constants."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraElement, FactorLanguage, Frame, shortlex
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, InvalidArgument
from .linalg import Echelon
from .words import factor_counts


def _check_span(size: int, budget: Budget):
    if size > budget.span_limit:
        raise BudgetExceeded(f"span of {size} vectors exceeds span limit {budget.span_limit}")


def power_word_levels(frame: Frame, n: int, budget: Budget = DEFAULT_BUDGET):
    """For a monomial frame: list L with L[k] = set of nonzero words of V^k."""
    gens = frame.monomial_words()
    if gens is None:
        raise InvalidArgument("power_word_levels needs a frame of monomials")
    alg = frame.algebra
    lang = alg.language
    levels = [{""}]
    if gens == ["", "x", "y"]:
        # V^k is every surviving word of length <= k
        acc = {""}
        for k in range(1, n + 1):
            acc = acc | set(lang.words_of_length(k))
            _check_span(len(acc), budget)
            levels.append(acc)
        return levels
    cur = {""}
    fresh = {""}
    for _ in range(n):
        new = set()
        for w in fresh:
            for g in gens:
                if g and alg.alive(w + g) and (w + g) not in cur:
                    new.add(w + g)
        cur = cur | new
        _check_span(len(cur), budget)
        levels.append(cur)
        fresh = new
    return levels


def power_words(frame: Frame, n: int, budget: Budget = DEFAULT_BUDGET) -> set:
    return power_word_levels(frame, n, budget)[n]


def power_basis_levels(frame: Frame, n: int, budget: Budget = DEFAULT_BUDGET):
    """Echelon bases of V^0..V^n for any frame; returns (echelon, level ranks, rows by level)."""
    alg = frame.algebra
    ech = Echelon(alg.field, order=shortlex)
    ech.add(alg.one.terms)
    new_rows = [dict(alg.one.terms)]
    ranks = [1]
    rows_by_level = [list(new_rows)]
    gens = [e for e in frame.elements if e]
    for _ in range(n):
        fresh = []
        for r in new_rows:
            elem = AlgebraElement._trusted(alg, r)
            for g in gens:
                prod = elem * g
                if prod and ech.add(prod.terms):
                    fresh.append(dict(prod.terms))
        _check_span(ech.rank, budget)
        ranks.append(ech.rank)
        rows_by_level.append(fresh)
        new_rows = fresh
    return ech, ranks, rows_by_level


def power_basis(frame: Frame, n: int, budget: Budget = DEFAULT_BUDGET):
    """A basis of V^n as AlgebraElements (monomials when the frame is monomial)."""
    alg = frame.algebra
    if frame.monomial_words() is not None:
        return [alg.monomial(w) for w in sorted(power_words(frame, n, budget), key=shortlex)]
    _, _, rows = power_basis_levels(frame, n, budget)
    return [AlgebraElement._trusted(alg, r) for lvl in rows for r in lvl]


def dim_series(n_max: int, frame: Frame, budget: Budget = DEFAULT_BUDGET) -> list:
    """``[dim V^0, ..., dim V^n_max]``."""
    if n_max < 0:
        raise InvalidArgument("n must be >= 0")
    lang = frame.algebra.language
    if frame.is_standard() and isinstance(lang, FactorLanguage):
        counts = factor_counts(n_max, lang.spec, lang.budget)
        out, total = [], 0
        for c in counts:
            total += c
            out.append(total)
        return out
    if frame.monomial_words() is not None:
        return [len(level) for level in power_word_levels(frame, n_max, budget)]
    return power_basis_levels(frame, n_max, budget)[1]


def dim_Vn(n: int, frame: Frame, budget: Budget = DEFAULT_BUDGET) -> int:
    return dim_series(n, frame, budget)[n]


def bergman_bound_check(n: int, frame: Frame, budget: Budget = DEFAULT_BUDGET) -> bool:
    """dim V^n >= n(n+1)/2, the lower bound for algebras that are not PI-small."""
    return dim_Vn(n, frame, budget) >= n * (n + 1) // 2


@dataclass
class GrowthSeries:
    """dim V^n for n = 0..n_max with constants fitted on a window."""

    values: list
    window: tuple
    c1: Fraction
    c2: Fraction
    gk_slope: Fraction
    quadratic: bool
    label: str = ""
    extra: dict = field(default_factory=dict)

    def dims(self) -> list:
        return [d for _, d in self.values]

    def verdict(self) -> str:
        return "quadratic" if self.quadratic else "not quadratic"

    def rows(self):
        return [{"length": n, "count": d} for n, d in self.values]

    def summary(self) -> dict:
        return {
            "window": list(self.window),
            "C1": str(self.c1),
            "C2": str(self.c2),
            "C1_float": float(self.c1),
            "C2_float": float(self.c2),
            "gk_estimate": float(self.gk_slope),
            "verdict": self.verdict(),
            **self.extra,
        }


def gk_estimate(series, window) -> Fraction:
    """Least-squares slope of log dim V^n against log n on ``window``.

    ``series`` is a GrowthSeries or a list of (n, dim) pairs; the slope is
    returned as a Fraction with denominator at most 10**6.
    """
    pairs = series.values if isinstance(series, GrowthSeries) else list(series)
    lo, hi = window
    pts = [(n, d) for n, d in pairs if lo <= n <= hi and n >= 2 and d > 0]
    if len(pts) < 3:
        raise InvalidArgument("gk window needs at least 3 points with n >= 2")
    xs = [math.log(n) for n, _ in pts]
    ys = [math.log(d) for _, d in pts]
    if len(set(xs)) < 2:
        raise InvalidArgument("degenerate gk window")
    slope = statistics.linear_regression(xs, ys).slope
    return Fraction(slope).limit_denominator(10**6)


def fit_constants(pairs, window):
    lo, hi = window
    ratios = [Fraction(d, n * n) for n, d in pairs if lo <= n <= hi and n >= 1]
    if not ratios:
        raise InvalidArgument("empty fitting window")
    return min(ratios), max(ratios)


# |slope - 2| within this is read as quadratic
QUADRATIC_SLOPE_TOLERANCE = Fraction(1, 2)


def series_from_dims(dims, label: str = "", window=None) -> GrowthSeries:
    n_max = len(dims) - 1
    pairs = list(enumerate(dims))
    if window is None:
        window = (max(1, n_max // 2), n_max)
    c1, c2 = fit_constants(pairs, window)
    try:
        slope = gk_estimate(pairs, window)
    except InvalidArgument:
        slope = Fraction(0)
    quadratic = c1 > 0 and abs(slope - 2) <= QUADRATIC_SLOPE_TOLERANCE
    return GrowthSeries(pairs, tuple(window), c1, c2, slope, quadratic, label)


def growth_report(n_max: int, frame: Frame, budget: Budget = DEFAULT_BUDGET, window=None) -> GrowthSeries:
    """Series dim V^n, n <= n_max, with C1, C2 and slope fitted on [n_max/2, n_max].

    The verdict is quadratic when C1 > 0 and the fitted log-log slope is
    within 1/2 of 2; C1 alone cannot tell, since even dim V^n = 1 has
    min dim/n^2 > 0 on a finite window.
    """
    if n_max < 1:
        raise InvalidArgument("n_max must be >= 1")
    dims = dim_series(n_max, frame, budget)
    return series_from_dims(dims, label=frame.algebra.language.name, window=window)
