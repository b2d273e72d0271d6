"""The right-infinite word built by v1 = x, v(k+1) = v(k) y^q(k) v(k).

Two facts about this word drive most of the fast paths below.

* The i-th y-gap of v (between the i-th and (i+1)-th x) has length
  q(level(i)) where level(i) = 1 + (number of trailing zero bits of i).
* Capping levels at G = gap_level(L) (the first run of length >= L), the
  level sequence is periodic with period 2**(G-1).  So whether a word of
  length L occurs can be decided by trying its first x against the x's with
  index <= 2**(G-1) + 1, and v(K) contains every factor of length L once
  2**(K-1) >= 2**(G-1) + c + 1, where c bounds the x's in such a factor
  (see :func:`stable_level`).  Tests cross-check this against
  :func:`stabilization_check`.
"""
from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from functools import lru_cache

from ._kernels import factor_counts as _factor_counts_kernel
from ._kernels import min_window_spans
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, InvalidArgument, ParseError
from .extnat import ExtendedNat, as_extnat, parse_extnat, render


def ruler_level(i: int) -> int:
    """1 + the 2-adic valuation of ``i``; the run index of the i-th y-gap."""
    return (i & -i).bit_length()


@dataclass(frozen=True)
class RunSequenceSpec:
    """Run lengths q(1) < q(2) < ... used between the copies of v(k).

    ``kind`` is ``"tower"`` (q(n) = 2^2^2^2^n), ``"geometric"`` (q(n) = b**n)
    or ``"explicit"`` (a finite strictly increasing list).
    """

    kind: str
    base: int = 0
    values: tuple = ()

    def __post_init__(self):
        if self.kind == "geometric":
            if not isinstance(self.base, int) or self.base < 2:
                raise InvalidArgument("geometric base must be an integer >= 2")
        elif self.kind == "explicit":
            vals = tuple(self.values)
            if not vals:
                raise InvalidArgument("explicit run list is empty")
            if any(not isinstance(v, int) or v < 1 for v in vals):
                raise InvalidArgument("explicit run lengths must be positive integers")
            if any(a >= b for a, b in zip(vals, vals[1:])):
                raise InvalidArgument("explicit run lengths must be strictly increasing")
            object.__setattr__(self, "values", vals)
        elif self.kind != "tower":
            raise InvalidArgument(f"unknown run sequence kind {self.kind!r}")

    @classmethod
    def tower(cls):
        return cls("tower")

    @classmethod
    def geometric(cls, base: int = 2):
        return cls("geometric", base=base)

    @classmethod
    def explicit(cls, values):
        return cls("explicit", values=tuple(values))

    @classmethod
    def parse(cls, text: str) -> "RunSequenceSpec":
        """Accepts ``tower``, ``geo:<base>`` and ``list:<a,b,...>``."""
        t = text.strip().lower()
        if t == "tower":
            return cls.tower()
        try:
            if t.startswith("geo:"):
                return cls.geometric(int(t[4:]))
            if t.startswith("list:"):
                return cls.explicit(int(v) for v in t[5:].split(",") if v.strip())
        except ValueError as exc:
            raise InvalidArgument(f"bad run sequence {text!r}: {exc}") from None
        raise InvalidArgument(f"bad run sequence {text!r}; use tower, geo:<b> or list:<...>")

    def __str__(self):
        if self.kind == "tower":
            return "tower"
        if self.kind == "geometric":
            return f"geo:{self.base}"
        return "list:" + ",".join(map(str, self.values))

    @property
    def max_level(self):
        """Largest n with q(n) defined (None when unbounded)."""
        return len(self.values) if self.kind == "explicit" else None

    def run(self, n: int) -> ExtendedNat:
        return _run_value(self, n)

    def run_int(self, n: int) -> int:
        v = _run_value(self, n)
        if not v.is_exact:
            raise BudgetExceeded(f"q({n}) = {v} is too large to materialize")
        return v.to_int()

    def gap_level(self, n) -> int:
        """Least level L with q(L) >= n."""
        n = as_extnat(n)
        k = 1
        while True:
            if self.max_level is not None and k > self.max_level:
                raise InvalidArgument(f"explicit run list has no run of length >= {n}")
            if self.run(k) >= n:
                return k
            k += 1


@lru_cache(maxsize=4096)
def _run_value(spec: RunSequenceSpec, n: int) -> ExtendedNat:
    if n < 1:
        raise InvalidArgument("run index must be >= 1")
    if spec.kind == "tower":
        return ExtendedNat.tower(4, n)
    if spec.kind == "geometric":
        return ExtendedNat(spec.base**n)
    if n > len(spec.values):
        raise InvalidArgument(f"explicit run list has no entry {n}")
    return ExtendedNat(spec.values[n - 1])


def _letter_gap(spec: RunSequenceSpec, i: int) -> ExtendedNat:
    return spec.run(ruler_level(i))


# -- RunWord -------------------------------------------------------------------

class RunWord:
    """Run-length encoded word over {x, y} with ExtendedNat multiplicities."""

    __slots__ = ("runs", "_hash")

    def __init__(self, runs=()):
        merged = []
        for letter, mult in runs:
            if letter not in ("x", "y"):
                raise InvalidArgument(f"bad letter {letter!r}")
            mult = as_extnat(mult)
            if not mult:
                continue
            if merged and merged[-1][0] == letter:
                merged[-1] = (letter, merged[-1][1] + mult)
            else:
                merged.append((letter, mult))
        self.runs = tuple(merged)
        self._hash = None

    @classmethod
    def from_str(cls, s: str) -> "RunWord":
        """From a plain letter string such as ``"xyyx"`` (empty = identity)."""
        runs = []
        for ch in s:
            if runs and runs[-1][0] == ch:
                runs[-1][1] += 1
            else:
                runs.append([ch, 1])
        return cls((c, n) for c, n in runs)

    @classmethod
    def parse(cls, text: str) -> "RunWord":
        """Parse ``"x y^65536 x"``; exponents may be ``2^^(h;t)`` sums in parens."""
        s = text.strip()
        if s in ("", "1", "e"):
            return cls()
        runs = []
        pos = 0
        s = s.replace("*", " ")
        while pos < len(s):
            if s[pos].isspace():
                pos += 1
                continue
            ch = s[pos]
            if ch not in "xy":
                raise ParseError(f"unexpected {ch!r} in word", pos)
            pos += 1
            j = pos
            while j < len(s) and s[j].isspace():
                j += 1
            if j < len(s) and s[j] == "^":
                j += 1
                while j < len(s) and s[j].isspace():
                    j += 1
                if j < len(s) and s[j] == "(":
                    depth, k = 0, j
                    while k < len(s):
                        depth += s[k] == "("
                        depth -= s[k] == ")"
                        if depth == 0:
                            break
                        k += 1
                    if depth:
                        raise ParseError("unbalanced parenthesis", j)
                    runs.append((ch, parse_extnat(s[j + 1:k])))
                    pos = k + 1
                else:
                    m = re.match(r"\d+", s[j:])
                    if not m:
                        raise ParseError("expected exponent", j)
                    runs.append((ch, int(m.group(0))))
                    pos = j + m.end()
            else:
                runs.append((ch, 1))
        return cls(runs)

    def __str__(self):
        if not self.runs:
            return "1"
        out = []
        for c, n in self.runs:
            if n == 1:
                out.append(c)
            else:
                r = render(n)
                out.append(f"{c}^{r}" if r.isdigit() else f"{c}^({r})")
        return " ".join(out)

    def __repr__(self):
        return f"RunWord({str(self)!r})"

    def __eq__(self, other):
        if isinstance(other, RunWord):
            return self.runs == other.runs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.runs)
        return self._hash

    def __len__(self):
        return len(self.runs)

    def __bool__(self):
        return bool(self.runs)

    def length(self) -> ExtendedNat:
        total = ExtendedNat(0)
        for _, n in self.runs:
            total = total + n
        return total

    def count(self, letter: str) -> ExtendedNat:
        total = ExtendedNat(0)
        for c, n in self.runs:
            if c == letter:
                total = total + n
        return total

    def is_exact(self) -> bool:
        return all(n.is_exact for _, n in self.runs)

    def materialize(self, budget: Budget = DEFAULT_BUDGET) -> str:
        if self.length() > budget.char_limit:
            raise BudgetExceeded(
                f"word of length {self.length()} exceeds char limit {budget.char_limit}"
            )
        return "".join(c * n.to_int() for c, n in self.runs)

    def concat(self, *others) -> "RunWord":
        runs = list(self.runs)
        for o in others:
            runs.extend(o.runs)
        return RunWord(runs)

    __add__ = concat

    def lex_less(self, other: "RunWord") -> bool:
        """Lexicographic order with x < y (a proper prefix sorts first)."""
        a, b = list(self.runs), list(other.runs)
        i = 0
        while i < len(a) and i < len(b):
            (ca, na), (cb, nb) = a[i], b[i]
            if ca != cb:
                return ca < cb
            if na == nb:
                i += 1
                continue
            # same letter, different run lengths: compare what follows the shorter run
            if na < nb:
                nxt = a[i + 1][0] if i + 1 < len(a) else None
                return nxt is None or nxt < cb
            nxt = b[i + 1][0] if i + 1 < len(b) else None
            return not (nxt is None or nxt < ca)
        return len(a) < len(b)


# -- prefixes ----------------------------------------------------------------------

def _check_level(k):
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument("level must be an integer >= 1")


def build_prefix(k: int, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> RunWord:
    """v(k) as a RunWord; it has 2**k - 1 runs."""
    _check_level(k)
    if (1 << k) - 1 > budget.run_limit:
        raise BudgetExceeded(f"v_{k} has {(1 << k) - 1} runs; run limit is {budget.run_limit}")
    runs = [("x", 1)]
    for i in range(1, 1 << (k - 1)):
        runs.append(("y", _letter_gap(spec, i)))
        runs.append(("x", 1))
    return RunWord(runs)


def word_length(k: int, spec: RunSequenceSpec) -> ExtendedNat:
    _check_level(k)
    total = ExtendedNat(1)
    for i in range(1, k):
        total = total * 2 + spec.run(i)
    return total


@lru_cache(maxsize=64)
def _prefix_string_cached(k: int, spec: RunSequenceSpec, char_limit: int) -> str:
    s = "x"
    for i in range(1, k):
        s = s + "y" * spec.run_int(i) + s
    return s


def prefix_string(k: int, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> str:
    """v(k) as a plain string, if it fits in the character budget."""
    _check_level(k)
    n = word_length(k, spec)
    if n > budget.char_limit:
        raise BudgetExceeded(f"|v_{k}| = {n} exceeds char limit {budget.char_limit}")
    return _prefix_string_cached(k, spec, budget.char_limit)


def stable_level(ell, spec: RunSequenceSpec) -> int:
    """A level K whose prefix v(K) contains every factor of length ``ell``."""
    ell = as_extnat(ell)
    if ell <= 0:
        return 1
    span = _anchor_range(ell, spec) + max_x_occurrences(ell, spec) + 1
    k = 2
    while (1 << (k - 1)) < span:
        k += 1
    return k


def _anchor_range(ell, spec: RunSequenceSpec) -> int:
    """Anchors 1..this many cover every occurrence class of a length-ell word."""
    return (1 << (spec.gap_level(ell) - 1)) + 1


def _fits(k: int, spec: RunSequenceSpec, budget: Budget) -> bool:
    if spec.max_level is not None and k - 1 > spec.max_level:
        return False
    return word_length(k, spec) <= budget.char_limit


# -- membership --------------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _is_factor_str(s: str, spec: RunSequenceSpec, char_limit: int) -> bool:
    if "x" not in s:
        return True
    if "xx" in s:
        return False
    k = stable_level(len(s), spec)
    if _fits(k, spec, Budget(char_limit=char_limit)):
        return s in _prefix_string_cached(k, spec, char_limit)
    return _is_factor_runs(RunWord.from_str(s), spec)


def is_factor_str(s: str, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Membership for a plain letter string."""
    return _is_factor_str(s, spec, budget.char_limit)


def _anchor_pattern(w: RunWord):
    """Split an x-bearing word into (lead, inner gaps, tail) or None if xx occurs."""
    runs = w.runs
    lead = runs[0][1] if runs[0][0] == "y" else ExtendedNat(0)
    tail = runs[-1][1] if runs[-1][0] == "y" else ExtendedNat(0)
    core = runs[1:] if runs[0][0] == "y" else runs
    core = core[:-1] if core and core[-1][0] == "y" else core
    if any(c == "x" and n != 1 for c, n in core):
        return None
    gaps = [n for c, n in core if c == "y"]
    return lead, gaps, tail


def _anchor_ok(pat, j: int, spec: RunSequenceSpec) -> bool:
    """Can the first x of the pattern sit on the j-th x of v?"""
    lead, gaps, tail = pat
    if j == 1:
        if lead:
            return False
    elif lead > _letter_gap(spec, j - 1):
        return False
    for i, g in enumerate(gaps):
        if g != _letter_gap(spec, j + i):
            return False
    return not tail or tail <= _letter_gap(spec, j + len(gaps))


def _anchors(w: RunWord, spec: RunSequenceSpec, j_max: int):
    """Indices j <= j_max (1-based x index in v) where w's first x can sit."""
    pat = _anchor_pattern(w)
    if pat is None:
        return []
    return [j for j in range(1, j_max + 1) if _anchor_ok(pat, j, spec)]


def _is_factor_runs(w: RunWord, spec: RunSequenceSpec) -> bool:
    if not w.runs or w.count("x") == 0:
        return True
    pat = _anchor_pattern(w)
    if pat is None:
        return False
    j_max = _anchor_range(w.length(), spec)
    return any(_anchor_ok(pat, j, spec) for j in range(1, j_max + 1))


def is_factor(w, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff ``w`` (RunWord or letter string) occurs in the infinite word.

    Pure-y words are always factors. Otherwise the answer is read from the
    prefix v(K), K = stable_level(|w|): by string search when v(K) fits in
    memory, else by aligning w's x's with those of v(K) via the gap ruler.
    """
    if isinstance(w, str):
        return is_factor_str(w, spec, budget)
    if not w.runs or w.count("x") == 0:
        return True
    if w.is_exact() and w.length() <= budget.char_limit:
        return is_factor_str(w.materialize(budget), spec, budget)
    return _is_factor_runs(w, spec)


# -- factor sets and complexity ---------------------------------------------------

def _text_for(ell: int, spec: RunSequenceSpec, budget: Budget) -> str:
    k = stable_level(max(ell, 1), spec)
    return prefix_string(k, spec, budget)


def factor_set(ell: int, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> frozenset:
    """All factors of length ``ell`` as strings."""
    if ell < 0:
        raise InvalidArgument("length must be >= 0")
    if ell == 0:
        return frozenset([""])
    if not _fits(stable_level(ell, spec), spec, budget):
        return _factor_set_structural(ell, spec, budget)
    text = _text_for(ell, spec, budget)
    return frozenset(text[i:i + ell] for i in range(len(text) - ell + 1))


def _factor_set_structural(ell: int, spec: RunSequenceSpec, budget: Budget) -> frozenset:
    """Factors of length ell built as y^a P y^b, P spanning first to last x."""
    if ell > budget.char_limit:
        raise BudgetExceeded(f"factors of length {ell} exceed char limit")
    out = {"y" * ell}
    j_max = _anchor_range(ell, spec)
    for c in range(1, max_x_occurrences(ell, spec) + 1):
        for j in range(1, j_max + 1):
            gaps = [_letter_gap(spec, i) for i in range(j, j + c - 1)]
            if any(g > ell for g in gaps):
                continue
            core = "".join("x" + "y" * g.to_int() for g in gaps) + "x"
            rest = ell - len(core)
            if rest < 0:
                continue
            before = _letter_gap(spec, j - 1) if j > 1 else ExtendedNat(0)
            before = rest if before >= rest else before.to_int()
            after = _letter_gap(spec, j + c - 1)
            after = rest if after >= rest else after.to_int()
            for a in range(max(0, rest - after), before + 1):
                out.add("y" * a + core + "y" * (rest - a))
        if len(out) > budget.span_limit:
            raise BudgetExceeded("structural factor set exceeds span limit")
    return frozenset(out)


def factor_x_profile(ell: int, spec: RunSequenceSpec) -> dict:
    """{c: number of factors of length ell with exactly c x's}.

    Counts structurally from the gap ruler, so it works for symbolic run
    lengths too.  A factor with c >= 1 x's is y^a P y^b where P runs from its
    first to last x; P is fixed by an anchor j and the window of gaps after it.
    """
    if ell < 1:
        raise InvalidArgument("length must be >= 1")
    out = {0: 1}
    j_max = _anchor_range(ell, spec)
    c_max = max_x_occurrences(ell, spec)
    gaps = [None] + [_letter_gap(spec, i) for i in range(1, j_max + c_max + 1)]
    for c in range(1, c_max + 1):
        # pattern (tuple of inner gaps) -> set of admissible leading lengths a
        patterns = {}
        for j in range(1, j_max + 1):
            inner = tuple(gaps[j:j + c - 1])
            core = c
            ok = True
            for g in inner:
                if g > ell:
                    ok = False
                    break
                core += g.to_int()
            if not ok or core > ell:
                continue
            rest = ell - core
            before = 0 if j == 1 else (rest if gaps[j - 1] >= rest else gaps[j - 1].to_int())
            after = gaps[j + c - 1]
            after = rest if after >= rest else after.to_int()
            lo = rest - after
            if lo > before:
                continue
            patterns.setdefault(inner, set()).update(range(lo, before + 1))
        total = sum(len(a) for a in patterns.values())
        if total:
            out[c] = total
    return out


@lru_cache(maxsize=64)
def _factor_counts_cached(n_max: int, spec: RunSequenceSpec, char_limit: int) -> tuple:
    text = _text_for(n_max, spec, Budget(char_limit=char_limit))
    return tuple(_factor_counts_kernel(text.encode("ascii"), n_max))


def factor_counts(n_max: int, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> list:
    """``[p(0), p(1), ..., p(n_max)]`` with p(0) = 1."""
    if n_max < 0:
        raise InvalidArgument("n_max must be >= 0")
    if n_max == 0:
        return [1]
    if not _fits(stable_level(n_max, spec), spec, budget):
        return [1] + [sum(factor_x_profile(ell, spec).values()) for ell in range(1, n_max + 1)]
    # the longest needed prefix serves every shorter length too
    return list(_factor_counts_cached(n_max, spec, budget.char_limit))


def factor_complexity(ell: int, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> int:
    if ell < 1:
        raise InvalidArgument("length must be >= 1")
    return factor_counts(ell, spec, budget)[ell]


# -- x counts ------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _min_span_structural(r: int, spec: RunSequenceSpec) -> ExtendedNat:
    """Least length of a factor holding r x's, from the gap ruler."""
    if r <= 1:
        return ExtendedNat(r)
    # a window of r-1 <= 2**m gaps holds at most one index divisible by 2**m;
    # shifting the start by a multiple of 2**(m+1) keeps every other level and
    # that one at level m+1 at best, so starts up to 2**(m+1) suffice
    m = max(1, (r - 1).bit_length())
    if spec.kind != "tower":
        return ExtendedNat(_min_span_int(r, m, spec))
    total = ExtendedNat(r)
    for i in range(1, r):
        total = total + _letter_gap(spec, i)
    best = total
    for j in range(2, (1 << (m + 1)) + 1):
        # slide the window of gaps j .. j+r-2 by one
        total = total + _letter_gap(spec, j + r - 2) - _letter_gap(spec, j - 1)
        if total < best:
            best = total
    return best


def _min_span_int(r: int, m: int, spec: RunSequenceSpec) -> int:
    # same window scan with plain ints, for run sequences without towers
    n = (1 << (m + 1)) + r
    run = {}
    gaps = [0] * n
    for i in range(1, n):
        lv = ruler_level(i)
        if lv not in run:
            run[lv] = spec.run_int(lv)
        gaps[i] = run[lv]
    total = r + sum(gaps[1:r])
    best = total
    for j in range(2, (1 << (m + 1)) + 1):
        total += gaps[j + r - 2] - gaps[j - 1]
        if total < best:
            best = total
    return best


def max_x_occurrences(ell, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> int:
    """Largest number of x's in a factor of length ``ell``."""
    ell = as_extnat(ell)
    if ell <= 0:
        return 0
    # min span is increasing in r: bracket, then bisect for the last r that fits
    lo, hi = 1, 2
    while _min_span_structural(hi, spec) <= ell:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _min_span_structural(mid, spec) <= ell:
            lo = mid
        else:
            hi = mid
    return lo


def max_x_table(ell_max: int, spec: RunSequenceSpec, budget: Budget = DEFAULT_BUDGET) -> list:
    """``[max_x(0), ..., max_x(ell_max)]`` read off the x positions of a prefix."""
    if ell_max < 1:
        return [0] * (ell_max + 1)
    text = _text_for(ell_max, spec, budget)
    positions = [i for i, ch in enumerate(text) if ch == "x"]
    r_max = 1
    while r_max < len(positions) and positions[r_max] - positions[0] + 1 <= ell_max:
        r_max += 1
    spans = min_window_spans(positions, r_max + 1)
    out = [0] * (ell_max + 1)
    r = 0
    for ell in range(1, ell_max + 1):
        while r + 1 <= r_max + 1 and 0 < spans[r + 1] <= ell:
            r += 1
        out[ell] = r
    return out


def stabilization_check(ell: int, k: int, spec: RunSequenceSpec,
                        budget: Budget = DEFAULT_BUDGET) -> bool:
    """Do v(k) and v(k+1) have the same factors of length ``ell``?"""
    _check_level(k)
    if ell < 1:
        raise InvalidArgument("length must be >= 1")
    if word_length(k, spec) < ell:
        return False
    a = prefix_string(k, spec, budget)
    b = prefix_string(k + 1, spec, budget)
    fa = {a[i:i + ell] for i in range(len(a) - ell + 1)}
    fb = {b[i:i + ell] for i in range(len(b) - ell + 1)}
    return fa == fb


def empirical_stable_level(ell: int, spec: RunSequenceSpec, k_cap: int = 24,
                           budget: Budget = DEFAULT_BUDGET) -> int:
    """Least k with stabilization_check(ell, k); raises past ``k_cap``."""
    for k in range(1, k_cap + 1):
        if stabilization_check(ell, k, spec, budget):
            return k
    raise BudgetExceeded(f"no stabilization for length {ell} up to level {k_cap}")


# -- bridges -------------------------------------------------------------------------

def _bridge_str(w1: str, w2: str, len_bound: int, spec, budget):
    total = len(w1) + len(w2) + len_bound
    text = _text_for(total, spec, budget)
    ends = [i + len(w1) for i in _find_all(text, w1)]
    starts = list(_find_all(text, w2))
    best_gap, best = None, None
    for e in ends:
        k = bisect.bisect_left(starts, e)
        if k == len(starts):
            continue
        gap = starts[k] - e
        if gap > len_bound:
            continue
        cand = text[e:starts[k]]
        if best_gap is None or gap < best_gap or (gap == best_gap and cand < best):
            best_gap, best = gap, cand
    return best


def _find_all(text: str, pat: str):
    if not pat:
        yield from range(len(text) + 1)
        return
    i = text.find(pat)
    while i != -1:
        yield i
        i = text.find(pat, i + 1)


def _bridge_runs(w1: RunWord, w2: RunWord, len_bound, spec):
    """Run-level bridge search; both words must contain an x."""
    total = w1.length() + w2.length() + len_bound
    c1 = w1.count("x").to_int()
    c_max = max_x_occurrences(total, spec)
    pat1, pat2 = _anchor_pattern(w1), _anchor_pattern(w2)
    if pat1 is None or pat2 is None:
        return None
    tail1, lead2 = pat1[2], pat2[0]
    best = None
    for j1 in range(1, _anchor_range(total, spec) + 1):
        if not _anchor_ok(pat1, j1, spec):
            continue
        last1 = j1 + c1 - 1
        for j2 in range(last1 + 1, j1 + c_max + 1):
            if not _anchor_ok(pat2, j2, spec):
                continue
            g = _letter_gap(spec, last1)
            if j2 == last1 + 1:
                if tail1 + lead2 > g:
                    continue
                runs = [("y", g - tail1 - lead2)]
            else:
                runs = [("y", g - tail1)]
                for i in range(last1 + 1, j2):
                    gi = _letter_gap(spec, i)
                    runs += [("x", 1), ("y", gi - lead2 if i == j2 - 1 else gi)]
            w = RunWord(runs)
            n = w.length()
            if n > len_bound:
                continue
            if best is None or n < best.length() or (n == best.length() and w.lex_less(best)):
                best = w
    return best


def shortest_bridge(w1, w2, len_bound, spec: RunSequenceSpec,
                    budget: Budget = DEFAULT_BUDGET):
    """Shortest (then lex-least) w with w1 w w2 a factor and |w| <= len_bound.

    Accepts strings or RunWords and answers in the same type as ``w1``.
    Returns None if no such w exists.
    """
    as_str = isinstance(w1, str)
    r1 = RunWord.from_str(w1) if isinstance(w1, str) else w1
    r2 = RunWord.from_str(w2) if isinstance(w2, str) else w2
    len_bound = as_extnat(len_bound)
    if not is_factor(r1, spec, budget) or not is_factor(r2, spec, budget):
        return None
    total = r1.length() + r2.length() + len_bound
    k = stable_level(total, spec)
    if r1.is_exact() and r2.is_exact() and _fits(k, spec, budget):
        out = _bridge_str(r1.materialize(budget), r2.materialize(budget),
                          len_bound.to_int(), spec, budget)
        if out is None or as_str:
            return out
        return RunWord.from_str(out)
    if r1.count("x") == 0 and r2.count("x") == 0:
        out = RunWord()
    elif r1.count("x") and r2.count("x"):
        out = _bridge_runs(r1, r2, len_bound, spec)
    else:
        raise BudgetExceeded("bridge search beyond the materialization budget "
                             "needs x in both words")
    if out is None:
        return None
    return out.materialize(budget) if as_str else out
