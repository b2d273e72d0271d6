"""Command-line front end: ``growth-forge <subcommand> [options]``.

Exit codes: 0 success, 1 budget or expressibility failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import reports
from .algebra import Frame, MonomialAlgebra
from .config import Budget
from .errors import (
    BudgetExceeded,
    ExpressibilityError,
    GrowthForgeError,
    InvalidArgument,
    NilpotentInput,
    ParseError,
)
from .extnat import render
from .fields import parse_field
from .words import RunSequenceSpec, RunWord

DEFAULTS = {
    "spec": "geo:2",
    "field": "rationals",
    "run_limit": Budget().run_limit,
    "char_limit": Budget().char_limit,
    "span_limit": Budget().span_limit,
    "nmax": None,
    "format": None,
    "seed": 0,
    "mode": "factors",
}


class RunConfig:
    """Resolved options: command-line flags, then --config JSON, then defaults."""

    def __init__(self, args):
        file_cfg = {}
        if getattr(args, "config", None):
            with open(args.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
            if not isinstance(file_cfg, dict):
                raise InvalidArgument("--config must hold a JSON object")
            file_cfg = {k.replace("-", "_"): v for k, v in file_cfg.items()}
        for key, default in DEFAULTS.items():
            val = getattr(args, key, None)
            if val is None:
                val = file_cfg.get(key, default)
            setattr(self, key, val)
        self.out = getattr(args, "out", None)
        self.spec_obj = RunSequenceSpec.parse(str(self.spec))
        self.field_obj = parse_field(str(self.field))
        self.budget = Budget(run_limit=int(self.run_limit), char_limit=int(self.char_limit),
                             span_limit=int(self.span_limit))
        if self.format is None:
            self.format = "json" if (self.out or "").endswith(".json") else "csv"
        if self.format not in ("csv", "json"):
            raise InvalidArgument("--format must be csv or json")

    def algebra(self):
        if self.mode == "free":
            return MonomialAlgebra.free(self.field_obj)
        if self.mode == "control":
            return MonomialAlgebra.control(self.field_obj)
        if self.mode != "factors":
            raise InvalidArgument("--mode must be factors, free or control")
        return MonomialAlgebra.for_spec(self.spec_obj, self.field_obj, self.budget)

    def frame(self, text=None):
        alg = self.algebra()
        if not text:
            return alg.standard_frame()
        elems = [alg.parse(part) for part in text.split(",")]
        if not any(e == alg.one for e in elems):
            elems.insert(0, alg.one)
        return Frame(elems)

    def ring(self):
        from .centre import GroupRing

        if self.mode == "free":
            return GroupRing.free(self.field_obj)
        return GroupRing(self.algebra())


def _emit(cfg: RunConfig, text: str):
    reports.write_text(text, cfg.out, sys.stdout)


def _emit_doc(cfg: RunConfig, doc: dict):
    _emit(cfg, reports.dumps(doc))


def _elem(cfg, text):
    return cfg.algebra().parse(text)


# -- subcommands -----------------------------------------------------------------------------

def cmd_word(cfg, args):
    from . import words as W

    spec, budget = cfg.spec_obj, cfg.budget
    act = args.action
    if act == "len":
        print(render(W.word_length(args.k, spec)))
    elif act == "prefix":
        print(W.build_prefix(args.k, spec, budget))
    elif act == "factor":
        print("yes" if W.is_factor(RunWord.parse(args.words[0]), spec, budget) else "no")
    elif act == "complexity":
        nmax = args.ell or cfg.nmax or 20
        counts = W.factor_counts(nmax, spec, budget)
        rows = [{"length": n, "count": c} for n, c in enumerate(counts)]
        _emit(cfg, reports.growth_csv(rows) if cfg.format == "csv"
              else reports.growth_json(rows, kind="factor-complexity"))
    elif act == "maxx":
        print(W.max_x_occurrences(_ell(args), spec, budget))
    elif act == "stable":
        print(W.stable_level(_ell(args), spec))
    elif act == "bridge":
        if len(args.words) != 2:
            raise InvalidArgument("bridge needs two words")
        w1, w2 = (RunWord.parse(w) for w in args.words)
        bound = args.bound if args.bound is not None else 1 << 20
        out = W.shortest_bridge(w1, w2, bound, spec, budget)
        print("none" if out is None else out)
    return 0


def _ell(args):
    if args.ell is None:
        raise InvalidArgument("--ell is required")
    return args.ell


def cmd_growth(cfg, args):
    from .growth import growth_report

    nmax = cfg.nmax or 100
    frame = cfg.frame(args.frame)
    window = tuple(args.window) if args.window else None
    series = growth_report(nmax, frame, cfg.budget, window)
    rows = series.rows()
    text = reports.growth_csv(rows) if cfg.format == "csv" else reports.growth_json(rows, series.summary())
    _emit(cfg, text)
    s = series.summary()
    msg = (f"verdict: {s['verdict']} (C1={s['C1_float']:.6f}, C2={s['C2_float']:.6f}, "
           f"gk={s['gk_estimate']:.4f}, window=[{series.window[0]}, {series.window[1]}])")
    print(msg, file=sys.stdout if cfg.out else sys.stderr)
    return 0


def cmd_lemma1(cfg, args):
    from .lemmas import annihilator_report

    frame = cfg.frame(args.frame)
    z = _elem(cfg, args.z)
    res = annihilator_report(z, args.m, args.nmax or cfg.nmax or 4, frame, cfg.budget)
    doc = reports.document(
        "annihilator", z=str(z), m=args.m,
        element=None if res.element is None else str(res.element),
        verified=None if res.element is None else res.verify(z, frame, cfg.budget),
        steps=[{"n": s.n, "dim_Vn": s.dim_Vn, "d": s.d, "dim_image": s.rank, "dim_kernel": s.kernel_dim,
                "dim_target": s.dim_target, "rank_nullity_ok": s.rank_nullity_ok()} for s in res.steps])
    _emit_doc(cfg, doc)
    return 0


def cmd_lemmaC(cfg, args):
    from .lemmas import reduction_search, two_sided_growth

    frame = cfg.frame(args.frame)
    z = _elem(cfg, args.z)
    if args.n is not None:
        g = two_sided_growth(z, args.n, frame, cfg.budget)
        bound = args.bound if args.bound is not None else 2 * args.n
        rel = reduction_search(z, bound, frame, cfg.budget) if g < args.n ** 2 else None
        doc = reports.document("dichotomy", z=str(z), n=args.n, two_sided_growth=g,
                               below_n_squared=g < args.n ** 2,
                               reduction=None if rel is None else rel.to_json(),
                               verified=None if rel is None else rel.verify(z, frame, cfg.budget))
        _emit_doc(cfg, doc)
        return 0
    bound = args.bound if args.bound is not None else 8
    rel = reduction_search(z, bound, frame, cfg.budget)
    if rel is None:
        _emit_doc(cfg, reports.document("reduction", z=str(z), bound=bound, found=False))
    else:
        doc = rel.to_json()
        doc["verified"] = rel.verify(z, frame, cfg.budget)
        _emit_doc(cfg, doc)
    return 0


def cmd_gk1(cfg, args):
    from .growth import fit_constants
    from .lemmas import ideal_power_growth

    frame = cfg.frame(args.frame)
    u = _elem(cfg, args.u)
    nmax = cfg.nmax or 10
    lo = args.nmin
    rows = [{"length": n, "count": ideal_power_growth(u, args.d, n, frame, budget=cfg.budget)}
            for n in range(lo, nmax + 1)]
    c1, _ = fit_constants([(r["length"], r["count"]) for r in rows], (max(lo, 1), nmax))
    summary = {"u": str(u), "d": args.d, "C": str(c1), "C_float": float(c1)}
    _emit(cfg, reports.growth_csv(rows) if cfg.format == "csv"
          else reports.growth_json(rows, summary, kind="ideal-power-growth"))
    print(f"fitted C = {float(c1):.6f} on [{lo}, {nmax}]", file=sys.stdout if cfg.out else sys.stderr)
    return 0


def cmd_group(cfg, args):
    from . import group as G

    gs = [G.parse_group(t) for t in args.elements]
    act = args.action
    if act in ("mul", "normal"):
        out = G.GroupElement.identity()
        for g in gs:
            out = G.multiply(out, g)
        print(out)
    elif act == "inv":
        _need(gs, 1)
        print(G.inverse(gs[0]))
    elif act == "comm":
        _need(gs, 2)
        print(G.commutator(gs[0], gs[1]))
    elif act == "conj":
        _need(gs, 1)
        print(G.conjugate_by_u(gs[0], args.k))
    elif act == "central":
        _need(gs, 1)
        print("true" if G.is_central(gs[0]) else "false")
    return 0


def _need(items, k):
    if len(items) != k:
        raise InvalidArgument(f"expected {k} group element(s), got {len(items)}")


def cmd_bgrowth(cfg, args):
    from .centre import b_growth_report

    nmax = cfg.nmax or 20
    window = tuple(args.window) if args.window else None
    rep = b_growth_report(nmax, cfg.ring(), args.eps, cfg.budget, window)
    rows = rep.series.rows()
    _emit(cfg, reports.growth_csv(rows) if cfg.format == "csv"
          else reports.growth_json(rows, rep.summary(), kind="b-growth"))
    s = rep.summary()
    print(f"trend dim V^n <= n^{2 + args.eps:g} on [{rep.window[0]}, {rep.window[1]}]: "
          f"{'holds' if rep.trend_holds else 'fails'} (gk={s['gk_estimate']:.4f})",
          file=sys.stdout if cfg.out else sys.stderr)
    return 0


def cmd_witness(cfg, args):
    from .centre import central_witness, independence_report

    spec = cfg.spec_obj
    if args.indices:
        rep = independence_report(args.degree, args.indices, spec)
        _emit_doc(cfg, rep.to_json())
        return 0
    _, cert = central_witness(args.n, spec, check_degree=args.check_degree)
    doc = cert.to_json()
    doc["verified"] = cert.verify(cfg.ring())
    _emit_doc(cfg, doc)
    return 0


def cmd_prime(cfg, args):
    bound = args.bound if args.bound is not None else 1 << 16
    if args.ring:
        from .centre import prime_witness_B

        ring = cfg.ring()
        b1, b2 = (ring.parse(t) for t in args.elements)
        c = prime_witness_B(b1, b2, bound, spec=cfg.spec_obj)
        print("none" if c is None else c)
        return 0
    from .lemmas import prime_witness

    alg = cfg.algebra()
    w1, w2 = (_plain_word(t) for t in args.elements)
    w = prime_witness(w1, w2, bound, alg)
    print("none" if w is None else (RunWord.from_str(w) if w else "1"))
    return 0


def _plain_word(text):
    w = RunWord.parse(text)
    return w.materialize()


def cmd_nilp(cfg, args):
    kmax = args.kmax
    if args.ring:
        from .centre import x_ideal_nilpotency_B

        k = x_ideal_nilpotency_B(args.d, kmax, cfg.ring(), cfg.budget)
    else:
        from .lemmas import nilpotency_index

        k = nilpotency_index(_elem(cfg, args.u), args.d, kmax, cfg.frame(args.frame), cfg.budget)
    print("none" if k is None else k)
    return 0


def cmd_selftest(cfg, args):
    from .selftest import run_selftest

    ok, lines = run_selftest(cfg.seed)
    for line in lines:
        print(line)
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--spec", help="tower | geo:<b> | list:<a,b,...> (default geo:2)")
    p.add_argument("--field", help="rationals | gf:<p> (default rationals)")
    p.add_argument("--mode", help="factors | free | control (default factors)")
    p.add_argument("--run-limit", dest="run_limit", type=int)
    p.add_argument("--char-limit", dest="char_limit", type=int)
    p.add_argument("--span-limit", dest="span_limit", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--seed", type=int)
    p.add_argument("--config", help="JSON file of option defaults; flags win")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    top = argparse.ArgumentParser(prog="growth-forge", description="Growth computations for a "
                                  "prime monomial algebra and a group-ring subalgebra.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[common], help="prefixes, factors, x counts, bridges")
    p.add_argument("action", choices=["len", "prefix", "factor", "complexity", "maxx", "stable", "bridge"])
    p.add_argument("words", nargs="*")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--ell", type=int)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("growth", parents=[common], help="dim V^n series and quadratic verdict")
    p.add_argument("--frame", help="comma-separated frame elements (1 is added)")
    p.add_argument("--window", type=int, nargs=2)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("lemma1", parents=[common], help="annihilator search a V^m z = 0")
    p.add_argument("--z", default="x")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--frame")
    p.set_defaults(func=cmd_lemma1)

    p = sub.add_parser("lemmaC", parents=[common], help="two-sided growth and reduction search")
    p.add_argument("--z", default="y")
    p.add_argument("--n", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--frame")
    p.set_defaults(func=cmd_lemmaC)

    p = sub.add_parser("gk1", parents=[common], help="dim V^{dn} u^n V^{dn} series")
    p.add_argument("--u", default="y")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--frame")
    p.set_defaults(func=cmd_gk1)

    p = sub.add_parser("group", parents=[common], help="normal-form arithmetic in G")
    p.add_argument("action", choices=["mul", "normal", "inv", "comm", "conj", "central"])
    p.add_argument("elements", nargs="+")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("bgrowth", parents=[common], help="growth of B and the n^(2+eps) trend")
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--window", type=int, nargs=2)
    p.set_defaults(func=cmd_bgrowth)

    p = sub.add_parser("witness", parents=[common], help="central witnesses (a_n, z_n) in B")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--indices", type=int, nargs="*")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--check-degree", dest="check_degree", type=int, default=2)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("prime", parents=[common], help="primeness witnesses in A or B")
    p.add_argument("elements", nargs=2)
    p.add_argument("--bound", type=int)
    p.add_argument("--ring", action="store_true", help="elements are group-ring elements of B")
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("nilp", parents=[common], help="nilpotency index of (V^d u) or of (x) in B")
    p.add_argument("--u", default="x")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--kmax", type=int, default=64)
    p.add_argument("--ring", action="store_true", help="use (V^d x V^d) in B")
    p.add_argument("--frame")
    p.set_defaults(func=cmd_nilp)

    p = sub.add_parser("selftest", parents=[common], help="quick end-to-end checks")
    p.set_defaults(func=cmd_selftest)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(args)
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(cfg, args)
    except (BudgetExceeded, ExpressibilityError) as exc:
        print(f"growth-forge: {exc}", file=sys.stderr)
        return 1
    except (InvalidArgument, ParseError, NilpotentInput, GrowthForgeError, OSError, json.JSONDecodeError) as exc:
        print(f"growth-forge: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
