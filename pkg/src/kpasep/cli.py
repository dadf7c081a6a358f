"""Command-line interface tying the engines together.

Every verb is deterministic: identical flags produce byte-identical
output.  Exit status 0 means all requested checks passed, 1 means a
verification failed (a report is still emitted), 2 is a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import ansatz, ratchain, rhombic
from .pasep import RateParams, stationary_exact
from .polyring import Poly
from .render_svg import render_word
from .tilings import maximal_tiling
from .words import parse_word, sector_states, word_str


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def _sector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad sector {text!r}: {exc}") from None


def _params(args, k: int) -> RateParams:
    alpha = _fraction(args.alpha)
    beta = _fraction(args.beta)
    q = _fraction(args.q)
    base = RateParams.single_q(alpha, beta, q, k)
    qfile = getattr(args, "qmatrix", None)
    if not qfile:
        return base
    with open(qfile, encoding="utf-8") as fh:
        raw = json.load(fh)
    q0i = dict(base.q0i)
    qiinf = dict(base.qiinf)
    qij = dict(base.qij)
    q0inf = Fraction(raw.get("q0inf", q))
    for s, v in raw.get("q0i", {}).items():
        q0i[int(s)] = Fraction(v)
    for s, v in raw.get("qiinf", {}).items():
        qiinf[int(s)] = Fraction(v)
    for key, v in raw.get("qij", {}).items():
        i, j = (int(x) for x in key.split(","))
        qij[(i, j)] = Fraction(v)
    try:
        return RateParams(alpha=alpha, beta=beta, q0inf=q0inf,
                          q0i=q0i, qiinf=qiinf, qij=qij)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# -- verbs ---------------------------------------------------------------------


def cmd_stationary(args) -> int:
    k = args.k
    sector = _sector(args.sector)
    params = _params(args, k)
    try:
        dist = stationary_exact(args.n, k, sector, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [(word_str(w, k), str(p)) for w, p in dist.items()]
    if args.format == "csv":
        print("word,prob")
        for w, p in rows:
            print(f"{w},{p}")
        return 0
    _emit_json({
        "n": args.n, "k": k, "sector": list(sector),
        "params": {"alpha": str(params.alpha), "beta": str(params.beta),
                   "q0inf": str(params.q0inf),
                   "q0i": {str(s): str(v) for s, v in params.q0i.items()},
                   "qiinf": {str(s): str(v) for s, v in params.qiinf.items()},
                   "qij": {f"{i},{j}": str(v)
                           for (i, j), v in params.qij.items()}},
        "stationary": [{"word": w, "prob": p} for w, p in rows],
    })
    return 0


def cmd_tableaux_enumerate(args) -> int:
    word = parse_word(args.word, args.k)
    k = args.k
    fillings = rhombic.enumerate_fillings(word, k=k)
    out = []
    for f in fillings:
        out.append({
            "word": word_str(word, k),
            "tiling": "maximal",
            "symbols": [{"pair": [p + 1, q + 1], "sym": s}
                        for (p, q), s in f.symbols],
            "weight": f.weight().render(),
        })
    _emit_json({"word": word_str(word, k), "count": len(out),
                "tableaux": out})
    return 0


def cmd_tableaux_weight(args) -> int:
    word = parse_word(args.word, args.k)
    print(rhombic.word_weight(word).render())
    return 0


def cmd_verify_ansatz(args) -> int:
    try:
        imax, jmax = (int(x) for x in args.window.split(","))
    except ValueError as exc:
        raise UsageError(f"bad window {args.window!r}: {exc}") from None
    lam = Poly.parse(args.lam)
    report = ansatz.relation_report(args.k, imax, jmax, lam)
    _emit_json(report)
    return 0 if report["ok"] else 1


def cmd_verify_weights(args) -> int:
    from itertools import product

    from .words import alphabet
    k, n = args.k, args.n
    bridge_bad = []
    for length in range(1, n + 1):
        for w in product(alphabet(k), repeat=length):
            if not rhombic.weight_bridge_ok(w, k):
                bridge_bad.append(word_str(w, k))
    params = RateParams.single_q(Fraction(1, 2), Fraction(1, 3),
                                 Fraction(1, 5), k)
    assign = {"alpha": params.alpha, "beta": params.beta, "q": params.q0inf}
    stat_bad = []
    for sector in _all_sectors(n, k):
        z = rhombic.sector_weight_sum(n, k, sector).evaluate(assign)
        dist = stationary_exact(n, k, sector, params)
        for w, p in dist.items():
            if rhombic.word_weight(w).evaluate(assign) / z != p:
                stat_bad.append(word_str(w, k))
    report = {"k": k, "n": n, "bridge_failures": bridge_bad,
              "stationary_failures": stat_bad,
              "ok": not bridge_bad and not stat_bad}
    _emit_json(report)
    return 0 if report["ok"] else 1


def _all_sectors(n: int, k: int):
    from itertools import product
    for counts in product(range(n + 1), repeat=k - 1):
        if sum(counts) <= n:
            yield counts


def cmd_verify_chain(args) -> int:
    n, r = args.n, args.r
    params = RateParams.single_q(Fraction(1, 2), Fraction(1, 3),
                                 Fraction(1, 5), 2)
    states, _ = ratchain.chain_transitions(n, r)
    proj = ratchain.projection_check(n, r)
    bal = ratchain.detailed_balance_check(n, r)
    stat = ratchain.stationary_matches_weights(n, r, params)
    push = ratchain.pushforward_matches_pasep(n, r, params)
    report = {"n": n, "r": r, "states": len(states),
              "projection_ok": proj["projection_ok"],
              "balance_ok": bal["balance_ok"],
              "stationary_matches_weights": stat and push}
    _emit_json(report)
    ok = all([report["projection_ok"], report["balance_ok"],
              report["stationary_matches_weights"]])
    return 0 if ok else 1


def cmd_verify_tilings(args) -> int:
    word = parse_word(args.word, args.k)
    report = rhombic.prop28_check(word, args.k)
    _emit_json(report)
    return 0 if report["equal"] else 1


def cmd_count_classes(args) -> int:
    n, r = args.n, args.r
    if not 0 <= r <= n:
        raise UsageError(f"need 0 <= r <= n, got n={n} r={r}")
    counted = rhombic.count_classes(n, r)
    print(counted)
    return 0 if counted == rhombic.class_count_formula(n, r) else 1


def cmd_render(args) -> int:
    render_word(args.word, args.out, args.k)
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpasep",
        description="Exact k-species PASEP: stationary distributions three "
                    "ways, with cross-verification.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("stationary", help="exact stationary distribution")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sector", default="")
    p.add_argument("--alpha", default="1/2")
    p.add_argument("--beta", default="1/3")
    p.add_argument("--q", default="1/5")
    p.add_argument("--qmatrix", default=None,
                   help="JSON file with distinct swap rates")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_stationary)

    tab = sub.add_parser("tableaux", help="tableau enumeration and weights")
    tsub = tab.add_subparsers(dest="subverb", required=True)
    p = tsub.add_parser("enumerate")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_tableaux_enumerate)
    p = tsub.add_parser("weight")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_tableaux_weight)

    ver = sub.add_parser("verify", help="cross-verification suites")
    vsub = ver.add_subparsers(dest="subverb", required=True)
    p = vsub.add_parser("ansatz")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--window", default="8,4")
    p.add_argument("--lambda", dest="lam", default="1")
    p.set_defaults(func=cmd_verify_ansatz)
    p = vsub.add_parser("weights")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify_weights)
    p = vsub.add_parser("chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_verify_chain)
    p = vsub.add_parser("tilings")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_verify_tilings)

    cnt = sub.add_parser("count", help="class counting")
    csub = cnt.add_subparsers(dest="subverb", required=True)
    p = csub.add_parser("classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_count_classes)

    p = sub.add_parser("render", help="SVG drawing of the maximal tiling")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
