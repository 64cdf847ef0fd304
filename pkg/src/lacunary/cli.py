"""Command-line front end.

Subcommands: cf, qseries, stern, automaton, verify, oeis-check.  Exit
codes: 0 success, 1 a verification failed, 2 usage error.  JSON output is
deterministic: keys sorted, no timestamps, coefficients rendered as
decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bits import EpsilonSpec, LambdaSpec, parse_epsilon_spec, parse_lambda_spec
from .contfrac import build_F, cf_expand, convergents
from .dyadic import (
    Dyadic,
    NotTwoAdicError,
    OpaqueStreamError,
    StreamDepthError,
    kernel_range,
    parse_omega,
)
from .oeis import PROFILES, check_oeis
from .qseries import QSeriesHandle, a_number, pell_check_mod2, q_omega_window
from .rings import SeriesPrecisionError, poly_to_json
from .stern import (
    alpha,
    beta,
    gamma,
    stern_carlitz,
    stern_u,
    stern_v,
)
from .automaton import build_dfao, find_algebraic_relation, minimize, signed_dfao
from . import verify as verify_mod

_USAGE_ERRORS = (
    ValueError,
    KeyError,
    NotTwoAdicError,
    OpaqueStreamError,
    StreamDepthError,
    SeriesPrecisionError,
    FileNotFoundError,
)


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--level", choices=("quick", "full"), default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    root = argparse.ArgumentParser(prog="lacunary", parents=[common])
    sub = root.add_subparsers(dest="command", required=True)

    p_cf = sub.add_parser("cf", parents=[common], help="continued fraction expansion")
    p_cf.add_argument("action", nargs="?", default="expand", choices=("expand",))
    p_cf.add_argument("--lambda", dest="lam", default="mersenne")
    p_cf.add_argument("--eps", default="period:0")
    p_cf.add_argument("--n", type=int, default=None, help="max partial quotients past A_0")
    p_cf.add_argument("--precision", type=int, default=1024)

    p_q = sub.add_parser("qseries", parents=[common], help="closed-form series windows")
    p_q.add_argument("action", nargs="?", default="window",
                     choices=("window", "pell", "anumber"))
    p_q.add_argument("--omega", default="rat:1/3")
    p_q.add_argument("--lambda", dest="lam", default="mersenne")
    p_q.add_argument("--eps", default="period:0")
    p_q.add_argument("--upto", type=int, default=64)
    p_q.add_argument("--mod2", action="store_true")
    p_q.add_argument("--trunc", type=int, default=128)
    p_q.add_argument("--g", type=int, default=10)
    p_q.add_argument("--terms", type=int, default=60)
    p_q.add_argument("--digits", type=int, default=40)

    p_s = sub.add_parser("stern", parents=[common], help="sequence tables")
    p_s.add_argument("which", nargs="?", default="u",
                     choices=("u", "v", "alpha", "beta", "gamma", "carlitz", "oeis-check"))
    p_s.add_argument("--from", dest="start", type=int, default=0)
    p_s.add_argument("--to", type=int, default=16)
    p_s.add_argument("--csv", action="store_true")
    p_s.add_argument("--id", default=None)
    p_s.add_argument("--bfile", default=None)
    p_s.add_argument("--limit", type=int, default=None)

    p_a = sub.add_parser("automaton", parents=[common], help="finite automata for coefficients")
    p_a.add_argument("action", nargs="?", default="build",
                     choices=("build", "verify", "algrel"))
    p_a.add_argument("--omega", default="rat:1/3")
    p_a.add_argument("--tag", default="f", choices=("f", "g", "h", "signed"))
    p_a.add_argument("--eps", default="period:0")
    p_a.add_argument("--export", default=None, choices=("dot", "json"))
    p_a.add_argument("--minimize", action="store_true")
    p_a.add_argument("--upto", type=int, default=65536)
    p_a.add_argument("--deg", type=int, default=4)
    p_a.add_argument("--height", type=int, default=64)
    p_a.add_argument("--trunc", type=int, default=4096)

    p_v = sub.add_parser("verify", parents=[common], help="run the named invariant checks")
    p_v.add_argument("scope", nargs="?", default="all")
    p_v.add_argument("--only", default=None, help="comma-separated check names")

    p_o = sub.add_parser("oeis-check", parents=[common], help="compare against bundled b-files")
    p_o.add_argument("id", nargs="?", default=None)
    p_o.add_argument("--bfile", default=None)
    p_o.add_argument("--limit", type=int, default=None)

    return root


def _flag(args, name, default):
    return getattr(args, name, default)


def _specs(args):
    return parse_lambda_spec(args.lam), parse_epsilon_spec(args.eps)


def _cmd_cf(args) -> int:
    lam, eps = _specs(args)
    f = build_F(lam, eps, args.precision)
    cf = cf_expand(f, args.n)
    conv = convergents(cf)
    flags = [i < cf.certified for i in range(len(cf.quotients))]
    if _flag(args, "json", False):
        print(_dump({
            "a": [poly_to_json(p) for p in cf.quotients],
            "p": [poly_to_json(p) for p in conv.p],
            "q": [poly_to_json(p) for p in conv.q],
            "certified": flags,
            "certified_count": cf.certified,
            "precision": cf.precision,
            "terminated": cf.terminated,
        }))
        return 0
    for i, quot in enumerate(cf.quotients):
        mark = "" if flags[i] else "   (uncertified)"
        print(f"A_{i} = {quot}{mark}")
    print(f"certified: {cf.certified} of {len(cf.quotients)} quotients at precision {cf.precision}")
    return 0


def _cmd_qseries(args) -> int:
    lam, eps = _specs(args)
    w = parse_omega(args.omega)
    if args.action == "pell":
        ok = pell_check_mod2(w, args.trunc)
        if _flag(args, "json", False):
            print(_dump({"omega": w.describe(), "trunc": args.trunc, "holds": ok}))
        else:
            verdict = "holds" if ok else "FAILS"
            print(f"Q^2 - Q(+1)Q(-1) = 1 mod 2 {verdict} to X^{args.trunc} for omega = {w.describe()}")
        return 0 if ok else 1
    if args.action == "anumber":
        val = a_number(eps, w, args.g, args.terms)
        if _flag(args, "json", False):
            print(_dump({
                "base": args.g,
                "decimal": val.decimal(args.digits),
                "den": str(val.value.denominator),
                "num": str(val.value.numerator),
                "terms": args.terms,
            }))
        else:
            print(val.decimal(args.digits))
        return 0
    handle = QSeriesHandle(w, lam, eps)
    terms = q_omega_window(handle, args.upto)
    if _flag(args, "mod2", False):
        terms = [(e, abs(c)) for e, c in terms]
    if _flag(args, "json", False):
        print(_dump({
            "mod2": bool(_flag(args, "mod2", False)),
            "omega": w.describe(),
            "terms": [[e, str(c)] for e, c in terms],
            "upto": args.upto,
        }))
    else:
        body = ", ".join(f"{e}: {c}" for e, c in terms)
        print("{" + body + "}")
    return 0


_STERN_FUNCS = {
    "u": stern_u,
    "v": stern_v,
    "alpha": alpha,
    "beta": beta,
    "gamma": gamma,
    "carlitz": stern_carlitz,
}


def _cmd_stern(args) -> int:
    if args.which == "oeis-check":
        if args.id is None:
            raise ValueError("oeis-check needs --id")
        return _run_oeis(args.id, args.bfile, args.limit, _flag(args, "json", False))
    fn = _STERN_FUNCS[args.which]
    if args.start > args.to:
        raise ValueError(f"empty range: --from {args.start} > --to {args.to}")
    if args.start < 0 and args.which != "u":
        raise ValueError(f"sequence {args.which} is defined for n >= 0")
    values = [fn(n) for n in range(args.start, args.to + 1)]
    if _flag(args, "json", False):
        print(_dump({
            "from": args.start,
            "sequence": args.which,
            "to": args.to,
            "values": values,
        }))
    elif _flag(args, "csv", False):
        print("n," + args.which)
        for n, v in zip(range(args.start, args.to + 1), values):
            print(f"{n},{v}")
    else:
        print(",".join(str(v) for v in values))
    return 0


def _cmd_automaton(args) -> int:
    w = parse_omega(args.omega)
    if args.action == "algrel":
        from .qseries import q_support_flags
        flags = q_support_flags(w, args.trunc - 1)
        rel = find_algebraic_relation(flags, args.deg, args.height, args.trunc)
        if rel is None:
            msg = (f"no relation of degree <= {args.deg}, height <= {args.height} "
                   f"modulo X^{args.trunc}")
            if _flag(args, "json", False):
                print(_dump({"found": False, "message": msg}))
            else:
                print(msg)
            return 1
        if _flag(args, "json", False):
            print(_dump({
                "coefficients": [format(c, "x") for c in rel.coeffs],
                "degree_used": rel.degree_used(),
                "found": True,
                "height_used": rel.height_used(),
                "kind": rel.kind,
                "truncation": rel.truncation,
            }))
        else:
            print(rel.describe())
            print(f"verified to O(X^{rel.truncation})")
        return 0
    if args.action == "verify":
        bits = max(1, (args.upto - 1).bit_length())
        for tag in ("f", "g", "h"):
            d = build_dfao(w, tag)
            got = d.evaluate_all(bits)[: args.upto].tolist()
            want = kernel_range(w, args.upto - 1, tag)
            if got != want:
                bad = next(k for k in range(args.upto) if got[k] != want[k])
                print(f"MISMATCH: tag {tag}, k = {bad}: automaton {got[bad]}, direct {want[bad]}")
                return 1
        print(f"automaton output matches direct evaluation for all k < {args.upto} (tags f, g, h)")
        return 0
    if args.tag == "signed":
        d = signed_dfao(w, parse_epsilon_spec(args.eps))
    else:
        d = build_dfao(w, args.tag)
    if _flag(args, "minimize", False):
        d = minimize(d)
    if args.export == "dot":
        print(d.to_dot())
    elif args.export == "json" or _flag(args, "json", False):
        print(d.to_json())
    else:
        print(f"states: {len(d)}, initial: {d._index[d.initial]}")
        for i, s in enumerate(d.states):
            t0 = d._index[d.delta[(s, 0)]]
            t1 = d._index[d.delta[(s, 1)]]
            print(f"  {i}: out {d.out[s]:+d}, 0 -> {t0}, 1 -> {t1}")
    return 0


def _cmd_verify(args) -> int:
    names = None
    if args.only:
        names = [s.strip() for s in args.only.split(",") if s.strip()]
    results = verify_mod.run_checks(
        level=_flag(args, "level", "quick"),
        seed=_flag(args, "seed", 0),
        names=names,
    )
    print(verify_mod.render_report(results, as_json=_flag(args, "json", False)))
    return 0 if all(r.ok for r in results) else 1


def _run_oeis(seq_id, bfile, limit, as_json) -> int:
    text = None
    if bfile is not None:
        with open(bfile, "r", encoding="utf-8") as fh:
            text = fh.read()
    report = check_oeis(seq_id, bfile_text=text, limit=limit)
    if as_json:
        print(_dump({
            "compared": report.compared,
            "id": report.seq_id,
            "ok": report.ok,
            "summary": report.summary(),
        }))
    else:
        print(report.summary())
    return 0 if report.ok else 1


def _cmd_oeis(args) -> int:
    as_json = _flag(args, "json", False)
    if args.id is not None:
        return _run_oeis(args.id, args.bfile, args.limit, as_json)
    worst = 0
    for seq_id in sorted(PROFILES):
        worst = max(worst, _run_oeis(seq_id, None, args.limit, as_json))
    return worst


_HANDLERS = {
    "cf": _cmd_cf,
    "qseries": _cmd_qseries,
    "stern": _cmd_stern,
    "automaton": _cmd_automaton,
    "verify": _cmd_verify,
    "oeis-check": _cmd_oeis,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _HANDLERS[args.command](args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
