"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 resource or budget failure,
3 a checked identity failed (an implementation bug).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, budget
from .arith import poly as P
from .arith.integers import check_prime, format_factored
from .compositum import compose, multiquadratic, theorem3_I_witness, theorem3_III_check
from .corpus import SUITES, format_result, load_corpus, run_corpus
from .errors import BudgetError, TracegateError
from .field import FieldElement, NumberField
from .ideal import decompose_prime, valuation
from .invariants import analyze, different, primes_above, ramified_primes, theorem1_criterion, trace_index
from .order import maximal_order
from .parsing import parse_polynomial
from .report import build_report, format_human, to_json

EXAMPLE_POLY = [1, 0, 5, 0, 1, 0, 1]
EXAMPLE_DISC = -(2**10) * 13**2
# (a^5 + a^4 + 2a^3 + 2a^2 - a - 1) / 4, ascending power-basis coordinates
EXAMPLE_BETA = [Fraction(c, 4) for c in (-1, -1, 2, 2, 1, 1)]
EXAMPLE_BETA_TRACE = -7


def _emit(args, data, human):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(human)


def _s(x):
    return str(x)


def _field(args, text=None):
    coeffs = parse_polynomial(text if text is not None else args.poly, allow_nonmonic=args.allow_nonmonic)
    return NumberField(coeffs, assert_irreducible=args.assert_irreducible, normal=getattr(args, "normal", False))


# ---------------------------------------------------------------- commands


def cmd_analyze(args):
    rep = build_report(analyze(_field(args)))
    _emit(args, to_json(rep), format_human(rep))
    return 0 if rep.ok else 3


def cmd_decompose(args):
    F = _field(args)
    p = check_prime(args.p)
    order = maximal_order(F)
    primes = decompose_prime(order, p)
    data = {
        "p": _s(p),
        "primes": [
            {"e": P_.e, "f": P_.f, "hnf": [[_s(x) for x in row] for row in P_.ideal.hnf]} for P_ in primes
        ],
    }
    lines = [f"{p} O_L = " + " * ".join(f"P{i + 1}^{P_.e}" if P_.e > 1 else f"P{i + 1}" for i, P_ in enumerate(primes))]
    for i, P_ in enumerate(primes):
        lines.append(f"P{i + 1}: e={P_.e} f={P_.f} hnf={P_.ideal.hnf}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_different(args):
    F = _field(args)
    order = maximal_order(F)
    dd = different(order)
    diff = dd.different
    vals = []
    for p in ramified_primes(order):
        for P_ in primes_above(order, p):
            vals.append({"p": _s(p), "e": P_.e, "f": P_.f, "v": valuation(diff, P_)})
    data = {
        "hnf": [[_s(x) for x in row] for row in diff.hnf],
        "norm": _s(dd.norm_of_different),
        "content": _s(diff.content()),
        "valuations": vals,
    }
    lines = [
        f"D_L hnf   {diff.hnf}",
        f"norm      {format_factored(dd.norm_of_different)}",
        f"content   {diff.content()}",
    ]
    for v in vals:
        lines.append(f"v_P(D_L)  p={v['p']} e={v['e']} f={v['f']}: {v['v']}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_trace_index(args):
    F = _field(args)
    order = maximal_order(F)
    t, w = trace_index(order)
    coords = [int(c) for c in order.coordinates(w)]
    data = {"t_L": _s(t), "witness": [_s(c) for c in coords], "witness_power_basis": w.to_str(), "trace": _s(w.trace())}
    _emit(args, data, f"t_L       {t}\nwitness   {coords} = {w.to_str()}\ntrace     {w.trace()}")
    return 0


def cmd_compositum(args):
    fields = [_field(args, text) for text in args.polys]
    if args.mode == "normal":
        if len(fields) != 2:
            raise SystemExit("compositum --mode normal takes exactly two polynomials")
        v = theorem3_III_check(*fields)
        data = {
            "status": v.status,
            "degree": v.degree,
            "t": None if v.t is None else _s(v.t),
            "tame": v.tame,
            "per_prime": [[_s(p), kl, k, m, ok] for p, kl, k, m, ok in v.per_prime],
            "detail": v.detail,
        }
        lines = [f"status    {v.status}", f"degree    {v.degree}"]
        if v.compositum is not None:
            lines.append(f"poly      {P.to_str(v.compositum.field.poly)}")
        if v.t is not None:
            lines += [f"t         {v.t}", f"tame      {v.tame}"]
        for p, kl, k, m, ok in v.per_prime:
            lines.append(f"p={p}: e(KL)={kl} e(K)={k} e(M)={m} {'ok' if ok else 'FAIL'}")
        if v.detail:
            lines.append(v.detail)
        _emit(args, data, "\n".join(lines))
        return 3 if v.ok is False else 0
    if args.mode == "plain":
        if len(fields) != 2:
            raise SystemExit("compositum --mode plain takes exactly two polynomials")
        comp = compose(*fields)
        data = {"poly": [_s(c) for c in comp.field.poly], "degree": comp.degree, "shift": comp.shift}
        _emit(args, data, f"poly      {P.to_str(comp.field.poly)}\ndegree    {comp.degree}\nshift     {comp.shift}")
        return 0
    res = theorem3_I_witness(fields)
    data = {
        "poly": [_s(c) for c in res.field.poly],
        "degree": res.field.degree,
        "witness": res.witness.to_str(),
        "trace": _s(res.trace),
        "steps": [{"u": s.u, "v": s.v, "deg_K": s.degree_partial, "deg_L": s.degree_new} for s in res.steps],
    }
    lines = [
        f"poly      {P.to_str(res.field.poly)}",
        f"degree    {res.field.degree}",
        f"witness   {res.witness.to_str()}",
        f"trace     {res.trace}",
    ]
    for s in res.steps:
        lines.append(f"step      u={s.u} v={s.v}  ({s.u}*{s.degree_new} + {s.v}*{s.degree_partial} = 1)")
    _emit(args, data, "\n".join(lines))
    return 0 if res.trace == 1 else 3


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_multiquadratic(args):
    res = multiquadratic(args.m)
    K = res.field
    data = {
        "input": [_s(m) for m in K.input],
        "generators": [_s(m) for m in K.gens],
        "s": K.s,
        "degree": K.degree,
        "alpha": {K.basis_label(k): _s(v) for k, v in sorted(res.alpha.coeffs.items())},
        "trace": _s(res.trace),
    }
    lines = [
        f"generators {K.gens}  (s = {K.s}, degree {K.degree})",
        "alpha      " + " * ".join(f"(1+sqrt({m}))/2" for m in K.gens),
        f"expanded   {res.alpha.to_str()}",
        f"trace      {res.trace}",
    ]
    if args.cross_check:
        F, to_field = K.as_number_field()
        order = maximal_order(F)
        t, _ = trace_index(order)
        a = to_field(res.alpha)
        data["cross_check"] = {"poly": [_s(c) for c in F.poly], "t_L": _s(t), "alpha_integral": order.contains(a)}
        lines.append(f"check      {P.to_str(F.poly)}: t_L = {t}, alpha integral: {order.contains(a)}")
    _emit(args, data, "\n".join(lines))
    return 0 if res.trace == 1 else 3


def cmd_corpus(args):
    entries = load_corpus(args.file)
    suites = [s for s in SUITES if getattr(args, s.replace("-", "_"))]
    summary = run_corpus(entries, suites, parallel=args.parallel, assert_irreducible=args.assert_irreducible)
    if args.json:
        out = {
            "suites": list(summary.suites),
            "results": [_jsonable(r) for r in summary.results],
            "counts": summary.counts,
            "checks": {k: list(v) for k, v in summary.check_counts.items()},
        }
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for r in summary.results:
            print(format_result(r))
        c = summary.counts
        print(f"\nentries {c['entries']}  passed {c['passed']}  failed {c['failed']}  errors {c['errors']}")
        for k, (good, total) in summary.check_counts.items():
            print(f"  {k:<22} {good}/{total}")
    return summary.exit_code


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def example_checklist(coeffs=EXAMPLE_POLY, assert_irreducible=False):
    """The explicit degree-6 example, item by item: ``[(name, passed, detail)]``."""
    F = NumberField(coeffs, assert_irreducible=assert_irreducible)
    order = maximal_order(F)
    items = []
    disc = order.discriminant
    items.append(("disc(L) = -2^10 * 13^2", disc == EXAMPLE_DISC, format_factored(disc)))
    primes = primes_above(order, 2)
    pattern = sorted((P_.e for P_ in primes), reverse=True)
    items.append(("2 O_L = P1^4 P2", pattern == [4, 1], f"e-pattern {tuple(pattern)}"))
    beta = FieldElement(F, EXAMPLE_BETA)
    integral = order.contains(beta)
    tr = beta.trace()
    items.append(("beta integral with trace -7", integral and tr == EXAMPLE_BETA_TRACE, f"integral={integral}, trace={tr}"))
    t, w = trace_index(order)
    items.append(("t_L = 1", t == 1 and w.trace() == t, f"t_L={t}, witness {w.to_str()} has trace {w.trace()}"))
    _, cert = theorem1_criterion(order)
    pats = cert["patterns"]
    at2 = all(P_.e % 2 == 0 for P_ in primes_above(order, 2))
    at3 = all(P_.e % 3 == 0 for P_ in primes_above(order, 3))
    ok = set(pats) == {2, 3} and not at2 and not at3
    detail = "; ".join(f"p={p}: (e,f)={pats[p]}" for p in sorted(pats))
    items.append(("no p | 6 divides every e above p (checked at 2 and 3)", ok, detail))
    return items


def cmd_verify_paper(args):
    coeffs = parse_polynomial(args.poly) if args.poly else EXAMPLE_POLY
    items = example_checklist(coeffs, assert_irreducible=args.assert_irreducible)
    ok = all(passed for _, passed, _ in items)
    data = {"poly": P.to_str(coeffs), "items": [{"item": n, "pass": p, "detail": d} for n, p, d in items], "pass": ok}
    lines = [f"field {P.to_str(coeffs)}"]
    lines += [f"{'PASS' if p else 'FAIL'}  {n}  [{d}]" for n, p, d in items]
    _emit(args, data, "\n".join(lines))
    return 0 if ok else 3


# ---------------------------------------------------------------- parser


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument(
        "--assert-irreducible",
        action="store_true",
        default=argparse.SUPPRESS,
        help="accept polynomials the irreducibility sieve cannot certify",
    )
    common.add_argument("--allow-nonmonic", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--parallel", type=int, default=argparse.SUPPRESS, metavar="N", help="corpus worker processes")
    return common


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="tracegate", description="Trace index and ramification toolkit.", parents=[common])
    parser.add_argument("--version", action="version", version=f"tracegate {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("analyze", cmd_analyze, "full report for one field"),
        ("different", cmd_different, "different ideal and its valuations"),
        ("trace-index", cmd_trace_index, "t_L and a witness"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("poly")
        p.add_argument("--normal", action="store_true", help="declare the field normal")
        p.set_defaults(func=func)

    p = sub.add_parser("decompose", parents=[common], help="factor p O_L")
    p.add_argument("poly")
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compositum", parents=[common], help="composita and trace-one witnesses")
    p.add_argument("polys", nargs="+")
    p.add_argument("--mode", choices=("witness", "plain", "normal"), default="witness")
    p.add_argument("--normal", action="store_true", help="declare every input field normal")
    p.set_defaults(func=cmd_compositum)

    p = sub.add_parser("multiquadratic", parents=[common], help="trace-one element of Q(sqrt m_1, ...)")
    p.add_argument("-m", type=_int_list, required=True, metavar="a,b,...")
    p.add_argument("--cross-check", action="store_true", help="also compute the maximal order (s <= 3)")
    p.set_defaults(func=cmd_multiquadratic)

    corpus = sub.add_parser("corpus", help="corpus suites")
    csub = corpus.add_subparsers(dest="corpus_command", required=True)
    p = csub.add_parser("run", parents=[common])
    p.add_argument("file")
    for s in SUITES:
        p.add_argument(f"--{s}", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("verify-paper", parents=[common], help="replicate the degree-6 example")
    p.add_argument("--poly", default=None, help="substitute field (negative control)")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, default in (("json", False), ("assert_irreducible", False), ("allow_nonmonic", False), ("parallel", 1)):
        if not hasattr(args, key):
            setattr(args, key, default)
    if args.func is cmd_multiquadratic and len(args.m) > 8:
        parser.error("at most 8 generators")
    try:
        with budget.limit():
            return args.func(args)
    except TracegateError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ArithmeticError as exc:
        print(f"internal check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (MemoryError, RecursionError) as exc:
        print(f"resource failure: {type(exc).__name__}", file=sys.stderr)
        return BudgetError.exit_code


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
