"""Corpus files and the theorem-suite runner.

Line format (``#`` starts a comment)::

    label: [c0, c1, ..., cd] [normal] [expect t=1 disc=-23 p23=(1,1)(1,2)]
    compose: [f], [g] [, [h] ...] [normal]

``pN=(e,f)(e,f)...`` lists the primes above N sorted by (e, f).
"""

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import gcd

from . import budget
from .arith.integers import format_factored, squarefree_kernel
from .compositum import compose, theorem3_I_witness, theorem3_III_check
from .errors import NotLinearlyDisjoint, ParseError, TracegateError
from .field import NumberField
from .invariants import analyze, primes_above, trace_index
from .order import maximal_order

SUITES = ("thm1", "thm2", "lemma1", "lemma2", "norm-different", "thm3")

SUITE_CHECKS = {
    "thm1": ("thm1", "thm1_iii", "eisenstein"),
    "thm2": ("thm2_chain", "uniform_ramification", "quadratic_dichotomy"),
    "lemma1": ("lemma1",),
    "lemma2": ("lemma2", "lemma3", "disc_exponents"),
    "norm-different": ("norm_different",),
}
CORE_CHECKS = ("index_identity", "t_divides_d", "witness_trace", "expectations")

# compositum degree above which t_K | t_KL is not checked (maximal order cost)
DIVISIBILITY_DEGREE = 12

_LIST = re.compile(r"\[[^\]]*\]")
_EXPECT = re.compile(r"(\w+)=(\S+)")
_PAIR = re.compile(r"\((\d+),(\d+)\)")


@dataclass
class CorpusEntry:
    label: str
    coefficients: list
    declared_normal: bool = False
    expectations: dict = dc_field(default_factory=dict)
    line: int = 0


@dataclass
class ComposeEntry:
    label: str
    polys: list
    declared_normal: bool = False
    line: int = 0


def _parse_coeffs(text, lineno):
    body = text.strip()[1:-1]
    try:
        coeffs = [int(c) for c in body.split(",")]
    except ValueError:
        raise ParseError(f"line {lineno}: bad coefficient list {text!r}") from None
    if coeffs[-1] != 1:
        raise ParseError(f"line {lineno}: polynomial {text} is not monic")
    return coeffs


def _parse_expect(text, lineno):
    out = {}
    for key, value in _EXPECT.findall(text):
        if key in ("t", "disc"):
            out[key] = int(value)
        elif key.startswith("p") and key[1:].isdigit():
            pairs = [(int(e), int(f)) for e, f in _PAIR.findall(value)]
            if not pairs:
                raise ParseError(f"line {lineno}: bad prime pattern {value!r}")
            out.setdefault("ef", {})[int(key[1:])] = pairs
        else:
            raise ParseError(f"line {lineno}: unknown expectation {key!r}")
    return out


def parse_corpus(text):
    """Entries in file order; raises ParseError naming the line."""
    entries = []
    labels = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'label: [coefficients]'")
        label, rest = (s.strip() for s in line.split(":", 1))
        if label == "compose":
            label = f"compose@{lineno:05d}"
            lists = _LIST.findall(rest)
            leftover = _LIST.sub("", rest).replace(",", " ").split()
            if len(lists) < 2 or any(w != "normal" for w in leftover):
                raise ParseError(f"line {lineno}: expected 'compose: [f], [g] [normal]'")
            polys = [_parse_coeffs(s, lineno) for s in lists]
            entries.append(ComposeEntry(label, polys, "normal" in leftover, lineno))
            continue
        if not label or label in labels:
            raise ParseError(f"line {lineno}: missing or duplicate label {label!r}")
        labels.add(label)
        m = _LIST.match(rest)
        if not m:
            raise ParseError(f"line {lineno}: expected a bracketed coefficient list")
        coeffs = _parse_coeffs(m.group(), lineno)
        tail = rest[m.end() :].strip()
        expect = {}
        if "expect" in tail:
            tail, exp_text = tail.split("expect", 1)
            expect = _parse_expect(exp_text, lineno)
        words = tail.split()
        if any(w != "normal" for w in words):
            raise ParseError(f"line {lineno}: unexpected text {tail!r}")
        entries.append(CorpusEntry(label, coeffs, "normal" in words, expect, lineno))
    return entries


def load_corpus(path):
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh.read())


# ---------------------------------------------------------------- running


def _quadratic_dichotomy(report):
    """m = 1 mod 4: disc m, t 1, tame. Otherwise disc 4m, t 2, wild at 2."""
    m = squarefree_kernel(report.field.poly_discriminant)
    disc = report.order.discriminant
    if m % 4 == 1:
        return disc == m and report.t_L == 1 and report.tame
    wild2 = any(row.p == 2 and not row.tame_at_p for row in report.per_prime)
    return disc == 4 * m and report.t_L == 2 and wild2


def _expectations(report, expect):
    if "t" in expect and expect["t"] != report.t_L:
        return False
    if "disc" in expect and expect["disc"] != report.order.discriminant:
        return False
    for p, pairs in expect.get("ef", {}).items():
        got = sorted((P.e, P.f) for P in primes_above(report.order, p))
        if got != sorted(pairs):
            return False
    return True


def _run_field(entry, suites, assert_irreducible):
    field = NumberField(entry.coefficients, assert_irreducible=assert_irreducible, normal=entry.declared_normal)
    rep = analyze(field)
    v = dict(rep.verdicts)
    v["quadratic_dichotomy"] = _quadratic_dichotomy(rep) if field.degree == 2 else True
    v["expectations"] = _expectations(rep, entry.expectations)
    names = list(CORE_CHECKS)
    for s in suites:
        names += SUITE_CHECKS.get(s, ())
    checks = {k: v[k] for k in names}
    disc = rep.order.discriminant
    return {
        "label": entry.label,
        "kind": "field",
        "degree": field.degree,
        "disc": disc,
        "disc_factored": format_factored(disc),
        "t": rep.t_L,
        "checks": checks,
    }


def _run_compose(entry, suites, assert_irreducible):
    fields = [NumberField(c, assert_irreducible=assert_irreducible, normal=entry.declared_normal) for c in entry.polys]
    checks = {}
    info = {"label": entry.label, "kind": "compose", "degrees": [F.degree for F in fields]}
    if "thm3" not in suites:
        info["checks"] = checks
        return info
    ts = [trace_index(maximal_order(F))[0] for F in fields]
    info["t"] = ts
    coprime = all(gcd(a.degree, b.degree) == 1 for i, a in enumerate(fields) for b in fields[i + 1 :])
    if coprime and all(t == 1 for t in ts):
        res = theorem3_I_witness(fields)
        expected = 1
        for F in fields:
            expected *= F.degree
        checks["thm3_I_degree"] = res.field.degree == expected
        checks["thm3_I_trace"] = res.trace == 1
        info["compositum_degree"] = res.field.degree
    if len(fields) == 2:
        K, M = fields
        if entry.declared_normal and all(t == 1 for t in ts):
            verdict = theorem3_III_check(K, M)
            info["thm3_III"] = verdict.status
            if verdict.status != "not-disjoint":
                checks["thm3_III"] = bool(verdict.ok)
        try:
            comp = compose(K, M)
        except NotLinearlyDisjoint as exc:
            info["not_disjoint"] = exc.best_degree
        else:
            info["compositum_degree"] = comp.degree
            checks["embed_traces"] = _embedding_trace_check(comp)
            if comp.degree <= DIVISIBILITY_DEGREE:
                t_kl = trace_index(maximal_order(comp.field))[0]
                info["t_compositum"] = t_kl
                checks["t_divides"] = all(t_kl % t == 0 for t in ts)
    info["checks"] = checks
    return info


def _embedding_trace_check(comp):
    """Tr_L(x) = [L:K] Tr_K(x) on the integral basis of each factor."""
    for F in (comp.left, comp.right):
        ratio = comp.degree // F.degree
        for w in maximal_order(F).basis:
            if comp.embed(w).trace() != ratio * w.trace():
                return False
    return True


def run_entry(entry, suites=SUITES, assert_irreducible=False):
    """Result dict for one entry; errors are captured, never raised."""
    try:
        with budget.limit():
            if isinstance(entry, ComposeEntry):
                out = _run_compose(entry, suites, assert_irreducible)
            else:
                out = _run_field(entry, suites, assert_irreducible)
    except TracegateError as exc:
        return {"label": entry.label, "error": f"{type(exc).__name__}: {exc}", "exit_code": exc.exit_code}
    except ArithmeticError as exc:
        return {"label": entry.label, "error": f"{type(exc).__name__}: {exc}", "exit_code": 3}
    out["ok"] = all(out["checks"].values())
    return out


def _job(args):
    return run_entry(*args)


@dataclass
class CorpusSummary:
    results: list
    suites: tuple

    @property
    def counts(self):
        ok = sum(1 for r in self.results if r.get("ok"))
        errors = sum(1 for r in self.results if "error" in r)
        return {"entries": len(self.results), "passed": ok, "failed": len(self.results) - ok - errors, "errors": errors}

    @property
    def check_counts(self):
        out = {}
        for r in self.results:
            for k, v in r.get("checks", {}).items():
                good, total = out.get(k, (0, 0))
                out[k] = (good + bool(v), total + 1)
        return dict(sorted(out.items()))

    @property
    def exit_code(self):
        codes = {r["exit_code"] for r in self.results if "error" in r}
        if any(r.get("ok") is False for r in self.results) or 3 in codes:
            return 3
        if 2 in codes:
            return 2
        if codes:
            return 1
        return 0


def run_corpus(entries, suites=None, parallel=1, assert_irreducible=False):
    suites = tuple(suites) if suites else SUITES
    ordered = sorted(entries, key=lambda e: e.label)
    jobs = [(e, suites, assert_irreducible) for e in ordered]
    if parallel and parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_job, jobs, chunksize=4))
    else:
        results = [_job(j) for j in jobs]
    return CorpusSummary(results, suites)


def format_result(r):
    if "error" in r:
        return f"{r['label']:<28} ERROR {r['error']}"
    bad = [k for k, v in r["checks"].items() if not v]
    status = "ok" if not bad else "FAIL " + ",".join(bad)
    if r["kind"] == "field":
        return f"{r['label']:<28} d={r['degree']:<2} t={r['t']:<3} disc={r['disc_factored']:<24} {status}"
    extra = f" KL degree {r['compositum_degree']}" if "compositum_degree" in r else ""
    if "not_disjoint" in r:
        extra += f" not disjoint (best degree {r['not_disjoint']})"
    return f"{r['label']:<28} degrees={r['degrees']}{extra} {status}"

