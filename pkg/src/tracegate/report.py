"""Field reports: plain-data snapshot, JSON form and human table.

In JSON every integer is written as a decimal string so no consumer
truncates discriminants to 53 bits; booleans and labels stay native.
"""

from dataclasses import asdict, dataclass, field as dc_field
from math import gcd

from .arith import poly as P
from .arith.integers import format_factored
from .errors import FactorizationBudgetExceeded


@dataclass
class FieldReport:
    defining_poly: list
    degree: int
    certificate: str
    disc: int
    disc_factored: str
    index: int
    basis_denominator: int
    basis_matrix: list
    t_L: int
    witness: list
    witness_trace: int
    per_prime: list  # [[p, [[e, f, v_different], ...]], ...]
    tame: bool
    flags: dict
    theorem_verdicts: dict = dc_field(default_factory=dict)

    @property
    def ok(self):
        return all(self.theorem_verdicts.values())


def _factored(n):
    try:
        return format_factored(n)
    except FactorizationBudgetExceeded:
        return str(n)


def build_report(trace_report):
    """Flatten an :class:`~tracegate.invariants.TraceReport`."""
    r = trace_report
    order = r.order
    coords = [int(c) for c in order.coordinates(r.witness)]
    per_prime = []
    for row in r.per_prime:
        per_prime.append([row.p, [[e, f, v] for (e, f), v in zip(row.ef, row.v_different)]])
    return FieldReport(
        defining_poly=list(r.field.poly),
        degree=r.field.degree,
        certificate=f"{r.field.certificate}: {r.field.certificate_reason}",
        disc=order.discriminant,
        disc_factored=_factored(order.discriminant),
        index=order.index,
        basis_denominator=order.denominator,
        basis_matrix=[list(row) for row in order.basis_matrix],
        t_L=r.t_L,
        witness=coords,
        witness_trace=int(r.witness.trace()),
        per_prime=per_prime,
        tame=r.tame,
        flags=dict(r.flags),
        theorem_verdicts=dict(r.verdicts),
    )


def _stringify(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, list):
        return [_stringify(v) for v in x]
    if isinstance(x, dict):
        return {k: _stringify(v) for k, v in x.items()}
    return x


def _intify(x):
    if isinstance(x, str):
        return int(x)
    if isinstance(x, list):
        return [_intify(v) for v in x]
    return x


def to_json(report):
    d = asdict(report)
    out = _stringify(d)
    out["disc"] = {"value": str(report.disc), "sign": 1 if report.disc > 0 else -1, "factored": report.disc_factored}
    del out["disc_factored"]
    out["defining_poly"] = {"text": P.to_str(report.defining_poly), "coefficients": out["defining_poly"]}
    out["integral_basis"] = {"denominator": out.pop("basis_denominator"), "matrix": out.pop("basis_matrix")}
    out["witness"] = {"coordinates": out["witness"], "trace": out.pop("witness_trace")}
    out["degree"] = report.degree
    return out


def from_json(data):
    return FieldReport(
        defining_poly=_intify(data["defining_poly"]["coefficients"]),
        degree=int(data["degree"]),
        certificate=data["certificate"],
        disc=int(data["disc"]["value"]),
        disc_factored=data["disc"]["factored"],
        index=int(data["index"]),
        basis_denominator=int(data["integral_basis"]["denominator"]),
        basis_matrix=_intify(data["integral_basis"]["matrix"]),
        t_L=int(data["t_L"]),
        witness=_intify(data["witness"]["coordinates"]),
        witness_trace=int(data["witness"]["trace"]),
        per_prime=[[int(p), _intify(rows)] for p, rows in data["per_prime"]],
        tame=data["tame"],
        flags=dict(data["flags"]),
        theorem_verdicts=dict(data["theorem_verdicts"]),
    )


def _yes(b):
    return "yes" if b else "no"


def basis_strings(report):
    out = []
    for row in report.basis_matrix:
        g = gcd(report.basis_denominator, *row)
        den = report.basis_denominator // g
        s = P.to_str(P.strip([x // g for x in row]), "t")
        out.append(s if den == 1 else f"({s})/{den}")
    return out


def format_human(report):
    lines = [
        f"field       {P.to_str(report.defining_poly)}   (degree {report.degree}; {report.certificate})",
        f"disc(L)     {report.disc_factored}",
        f"index       {report.index}",
        "basis       " + ", ".join(basis_strings(report)),
        f"t_L         {report.t_L}",
        f"witness     {report.witness}  (integral-basis coordinates, trace {report.witness_trace})",
        "primes      p: (e,f,v_P(D)) ...",
    ]
    for p, rows in report.per_prime:
        cells = " ".join(f"({e},{f},{v})" for e, f, v in rows)
        lines.append(f"            {p}: {cells}")
    lines.append(f"tame        {_yes(report.tame)}")
    lines.append("flags       " + " ".join(f"{k}={_yes(v)}" for k, v in report.flags.items()))
    bad = [k for k, v in report.theorem_verdicts.items() if not v]
    lines.append("verdicts    " + ("all hold" if not bad else "FAILED: " + ", ".join(bad)))
    return "\n".join(lines)
