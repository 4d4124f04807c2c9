"""Regenerate the bundled corpora in src/tracegate/data.

    python3 scripts/make_corpus.py

The ``ORACLE`` clauses were produced by scripts/oracle_expectations.py
(sympy) and are frozen here so the suites never depend on sympy.
"""

from itertools import combinations
from math import isqrt
from pathlib import Path

from tracegate.arith import poly as P
from tracegate.arith.integers import is_squarefree
from tracegate.field import NumberField

DATA = Path(__file__).resolve().parent.parent / "src" / "tracegate" / "data"

ORACLE = {
    "example-sextic": "t=1 disc=-173056 p2=(1,2)(4,1) p13=(1,1)(1,1)(2,2)",
    "eis-sextic-3": "t=6 disc=-3499200 p2=(2,3) p3=(6,1) p5=(1,2)(2,1)(2,1)",
    "dedekind-cubic": "t=1 disc=-503 p2=(1,1)(1,1)(1,1) p503=(1,1)(2,1)",
    "pure-quintic-2": "t=5 disc=50000 p2=(5,1) p5=(5,1)",
    "pure-septic-3": "t=7 disc=-600362847 p3=(7,1) p7=(7,1)",
}


def quadratic(m):
    if m % 4 == 1:
        return [-(m - 1) // 4, -1, 1]
    return [-m, 0, 1]


def squarefree_range(lo, hi):
    return [m for m in range(-hi, hi + 1) if abs(m) >= lo and m != 1 and is_squarefree(m)]


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def cubic_family(bound=6):
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if b == 0:
                continue
            divisors = [r for r in range(1, abs(b) + 1) if b % r == 0]
            if any(r**3 + a * r + b == 0 or -(r**3) - a * r + b == 0 for r in divisors):
                continue
            f = [b, a, 0, 1]
            out.append((f"cubic a={a} b={b}".replace(" ", "_"), f, is_square(P.discriminant(f))))
    return out


EXTRA = [
    # label, coefficients, normal
    ("example-sextic", [1, 0, 5, 0, 1, 0, 1], False),
    ("gauss", [1, 0, 1], True),
    ("dedekind-cubic", [-8, -2, -1, 1], False),
    ("cyclic-cubic-7", [1, -2, -1, 1], True),
    ("eis-quartic-x4-2", [-2, 0, 0, 0, 1], False),
    ("eis-quartic-x4+2", [2, 0, 0, 0, 1], False),
    ("eis-quartic-x4-6", [-6, 0, 0, 0, 1], False),
    ("eis-quartic-x4-10", [-10, 0, 0, 0, 1], False),
    ("eis-quartic-2x+2", [2, 2, 0, 0, 1], False),
    ("eis-quartic-2x3+2", [2, 0, 0, 2, 1], False),
    ("eis-quartic-4x+2", [2, 4, 0, 0, 1], False),
    ("eis-quartic-2x2+6", [6, 0, 2, 0, 1], False),
    ("quartic-x4-3", [-3, 0, 0, 0, 1], False),
    ("quartic-x4-x-1", [-1, -1, 0, 0, 1], False),
    ("quartic-x4+x2-1", [-1, 0, 1, 0, 1], False),
    ("cyclotomic-5", [1, 1, 1, 1, 1], True),
    ("eis-sextic-3", [3, 0, -3, 0, 0, 0, 1], False),
    ("eis-sextic-x6-2", [-2, 0, 0, 0, 0, 0, 1], False),
    ("eis-sextic-x6+2", [2, 0, 0, 0, 0, 0, 1], False),
    ("eis-sextic-x6-3", [-3, 0, 0, 0, 0, 0, 1], False),
    ("eis-sextic-x6-6", [-6, 0, 0, 0, 0, 0, 1], False),
    ("eis-sextic-3x+3", [3, 3, 0, 0, 0, 0, 1], False),
    ("eis-sextic-2x3+2", [2, 0, 0, 2, 0, 0, 1], False),
    ("sextic-x6-x-1", [-1, -1, 0, 0, 0, 0, 1], False),
    ("cyclotomic-7", [1, 1, 1, 1, 1, 1, 1], True),
    ("cyclotomic-9", [1, 0, 0, 1, 0, 0, 1], True),
    ("pure-x2-2", [-2, 0, 1], True),
    ("pure-x2-6", [-6, 0, 1], True),
    ("pure-x2-10", [-10, 0, 1], True),
    ("pure-x3-2", [-2, 0, 0, 1], False),
    ("pure-x3-3", [-3, 0, 0, 1], False),
    ("pure-x3-6", [-6, 0, 0, 1], False),
    ("pure-x3-12", [-12, 0, 0, 1], False),
    ("pure-x3-15", [-15, 0, 0, 1], False),
    ("pure-quintic-2", [-2, 0, 0, 0, 0, 1], False),
    ("pure-x5-5", [-5, 0, 0, 0, 0, 1], False),
    ("pure-x5-10", [-10, 0, 0, 0, 0, 1], False),
    ("pure-x5-15", [-15, 0, 0, 0, 0, 1], False),
    ("quintic-x5-x-1", [-1, -1, 0, 0, 0, 1], False),
    ("quintic-x5-x+1", [1, -1, 0, 0, 0, 1], False),
    ("pure-septic-3", [-3, 0, 0, 0, 0, 0, 0, 1], False),
    ("pure-x7-7", [-7, 0, 0, 0, 0, 0, 0, 1], False),
    ("pure-x7-14", [-14, 0, 0, 0, 0, 0, 0, 1], False),
    ("septic-x7-x-1", [-1, -1, 0, 0, 0, 0, 0, 1], False),
]

COMPOSE = [
    ([[-1, -1, 1], [-1, -1, 0, 1]], False),
    ([[-1, -1, 1], [-1, -1, 0, 1], [-1, -1, 0, 0, 0, 1]], False),
    ([[-3, -1, 1], [-1, -1, 0, 1]], False),
    ([[1, -1, 1], [-1, -1, 0, 1]], False),
    ([[-1, -1, 1], [-1, -1, 0, 0, 0, 1]], False),
    ([[-1, -1, 0, 1], [-1, -1, 0, 0, 0, 1]], False),
    ([[1, 0, 1], [-2, 0, 0, 1]], False),
    ([[-2, 0, 1], [1, 0, 1]], True),
    ([[-1, -1, 1], [-1, -1, 1]], True),
]

# m = 1 mod 4 quadratics for the normal-compositum pairs
NORMAL_MS = [5, 13, 17, 21, 29, -3, -7, -11]


def field_line(label, f, normal=False):
    NumberField(f)  # must certify
    line = f"{label}: [{', '.join(map(str, f))}]"
    if normal:
        line += " normal"
    if label in ORACLE:
        line += " expect " + ORACLE[label]
    return line


def compose_line(polys, normal):
    for f in polys:
        NumberField(f)
    body = ", ".join(f"[{', '.join(map(str, f))}]" for f in polys)
    return f"compose: {body}" + (" normal" if normal else "")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    quad = ["# squarefree m, 2 <= |m| <= 200; x^2 - x - (m-1)/4 when m = 1 mod 4, else x^2 - m"]
    for m in squarefree_range(2, 200):
        quad.append(field_line(f"quad{m:+d}", quadratic(m), True))
    (DATA / "quadratics.txt").write_text("\n".join(quad) + "\n", encoding="utf-8")

    fields = ["# mixed corpus, degrees 2-7; 'expect' clauses are frozen sympy results"]
    for m in squarefree_range(2, 30):
        fields.append(field_line(f"quad{m:+d}", quadratic(m), True))
    for label, f, normal in cubic_family():
        fields.append(field_line(label, f, normal))
    for label, f, normal in EXTRA:
        fields.append(field_line(label, f, normal))
    (DATA / "fields.txt").write_text("\n".join(fields) + "\n", encoding="utf-8")

    comp = ["# composita; 'normal' declares every factor normal"]
    for polys, normal in COMPOSE:
        comp.append(compose_line(polys, normal))
    for a, b in combinations(NORMAL_MS, 2):
        comp.append(compose_line([quadratic(a), quadratic(b)], True))
    (DATA / "composita.txt").write_text("\n".join(comp) + "\n", encoding="utf-8")
    print(f"{len(quad) - 1} quadratics, {len(fields) - 1} fields, {len(comp) - 1} composita")


if __name__ == "__main__":
    main()
