import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tracegate.arith.modp import factor_mod_p
from tracegate.compositum import (
    MultiquadraticField,
    compose,
    multiquadratic,
    normality_heuristic,
    theorem3_I_witness,
    theorem3_III_check,
)
from tracegate.errors import (
    DegreesNotCoprime,
    InputNotSurjective,
    NotDeclaredNormal,
    NotLinearlyDisjoint,
    NotOneMod4,
    NotSquarefree,
)
from tracegate.field import NumberField
from tracegate.invariants import trace_index
from tracegate.order import maximal_order

GOLDEN = [-1, -1, 1]
CUBIC = [-1, -1, 0, 1]
QUINTIC = [-1, -1, 0, 0, 0, 1]


def resultant_poly(fk, fm, c):
    """Res_y(f_K(x - c y), f_M(y)), ascending integer coefficients."""
    x, y = sympy.symbols("x y")
    a = sum(co * (x - c * y) ** i for i, co in enumerate(fk))
    b = sum(co * y**i for i, co in enumerate(fm))
    r = sympy.Poly(sympy.resultant(a, b, y), x)
    lead = r.LC()
    return [int(co / lead) for co in reversed(r.all_coeffs())]


@pytest.mark.parametrize("fk, fm", [(GOLDEN, CUBIC), (CUBIC, QUINTIC), ([1, 0, 1], [-2, 0, 0, 1]), ([-2, 0, 1], [1, 0, 1])])
def test_compose_matches_resultant(fk, fm):
    K, M = NumberField(fk), NumberField(fm)
    comp = compose(K, M)
    assert comp.degree == K.degree * M.degree
    assert list(comp.field.poly) == resultant_poly(fk, fm, comp.shift)
    assert comp.embed(K.gen) + comp.embed(M.gen) * comp.shift == comp.field.gen


coords = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=3, max_size=3)


@settings(max_examples=30, deadline=None)
@given(coords, st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=2, max_size=2))
def test_embedding_is_a_ring_map_scaling_traces(a, b):
    K, M = NumberField(CUBIC), NumberField(GOLDEN)
    comp = compose(K, M)
    x, y = K(a), M(b)
    ex = comp.embed(x)
    assert ex.trace() == 2 * x.trace()
    assert comp.embed(y).trace() == 3 * y.trace()
    assert comp.embed(x * x) == ex * ex
    assert ex.norm() == x.norm() ** 2


def test_same_field_is_not_disjoint():
    K = NumberField(GOLDEN)
    with pytest.raises(NotLinearlyDisjoint) as info:
        compose(K, NumberField(GOLDEN))
    assert info.value.best_degree == 4  # K (x) K = K x K has a degree-4 primitive element
    with pytest.raises(NotLinearlyDisjoint):
        compose(K, NumberField([-5, 0, 1]))  # Q(sqrt 5) again


def test_trace_one_witness_pair_and_triple():
    fields = [NumberField(GOLDEN), NumberField(CUBIC)]
    res = theorem3_I_witness(fields)
    assert res.field.degree == 6 and res.trace == 1
    assert maximal_order(res.field).contains(res.witness)
    res = theorem3_I_witness(fields + [NumberField(QUINTIC)])
    assert res.field.degree == 30 and res.trace == 1
    assert [(s.degree_partial, s.degree_new) for s in res.steps] == [(2, 3), (6, 5)]
    for s in res.steps:
        assert s.u * s.degree_new + s.v * s.degree_partial == 1


def test_trace_one_witness_rejections():
    with pytest.raises(DegreesNotCoprime):
        theorem3_I_witness([NumberField(GOLDEN), NumberField([1, 1, 1, 1, 1])])
    with pytest.raises(InputNotSurjective):
        theorem3_I_witness([NumberField([1, 0, 1]), NumberField(CUBIC)])


def test_multiquadratic_traces():
    res = multiquadratic([5, 13])
    assert res.trace == 1 and res.field.s == 2
    assert multiquadratic([5, 5]).field.s == 1
    assert multiquadratic([5, 13, 65]).field.s == 2
    assert multiquadratic([-3, 5, -7, 13]).trace == 1
    with pytest.raises(NotOneMod4):
        MultiquadraticField([6, 10])
    with pytest.raises(NotSquarefree):
        MultiquadraticField([5, 45])
    with pytest.raises(NotSquarefree):
        MultiquadraticField([1, 5])


def test_multiquadratic_arithmetic():
    K = MultiquadraticField([5, -3])
    r5, r3 = K.sqrt(0), K.sqrt(1)
    assert r5 * r5 == K.one() * 5
    assert (r5 * r3) * (r5 * r3) == K.one() * -15
    assert (r5 * r3).trace() == 0 and K.one().trace() == 4
    F, to_field = K.as_number_field()
    assert F.degree == 4
    a = K.alpha()
    assert to_field(a).trace() == a.trace() == 1
    assert maximal_order(F).contains(to_field(a))
    assert trace_index(maximal_order(F))[0] == 1


def test_normality_refuted_for_non_galois_cubic():
    F = NumberField(CUBIC)
    ok, p, degs = normality_heuristic(F)
    assert (ok, p, degs) == (False, 5, [1, 2])
    assert sorted(len(g) - 1 for g, _ in factor_mod_p(CUBIC, 5)) == [1, 2]
    assert normality_heuristic(NumberField([1, -2, -1, 1]))[0]
    with pytest.raises(NotDeclaredNormal):
        theorem3_III_check(NumberField(CUBIC, normal=True), NumberField(GOLDEN, normal=True))
    with pytest.raises(NotDeclaredNormal):
        theorem3_III_check(NumberField(GOLDEN), NumberField([-3, -1, 1], normal=True))


def test_normal_compositum_verdicts():
    v = theorem3_III_check(NumberField(GOLDEN, normal=True), NumberField([-3, -1, 1], normal=True))
    assert v.status == "verified" and v.degree == 4 and v.ok
    assert v.t == 1 and v.tame
    assert [row[0] for row in v.per_prime] == [5, 13]
    v = theorem3_III_check(NumberField(GOLDEN, normal=True), NumberField(GOLDEN, normal=True))
    assert v.status == "degenerate" and v.ok
    with pytest.raises(InputNotSurjective):
        theorem3_III_check(NumberField([1, 0, 1], normal=True), NumberField(GOLDEN, normal=True))
