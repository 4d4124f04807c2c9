from fractions import Fraction

import pytest

from tracegate.arith.poly import discriminant
from tracegate.field import NumberField
from tracegate.order import Order, dedekind_criterion, maximal_order

from .oracle import field_data, integral_basis

FIELDS = [
    [1, 0, 5, 0, 1, 0, 1],
    [-8, -2, -1, 1],
    [-2, 0, 0, 0, 1],
    [3, 0, -3, 0, 0, 0, 1],
    [-2, 0, 0, 0, 0, 1],
    [1, 0, 0, 1, 0, 0, 1],
    [-12, 0, 0, 1],
    [6, 0, 2, 0, 1],
    [-3, -1, 1],
    [-7, 0, 1],
]


def _frac(r):
    return Fraction(int(r.p), int(r.q))


@pytest.mark.parametrize("coeffs", FIELDS, ids=str)
def test_round2_matches_sympy(coeffs):
    F = NumberField(coeffs)
    O = maximal_order(F)
    disc, _, _ = field_data(coeffs)
    assert O.discriminant == disc
    assert discriminant(coeffs) == O.index**2 * O.discriminant
    theirs = [F([_frac(c) for c in v]) for v in integral_basis(coeffs)]
    assert all(O.contains(w) for w in theirs)
    assert Order.from_elements(F, theirs) == O


@pytest.mark.parametrize("coeffs", FIELDS, ids=str)
def test_basis_shape(coeffs):
    O = maximal_order(NumberField(coeffs))
    assert O.basis[0] == O.field.one
    m = O.basis_matrix
    assert all(m[i][j] == 0 for i in range(len(m)) for j in range(i + 1, len(m)))
    assert all(b.is_integral() for b in O.basis)


def test_dedekind_criterion():
    F = NumberField([-8, -2, -1, 1])
    assert not dedekind_criterion(F, 2).is_p_maximal
    assert dedekind_criterion(F, 503).is_p_maximal
    G = NumberField([-5, 0, 1])  # Z[sqrt 5] has index 2
    v = dedekind_criterion(G, 2)
    assert not v.is_p_maximal
    assert all(g.is_integral() for g in v.enlargement_generators)
    assert dedekind_criterion(NumberField([-3, 0, 0, 1]), 3).is_p_maximal  # Eisenstein


def test_equation_order_is_maximal_when_disc_squarefree():
    F = NumberField([-1, -1, 0, 1])
    assert maximal_order(F) == Order.equation_order(F)
    assert maximal_order(F).index == 1
