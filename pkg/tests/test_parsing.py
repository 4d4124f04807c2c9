import pytest
from hypothesis import given, strategies as st

from tracegate.arith import poly as P
from tracegate.errors import NonMonic, ParseError
from tracegate.parsing import parse_polynomial


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^6+x^4+5x^2+1", [1, 0, 5, 0, 1, 0, 1]),
        ("x**3 - x - 1", [-1, -1, 0, 1]),
        ("  -2 + x^4 ", [-2, 0, 0, 0, 1]),
        ("x^2 + 3*x + x", [0, 4, 1]),
        ("[1, 0, 5, 0, 1, 0, 1]", [1, 0, 5, 0, 1, 0, 1]),
        ("[-3,0,1]", [-3, 0, 1]),
        ("x", [0, 1]),
    ],
)
def test_accepts(text, coeffs):
    assert parse_polynomial(text) == coeffs


@pytest.mark.parametrize(
    "text, pos",
    [
        ("x^2+2x+", 7),
        ("x^2 + y", 6),
        ("[1, 2", 5),
        ("[]", 1),
        ("x^ + 1", 3),
        ("3* + x", 3),
        ("[1, 0, 1] x", 10),
        ("", 0),
    ],
)
def test_rejects_with_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.position == pos


def test_monic_gate():
    with pytest.raises(NonMonic):
        parse_polynomial("2x^2 + 1")
    assert parse_polynomial("2x^2 + 1", allow_nonmonic=True) == [1, 0, 2]
    assert parse_polynomial("x^3 + 0x^4") == [0, 0, 0, 1]


@given(st.lists(st.integers(-50, 50), max_size=7))
def test_round_trip_through_printer(low):
    coeffs = low + [1]
    assert parse_polynomial(P.to_str(coeffs)) == coeffs
    assert parse_polynomial(str(coeffs)) == coeffs
