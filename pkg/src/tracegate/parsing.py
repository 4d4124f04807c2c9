"""Polynomial input: ``x^6+x^4+5x^2+1`` or ``[1,0,5,0,1,0,1]``."""

import re

from .errors import NonMonic, ParseError

_INT = re.compile(r"[+-]?\d+")


def _skip(text, i):
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_list(text, i):
    coeffs = []
    i = _skip(text, i + 1)
    if i < len(text) and text[i] == "]":
        raise ParseError("empty coefficient list", i)
    while True:
        i = _skip(text, i)
        m = _INT.match(text, i)
        if not m:
            raise ParseError("expected an integer", i)
        coeffs.append(int(m.group()))
        i = _skip(text, m.end())
        if i >= len(text):
            raise ParseError("missing ']'", i)
        if text[i] == "]":
            i = _skip(text, i + 1)
            if i != len(text):
                raise ParseError("trailing characters after ']'", i)
            return coeffs
        if text[i] != ",":
            raise ParseError("expected ',' or ']'", i)
        i += 1


def _parse_expression(text):
    terms = {}
    i = _skip(text, 0)
    first = True
    while True:
        i = _skip(text, i)
        if i >= len(text):
            raise ParseError("empty polynomial", i)
        sign = 1
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = _skip(text, i + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", i)
        if i >= len(text):
            raise ParseError("dangling sign", i)
        start = i
        coeff = None
        m = re.compile(r"\d+").match(text, i)
        if m:
            coeff = int(m.group())
            i = _skip(text, m.end())
            if i < len(text) and text[i] == "*":
                i = _skip(text, i + 1)
                if i >= len(text) or text[i] != "x":
                    raise ParseError("expected 'x' after '*'", i)
        power = 0
        if i < len(text) and text[i] == "x":
            power = 1
            i = _skip(text, i + 1)
            if text.startswith("^", i) or text.startswith("**", i):
                i = _skip(text, i + (1 if text[i] == "^" else 2))
                m = re.compile(r"\d+").match(text, i)
                if not m:
                    raise ParseError("expected an exponent", i)
                power = int(m.group())
                i = _skip(text, m.end())
        elif coeff is None:
            raise ParseError(f"unexpected character {text[start]!r}", start)
        terms[power] = terms.get(power, 0) + sign * (1 if coeff is None else coeff)
        first = False
        if i >= len(text):
            break
        if text[i] not in "+-":
            raise ParseError(f"unexpected character {text[i]!r}", i)
    d = max(terms)
    return [terms.get(k, 0) for k in range(d + 1)]


def parse_polynomial(text, allow_nonmonic=False):
    """Ascending integer coefficient list of the polynomial in ``text``."""
    i = _skip(text, 0)
    if i < len(text) and text[i] == "[":
        coeffs = _parse_list(text, i)
    else:
        coeffs = _parse_expression(text)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not allow_nonmonic and coeffs[-1] != 1:
        raise NonMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
    return coeffs
