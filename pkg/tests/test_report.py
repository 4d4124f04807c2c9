import json

import pytest

from tracegate.corpus import load_corpus
from tracegate.field import NumberField
from tracegate.invariants import analyze
from tracegate.report import basis_strings, build_report, format_human, from_json, to_json

from .conftest import DATA

FIELDS = [e for e in load_corpus(DATA / "fields.txt") if e.coefficients[-1] == 1][::7]


@pytest.mark.parametrize("entry", FIELDS, ids=lambda e: e.label)
def test_json_round_trip(entry):
    rep = build_report(analyze(NumberField(entry.coefficients, normal=entry.declared_normal)))
    text = json.dumps(to_json(rep))
    assert from_json(json.loads(text)) == rep


def test_json_layout_for_example():
    rep = build_report(analyze(NumberField([1, 0, 5, 0, 1, 0, 1])))
    data = to_json(rep)
    assert data["disc"] == {"value": "-173056", "sign": -1, "factored": "-2^10 * 13^2"}
    assert data["defining_poly"]["text"] == "x^6 + x^4 + 5*x^2 + 1"
    assert data["t_L"] == "1" and data["witness"]["trace"] == "1"
    assert data["degree"] == 6
    assert isinstance(data["tame"], bool)
    big = to_json(build_report(analyze(NumberField([-3, 0, 0, 0, 0, 0, 0, 1]))))
    assert big["disc"]["value"] == "-600362847"
    assert all(isinstance(x, str) for row in big["integral_basis"]["matrix"] for x in row)


def test_human_report():
    rep = build_report(analyze(NumberField([-5, 0, 1])))
    assert basis_strings(rep) == ["1", "(t + 1)/2"]
    text = format_human(rep)
    assert "t_L         1" in text and "verdicts    all hold" in text
