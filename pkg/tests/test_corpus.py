import pytest

from tracegate.corpus import ComposeEntry, CorpusEntry, format_result, load_corpus, parse_corpus, run_corpus
from tracegate.errors import ParseError

from .conftest import DATA

TEXT = """
# comment
golden: [-1, -1, 1] normal  # trailing comment
gauss: [1, 0, 1] normal expect t=2 disc=-4 p2=(2,1)
compose: [-1, -1, 1], [-1, -1, 0, 1]
"""


def test_parse_lines():
    entries = parse_corpus(TEXT)
    assert [type(e) for e in entries] == [CorpusEntry, CorpusEntry, ComposeEntry]
    golden, gauss, comp = entries
    assert golden.declared_normal and golden.coefficients == [-1, -1, 1]
    assert gauss.expectations == {"t": 2, "disc": -4, "ef": {2: [(2, 1)]}}
    assert comp.label == "compose@00005" and comp.polys[1] == [-1, -1, 0, 1]


@pytest.mark.parametrize(
    "text, line",
    [
        ("a: [1, 0, 1]\nb [1, 1]", 2),
        ("a: [1, 0, 1]\na: [2, 0, 1]", 2),
        ("a: [1, 0, 2]", 1),
        ("\n\na: [1, 0, 1] weird", 3),
        ("a: [1, 0, 1] expect q=3", 1),
        ("compose: [1, 0, 1]", 1),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError, match=f"line {line}:"):
        parse_corpus(text)


def test_bundled_corpora_load():
    assert len(load_corpus(DATA / "fields.txt")) >= 150
    assert len(load_corpus(DATA / "quadratics.txt")) == 242
    assert sum(isinstance(e, ComposeEntry) for e in load_corpus(DATA / "composita.txt")) == 37


def test_run_small_corpus():
    summary = run_corpus(parse_corpus(TEXT))
    assert summary.exit_code == 0
    assert summary.counts == {"entries": 3, "passed": 3, "failed": 0, "errors": 0}
    by_label = {r["label"]: r for r in summary.results}
    assert by_label["compose@00005"]["compositum_degree"] == 6
    assert by_label["compose@00005"]["checks"] == {"thm3_I_degree": True, "thm3_I_trace": True, "embed_traces": True, "t_divides": True}
    assert "t=2" in format_result(by_label["gauss"])


def test_errors_are_captured():
    summary = run_corpus(parse_corpus("quartic: [4, 0, 0, 0, 1]"))
    (r,) = summary.results
    assert "NotCertified" in r["error"] and summary.exit_code == 1
    # x^4 + 4 is reducible; forcing it through must stop, not loop
    summary = run_corpus(parse_corpus("quartic: [4, 0, 0, 0, 1]"), assert_irreducible=True)
    assert "reducible" in summary.results[0]["error"]
    assert summary.exit_code == 3
