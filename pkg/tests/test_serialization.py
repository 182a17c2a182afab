"""Text format: tokenizing, parsing, building, and canonical printing."""

import importlib.resources

import pytest

from secgroups.serialization import (
    ParseError, parse, print_document, canonicalize, describe_ab,
)
from secgroups.abelian import FinAbGroup
from secgroups.crossed import CrossedModule, ReducedQuadraticModule
from secgroups.nil2 import Class2Group


def _corpus():
    root = importlib.resources.files("secgroups") / "corpus"
    return sorted(p for p in root.iterdir() if p.name.endswith(".sg"))


def test_corpus_files_exist():
    assert len(_corpus()) == 10


@pytest.mark.parametrize("path", _corpus(), ids=lambda p: p.name)
def test_corpus_round_trip_byte_identical(path):
    text = path.read_text()
    doc = parse(text)
    assert print_document(doc) == text
    assert canonicalize(text) == text


def test_parse_builds_live_objects():
    doc = parse("group N nil2 basis a b\n")
    g = doc["N"]
    assert isinstance(g, Class2Group)
    assert g.gen_names == ["a", "b"]


def test_parse_wedge_cross_block():
    text = (_corpus()[0].parent / "wedge_level2.sg").read_text()
    doc = parse(text)
    assert isinstance(doc["W"], ReducedQuadraticModule)


def test_parse_level1_cross_block():
    text = (_corpus()[0].parent / "crossed_level1.sg").read_text()
    doc = parse(text)
    names = [n for n in doc.order]
    assert any(isinstance(doc[n], CrossedModule) for n in names)


def test_comments_and_whitespace_are_canonicalized_away():
    messy = "# a comment\n\ngroup   G  ab   2   rel  2 0\n# trailing\n"
    assert canonicalize(messy) == "group G ab 2 rel 2 0\n"


def test_abelian_relations_round_trip():
    doc = parse("group G ab 2 rel 2 0 rel 0 4\n")
    g = doc["G"]
    assert g.q.invariant_factors == (2, 4)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse("group G ab two\n")
    assert exc.value.line == 1
    assert exc.value.col > 0


def test_parse_error_unknown_reference():
    with pytest.raises(ParseError):
        parse("hom f : G -> H { a -> b }\n")


def test_parse_error_malformed_exponent():
    with pytest.raises(ParseError):
        parse("group N nil2 basis a\n"
              "hom f : N -> N { a -> a^ }\n")


def test_parse_error_duplicate_name():
    with pytest.raises(ParseError):
        parse("group G ab 1\ngroup G ab 2\n")


def test_describe_ab():
    assert describe_ab(FinAbGroup(0)) == "0"
    assert describe_ab(FinAbGroup(2)) == "Z^2"
    assert "Z/2" in describe_ab(FinAbGroup(3, [[2, 0, 0], [0, 4, 0]]))


def test_empty_document():
    doc = parse("")
    assert print_document(doc) == ""
