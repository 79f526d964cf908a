from itertools import combinations
from math import comb

import pytest
from hypothesis import given

from conftest import cup_diagrams
from exotic_springer.diagrams import CupDiagram
from exotic_springer.errors import BadParametersError, DegreeTooLargeError, ParseError
from exotic_springer.homology import (
    EnrichedCupDiagram,
    LineDiagramVector,
    bareiss_rank,
    beta_map,
    betti_numbers,
    line_diagram,
    line_diagram_sum,
    rank_check,
    standard_enriched,
    sum_matrix,
)
from oracles import rational_rank

E = EnrichedCupDiagram.from_word


def test_lm_golden():
    got = line_diagram_sum(E("(.)|.()>()>."))
    assert str(got) == "l_{4,6,7} - l_{4,6,8} - l_{5,6,7} + l_{5,6,8}"
    assert got.degrees == {6}


def test_lm_small_cases():
    assert line_diagram_sum(E("()")) == line_diagram(2, [1]) - line_diagram(2, [2])
    assert line_diagram_sum(E("(.)")) == line_diagram(2, [])
    assert line_diagram_sum(E(">")) == line_diagram(1, [1])
    assert line_diagram_sum(E("|.")) == line_diagram(1, [])


@given(cup_diagrams(max_m=8))
def test_lm_shape(a):
    d = EnrichedCupDiagram(a, frozenset(a.rays))
    vec = line_diagram_sum(d)
    assert len(vec.terms) == 2 ** len(a.cups)
    assert vec.is_homogeneous() and vec.degrees == {d.degree}
    assert all(abs(c) == 1 for c in vec.terms.values())


@pytest.mark.parametrize("src, want", [("|||||", "|.|.|.>.>."), ("||()|", "|.|.()>."), ("(())|", "(())|.")])
def test_beta_golden(src, want):
    assert beta_map(CupDiagram.from_word(src), 3).word == want


def test_standard_set_golden():
    assert [d.word for d in standard_enriched(4, 3)] == ["|.|.|.>.", "()|.|.", "|.()|.", "|.|.()", "|.|.|.>"]
    assert len(standard_enriched(4, 2)) == 11


def test_beta_rejects_large_degree():
    with pytest.raises(DegreeTooLargeError):
        beta_map(CupDiagram.from_word("()()"), 3)


@pytest.mark.parametrize("m", range(1, 7))
def test_standard_counts_and_degrees(m):
    for k in range(m + 1):
        ds = standard_enriched(m, k)
        assert len(set(ds)) == len(ds)
        for l in range(m - k + 1):
            assert sum(1 for d in ds if d.degree == 2 * l) == comb(m, l)
        for d in ds:
            assert d.base.cups_plus_halfcups == m - k


@pytest.mark.parametrize("m", range(1, 7))
def test_rank_matches_rational_oracle(m):
    for k in range(m + 1):
        for l in range(m - k + 1):
            _, cols, rows = sum_matrix(m, k, l)
            assert cols == list(combinations(range(1, m + 1), l))
            assert bareiss_rank(rows) == rational_rank(rows) == comb(m, l)


def test_rank_examples():
    assert rank_check(4, 3, 1) == 4
    assert rank_check(6, 2, 3) == 20
    assert betti_numbers(5, 2) == [1, 5, 10, 10]
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([]) == 0


def test_enriched_validation():
    with pytest.raises(BadParametersError):
        E("||.")
    with pytest.raises(ParseError):
        E("().")
    with pytest.raises(ParseError):
        E("..")
    d = E("(.)|.()>")
    assert d.degree == 4 and d.undotted_openers == (4, 6)
    assert d.to_json() == {"m": 6, "word": "(.)|.()>", "degree": 4, "dotted": [1, 3]}


def test_vector_arithmetic_and_json():
    v = line_diagram(3, [1, 2]) - 2 * line_diagram(3, [3])
    assert str(v) == "l_{1,2} - 2*l_{3}"
    assert LineDiagramVector.from_json(v.to_json()) == v
    assert not v.is_homogeneous()
    assert (v - v).terms == {}
    with pytest.raises(BadParametersError):
        line_diagram(3, [4])
