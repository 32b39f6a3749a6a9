import json

import pytest
from hypothesis import given, strategies as st

from ubp.combinatorics import vector_partition
from ubp.formats import (
    ParseError, format_diagram, format_elements, format_setpartition, format_tableau,
    format_vp, matrix_json, multisym_json, parse_diagram, parse_elements, parse_partition,
    parse_setpartition, parse_tableau, parse_vp,
)
from ubp.repmod import basis
from ubp.symfunc import E
from strategies import diagrams, set_partitions, vector_partitions


def test_elements_base36_and_decimal():
    assert parse_elements("8fh") == [8, 15, 17]
    assert parse_elements("9, 10 11") == [9, 10, 11]
    assert format_elements((4, 10, 12), 17) == "4ac"


@given(diagrams(max_k=6))
def test_diagram_round_trip(d):
    assert parse_diagram(format_diagram(d), d.k) == d


def test_diagram_accepts_braces_and_spacing():
    d = parse_diagram("{1,2' | 2,1'}")
    assert d == parse_diagram("2,1'|1,2'")


@pytest.mark.parametrize("text, fragment", [
    ("1,2'|2", "not uniform"),
    ("1,1'|1,2'", "cover"),
    ("1,x'", "bad token"),
    ("1,1'||2,2'", "empty block"),
])
def test_diagram_errors_name_the_problem(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_diagram(text)


@given(set_partitions(max_k=9))
def test_setpartition_round_trip(pi):
    k = sum(len(b) for b in pi)
    assert parse_setpartition(format_setpartition(pi), k) == pi


@given(vector_partitions(max_k=7))
def test_vp_round_trip(vp):
    assert parse_vp(format_vp(vp), len(vp)) == vp


def test_vp_errors():
    with pytest.raises(ParseError):
        parse_vp("[[1],[1]]", 2)
    with pytest.raises(ParseError):
        parse_vp("[[1,2]]")
    with pytest.raises(ParseError):
        parse_vp("not json")


def test_partition_forms():
    assert parse_partition("[2,1]") == parse_partition("2,1") == parse_partition("2 1") == (2, 1)
    with pytest.raises(ParseError):
        parse_partition("1,2")


@given(vector_partitions(max_k=5), st.data())
def test_tableau_round_trip(lam, data):
    S = data.draw(st.sampled_from(basis(lam)))
    assert parse_tableau(format_tableau(S), len(lam)) == S


def test_tableau_examples():
    S = parse_tableau("{3}/{1},{2}", 3)
    assert S.tableaux[0] == (((1,), (2,)), ((3,),))
    assert format_tableau(parse_tableau("∅ ; ∅ ; {123}", 3)) == "∅ ; ∅ ; {123}"


def test_tableau_rejects_bad_cells():
    with pytest.raises(ParseError):
        parse_tableau("{12} ; {3}", 3)
    with pytest.raises(ParseError):
        parse_tableau("{1},{2}/{3}", 3)


def test_json_shapes():
    data = matrix_json(2, ((1, 1, 1), (0, 1, 1), (0, -1, 1)))
    assert data == {"k": 2, "order": [[[], [1]], [[2]], [[1, 1]]],
                    "entries": [[1, 1, 1], [0, 1, 1], [0, -1, 1]]}
    terms = multisym_json(E(2))
    assert {"vector_partition": [[2]], "numerator": 1, "denominator": 2} in terms
    json.dumps(terms)
