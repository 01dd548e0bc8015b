import json

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from hibound.bounds import compute_report
from hibound.errors import DuplicateEdgeLine, EdgeArity, IndexOutOfRange, MalformedHeader
from hibound.hypergraph import (
    Hypergraph,
    complete,
    complete_minus_one_edge,
    empty,
    random_regular,
    random_uniform,
)
from hibound.io import (
    CSV_COLUMNS,
    REPORT_SCHEMA,
    format_report,
    parse_hypergraph,
    report_to_dict,
    reports_to_csv,
    serialize_hypergraph,
)


def test_parse_basic():
    h = parse_hypergraph("3 6\n0 1 2\n0 1 3\n")
    assert (h.n, h.k, h.m) == (6, 3, 2)


def test_parse_comments_and_blanks():
    h = parse_hypergraph("# a comment\n\n3 6\n# edge\n0 1 2\n\n   \n2 4 5\n")
    assert h.edges == ((0, 1, 2), (2, 4, 5))


@pytest.mark.parametrize("text,exc,line", [
    ("3 6\n0 1 2\n0 2 1\n", DuplicateEdgeLine, 3),
    ("2 4\n0 1\n1 5\n", IndexOutOfRange, 3),
    ("2 4\n0 1\n1 2 3\n", EdgeArity, 3),
    ("2 4\n0 0\n", EdgeArity, 2),
    ("2 4\nx 1\n", EdgeArity, 2),
    ("3\n0 1 2\n", MalformedHeader, 1),
    ("# only\n\nk n\n", MalformedHeader, 3),
    ("1 4\n", MalformedHeader, 1),
    ("", MalformedHeader, 0),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_hypergraph(text)
    assert info.value.line == line


def test_one_based():
    h = parse_hypergraph("2 3\n1 2\n2 3\n", one_based=True)
    assert h.edges == ((0, 1), (1, 2))
    with pytest.raises(IndexOutOfRange):
        parse_hypergraph("2 3\n0 1\n", one_based=True)


@pytest.mark.parametrize("h", [
    complete(6, 3), empty(5, 4), complete_minus_one_edge(7, 3),
    random_regular(6, 3, 7, seed=0), random_uniform(9, 4, 40, seed=3), empty(1, 2),
])
def test_round_trip_generated(h):
    text = serialize_hypergraph(h)
    assert parse_hypergraph(text) == h
    assert serialize_hypergraph(parse_hypergraph(text)) == text


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(2, n),
    st.sets(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True).map(frozenset)))))
def test_round_trip_property(args):
    n, k, sets = args
    edges = [tuple(s) for s in sets if len(s) == k]
    h = Hypergraph(n, k, edges)
    assert parse_hypergraph(serialize_hypergraph(h)) == h


@pytest.mark.parametrize("h,alpha", [
    (complete(6, 3), True), (empty(4, 3), True), (complete(5, 2), False),
    (random_regular(6, 4, 6, seed=1), True), (empty(3, 4), False),
])
def test_report_json_schema(h, alpha):
    r = compute_report(h, with_alpha=alpha)
    doc = json.loads(format_report(r, "json"))
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc == report_to_dict(r)
    for v in doc["bounds"].values():
        assert isinstance(v, int) or set(v) == {"na"}


def test_report_csv_columns():
    r = compute_report(complete(5, 2), with_alpha=True)
    text = reports_to_csv([r])
    header, row = text.strip().split("\n")
    assert tuple(header.split(",")) == CSV_COLUMNS == (
        "n", "m", "k", "ell", "turan", "turan_spencer", "caro_tuza", "cps", "alpha")
    assert row == "5,10,2,1,1,1,1,na,1"


def test_report_table_mentions_every_bound():
    text = format_report(compute_report(empty(4, 4), with_alpha=True), "table")
    for name in ("ell", "turan", "turan_spencer", "caro_tuza", "cps", "alpha"):
        assert name in text
