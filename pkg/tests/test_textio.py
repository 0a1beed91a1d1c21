import pytest
from hypothesis import given

from strategies import dfas, dsas
from sufread import Graph, ParseError, parse, serialize, to_dot
from sufread.catalog import empty_dfa, sigma_star_aab, suffix_family

WAITER = """\
# waits for aab
type: dsa
alphabet: a b
states: q0 q3
initial: q0
accepting: q3
edge: q3 a a b -> q3
edge: q0 a a b -> q3   # first match
"""


def test_parse_waiter():
    doc = parse(WAITER, "waiter.dsa")
    assert doc.kind == "dsa" and doc.source_name == "waiter.dsa"
    assert doc.payload == sigma_star_aab()


def test_serialize_is_canonical():
    text = serialize(parse(WAITER).payload)
    assert text.splitlines()[-2:] == ["edge: q0 a a b -> q3", "edge: q3 a a b -> q3"]
    assert serialize(parse(text).payload) == text


@given(dsas())
def test_dsa_round_trip(a):
    assert parse(serialize(a)).payload == a


@given(dfas())
def test_dfa_round_trip(m):
    assert parse(serialize(m)).payload == m


def test_token_round_trip():
    a, _ = suffix_family(3)
    assert parse(serialize(a)).payload == a


def test_graph_round_trip():
    g = Graph(("u", "v", "w"), (("u", "v"), ("v", "w")))
    doc = parse(serialize(g))
    assert doc.kind == "graph" and doc.payload == g


def error_of(text):
    with pytest.raises(ParseError) as info:
        parse(text, "f")
    return info.value


def test_missing_initial_names_a_line():
    err = error_of("type: dsa\nalphabet: a\nstates: q\n")
    assert err.line == 1 and "initial" in err.message
    assert str(err).startswith("f:1:")


def test_empty_label():
    err = error_of("type: dsa\nalphabet: a\nstates: q\ninitial: q\nedge: q -> q\n")
    assert err.line == 5 and "empty label" in err.message


def test_positioned_errors():
    base = "type: dsa\nalphabet: a\nstates: q\ninitial: q\n"
    err = error_of(base + "edge: q a -> r\n")
    assert (err.line, err.col) == (5, 14) and "unknown state" in err.message
    err = error_of(base + "edge: q b -> q\n")
    assert (err.line, err.col) == (5, 9) and "not in alphabet" in err.message
    err = error_of(base + "states: q\n")
    assert err.line == 5 and "duplicate declaration" in err.message
    err = error_of(base + "colour: red\n")
    assert "unknown key" in err.message
    err = error_of(base + "edge: q a -> q\nedge: q a -> q\n")
    assert err.line == 6 and "duplicate edge" in err.message
    err = error_of("type: dfa\nalphabet: a\nstates: q\ninitial: q\nedge: q a a -> q\n")
    assert "exactly one symbol" in err.message
    err = error_of("alphabet: a\n")
    assert "type" in err.message
    err = error_of("type: dsa\nalphabet: a b!\n")
    assert (err.line, err.col) == (2, 13)


def test_graph_errors():
    err = error_of("type: graph\nvertices: a b\nedge: a -- c\n")
    assert "unknown vertex" in err.message
    err = error_of("type: graph\nvertices: a b\nedge: a b\n")
    assert "U -- V" in err.message


def test_dot_waiter():
    text = to_dot(sigma_star_aab())
    assert text.count('[label="aab"]') == 2
    assert text.count("doublecircle") == 1
    assert '__start -> "q0"' in text


def test_dot_tokens_and_empty_accepting():
    a, _ = suffix_family(2)
    assert '[label="a1·a2"]' in to_dot(a)
    assert "doublecircle" not in to_dot(empty_dfa())


def test_dot_graph_is_undirected():
    text = to_dot(Graph(("u", "v", "w"), (("u", "v"), ("v", "w"))))
    assert text.startswith("graph ") and '"u" -- "v";' in text and "->" not in text
