from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcritical.errors import GraphInputError
from kcritical.graph import build_graph, complete, empty
from kcritical.graph6 import emit_graph6, parse_graph6, read_graph6_lines

CORPUS = Path(__file__).parent / "data" / "corpus.g6"


def corpus_lines():
    return [ln for ln in CORPUS.read_bytes().split(b"\n") if ln]


def test_corpus_size_and_long_form():
    lines = corpus_lines()
    assert len(lines) >= 500
    assert sum(ln.startswith(b"~") for ln in lines) >= 50


def test_corpus_roundtrip_byte_exact():
    for line in corpus_lines():
        assert emit_graph6(parse_graph6(line)) == line


def test_corpus_matches_networkx_decoding():
    for line in corpus_lines()[::7]:
        ref = nx.from_graph6_bytes(line)
        g = parse_graph6(line)
        assert g.n == ref.number_of_nodes()
        assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())


def test_star_example():
    g = parse_graph6(b"D?{")
    assert g.n == 5 and g.e == 4 and g.degree(4) == 4
    assert emit_graph6(g) == b"D?{"


def test_small_orders():
    assert emit_graph6(empty(1)) == b"@"
    assert emit_graph6(empty(0)) == b"?"
    assert parse_graph6("A_") == complete(2)


def test_trailing_newline_and_header():
    assert parse_graph6(b"D?{\n").e == 4
    gs = list(read_graph6_lines([b">>graph6<<D?{\n", b"\n", "A_\n"]))
    assert [g.n for g in gs] == [5, 2]


@pytest.mark.parametrize("bad", [
    b"",            # empty
    b"D?",          # short body
    b"D?{?",        # trailing byte
    b"D? {",        # out of range
    b"D?|",         # nonzero padding (|=124 sets the low padding bits)
    b"~??",         # truncated long form
    b"~??~",        # long form for n <= 62
    b"~~?????",     # 8-byte form not supported
])
def test_malformed(bad):
    with pytest.raises(GraphInputError):
        parse_graph6(bad)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 70), st.data())
def test_random_roundtrip_against_networkx(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = build_graph(n, [p for p, keep in zip(pairs, picks) if keep])
    line = emit_graph6(g)
    ref = nx.Graph()
    ref.add_nodes_from(range(n))
    ref.add_edges_from(g.edges())
    assert line == nx.to_graph6_bytes(ref, header=False).strip()
    assert parse_graph6(line) == g
