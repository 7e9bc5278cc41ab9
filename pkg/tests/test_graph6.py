import networkx as nx
import pytest
from hypothesis import given

from largecycles.graph import MAX_N, CapacityError, complete_graph, empty_graph, petersen_graph
from largecycles.graph6 import Graph6Error, graph6_decode, graph6_encode

from conftest import graphs
from oracles import to_nx


def test_single_vertex_and_empty():
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_encode(empty_graph(0)) == "?"
    assert graph6_decode("@") == empty_graph(1)


def test_reference_decoder_agrees():
    g = graph6_decode("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert g.n == 5
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())


def test_petersen_round_trip():
    p = petersen_graph()
    assert graph6_decode(graph6_encode(p)) == p


@given(graphs(max_n=12))
def test_encoding_matches_networkx(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert graph6_encode(g) == ref
    assert graph6_decode(ref) == g


def test_header_tolerated():
    assert graph6_decode(">>graph6<<D?{") == graph6_decode("D?{")


def test_four_byte_prefix_round_trip():
    # n >= 63 needs the long size prefix; only the decoder's capacity check stops it
    text = nx.to_graph6_bytes(nx.path_graph(63), header=False).decode().strip()
    assert text.startswith("~")
    with pytest.raises(CapacityError):
        graph6_decode(text)
    assert graph6_decode(graph6_encode(complete_graph(MAX_N))) == complete_graph(MAX_N)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("D?", 2),        # truncated data
    ("D?{x", 3),      # trailing byte
    ("D \x7f", 1),    # byte out of range
    ("A`", 1),        # padding bit set
])
def test_malformed_input_reports_offset(text, offset):
    with pytest.raises(Graph6Error) as exc:
        graph6_decode(text)
    assert exc.value.offset == offset
