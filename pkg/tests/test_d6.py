import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orient_turan.d6 import (
    digraph6_decode,
    digraph6_encode,
    parse_edge_list,
    read_graphs,
    write_graphs,
)
from orient_turan.errors import InvalidInputError, ParseError
from orient_turan.graphs import OrientedGraph, random_oriented_graph, transitive_tournament


class TestEncode:
    def test_single_vertex(self):
        assert digraph6_encode(OrientedGraph(1)) == "&@?"

    def test_single_arc(self):
        # matrix bits row-major 0,1,0,0 -> 010000 binary = 16 -> chr(63+16)
        encoded = digraph6_encode(transitive_tournament(2))
        assert encoded == "&A" + chr(63 + 16)

    def test_printable_ascii(self):
        g = random_oriented_graph(40, 0.7, 99)
        encoded = digraph6_encode(g)
        assert all(63 <= ord(c) <= 126 for c in encoded[1:])
        assert encoded[0] == "&"


class TestDecode:
    def test_single_vertex(self):
        g = digraph6_decode("&@?")
        assert g.n == 1 and g.arc_count == 0

    def test_header_accepted(self):
        assert digraph6_decode(">>digraph6<<&@?").n == 1

    def test_round_trip_random(self):
        rng = random.Random(0)
        for trial in range(300):
            n = rng.randint(1, 62)
            g = random_oriented_graph(n, rng.random(), trial)
            assert digraph6_decode(digraph6_encode(g)) == g

    @given(st.integers(1, 62), st.integers(0, 2**32))
    @settings(max_examples=80, deadline=None)
    def test_round_trip_property(self, n, seed):
        g = random_oriented_graph(n, (seed % 97) / 96, seed)
        assert digraph6_decode(digraph6_encode(g)) == g

    def test_two_cycle_rejected(self):
        # n=2 with both (0,1) and (1,0) bits: 0110 padded -> 011000 = 24
        with pytest.raises(InvalidInputError, match="2-cycle"):
            digraph6_decode("&A" + chr(63 + 24))

    def test_loop_rejected(self):
        # n=2 with bit (0,0): 1000 padded -> 100000 = 32
        with pytest.raises(InvalidInputError, match="loop"):
            digraph6_decode("&A" + chr(63 + 32))

    def test_truncated(self):
        with pytest.raises(ParseError) as err:
            digraph6_decode("&B")
        assert err.value.offset is not None

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            digraph6_decode("&@??")

    def test_missing_amp(self):
        with pytest.raises(ParseError):
            digraph6_decode("@?")

    def test_nonzero_padding(self):
        # single vertex needs 1 bit; the other 5 must be zero
        with pytest.raises(ParseError, match="padding"):
            digraph6_decode("&@" + chr(63 + 1))

    def test_empty(self):
        with pytest.raises(ParseError):
            digraph6_decode("")

    def test_order_out_of_range(self):
        with pytest.raises(ParseError):
            digraph6_decode("&" + chr(63) + "?")  # order 0


class TestEdgeList:
    def test_basic(self):
        g = parse_edge_list("0 1\n1 2  # comment\n\n")
        assert g.n == 3 and g.has_arc(0, 1) and g.has_arc(1, 2)

    def test_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1 2\n")
        with pytest.raises(ParseError):
            parse_edge_list("a b\n")
        with pytest.raises(ParseError):
            parse_edge_list("")

    def test_two_cycle_rejected(self):
        with pytest.raises(InvalidInputError):
            parse_edge_list("0 1\n1 0\n")


class TestFiles:
    def test_write_then_read(self, tmp_path):
        graphs = [random_oriented_graph(6, 0.5, i) for i in range(5)]
        path = tmp_path / "suite.d6"
        write_graphs(path, graphs)
        assert read_graphs(path) == graphs

    def test_read_edge_list_file(self, tmp_path):
        path = tmp_path / "edges.txt"
        path.write_text("0 1\n0 2\n1 2\n")
        (g,) = read_graphs(path)
        assert g == transitive_tournament(3)
