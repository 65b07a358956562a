import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq_lab import io
from degseq_lab.errors import FormatError, InputError
from degseq_lab.graph import Jdm, jdm_of_graph
from degseq_lab.instances import BasketFillingInstance, ThreePartitionInstance

from conftest import graphs


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_graph_round_trip(G):
    assert io.parse_graph(io.format_graph(G)) == G


def test_graph_output_is_sorted():
    G = io.parse_graph("3 2\n2 1\n0 1\n")
    assert io.format_graph(G) == "3 2\n0 1\n1 2\n"


@given(st.lists(st.integers(0, 20), max_size=15))
def test_degree_sequence_round_trip(seq):
    assert io.parse_degree_sequence(io.format_degree_sequence(seq)) == tuple(seq)


@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 500)), max_size=15))
def test_pairs_round_trip(pairs):
    assert io.parse_pairs(io.format_pairs(pairs)) == tuple(pairs)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=10))
def test_jdm_round_trip(G):
    if G.m:
        J = jdm_of_graph(G)
        assert io.parse_jdm(io.format_jdm(J)) == J


def test_instance_round_trips():
    tp = ThreePartitionInstance(2, 10, (3, 3, 4, 3, 3, 4))
    assert io.parse_tp(io.format_tp(tp)) == tp
    bf = BasketFillingInstance((5, 4, 3, 3, 3, 2), ((3, 10), (3, 10)))
    assert io.parse_bf(io.format_bf(bf)) == bf
    assert io.parse_assignment(io.format_assignment((1, 0, 1))) == (1, 0, 1)
    assert io.parse_partition(io.format_partition(((0, 1, 2), (3, 4, 5)))) == ((0, 1, 2), (3, 4, 5))
    assert io.parse_aggregates(io.format_aggregates((0, 3), (0, 12))) == ((0, 3), (0, 12))


def test_comments_and_blank_lines():
    text = "# a triangle\n3 3  # header\n\n0 1\n1 2 # edge\n0 2\n"
    assert io.parse_graph(text).m == 3
    assert io.parse_tp("2 10 # m W\n3 3 4\n3 3 4\n").alphas == (3, 3, 4, 3, 3, 4)


@pytest.mark.parametrize("parse,text", [
    (io.parse_graph, ""),
    (io.parse_graph, "3 2\n0 1\n"),
    (io.parse_graph, "3 1\n0 1 2\n"),
    (io.parse_graph, "3 1\n0 x\n"),
    (io.parse_degree_sequence, "3\n1 1\n"),
    (io.parse_pairs, "2\n1 0\n"),
    (io.parse_pairs, "1\n1 0 0\n"),
    (io.parse_jdm, "2\n0 1\n1\n"),
    (io.parse_tp, "2 10\n3 3 4\n"),
    (io.parse_bf, "2 1\n1 1\n"),
    (io.parse_bf, "2 1\n1\n2 2\n"),
    (io.parse_assignment, "0 0\n2 0\n"),
    (io.parse_partition, "0 1\n"),
    (io.parse_aggregates, "2\n1 1\n"),
])
def test_format_errors(parse, text):
    with pytest.raises(FormatError):
        parse(text)


def test_semantic_errors_are_input_errors():
    with pytest.raises(InputError):
        io.parse_graph("2 1\n0 0\n")
    with pytest.raises(InputError):
        io.parse_graph("2 2\n0 1\n1 0\n")
    with pytest.raises(InputError):
        io.parse_graph("2 1\n0 5\n")
    with pytest.raises(InputError):
        io.parse_tp("1 10\n2 4 4\n")
    with pytest.raises(InputError):
        io.read_text("/nonexistent/file.txt")
