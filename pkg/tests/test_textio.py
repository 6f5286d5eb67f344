from fractions import Fraction

import pytest
from hypothesis import given

from blockgraph.exceptions import GraphFormatError
from blockgraph.graph import build_graph
from blockgraph.textio import format_graph, parse_graph, parse_rational, read_graph, write_graph

from conftest import block_graphs


def test_parse_full_record():
    text = "# a path\nn 3\nw 0 1/2 -3\ne 0 1\n\ne 2 1\n"
    g = parse_graph(text)
    assert g == build_graph(3, [(0, 1), (1, 2)], [0, Fraction(1, 2), -3])


def test_weight_line_optional():
    assert parse_graph("n 2\ne 0 1\n").weights == (0, 0)


def test_empty_graph():
    assert parse_graph("n 0\n").n == 0
    assert format_graph(build_graph(0)) == "n 0\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 0 1\n",
        "n 2\nw 0\n",
        "n 2\ne 0 2\n",
        "n 2\ne 1 1\n",
        "n 2\nw 2/4 0\n",
        "n 2\nw 1/0 0\n",
        "n 2\nw x 0\n",
        "n 2\nq 1\n",
        "n two\n",
        "n 2\ne 0\n",
    ],
)
def test_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_rational():
    assert parse_rational("-7/3") == Fraction(-7, 3)
    assert parse_rational("12") == 12
    with pytest.raises(GraphFormatError):
        parse_rational("1.5")


@given(block_graphs(12))
def test_round_trip(g):
    assert parse_graph(format_graph(g)) == g


def test_file_round_trip(tmp_path):
    g = build_graph(3, [(0, 1), (1, 2)], [Fraction(-1, 3), 2, 0])
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g
