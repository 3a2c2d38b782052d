import networkx as nx
import pytest
from hypothesis import given

from tdec.errors import DuplicateEdge, ParseError, VertexOutOfRange
from tdec.families import complete, complete_bipartite, cycle, friendship, path, star, wheel
from tdec.formats import (
    format_edge_list,
    format_graph6,
    from_graph6,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from tdec.graph import Graph

from .test_graph import graphs

FAMILY_GRAPHS = [
    path(1), path(2), path(7), cycle(5), complete(5), complete_bipartite(2, 3),
    star(6), wheel(6), friendship(3), Graph(0, []),
]


def test_parse_p3():
    g = parse_edge_list("p 3 2\ne 0 1\ne 1 2")
    assert g == path(3)


def test_comments_and_blank_lines():
    g = parse_edge_list("# header\np 3 2\n\n# x\ne 0 1\ne 1 2\n")
    assert g == path(3)


def test_out_of_range_vertex():
    with pytest.raises(VertexOutOfRange, match="line 2"):
        parse_edge_list("p 3 1\ne 0 3")


def test_duplicate_reports_line():
    with pytest.raises(DuplicateEdge, match="line 3"):
        parse_edge_list("p 3 2\ne 0 1\ne 1 0\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("e 0 1\n", 1),
        ("p 3\n", 1),
        ("p 3 1\nx 0 1\n", 2),
        ("p 3 1\ne 0 a\n", 2),
        ("p 2 1\np 2 1\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_edge_list("p 3 2\ne 0 1\n")


@pytest.mark.parametrize("g", FAMILY_GRAPHS, ids=repr)
def test_edge_list_roundtrip_families(g):
    text = format_edge_list(g)
    assert parse_edge_list(text) == g
    assert format_edge_list(parse_edge_list(text)) == text


@given(graphs(max_n=8))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_graph6_known_string():
    g = from_graph6("D?{")
    assert g.vertex_count == 5
    assert sorted(g.edges) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert to_graph6(g) == "D?{"


@pytest.mark.parametrize("g", FAMILY_GRAPHS, ids=repr)
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    expected = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert to_graph6(g) == expected
    back = from_graph6(expected)
    assert sorted(back.edges) == sorted(g.edges)


@given(graphs(max_n=9))
def test_graph6_roundtrip(g):
    s = to_graph6(g)
    assert to_graph6(from_graph6(s)) == s
    assert sorted(from_graph6(s).edges) == sorted(g.edges)


def test_graph6_large_n_header():
    g = path(70)
    s = to_graph6(g)
    assert s.startswith("~")
    assert sorted(from_graph6(s).edges) == sorted(g.edges)


def test_graph6_multi_line_and_header():
    text = ">>graph6<<D?{\n" + format_graph6([cycle(4), path(3)])
    gs = parse_graph6(text)
    assert [h.edge_count for h in gs] == [4, 4, 2]


@pytest.mark.parametrize(
    "text,byte",
    [("D? {", 2), ("D?", 2), ("D?{?", 3), ("D?\x7f", 2), ("~?", 2), ("", 0)],
)
def test_graph6_errors(text, byte):
    with pytest.raises(ParseError) as info:
        from_graph6(text)
    assert info.value.byte == byte


def test_graph6_error_offset_in_multiline():
    with pytest.raises(ParseError) as info:
        parse_graph6("D?{\nD?|!\n")
    assert info.value.byte == 7
