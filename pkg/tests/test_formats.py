import json
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given

from minus_two import Graph, Graph6Error, parse_graph6, to_dot, write_graph6
from minus_two.families import clebsch, cocktail_party, complete, forbidden_f, petersen, schlafli
from minus_two.formats import graph_from_json, graph_to_json
from oracles import to_nx
from test_graph import graphs

GOLDEN = json.loads((Path(__file__).parent / "fixtures" / "graph6_golden.json").read_text())


@given(graphs(max_n=20))
def test_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=12))
def test_matches_networkx_encoder(g):
    ours = write_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs


def test_small_examples():
    assert write_graph6(Graph(0)) == "?"
    assert write_graph6(complete(5)) == "D~{"
    assert parse_graph6(">>graph6<<D~{\r\n") == complete(5)


@pytest.mark.parametrize("name,build", [
    ("K5", lambda: complete(5)), ("CP3", lambda: cocktail_party(3)), ("F4", lambda: forbidden_f(4)),
    ("Petersen", petersen), ("Schlafli", schlafli), ("Clebsch", clebsch),
])
def test_golden_strings(name, build):
    assert write_graph6(build()) == GOLDEN[name]


@pytest.mark.parametrize("text,pos", [("", 0), ("D~", 2), ("D~{{", 3), ("C!", 1), ("~", 0), ("D~|", 2)])
def test_malformed_input_reports_position(text, pos):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.position == pos
    assert f"at byte {pos}" in str(info.value)


def test_dot_format():
    assert to_dot(Graph(3, [(1, 2), (0, 1)])) == "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"


def test_json_round_trip():
    g = petersen()
    assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g


def test_golden_strings_decode_to_the_named_graphs():
    assert nx.is_isomorphic(nx.from_graph6_bytes(GOLDEN["CP3"].encode()), nx.octahedral_graph())
    assert nx.is_isomorphic(nx.from_graph6_bytes(GOLDEN["Petersen"].encode()), nx.petersen_graph())
    assert nx.is_isomorphic(nx.from_graph6_bytes(GOLDEN["K5"].encode()), nx.complete_graph(5))
    f4 = nx.line_graph(nx.complete_bipartite_graph(2, 4))
    assert nx.is_isomorphic(nx.from_graph6_bytes(GOLDEN["F4"].encode()), f4)
    for name in GOLDEN:
        h = nx.from_graph6_bytes(GOLDEN[name].encode())
        assert nx.to_graph6_bytes(h, header=False).decode().strip() == GOLDEN[name]
