import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowdecomp.errors import GraphFormatError
from rainbowdecomp.fixtures import NAMES, fixture_text
from rainbowdecomp.generate import KINDS, generate
from rainbowdecomp.io import (
    GraphDocument,
    collection_to_dict,
    collection_to_dot,
    dumps_graph,
    graph_from_dict,
    graph_to_dot,
    load_graph,
    parse_graph,
    save_graph,
)
from rainbowdecomp.search import search_decompositions


@pytest.mark.parametrize("name", NAMES)
def test_fixture_round_trip(name):
    text = fixture_text(name)
    doc = parse_graph(text)
    assert dumps_graph(doc) == text
    assert parse_graph(dumps_graph(doc)) == doc


@given(st.sampled_from(KINDS), st.integers(3, 8), st.integers(0, 2**32))
def test_generated_round_trip(kind, n, seed):
    text = dumps_graph(generate(kind, n, seed))
    assert dumps_graph(parse_graph(text)) == text


def test_save_and_load(tmp_path, cat):
    path = tmp_path / "g.json"
    save_graph(cat["two_centers_n5"], path)
    assert load_graph(path) == cat["two_centers_n5"]


def test_loop_diagnostic():
    text = '{\n  "n": 3,\n  "edges": [\n    [0, 1, 0],\n    [0, 0, 1]\n  ]\n}\n'
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == 5
    assert str(info.value) == "line 5, edges[1]: loop at vertex 0"


@pytest.mark.parametrize(
    "data, fragment",
    [
        ({"n": 0, "edges": []}, "n: must be a positive integer"),
        ({"n": 2, "edges": [[0, 2, 0]]}, "vertex 2 out of range"),
        ({"n": 2, "edges": [[0, 1]]}, "triple of integers"),
        ({"n": 2, "edges": [[0, 1, True]]}, "triple of integers"),
        ({"n": 2, "edges": [[0, 1, 1]], "color_names": ["red"]}, "color 1 has no name"),
        ({"n": 2, "edges": [], "color_names": ["a", "a"]}, "distinct"),
        ({"n": 2, "edges": [], "weights": []}, "unknown fields"),
        ({"n": 2}, "edges"),
        ([], "JSON object"),
    ],
)
def test_field_errors(data, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        graph_from_dict(data)


def test_json_syntax_error_has_line():
    with pytest.raises(GraphFormatError) as info:
        parse_graph('{\n  "n": 2,\n  "edges": [\n')
    assert info.value.line is not None


def test_color_count_from_names():
    doc = parse_graph(json.dumps({"n": 3, "edges": [[0, 1, 0]], "color_names": ["a", "b"]}))
    assert doc.graph.color_count == 2
    assert parse_graph(json.dumps({"n": 3, "edges": [[0, 1, 1]]})).graph.color_count == 2


def test_dot_uses_color_names(cat):
    doc = cat["same_center_n4"]
    dot = graph_to_dot(doc)
    assert dot.startswith("graph G {") and 'color="blue"' in dot
    coll = search_decompositions(doc.graph, "star", "enumerate").certificates[0]
    cdot = collection_to_dot(doc, coll)
    assert cdot.count("subgraph cluster_") == 3
    assert cdot.count(" -- ") == 9


def test_dot_palette_without_names():
    doc = GraphDocument(generate("same-center", 3, 0))
    assert 'color="red"' in graph_to_dot(doc)


def test_collection_to_dict(cat):
    doc = cat["different_centers_n4"]
    coll = search_decompositions(doc.graph, "star", "enumerate").certificates[0]
    out = collection_to_dict(doc, coll)
    assert out["shape"] == "star"
    assert [p["edges"] for p in out["parts"]] == coll.to_lists()
    assert {row[3] for p in out["parts"] for row in p["detail"]} == {"red", "blue", "green"}
