import json
from fractions import Fraction as F

import pytest
from conftest import TREE_D

from ohmgraph import generate, grassmann, io, metrics, reconstruct
from ohmgraph.errors import FormatError


def test_network_json_round_trip(tree, rng):
    assert io.load_network(io.dumps(tree)) == tree
    for _ in range(10):
        g = generate.random_network(rng)
        assert io.network_from_json(json.loads(io.dumps(g))) == g


def test_network_json_layout(tree):
    obj = io.network_to_json(tree)
    assert obj["n"] == 6 and obj["boundary"] == [1, 2, 3, 4]
    assert obj["edges"][0] == {"u": 1, "v": 5, "c": "1"}
    assert set(obj["embedding"]) == {"1", "2", "3", "4", "5", "6"}


def test_network_reader_accepts_decimal_strings_and_refuses_floats():
    g = io.load_network('{"n": 2, "boundary": [1, 2], "edges": [{"u": 1, "v": 2, "c": "0.1"}]}')
    assert g.edges[0].c == F(1, 10)
    with pytest.raises(FormatError):
        io.load_network('{"n": 2, "boundary": [1, 2], "edges": [{"u": 1, "v": 2, "c": 0.1}]}')
    with pytest.raises(FormatError):
        io.load_network('{"n": 2, "boundary": [1, 2]}')
    with pytest.raises(FormatError):
        io.load_network("{not json")


def test_matrix_csv():
    text = io.matrix_to_csv(TREE_D)
    assert text.splitlines()[0] == "0,3,3,2"
    assert io.parse_matrix_csv(text) == TREE_D
    assert io.parse_matrix_csv("0, 1/2\n0.5, 0\n\n") == [[0, F(1, 2)], [F(1, 2), 0]]


@pytest.mark.parametrize("text", ["", "0,1\n1,0,2\n", "0,1\n2,0\n", "0,x\nx,0\n", "0,1/0\n1/0,0\n"])
def test_matrix_csv_rejections(text):
    with pytest.raises(FormatError):
        io.parse_matrix_csv(text)


def test_asymmetric_matrix_allowed_when_asked():
    assert io.parse_matrix_csv("0,1\n2,0\n", symmetric=False)[1][0] == 2


def test_splits_json_both_layouts():
    system = metrics.split_weights(TREE_D)
    obj = io.splits_to_json(system)
    assert io.splits_from_json(obj) == system
    assert io.splits_from_json([{"order": [1, 2, 3, 4]}] + obj["splits"]) == system
    bare = io.splits_from_json([{"A": [1, 4], "B": [2, 3], "w": "2"}])
    assert bare.order == (1, 2, 3, 4) and bare.splits[0][1] == 2


def test_splits_json_rejections():
    with pytest.raises(FormatError):
        io.splits_from_json("nope")
    with pytest.raises(FormatError):
        io.splits_from_json([{"A": [1], "w": "1"}])
    with pytest.raises(FormatError):
        io.splits_from_json({"order": [1, 3], "splits": []})


def test_plucker_json():
    p = grassmann.plucker(grassmann.build_omega_resistance(TREE_D))
    obj = io.plucker_to_json(p)
    assert obj["n"] == 4 and obj["deleted_row"] == 4 and obj["sign"] == "+"
    assert obj["coords"]["2,4,6"] == "8" and len(obj["coords"]) == 56
    assert obj["witness"] == []


def test_reconstruction_report_schema():
    s = reconstruct.strands_of_matrix(TREE_D)
    net = reconstruct.reconstruct_topology(TREE_D)
    rep = io.reconstruction_report(s, net, None, True)
    assert list(rep) == ["g", "tau", "network", "tree", "round_trip"]
    assert rep["tau"] == [[1, 5], [2, 7], [3, 6], [4, 8]]
    assert rep["tree"] is None
    assert io.network_from_json(rep["network"]) == net


def test_dumps_is_stable_and_keeps_rows_inline():
    text = io.dumps({"matrix": io.matrix_to_json(TREE_D)})
    assert '  "matrix": [\n    ["0", "3", "3", "2"],' in text
    assert text == io.dumps({"matrix": io.matrix_to_json(TREE_D)})
    with pytest.raises(TypeError):
        io.to_jsonable(object())


def test_dot_exports(tree):
    dot = io.network_to_dot(tree)
    assert dot.startswith("graph network {") and "1 -- 5" in dot and "doublecircle" in dot
    arr = reconstruct.build_chord_arrangement(reconstruct.strands_of_matrix(TREE_D))
    medial = io.medial_to_dot(arr)
    assert medial.count("shape=point") == 8
    assert medial.count("shape=circle") == len(arr.crossings)
