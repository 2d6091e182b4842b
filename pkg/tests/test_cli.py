import json
import subprocess
import sys

import pytest
from conftest import TREE_D, TREE_DUAL_NEG, TREE_RESPONSE

from ohmgraph import exact, io, metrics
from ohmgraph.cli import Config, run
from ohmgraph.errors import FormatError


@pytest.fixture
def files(tmp_path, tree):
    paths = {
        "tree_json": tmp_path / "tree.json",
        "tree_csv": tmp_path / "tree.csv",
        "bad_csv": tmp_path / "bad.csv",
        "splits": tmp_path / "splits.json",
    }
    paths["tree_json"].write_text(io.dumps(tree))
    paths["tree_csv"].write_text(io.matrix_to_csv(TREE_D))
    # 1 and 3 pulled together: d13 + d24 < d12 + d34 in the order 1,2,3,4
    paths["bad_csv"].write_text("0,2,1,2\n2,0,2,1\n1,2,0,2\n2,1,2,0\n")
    paths["splits"].write_text(io.dumps(io.splits_to_json(metrics.split_weights(TREE_D))))
    return {k: str(v) for k, v in paths.items()}


def ok(argv):
    code, out, err = run(argv)
    assert code == 0, err or out
    return json.loads(out)


def test_examples_from_the_docs(files):
    out = ok(["is-electrical", "--metric", files["tree_csv"], "--order", "1,2,3,4"])
    assert out["ok"] and out["witness"]["coordinate"] == [2, 4, 6] and out["witness"]["value"] == "8"
    out = ok(["strands", "--metric", files["tree_csv"]])
    assert out == {"g": [4, 6, 5, 7, 8, 2, 1, 3], "tau": [[1, 5], [2, 7], [3, 6], [4, 8]]}
    code, out, _ = run(["kalmanson", "--metric", files["bad_csv"], "--order", "1,2,3,4"])
    assert code == 1
    w = json.loads(out)["witness"]
    assert sorted(w["quadruple"]) == [1, 2, 3, 4] and w["inequality"] in (1, 2)


def test_network_commands(files):
    assert io.parse_matrix_csv(run(["response", "--network", files["tree_json"], "--format", "csv"])[1]) == TREE_RESPONSE
    assert exact.matrix(ok(["resistance", "--network", files["tree_json"]])["matrix"]) == TREE_D
    assert exact.matrix(ok(["oracle-resistance", "--network", files["tree_json"]])["matrix"]) == TREE_D
    dual = io.network_from_json(ok(["dualize", "--network", files["tree_json"]]))
    assert len(dual.edges) == 5
    assert run(["dualize", "--network", files["tree_json"], "--format", "dot"])[1].startswith("graph network {")


def test_metric_commands(files):
    assert ok(["find-order", "--metric", files["tree_csv"]]) == {"order": [1, 2, 3, 4]}
    system = io.splits_from_json(ok(["split-decompose", "--metric", files["tree_csv"]]))
    assert len(system.splits) == 5
    assert exact.matrix(ok(["splits-to-metric", "--splits", files["splits"]])["matrix"]) == TREE_D
    assert exact.matrix(ok(["gromov", "--metric", files["tree_csv"], "--base", "4"])["matrix"]) == exact.matrix([[2, 1, 1], [1, 3, 2], [1, 2, 3]])
    m = ok(["m-of-d", "--metric", files["tree_csv"]])
    assert exact.matrix(m["matrix"]) == exact.scale(TREE_DUAL_NEG, -1)
    d = ok(["dual-response", "--metric", files["tree_csv"]])
    assert d["ok"] and exact.matrix(d["matrix"]) == exact.scale(TREE_DUAL_NEG, -1)
    assert ok(["is-electrical", "--metric", files["tree_csv"], "--method", "dual"])["ok"]


def test_omega_and_plucker(files, tmp_path):
    om = ok(["omega", "--metric", files["tree_csv"]])
    assert om["form"] == "resistance" and om["deleted_row"] == 4 and len(om["rows"]) == 4
    resp = tmp_path / "resp.csv"
    resp.write_text(io.matrix_to_csv(TREE_RESPONSE))
    assert ok(["omega", "--response", str(resp)])["deleted_row"] == 1
    p = ok(["plucker", "--metric", files["tree_csv"]])
    assert p["sign"] == "+" and len(p["coords"]) == 56
    p = ok(["plucker", "--metric", files["tree_csv"], "--subsets", "1,2,3;2,4,6"])
    assert p["coords"] == {"1,2,3": "1", "2,4,6": "8"}
    assert run(["plucker", "--metric", files["tree_csv"], "--subsets", "1,2;x"])[0] == 2


def test_reconstruction_commands(files, tmp_path):
    rep = ok(["reconstruct", "--metric", files["tree_csv"], "--tree"])
    assert rep["round_trip"] is True
    tree = io.network_from_json(rep["tree"])
    assert all(e.c == 1 for e in tree.edges) and len(tree.edges) == 5
    assert run(["reconstruct", "--metric", files["tree_csv"], "--medial"])[1].startswith("graph medial {")
    assert ok(["verify", "--metric", files["tree_csv"]])["ok"]
    fitted = io.network_from_json(ok(["fit-tree", "--network", files["tree_json"], "--metric", files["tree_csv"]]))
    assert all(e.c == 1 for e in fitted.edges)
    code, out, _ = run(["fit-tree", "--network", files["tree_json"], "--metric", files["bad_csv"]])
    assert code == 1 and json.loads(out)["reason"] in ("Inconsistent", "NonPositiveWeight")
    reduced = io.network_from_json(ok(["reduce", "--network", files["tree_json"]]))
    assert len(reduced.edges) == 5


def test_property_failures_exit_one(files, tmp_path):
    code, out, _ = run(["is-electrical", "--metric", files["tree_csv"], "--order", "1,2,4,3"])
    body = json.loads(out)
    assert code == 1 and body["reason"] == "not_kalmanson" and body["order"] == [1, 2, 4, 3]
    assert body["witness"]["quadruple"] == [1, 2, 4, 3]
    cactus = tmp_path / "cactus.csv"
    cactus.write_text("0,0,1,1\n0,0,1,1\n1,1,0,0\n1,1,0,0\n")
    code, out, _ = run(["is-electrical", "--metric", str(cactus)])
    assert code == 1 and json.loads(out)["witness"]["reason"] == "connectivity"
    code, out, _ = run(["strands", "--metric", str(cactus)])
    assert code == 1 and json.loads(out)["ok"] is False


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["no-such-command"],
        ["strands"],
        ["strands", "--metric", "/nonexistent.csv"],
        ["kalmanson", "--metric", "TREE", "--order", "1,2,3"],
        ["kalmanson", "--metric", "TREE", "--order", "a,b"],
        ["gromov", "--metric", "TREE", "--base", "9"],
        ["strands", "--metric", "TREE", "--format", "xml"],
    ],
)
def test_input_errors_exit_two(files, argv):
    argv = [files["tree_csv"] if a == "TREE" else a for a in argv]
    code, out, err = run(argv)
    assert code == 2 and out == ""


def test_asymmetric_metric_is_an_input_error(tmp_path):
    bad = tmp_path / "asym.csv"
    bad.write_text("0,1\n2,0\n")
    code, _, err = run(["strands", "--metric", str(bad)])
    assert code == 2 and "symmetric" in err


def test_caps_exit_three(files, tmp_path):
    cfg = tmp_path / "small.cfg"
    cfg.write_text("plucker_n_cap = 3\norder_search_cap = 3  # tiny\nspanning_tree_edge_cap = 2\n")
    assert run(["--config", str(cfg), "plucker", "--metric", files["tree_csv"]])[0] == 3
    assert run(["find-order", "--metric", files["tree_csv"], "--config", str(cfg)])[0] == 3
    assert run(["oracle-resistance", "--network", files["tree_json"], "--config", str(cfg)])[0] == 3


def test_config_parsing():
    cfg = Config.parse('# caps\nplucker_n_cap = 6\nformat = "csv"\n\n')
    assert cfg.plucker_n_cap == 6 and cfg.format == "csv" and cfg.order_search_cap == 10
    for text in ["colour = 3", "plucker_n_cap = 0", "plucker_n_cap = many", "format = yaml", "just words"]:
        with pytest.raises(FormatError):
            Config.parse(text)


def test_config_errors_exit_two(files, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("unknown_key = 1\n")
    code, _, err = run(["strands", "--metric", files["tree_csv"], "--config", str(cfg)])
    assert code == 2 and "unknown_key" in err


def test_config_format_is_used(files, tmp_path):
    cfg = tmp_path / "csv.cfg"
    cfg.write_text("format = csv\n")
    code, out, _ = run(["resistance", "--network", files["tree_json"], "--config", str(cfg)])
    assert code == 0 and io.parse_matrix_csv(out) == TREE_D


@pytest.mark.parametrize(
    "argv",
    [
        ["reconstruct", "--metric", "TREE", "--tree"],
        ["plucker", "--metric", "TREE"],
        ["split-decompose", "--metric", "TREE"],
        ["is-electrical", "--metric", "TREE", "--method", "dual"],
        ["dualize", "--network", "NET"],
    ],
)
def test_output_is_byte_stable(files, argv):
    argv = [files["tree_csv"] if a == "TREE" else files["tree_json"] if a == "NET" else a for a in argv]
    assert run(argv) == run(argv)


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "ohmgraph", "strands", "--metric", files["tree_csv"]], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["g"] == [4, 6, 5, 7, 8, 2, 1, 3]
