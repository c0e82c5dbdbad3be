import json

import pytest

from gradedbrauer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_invariants_of_the_generator(capsys):
    code, doc = run(capsys, "invariants", "--form", "1", "--field", "R")
    assert code == 0
    assert doc == {"parity": 1, "q2": 1, "ungraded": 0, "bw": 1}


def test_invariants_opposite_flag(capsys):
    _, doc = run(capsys, "invariants", "--form", "1", "--opposite")
    assert doc["bw"] == 7


def test_clifford_emits_algebra_json(capsys):
    code, doc = run(capsys, "clifford", "--form", "1,-1")
    assert code == 0
    assert doc["dim"] == 4
    assert doc["parity"] == [0, 1, 1, 0]
    assert doc["structure"][0] == [0, 0, 0, "1"]  # triples come sorted
    assert doc["structure"] == sorted(doc["structure"])


def test_tensor_composes_with_stdin(capsys, monkeypatch, tmp_path):
    code, doc = run(capsys, "tensor", "form:1", "form:1")
    assert code == 0
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc))
    code, inv = run(capsys, "invariants", "--algebra", str(path))
    assert code == 0
    assert inv == {"parity": 0, "q2": 2, "ungraded": 0, "bw": 2}


def test_algebra_shorthand_end_and_ground(capsys):
    code, doc = run(capsys, "azumaya", "--algebra", "end:2,1")
    assert (code, doc) == (0, {"azumaya": True})
    code, doc = run(capsys, "invariants", "--algebra", "ground")
    assert doc["bw"] == 0


def test_centralizer_normal_form(capsys):
    code, doc = run(capsys, "centralizer", "--form", "1,1")
    assert code == 0
    assert doc["dim"] == 2
    assert [1, 1, 0, "-1"] in doc["structure"]


def test_space_graph_example(capsys):
    code, doc = run(capsys, "space", "graph", "--nu", "2", "--h1quot", "0")
    assert code == 0
    assert doc["gbr"]["torsion"] == [4, 8]
    assert doc["rbr"]["torsion"] == [2, 2]
    assert "gbr-graph" in doc["rules"]


def test_space_free_product_group_flag(capsys):
    code, doc = run(capsys, "space", "free-product", "--h0", "1", "--h1", "2",
                    "--h3tors", "4,2")
    assert code == 0
    assert doc["gbr"]["torsion"] == [2, 2, 2, 2, 4]
    assert doc["rbr"]["torsion"] == [2, 4]
    assert doc["wr"]["torsion"] == [2] * 5


def test_variety_real_surface(capsys):
    code, doc = run(capsys, "variety", "real-surface-no-points", "--rho0", "1",
                    "--two-tors-br", "2", "--h1quot-reduced", "1")
    assert code == 0
    assert doc["w"]["extension"]["sub"]["torsion"] == [2, 2]


def test_table_and_space_table_alias(capsys):
    code, doc = run(capsys, "table", "circles")
    assert code == 0
    assert doc["circle-reflection"]["gbr"]["torsion"] == [4, 8]
    code2, doc2 = run(capsys, "space", "--table", "circles")
    assert code2 == 0
    assert doc2 == doc


def test_named_table_has_the_stored_constants(capsys):
    _, doc = run(capsys, "table", "named")
    plane = doc["real-projective-plane"]
    assert plane["wr"]["free_rank"] == 1
    sphere = doc["antipodal-4-sphere"]
    assert sphere["wr"]["extension"]["resolved"]["torsion"] == [8]


def test_selftest_passes(capsys):
    code, doc = run(capsys, "selftest", "--seed", "3")
    assert code == 0
    assert doc["passed"] is True
    assert all(c["status"] == "ok" for c in doc["checks"])


def test_validation_failures_exit_two(capsys):
    code, doc = run(capsys, "space", "graph", "--nu", "0", "--h1quot", "0")
    assert code == 2
    assert doc["error"]["type"] == "DescriptorError"
    code, doc = run(capsys, "invariants", "--form", "1,0")
    assert code == 2
    code, doc = run(capsys, "invariants", "--algebra", "no-such-file.json")
    assert code == 2
    assert doc["error"]["type"] == "FileNotFoundError"
    with pytest.raises(SystemExit) as excinfo:
        main(["space", "graph"])  # missing required flags: argparse usage error
    assert excinfo.value.code == 2
    capsys.readouterr()


def test_non_azumaya_input_is_a_validation_error(capsys, tmp_path):
    split = {"field": "R", "dim": 2, "parity": [0, 0], "unit": ["1", "1"],
             "structure": [[0, 0, 0, "1"], [1, 1, 1, "1"]]}
    path = tmp_path / "split.json"
    path.write_text(json.dumps(split))
    code, doc = run(capsys, "invariants", "--algebra", str(path))
    assert code == 2
    assert doc["error"]["type"] == "NotAzumayaError"


def test_usage_error_without_arguments(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
