import json

import pytest

from reflexive_polytopes.cli import main
from reflexive_polytopes.io import polytope_from_document, polytope_to_document
from reflexive_polytopes.catalog import named_polytope


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_check_square(capsys):
    code, out, _ = run(capsys, "check", "square", "--reflexive", "--delzant")
    assert code == 0
    assert json.loads(out) == {"reflexive": True, "delzant": True}


def test_check_false_exits_one(capsys):
    code, out, _ = run(capsys, "check", "dual-triangle", "--delzant")
    assert code == 1
    assert json.loads(out) == {"delzant": False}


def test_extend_then_verify(capsys, tmp_path):
    out_path = str(tmp_path / "out.json")
    assert run(capsys, "extend", "square", "--facet", "2", "--s", "-1", "--k", "1", "-o", out_path)[0] == 0
    code, out, _ = run(capsys, "verify-extension", out_path, "square", "--facet", "2", "--s", "-1", "--k", "1")
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_verify_wrong_extension_exits_one(capsys, tmp_path):
    out_path = str(tmp_path / "out.json")
    run(capsys, "extend", "square", "--facet", "2", "--s", "0", "--k", "0", "-o", out_path)
    code, out, _ = run(capsys, "verify-extension", out_path, "square", "--facet", "2", "--s", "-1", "--k", "0")
    assert code == 1
    assert json.loads(out)["failed"] == "height"


def test_admissible_hexagon(capsys):
    code, out, _ = run(capsys, "admissible", "hexagon", "--facet", "0", "--s", "-1", "--k", "1")
    assert code == 1
    doc = json.loads(out)
    assert doc["failed"] == "iv"
    assert doc["verdict"].startswith("fail(iv)")


def test_admissible_listing(capsys):
    code, out, _ = run(capsys, "admissible", "square")
    assert code == 0
    assert len(json.loads(out)["quadruples"]) == 16


def test_classify_and_table(capsys):
    code, out, _ = run(capsys, "classify", "square")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["classes"]) == 11
    for c in doc["classes"]:
        assert polytope_from_document(c["extension"]).dim == 3
    code, out, _ = run(capsys, "classify", "hexagon", "--table")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 7


def test_dh_eval(capsys, square):
    facet = next(i for i, h in enumerate(square.halfspaces) if h.normal == (0, 1))
    code, out, _ = run(capsys, "dh-eval", "square", "--facet", str(facet), "--s", "-1", "--k", "1", "--point", "1,-1/2")
    assert code == 0
    assert json.loads(out) == {"point": ["1", "-1/2"], "value": "3/2"}


def test_dh_eval_outside(capsys):
    code, _, err = run(capsys, "dh-eval", "square", "--facet", "0", "--s", "0", "--k", "0", "--point", "2,0")
    assert code == 2
    assert "OutOfDomain" in err


def test_list_facets(capsys, square):
    code, out, _ = run(capsys, "check", "square", "--list-facets")
    assert code == 0
    facets = json.loads(out)["facets"]
    assert [tuple(f["normal"]) for f in facets] == [h.normal for h in square.halfspaces]
    assert [f["index"] for f in facets] == list(range(4))


def test_hull_and_vertices(capsys, tmp_path):
    path = write(tmp_path, "pts.json", {"dim": 2, "vertices": [["0", "0"], ["2", "0"], ["0", "2"], ["1", "1/3"]]})
    code, out, _ = run(capsys, "hull", path)
    assert code == 0
    doc = json.loads(out)
    assert len(doc["vertices"]) == 3
    hs = write(tmp_path, "hs.json", {"dim": 2, "halfspaces": doc["halfspaces"]})
    code, out2, _ = run(capsys, "vertices", hs)
    assert code == 0 and out2 == out


def test_normal_form_verb(capsys):
    code, out, _ = run(capsys, "normal-form", "triangle")
    assert code == 0
    assert set(json.loads(out)) == {"canonical_vertices", "witness"}


def test_dh_polytope_verb(capsys):
    code, out, _ = run(capsys, "dh-polytope", "square", "--facet", "0", "--s", "0", "--k", "0")
    assert code == 0
    assert json.loads(out)["dim"] == 3


@pytest.mark.parametrize("doc, field", [
    ({"dim": 2, "vertices": [["0", "0"], ["1", "x"], ["0", "1"]]}, "vertices[1][1]"),
    ({"dim": 2, "vertices": [["0", "0"], ["1"], ["0", "1"]]}, "vertices[1]"),
    ({"dim": 2, "halfspaces": [{"normal": [1, 0.5], "c": "-1"}]}, "halfspaces[0].normal[1]"),
    ({"dim": 2, "halfspaces": [{"normal": [0, 0], "c": "-1"}]}, "halfspaces[0].normal"),
    ({"vertices": [["0", "0"]]}, "dim"),
    ({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]], "color": "red"}, "color"),
    ({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["2", "0"]]}, "vertices"),
])
def test_parse_errors_name_the_field(capsys, tmp_path, doc, field):
    path = write(tmp_path, "bad.json", doc)
    code, _, err = run(capsys, "check", path)
    assert code == 2
    assert field in err


def test_usage_errors(capsys):
    assert run(capsys, "check", "square", "--bogus")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "no-such-polytope")[0] == 2
    assert run(capsys, "admissible", "square", "--facet", "1")[0] == 2
    assert run(capsys, "extend", "square", "--facet", "9", "--s", "0", "--k", "0")[0] == 2
    code, _, err = run(capsys, "extend", "triangle", "--facet", "0", "--s", "-1", "--k", "2")
    assert code == 2 and "quadruple" in err


def test_dim_guard(capsys, tmp_path):
    assert run(capsys, "--dim", "3", "check", "square")[0] == 2
    assert run(capsys, "--dim", "5", "check", "square")[0] == 2
    assert run(capsys, "--dim", "2", "check", "square")[0] == 0
    corners = [[str(x) for x in ((i >> b) & 1 for b in range(5))] for i in range(32)]
    path = write(tmp_path, "5cube.json", {"dim": 5, "vertices": corners})
    code, _, err = run(capsys, "check", path)
    assert code == 2 and "dim" in err


@pytest.mark.parametrize("argv", [
    ("check", "hexagon", "--list-facets"),
    ("classify", "triangle"),
    ("admissible", "hexagon"),
    ("extend", "square", "--facet", "1", "--s", "-1", "--k", "2"),
    ("dh-polytope", "triangle", "--facet", "0", "--s", "-1", "--k", "1"),
])
def test_output_byte_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_emitted_documents_round_trip(capsys, tmp_path):
    for name in ("square", "triangle", "hexagon", "pentagon", "cube"):
        code, out, _ = run(capsys, "hull", name)
        assert code == 0
        p = polytope_from_document(json.loads(out))
        assert p == named_polytope(name)
        path = tmp_path / f"{name}.json"
        path.write_text(out)
        code, again, _ = run(capsys, "hull", str(path))
        assert again == out
        assert json.dumps(polytope_to_document(p), indent=2) + "\n" == out


def test_enumerate_and_atlas(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate-reflexive")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 16 and doc["delzant_count"] == 5
    code, out, _ = run(capsys, "atlas", "--output-dir", str(tmp_path / "atlas"))
    assert code == 0
    assert json.loads(out)["delzant_polygons"] == 5
    assert (tmp_path / "atlas" / "summary.json").exists()
