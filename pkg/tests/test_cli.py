import json

from torb.cli import (
    doc_to_polytope,
    format_fraction,
    main,
    polytope_to_doc,
    run_command,
)
from torb.constructors import football, product, simplex, weighted_projective_polytope
from torb.constructors import WeightVector


def write_doc(tmp_path, name, lp):
    path = tmp_path / name
    path.write_text(json.dumps(polytope_to_doc(lp)))
    return str(path)


def test_format_fraction():
    from fractions import Fraction

    assert format_fraction(Fraction(3)) == "3"
    assert format_fraction(Fraction(-1, 2)) == "-1/2"


def test_doc_roundtrip():
    lp = weighted_projective_polytope(WeightVector((6, 2, 3)))
    back = doc_to_polytope(polytope_to_doc(lp))
    assert back.conormals == lp.conormals
    assert back.offsets == lp.offsets
    assert back.labels == lp.labels


def test_doc_accepts_report_wrapper():
    lp = football(2, 3)
    report = {"results": {"polytope": polytope_to_doc(lp)}}
    back = doc_to_polytope(report)
    assert back.labels == (2, 3)


def test_construct_wps_report():
    report, status = run_command(["construct", "wps", "--weights", "1,2,3"])
    assert status == 0
    results = report["results"]
    assert results["polytope"]["facets"][2]["conormal"] == [3, 2]
    assert results["weight_order_labels"] == [1, 1, 1]
    assert results["local_group_orders"] == [6, 3, 2]
    assert results["structure_group_order"] == 6


def test_construct_and_info(tmp_path):
    path = write_doc(tmp_path, "prism.json", product(football(1, 1), simplex(2)))
    report, status = run_command(["info", path])
    assert status == 0
    results = report["results"]
    assert results["f_vector"] == [6, 9, 5, 1]
    assert results["h_vector"] == [1, 2, 2, 1]
    assert results["betti_numbers"] == [1, 0, 2, 0, 2, 0, 1]
    assert not results["has_locally_maximal_singular_vertex"]


def test_info_face_group(tmp_path):
    path = write_doc(tmp_path, "football.json", football(2, 3))
    report, status = run_command(["info", path, "--face", "1"])
    assert status == 0
    assert report["results"]["face_group"] == {
        "invariant_factors": [3],
        "order": 3,
    }


def test_equiv_command(tmp_path):
    from torb.labeled import translate

    lp = simplex(2)
    p1 = write_doc(tmp_path, "a.json", lp)
    p2 = write_doc(tmp_path, "b.json", translate(lp, (1, 2)))
    report, status = run_command(["equiv", p1, p2, "--mode", "translation"])
    assert status == 0
    assert report["results"] == {
        "equivalent": True,
        "translation": ["1", "2"],
    }
    p3 = write_doc(tmp_path, "c.json", football(1, 1))
    report, status = run_command(["equiv", p1, p3])
    assert status == 0
    assert report["results"] == {"equivalent": False}


def test_quotient_and_cover_commands(tmp_path):
    square = product(football(1, 1), football(1, 1))
    path = write_doc(tmp_path, "square.json", square)
    report, status = run_command(["quotient", path, "--gen", "1/2,1/2"])
    assert status == 0
    assert report["results"]["subgroup_order"] == 2
    facets = report["results"]["polytope"]["facets"]
    assert facets[0]["conormal"] == [-2, 1]

    fb = write_doc(tmp_path, "fb.json", football(2, 2))
    report, status = run_command(["cover", fb, "--basis", "2"])
    assert status == 0
    assert [f["label"] for f in report["results"]["polytope"]["facets"]] == [1, 1]


def test_bundle_commands(tmp_path):
    f = write_doc(tmp_path, "f.json", simplex(1))
    b = write_doc(tmp_path, "b.json", simplex(1))
    report, status = run_command(
        ["bundle", "build", "--fiber", f, "--base", b, "--twist", "-1"]
    )
    assert status == 0
    total_doc = report["results"]["polytope"]
    total = tmp_path / "total.json"
    total.write_text(json.dumps(total_doc))

    report, status = run_command(["bundle", "twist", "--total", str(total)])
    assert status == 0
    assert report["results"] == {
        "is_simplex_bundle": True,
        "k1": 1,
        "k2": 1,
        "twist": [-1],
    }

    report, status = run_command(
        ["bundle", "recognize", "--total", str(total), "--fiber", f, "--base", b]
    )
    assert status == 0
    assert report["results"]["recognized"]
    assert report["results"]["ratios"] == [1, 1]


def test_uniqueness_command():
    report, status = run_command(
        ["uniqueness", "--k1", "1", "--k2", "2", "--twist", "-1", "--bound", "3"]
    )
    assert status == 0
    assert report["results"]["is_product"] is False
    assert report["results"]["generators"] is None
    assert report["warnings"]

    report, status = run_command(["uniqueness", "--k1", "1", "--k2", "2"])
    assert status == 0
    assert report["results"]["is_product"] is True
    assert report["results"]["generators"] == [1, 0, 0, 1]


def test_delzant_command(tmp_path):
    path = write_doc(tmp_path, "fb.json", football(2, 3))
    report, status = run_command(["delzant", path])
    assert status == 0
    assert report["results"]["beta"] == [[-2, 3]]
    assert report["results"]["fan_index_sets"] == [[], [0], [1]]


def test_selftest_command(monkeypatch):
    monkeypatch.setenv("TORB_SEED", "1")
    report, status = run_command(["selftest", "--trials", "20"])
    assert status == 0
    assert report["results"]["checks_passed"] > 0


def test_error_statuses(tmp_path):
    report, status = run_command(["info", str(tmp_path / "missing.json")])
    assert report is None
    assert status == 1

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    report, status = run_command(["info", str(bad)])
    assert status == 1

    unbounded = tmp_path / "unbounded.json"
    unbounded.write_text(
        json.dumps(
            {
                "dim": 1,
                "facets": [{"conormal": [-1], "offset": "0", "label": 1}],
            }
        )
    )
    report, status = run_command(["info", str(unbounded)])
    assert status == 1

    report, status = run_command(["no-such-command"])
    assert report is None
    assert status == 2


def test_main_emits_json(tmp_path, capsys):
    assert main(["construct", "football", "--labels", "2,3"]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["command"] == "construct football"
    labels = [f["label"] for f in doc["results"]["polytope"]["facets"]]
    assert labels == [2, 3]
