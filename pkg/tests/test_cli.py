"""The command-line surface: exit codes, JSON payloads, golden stability."""

import json

import pytest

from simpsurf.cli import main
from simpsurf.io import dump_complex, dumps_complex, load_complex

from _fixtures import sphere, torus, torus_circle_sphere, torus_with_circle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def torus_file(tmp_path):
    f = tmp_path / "torus.json"
    dump_complex(torus(), f, name="torus")
    return str(f)


@pytest.fixture
def wedge_file(tmp_path):
    f = tmp_path / "wedge.json"
    dump_complex(torus_circle_sphere(), f, name="wedge")
    return str(f)


@pytest.fixture
def spec_file(tmp_path):
    f = tmp_path / "spec.json"
    f.write_text(json.dumps([[[0, 1, 3]]]))
    return str(f)


def test_homology_text_and_json(capsys, torus_file):
    code, out, _ = run(capsys, "homology", torus_file)
    assert code == 0 and "betti = (0, 2, 1)" in out
    code, out, _ = run(capsys, "homology", torus_file, "--json")
    payload = json.loads(out)
    assert payload == {"name": "torus", "alpha": [7, 21, 14], "chi": 0,
                       "betti": [0, 2, 1]}


def test_parse_failures_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"triangles": [[1, 1, 2]]}')
    code, _, err = run(capsys, "homology", str(bad))
    assert code == 2 and "degenerate triangle (1, 1, 2)" in err
    code, _, err = run(capsys, "homology", str(tmp_path / "absent.json"))
    assert code == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    code, _, err = run(capsys, "homology", str(broken))
    assert code == 2 and "line 1" in err


def test_cup_form_json(capsys, torus_file):
    code, out, _ = run(capsys, "cup-form", torus_file, "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["rank"] == 2 and payload["nondegenerate"]
    assert payload["entries"][0][1] == [1]


def test_property_a(capsys, torus_file):
    code, out, _ = run(capsys, "property-a", torus_file, "--json")
    assert code == 0 and json.loads(out)["holds"]


def test_classify_with_target(capsys, torus_file):
    code, out, _ = run(capsys, "classify", torus_file, "--surface", "torus",
                       "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["surface"]["name"] == "M1"
    assert payload["orientation_witness_verified"]
    assert payload["hypotheses"]["classification_matches"]
    code, _, _ = run(capsys, "classify", torus_file, "--surface", "N2")
    assert code == 4
    code, _, err = run(capsys, "classify", torus_file, "--surface", "Q9")
    assert code == 2 and "unrecognized surface" in err


def test_reduce_writes_canonical_output(capsys, tmp_path, wedge_file,
                                        spec_file):
    out_path = tmp_path / "L.json"
    code, out, _ = run(capsys, "reduce", wedge_file, "--preserve", spec_file,
                       "-o", str(out_path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["free_rank"] == 1
    assert payload["killed_triangles"] == [[0, 101, 102]]
    assert payload["result"]["betti"] == [0, 2, 1]
    assert load_complex(out_path) == torus()
    assert out_path.read_text() == dumps_complex(torus(), "wedge-reduced")


def test_reduce_precondition_exit_3(capsys, torus_file):
    code, _, err = run(capsys, "reduce", torus_file, "--target-rank", "5")
    assert code == 3 and "rank" in err


def test_bounds_surface(capsys):
    code, out, _ = run(capsys, "bounds", "--surface", "M2", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["minimal_triangles"] == 24 and payload["exceptional"]
    assert payload["certificate"]["lower_bound"] == 22
    code, out, _ = run(capsys, "bounds", "--surface", "S2", "--json")
    assert json.loads(out)["certificate"] is None


def test_bounds_profile(capsys, tmp_path):
    f = tmp_path / "bs.json"
    f.write_text(json.dumps({"name": "BS(3,5)", "h1": 2, "h2": 1,
                             "property_a": True}))
    code, out, _ = run(capsys, "bounds", "--profile", str(f), "--json")
    assert code == 0 and json.loads(out)["lower_bound"] == 14
    f.write_text(json.dumps({"name": "F2", "h1": 2, "h2": 0,
                             "property_a": False}))
    code, _, err = run(capsys, "bounds", "--profile", str(f))
    assert code == 3
    f.write_text(json.dumps({"name": "x", "h1": -1, "h2": 0,
                             "property_a": True}))
    code, _, err = run(capsys, "bounds", "--profile", str(f))
    assert code == 2


def test_bounds_complex_and_source_validation(capsys, torus_file):
    code, out, _ = run(capsys, "bounds", torus_file, "--json")
    payload = json.loads(out)
    assert code == 0 and payload["satisfied"]
    assert payload["alpha2"] == payload["alpha2_floor"] == 14
    code, _, err = run(capsys, "bounds")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "bounds", torus_file, "--surface", "M1")
    assert code == 2


def test_catalog_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "--surface", "N1")
    assert code == 0
    f = tmp_path / "n1.json"
    f.write_text(out)
    assert load_complex(f).n_triangles == 10
    code, out, _ = run(capsys, "catalog", "--json")
    names = [r["name"] for r in json.loads(out)["surfaces"]]
    assert names == ["S2", "N1", "M1", "N2", "N3", "M2"]


def test_search_commands(capsys):
    code, out, err = run(capsys, "search", "--surface", "N1",
                         "--max-vertices", "6", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["found"] and payload["min_triangles"] == 10
    assert "enumerating" in err
    code, out, _ = run(capsys, "search", "--one-triple-edge",
                       "--max-vertices", "5", "--json")
    assert code == 0 and json.loads(out)["count"] == 0
    code, _, err = run(capsys, "search", "--max-vertices", "5")
    assert code == 2
    code, _, err = run(capsys, "search", "--surface", "N1",
                       "--max-vertices", "20")
    assert code == 3


def test_report_certifies_free_product(capsys, wedge_file, spec_file):
    code, out, _ = run(capsys, "report", wedge_file, "--preserve", spec_file,
                       "--surface", "M1", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["certified"]
    assert payload["classification"]["surface"]["name"] == "M1"
    assert payload["certificate"]["triangle_complexity"] == 14
    assert payload["pipeline"]["free_rank"] == 1
    assert any("kappa(pi1(M1) * F1) = 14" in v for v in payload["verdicts"])
    assert payload["euler_bounds"]["satisfied"]


def test_report_upper_bound_tight_without_bubble(capsys, tmp_path):
    f = tmp_path / "tc.json"
    dump_complex(torus_with_circle(), f, name="tc")
    code, out, _ = run(capsys, "report", str(f))
    assert code == 0
    assert "K realizes the minimum: alpha_2(K) = 14" in out


def test_report_mismatch_exits_4(capsys, torus_file):
    code, out, _ = run(capsys, "report", torus_file, "--surface", "N2")
    assert code == 4 and "NOT confirmed" in out


def test_report_marks_inapplicable_without_crashing(capsys, tmp_path):
    from simpsurf.complex2 import Complex2
    circles = Complex2((0, 1, 2, 3, 4),
                       ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)), ())
    f = tmp_path / "circles.json"
    dump_complex(circles, f, name="circles")
    code, out, _ = run(capsys, "report", str(f), "--json")
    payload = json.loads(out)
    assert code == 0
    assert not payload["euler_bounds"]["applicable"]
    assert payload["certificate"] is None
    assert payload["pipeline"]["free_rank"] == 2


def test_report_json_is_deterministic(capsys, wedge_file, spec_file):
    _, first, _ = run(capsys, "report", wedge_file, "--preserve", spec_file,
                      "--json")
    _, second, _ = run(capsys, "report", wedge_file, "--preserve", spec_file,
                       "--json")
    assert first == second


def test_verbose_snapshots(capsys, wedge_file, spec_file):
    code, out, _ = run(capsys, "reduce", wedge_file, "--preserve", spec_file,
                       "-v")
    assert code == 0 and "kill" in out and "betti = (0, 3, 1)" in out
    code, out, _ = run(capsys, "reduce", wedge_file, "--preserve", spec_file)
    assert "kill " not in out
