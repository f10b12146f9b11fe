import json

import pytest

from pretzel.cli import build_report, main, poly_from_json, run_sweep
from pretzel.pretzel_model import PretzelSpec


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_verify_example(capsys):
    code, out, _ = run(capsys, "invariants", "-p=-2,3,7", "--verify", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["genus"]["genus"] == 5
    assert rep["basket"]["basket_number"] == 10
    assert rep["classification"]["kind"] == "Hyperbolic"
    assert rep["oracle_agreement"] and all(rep["oracle_agreement"].values())


def test_invariants_notes_normalization(capsys):
    code, out, _ = run(capsys, "invariants", "-p", "3,-1,5")
    assert code == 0
    assert "L(1,1,3)" in out


def test_invariants_split_note(capsys):
    code, out, _ = run(capsys, "invariants", "-p", "0,0,3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert all(poly_from_json(e["polynomials"][0]).is_zero() for e in rep["conway"])
    assert any("vanishes" in n for n in rep["notes"])


def test_json_roundtrip_all_polynomials(capsys):
    code, out, _ = run(capsys, "invariants", "-p", "2,-2,3,3", "--json", "--verify")
    assert code == 0
    rep = json.loads(out)
    polys = [pj for e in rep["conway"] for pj in e["polynomials"]]
    polys += rep["alexander"]["polynomials"] + rep["jones"]["polynomials"]
    assert polys
    for pj in polys:
        p = poly_from_json(pj)
        assert str(p) == pj["text"]
        assert pj["source"] in {"computation-tree", "closed-form", "oracle"}


def test_orientation_and_trace(capsys):
    code, out, _ = run(capsys, "invariants", "-p", "2,4", "--orientation", "1", "--trace", "--json")
    assert code == 0
    rep = json.loads(out)
    assert [e["index"] for e in rep["conway"]] == [1]
    assert rep["trace"]["value"] == rep["conway"][0]["polynomials"][0]["text"]


@pytest.mark.parametrize("argv", [
    ["invariants"],
    ["invariants", "-p", "2,x"],
    ["invariants", "-p", "2,4", "--orientation", "9"],
    ["invariants", "-p", "2,4", "--orientation", "first"],
    ["sweep", "--nmax", "9"],
    ["frobnicate"],
])
def test_usage_errors_exit_1(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse exits directly
        code = exc.code
    assert code == 1


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "invariants", "-p", "9,9,9", "--verify", "--jones-budget", "10")
    assert code == 3
    assert "--jones-budget" in err


def test_jones_skipped_without_verify():
    rep = build_report(PretzelSpec((9, 9, 9)), jones_budget=10)
    assert "skipped" in rep["jones"]["oracle"]


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "2", "--pmax", "3")
    assert code == 0
    assert "0 mismatches" in out


def test_sweep_empty_range(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "0")
    assert code == 0
    assert "0 checked" in out


def test_sweep_jones_budget_skips():
    total = run_sweep(3, 3, jones=True, budget=4, threads=1)
    assert total["skipped"] > 0
    assert not total["mismatches"]
