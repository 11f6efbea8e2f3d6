import json

import pytest

from knotbound.cli import EXIT_GUARD, EXIT_INPUT, EXIT_OK, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homfly_trefoil(capsys):
    code, out, _ = call(capsys, "homfly", "--braid", "2: 1 1 1")
    assert code == EXIT_OK
    assert out.strip() == "(2v^2 - v^4) + (v^2) z^2"


def test_homfly_json_matches_text(capsys):
    _, text, _ = call(capsys, "homfly", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    _, raw, _ = call(capsys, "homfly", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "--format", "json")
    data = json.loads(raw)
    assert data["homfly_text"] == text.strip()
    assert data["components"] == 1
    assert sorted(map(tuple, data["homfly"])) == [(-4, 0, -1), (-2, 0, 2), (-2, 2, 1)]


def test_p0(capsys):
    code, out, _ = call(capsys, "p0", "--twist", "2", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["coeffs_text"][0] == "v^-2 - 1 + v^2"
    assert data["a2"] == -1


def test_p0_link(capsys):
    code, out, _ = call(capsys, "p0", "--braid", "2: 1 1")
    assert code == EXIT_OK
    assert "components: 2" in out and "p0: 1 - v^2" in out


def test_bound_pretzel(capsys):
    code, out, _ = call(capsys, "bound", "--pretzel", "3,3,3")
    assert code == EXIT_OK
    assert "bound: 3  rules: i-a" in out


def test_bound_twist_json(capsys):
    code, out, _ = call(capsys, "bound", "--twist", "6", "--format", "json")
    data = json.loads(out)
    assert (data["bound"], data["rules"], data["genus_assumption"]) == (3, ["ii-a"], True)


def test_bound_from_diagram_agrees(capsys):
    _, a, _ = call(capsys, "bound", "--pretzel", "3,5,3", "--format", "json")
    _, b, _ = call(capsys, "bound", "--pretzel", "3,5,3", "--from-diagram", "--format", "json")
    ja, jb = json.loads(a), json.loads(b)
    assert ja["p0"] == jb["p0"] and ja["bound"] == jb["bound"]
    assert (ja["p0_source"], jb["p0_source"]) == ("closed form", "diagram")


def test_bound_left_trefoil_inf(capsys):
    code, out, _ = call(capsys, "bound", "--braid", "2: -1 -1 -1", "--assert-genus-one", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["bound"] == "inf"


def test_bound_raw_needs_assertion(capsys):
    code, _, err = call(capsys, "bound", "--braid", "2: 1 1 1")
    assert code == EXIT_INPUT and "--assert-genus-one" in err


def test_bound_p0_input(capsys):
    code, out, _ = call(capsys, "bound", "--p0", "2v^2 - v^4", "--assert-genus-one")
    assert code == EXIT_OK and "bound: 1" in out


def test_bound_bad_p0(capsys):
    assert call(capsys, "bound", "--p0", "v^2 + + 3", "--assert-genus-one")[0] == EXIT_INPUT
    assert call(capsys, "bound", "--p0", "v^2 + v^4", "--assert-genus-one")[0] == EXIT_INPUT


def test_bound_genus_guard(capsys):
    code, _, err = call(capsys, "bound", "--braid", "2: 1 1 1 1 1", "--assert-genus-one")
    assert code == EXIT_INPUT and "genus" in err


def test_bound_rejects_link(capsys):
    assert call(capsys, "bound", "--braid", "2: 1 1", "--assert-genus-one")[0] == EXIT_INPUT


def test_crossing_guard(capsys):
    code, _, err = call(capsys, "homfly", "--braid", "2: " + " ".join(["1"] * 17))
    assert code == EXIT_GUARD and "limit" in err


def test_negative_pretzel_value(capsys):
    code, out, _ = call(capsys, "homfly", "--pretzel=-1,1,3")
    assert code == EXIT_OK and out.strip() == "1"


def test_decompose(capsys):
    code, out, _ = call(capsys, "decompose", "--twist", "4", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["certificate"]["shifts"] == [-1, 0]


def test_decompose_nothing_found(capsys):
    code, out, _ = call(capsys, "decompose", "--pretzel", "3,3,3", "--n", "2")
    assert code == EXIT_OK and "not a proof" in out


def test_decompose_ceiling(capsys):
    code = call(capsys, "decompose", "--pretzel", "3,3,3", "--n", "3", "--deg-span", "8", "--ceiling", "100")[0]
    assert code == EXIT_GUARD


def test_gordian(capsys):
    code, out, _ = call(capsys, "gordian", "--braid", "2: 1 1 1", "--braid2", "1:", "--assert-genus-one")
    assert code == EXIT_OK and out.startswith("pass")
    code, out, _ = call(capsys, "gordian", "--braid", "2: -1 -1 -1", "--braid2", "1:", "--assert-genus-one")
    assert code == EXIT_OK and out.startswith("fail")


def test_gordian_families(capsys):
    code, out, _ = call(capsys, "gordian", "--twist", "4", "--twist2", "2", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["result"] == "pass"


def test_sequence(capsys):
    code, out, _ = call(capsys, "sequence", "--twist", "4")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "4 -> 2 -> 0" and out.strip().endswith("valid")


def test_sequence_json(capsys):
    code, out, _ = call(capsys, "sequence", "--pretzel", "3,3,3", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["certificate"]["claimed_length"] == 3
    assert data["verification"]["valid"] is True


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["homfly"],
        ["homfly", "--braid", "2: 1", "--twist", "2"],
        ["homfly", "--pd", "X[1,2,3]"],
        ["homfly", "--twist", "3"],
        ["homfly", "--pretzel", "3,4,3"],
        ["nonsense"],
    ],
)
def test_input_errors(capsys, argv):
    assert call(capsys, *argv)[0] == EXIT_INPUT
