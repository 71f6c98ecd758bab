import json

import pytest

import oracles as O
from topolab.cli import main
from topolab.errors import InvalidGenerator, TooLarge
from topolab.fintop import discrete, sierpinski
from topolab.io import SpaceFormatError, dumps_space, load_space, space_from_json, space_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- io -------------------------------------------------------------------------

def test_loader_closes_generators(data_dir):
    L = load_space(data_dir / "sierpinski.json")
    assert L.space == sierpinski() and L.labels == ("a", "b") and not L.closure_added
    L = space_from_json({"points": ["x", "y", "z"], "opens": [[0], [1]]})
    assert L.closure_added and len(L.space.opens) == 5


def test_loader_errors(data_dir):
    with pytest.raises(InvalidGenerator):
        load_space(data_dir / "bad_index.json")
    with pytest.raises(SpaceFormatError):
        load_space(data_dir / "broken.json")
    with pytest.raises(SpaceFormatError):
        load_space(data_dir / "no_opens.json")
    with pytest.raises(InvalidGenerator):
        space_from_json({"points": ["a", "a"], "opens": []})
    with pytest.raises(SpaceFormatError):
        space_from_json({"points": ["a"], "opens": [["0"]]})


def test_roundtrip():
    X = discrete(3)
    assert space_from_json(json.loads(dumps_space(X))).space == X
    assert space_to_json(sierpinski(), ["p", "q"]) == {"points": ["p", "q"], "opens": [[], [0], [0, 1]]}


def test_load_respects_cap(monkeypatch):
    monkeypatch.setenv("TOPOLAB_CAP", "2")
    with pytest.raises(TooLarge):
        space_from_json({"points": ["a", "b", "c"], "opens": []})


# --- classify -------------------------------------------------------------------

def test_classify_sierpinski(capsys, data_dir):
    code, out, _ = run(capsys, "classify", str(data_dir / "sierpinski.json"))
    r = json.loads(out)
    assert code == 0
    assert r["T0"] and not r["T1"] and r["extremally_disconnected"] and r["alpha_scattered"]
    assert r["isolated"] == ["a"]


def test_classify_antidiscrete(capsys, data_dir):
    r = json.loads(run(capsys, "classify", str(data_dir / "antidiscrete3.json"))[1])
    assert not r["alpha_scattered"] and r["isolated"] == []


def test_classify_discrete(capsys, data_dir):
    r = json.loads(run(capsys, "classify", str(data_dir / "discrete4.json"))[1])
    flags = ["T0", "T1", "T2", "completely_hausdorff", "zero_dimensional",
             "extremally_disconnected", "stonean", "scattered", "alpha_scattered"]
    assert all(r[f] for f in flags)


def test_exit_codes(capsys, data_dir, monkeypatch):
    assert run(capsys, "classify", str(data_dir / "broken.json"))[0] == 2
    assert run(capsys, "classify", str(data_dir / "missing.json"))[0] == 2
    assert run(capsys, "classify", str(data_dir / "bad_index.json"))[0] == 3
    assert run(capsys, "enumerate", "7")[0] == 4
    assert run(capsys, "lattice", str(data_dir / "discrete4.json"), "--which", "subalg", "--cap", "3")[0] == 4
    monkeypatch.setenv("TOPOLAB_CAP", "3")
    assert run(capsys, "classify", str(data_dir / "discrete4.json"))[0] == 4
    with pytest.raises(SystemExit) as exc:
        main(["lattice"])
    assert exc.value.code == 2


# --- lattice --------------------------------------------------------------------

def test_lattice_examples(capsys, data_dir):
    code, out, _ = run(capsys, "lattice", str(data_dir / "discrete3.json"), "--which", "subalg")
    data = json.loads(out)
    assert code == 0 and len(data["elements"]) == 5
    assert data["top"] is not None and data["bottom"] is not None
    data = json.loads(run(capsys, "lattice", str(data_dir / "sierpinski.json"), "--which", "disc-w")[1])
    assert data["elements"] == ["{}", "{0}"] and data["covers"] == [[0, 1]]
    data = json.loads(run(capsys, "lattice", str(data_dir / "antidiscrete3.json"), "--which", "disc-w")[1])
    assert len(data["elements"]) == 1 and data["covers"] == []


@pytest.mark.parametrize("which", ["disc-pw", "disc-w", "comp-pw", "subalg", "ideals"])
def test_lattice_dot_is_deterministic(capsys, data_dir, which):
    path = str(data_dir / "discrete3.json")
    _, a, _ = run(capsys, "lattice", path, "--which", which, "--format", "dot")
    _, b, _ = run(capsys, "lattice", path, "--which", which, "--format", "dot")
    assert a == b and a.startswith("digraph")


# --- enumerate / random ---------------------------------------------------------

def test_enumerate(capsys):
    lines = run(capsys, "enumerate", "2")[1].splitlines()
    assert len(lines) == 4
    for line in lines:
        d = json.loads(line)
        opens = [sum(1 << i for i in o) for o in d["opens"]]
        assert O.is_topology(2, opens)
    assert len(run(capsys, "enumerate", "0")[1].splitlines()) == 1


def test_random(capsys):
    a = run(capsys, "random", "5", "10", "42")[1]
    b = run(capsys, "random", "5", "10", "42")[1]
    assert a == b
    lines = a.splitlines()
    assert len(lines) == 10
    for line in lines:
        d = json.loads(line)
        assert O.is_topology(5, [sum(1 << i for i in o) for o in d["opens"]])


# --- verify ---------------------------------------------------------------------

def test_verify_rose_counts(capsys):
    code, out, _ = run(capsys, "verify", "rose", "--exhaustive", "4")
    assert code == 0
    assert "rose: PASS (390 checked, 0 failures)" in out


def test_verify_thrpre(capsys):
    code, out, _ = run(capsys, "verify", "thrpre", "--exhaustive", "4")
    assert code == 0 and "overall: PASS" in out


def test_verify_reports_failures(capsys, monkeypatch):
    from topolab import verify

    def broken(spaces):
        res = verify.SuiteResult("rose")
        res.checked = 1
        res.fail("planted", sierpinski(), note="x")
        return res

    monkeypatch.setattr(verify, "suite_rose", broken)
    code, out, _ = run(capsys, "verify", "rose", "--exhaustive", "0")
    assert code == 1
    assert "counterexample" in out and '"planted"' in out and '"opens"' in out
