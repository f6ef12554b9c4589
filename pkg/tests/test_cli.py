import json

import pytest

from anntl.cli import parse_scalar, run
from anntl.scalars import Rat, cyclo, two_cos_pi_over


def capture(capsys, argv):
    rc = run(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_parse_scalar():
    assert parse_scalar("3") == Rat(3)
    assert parse_scalar("-1/2") == Rat(-1, 2)
    assert parse_scalar("2cos(pi/12)") == two_cos_pi_over(12)
    assert parse_scalar("zeta(24)^5") == cyclo(24, 5)
    assert parse_scalar("i") == cyclo(4, 1)
    with pytest.raises(ValueError):
        parse_scalar("delta")


def test_tl_jw(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "tl", "jw", "--n", "4", "--delta", "3"])
    assert rc == 0
    data = json.loads(out)
    assert data["n"] == 4 and len(data["terms"]) == 14


def test_tl_basis_count(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "tl", "basis", "--n", "5"])
    assert rc == 0 and json.loads(out)["count"] == 42


def test_flags_after_subcommand(capsys):
    rc, out, _ = capture(capsys, ["graph", "census", "--builtin", "E8", "--k", "5",
                                  "--format", "json"])
    assert rc == 0
    data = json.loads(out)
    assert data["fixed"] == 7 and data["orbit_sizes"]["5"] == 203


def test_graph_screen_builtin(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "graph", "screen",
                                  "--builtin", "E7", "--max-r", "6"])
    assert rc == 0
    data = json.loads(out)
    assert data["loop_counts"][:6] == [1, 1, 2, 5, 15, 51]
    assert data["multiplicities"][4] == 1


def test_graph_screen_expect_pass_failure(capsys):
    rc, _, err = capture(capsys, ["graph", "screen", "--builtin", "E6",
                                  "--max-r", "6", "--expect-pass"])
    assert rc == 1 and "check failed" in err


def test_graph_file_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({
        "even": ["a", "c"], "odd": ["b"],
        "edges": [["a", "b"], ["b", "c"]], "basepoint": "a",
    }))
    rc, out, _ = capture(capsys, ["--format", "json", "graph", "loops",
                                  "--file", str(path), "--n", "3"])
    assert rc == 0
    assert json.loads(out)["loop_counts"] == [1, 1, 2, 4]


def test_graph_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"even": ["a"]}')
    rc, _, err = capture(capsys, ["graph", "screen", "--file", str(path), "--max-r", "2"])
    assert rc == 2 and "missing field" in err


def test_unknown_flag_exit_code(capsys):
    assert run(["tl", "basis", "--n", "3", "--bogus"]) == 2


def test_ade_nullvec(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "ade", "nullvec",
                                  "--case", "e6", "--branch", "plus"])
    assert rc == 0
    data = json.loads(out)
    assert data["norm"] == "0 (exact)" and data["gram_corank"] == 1


def test_ade_e7(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "ade", "e7"])
    assert rc == 0
    assert json.loads(out)["all_nonzero"] is True


def test_ade_star_eq(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "ade", "star-eq",
                                  "--n", "30", "--k", "4", "--r", "1", "--omega", "i"])
    assert rc == 0
    assert json.loads(out)["solvable"] is False


def test_module_gram_exact_and_approx(capsys):
    argv = ["module", "gram", "--family", "mu", "--delta", "3", "--mu", "1",
            "--level", "2", "--format", "json"]
    rc, out, _ = capture(capsys, argv)
    assert rc == 0
    data = json.loads(out)
    assert data["dimension"] == 6 and data["positive_definite"]
    rc, out2, _ = capture(capsys, argv + ["--approx"])
    assert "matrix_approx" in json.loads(out2)


def test_module_positivity(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "module", "positivity",
                                  "--family", "zero", "--sign", "-", "--delta", "2",
                                  "--max-level", "3"])
    assert rc == 0
    rows = json.loads(out)["profile"]
    assert all("positive" in r["verdict"] for r in rows if r["dimension"])


def test_series_commands(capsys):
    rc, out, _ = capture(capsys, ["--format", "json", "series", "multiplicities",
                                  "--dims", "1,1,2,6,21,77", "--max-r", "4"])
    assert rc == 0
    assert json.loads(out)["a"] == [1, 0, 0, 1, -1]


def test_golden_stability(capsys):
    cmds = [
        ["--format", "json", "tl", "jw", "--n", "4", "--delta", "3"],
        ["--format", "json", "annular", "basis", "--m", "3", "--k", "2", "--t", "4"],
        ["--format", "json", "graph", "screen", "--builtin", "E8", "--max-r", "6"],
        ["--format", "json", "ade", "nullvec", "--case", "e8", "--branch", "minus"],
        ["--format", "json", "module", "gram", "--family", "low", "--delta", "3",
         "--k", "2", "--omega", "-1", "--level", "3"],
    ]
    for argv in cmds:
        rc1, out1, _ = capture(capsys, argv)
        rc2, out2, _ = capture(capsys, argv)
        assert rc1 == rc2 == 0
        assert out1 == out2
