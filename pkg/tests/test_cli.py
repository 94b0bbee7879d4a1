"""End-to-end coverage of the command-line interface: output formats,
exit codes, grid parsing, idempotent file writes, and the no-partial-file
guarantee.
"""

import json
import os
from fractions import Fraction

import pytest

from fractal_tutte.bipoly import BiPoly
from fractal_tutte.cli import _parse_grid, main
from fractal_tutte.cli import UsageError
from fractal_tutte.graphs import build_psw_edge_expansion, from_edge_list, to_edge_list
from fractal_tutte.recursion import tutte_psw


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- generate ---------------------------------------------------------------


def test_generate_psw_stdout(capsys):
    code, out, err = run(capsys, "generate", "--family", "psw", "--n", "1")
    assert code == 0
    assert err == ""
    assert out == to_edge_list(build_psw_edge_expansion(1))


def test_generate_sg_round_trips(capsys):
    code, out, _ = run(capsys, "generate", "--family", "sg", "--n", "2")
    assert code == 0
    g = from_edge_list(out)
    degs = g.degrees()
    assert [degs[h] for h in g.hubs] == [2, 2, 2]
    assert len(g.edges) == 27


def test_generate_to_file_is_idempotent(tmp_path, capsys):
    target = tmp_path / "g1.txt"
    code, out, _ = run(capsys, "generate", "--family", "psw", "--n", "1",
                       "--out", str(target))
    assert code == 0
    assert out == ""
    first = target.read_bytes()
    code, _, _ = run(capsys, "generate", "--family", "psw", "--n", "1",
                     "--out", str(target))
    assert code == 0
    assert target.read_bytes() == first
    assert first.decode() == to_edge_list(build_psw_edge_expansion(1))


# -- tutte ------------------------------------------------------------------


def test_tutte_json(capsys):
    code, out, _ = run(capsys, "tutte", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "psw"
    assert doc["n"] == 1
    assert BiPoly.from_json_dict(doc["polynomial"]) == tutte_psw(1)


def test_tutte_text(capsys):
    code, out, _ = run(capsys, "tutte", "--n", "0", "--format", "text")
    assert code == 0
    assert out.strip() == "x^2 + x + y"


def test_tutte_beyond_guard_fails_cleanly(capsys):
    code, out, err = run(capsys, "tutte", "--n", "12")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")
    assert err.count("\n") == 1


# -- eval -------------------------------------------------------------------


def test_eval_integer_point(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "--x", "1", "--y", "1")
    assert code == 0
    assert out.strip() == "209952"


def test_eval_rational_point(capsys):
    code, out, _ = run(capsys, "eval", "--n", "1", "--x", "1/3", "--y", "2")
    assert code == 0
    expected = tutte_psw(1).eval_exact(Fraction(1, 3), Fraction(2))
    assert out.strip() == str(expected) == "17176/243"


def test_eval_rejects_non_exact_mode(capsys):
    code, _, err = run(capsys, "eval", "--n", "1", "--x", "1", "--y", "1",
                       "--mode", "float")
    assert code == 2
    assert "exact" in err


def test_eval_rejects_malformed_rational():
    with pytest.raises(SystemExit) as info:
        main(["eval", "--n", "1", "--x", "one", "--y", "1"])
    assert info.value.code == 2


# -- invariants -------------------------------------------------------------


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "n": 1,
        "spanning_trees": "54",
        "connected_spanning_subgraphs": "160",
        "spanning_forests": "279",
        "acyclic_orientations": "162",
        "all_subgraphs": "512",
    }


# -- reliability ------------------------------------------------------------


def test_reliability_both_families(capsys):
    code, out, _ = run(capsys, "reliability", "--n", "2",
                       "--p-grid", "0.25:0.75:0.25")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,R_psw,R_sg,lnR_psw,lnR_sg"
    assert len(lines) == 4
    assert lines[1].startswith("0.2500,")


def test_reliability_single_family(capsys):
    code, out, _ = run(capsys, "reliability", "--families", "psw", "--n", "2",
                       "--p-grid", "0.5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,R_psw,lnR_psw"
    assert lines[1] == "0.5000,4.88281250000e-02,-3.019449"


def test_reliability_log_mode_deep(capsys):
    code, out, _ = run(capsys, "reliability", "--n", "12",
                       "--p-grid", "0.5", "--mode", "log")
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert float(row[3]) < -50000  # ln R far beyond double underflow


def test_reliability_file_idempotent(tmp_path, capsys):
    target = tmp_path / "curves.csv"
    args = ("reliability", "--n", "3", "--p-grid", "0.1:0.9:0.1",
            "--out", str(target))
    assert run(capsys, *args)[0] == 0
    first = target.read_bytes()
    assert run(capsys, *args)[0] == 0
    assert target.read_bytes() == first
    assert len(first.decode().splitlines()) == 10


def test_reliability_rejects_unknown_family(capsys):
    code, _, err = run(capsys, "reliability", "--families", "psw,tree",
                       "--n", "2", "--p-grid", "0.5")
    assert code == 2
    assert "tree" in err


def test_reliability_out_of_range_grid_value(capsys):
    code, _, err = run(capsys, "reliability", "--n", "2", "--p-grid", "0")
    assert code == 1
    assert err.startswith("error:")


# -- grid parsing -----------------------------------------------------------


def test_parse_grid_single_value():
    assert _parse_grid("0.5") == [0.5]


def test_parse_grid_inclusive_endpoints():
    grid = _parse_grid("0.1:0.3:0.1")
    assert len(grid) == 3
    assert grid[0] == pytest.approx(0.1)
    assert grid[-1] == pytest.approx(0.3)


def test_parse_grid_ninety_nine_points():
    assert len(_parse_grid("0.01:0.99:0.01")) == 99


def test_parse_grid_rejects_malformed():
    with pytest.raises(UsageError):
        _parse_grid("1:2")
    with pytest.raises(UsageError):
        _parse_grid("0.1:0.9:0")
    with pytest.raises(UsageError):
        _parse_grid("0.1:0.9:-0.1")


def test_cli_grid_errors_exit_2(capsys):
    code, _, err = run(capsys, "reliability", "--n", "2", "--p-grid", "1:2")
    assert code == 2
    assert err.startswith("error:")


# -- oracle -----------------------------------------------------------------


def test_oracle_text_psw(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "psw", "--n", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert all(line.startswith("PASS") for line in lines)


def test_oracle_json_sg_skips_recursion(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "sg", "--n", "1",
                       "--format", "json")
    assert code == 0
    entries = json.loads(out)
    by_name = {e["check"]: e for e in entries}
    assert by_name["recursion"]["status"] == "skip"
    assert by_name["partition"]["status"] == "pass"
    assert by_name["matrix-tree"]["status"] == "pass"
    assert set(entries[0]) == {"check", "status", "detail"}


def test_oracle_subset_of_checks(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "psw", "--n", "0",
                       "--check", "matrix-tree,partition")
    assert code == 0
    assert len(out.splitlines()) == 2


def test_oracle_skips_oversized_checks(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "psw", "--n", "2",
                       "--check", "deletion-contraction,reliability")
    assert code == 0
    assert all(line.startswith("SKIP") for line in out.splitlines())


def test_oracle_unknown_check(capsys):
    code, _, err = run(capsys, "oracle", "--family", "psw", "--n", "1",
                       "--check", "chromatic")
    assert code == 2
    assert "chromatic" in err


def test_oracle_unknown_family_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["oracle", "--family", "kagome", "--n", "1"])
    assert info.value.code == 2


# -- failure hygiene --------------------------------------------------------


def test_negative_generation_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["tutte", "--n", "-1"])
    assert info.value.code == 2


def test_failed_run_leaves_no_partial_file(tmp_path, capsys):
    target = tmp_path / "never.json"
    code, _, err = run(capsys, "tutte", "--n", "12", "--out", str(target))
    assert code == 1
    assert err.startswith("error:")
    assert not target.exists()
    assert os.listdir(tmp_path) == []


def test_unwritable_output_reports_one_line(capsys):
    code, _, err = run(capsys, "tutte", "--n", "1",
                       "--out", "/nonexistent-dir/out.json")
    assert code == 1
    assert err.startswith("error:")
    assert err.count("\n") == 1
