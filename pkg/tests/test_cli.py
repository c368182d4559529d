from __future__ import annotations

import json

import pytest

from trimorph.cli import EXAMPLE_PAIRS, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_human_true(capsys):
    code, out, _ = run(capsys, "check", "a=a,b=bb", "a=aa,b=b")
    assert code == 0
    assert out.strip() == "true"


def test_check_human_false(capsys):
    code, out, _ = run(capsys, "check", "a=a,b=bb", "a=aa,b=ab")
    assert code == 0
    assert out.strip() == "false"


def test_check_assert_exit_code(capsys):
    code, _, _ = run(capsys, "check", "a=a,b=bb", "a=aa,b=ab", "--assert")
    assert code == 1
    code, _, _ = run(capsys, "check", "a=a,b=bb", "a=aa,b=b", "--assert")
    assert code == 0


def test_check_json_record(capsys):
    code, out, _ = run(capsys, "check", "a=a,b=bb", "a=aa,b=b", "--json")
    assert code == 0
    record = json.loads(out)
    assert record == {
        "schema": 1,
        "kind": "commutation",
        "g1": "a=a,b=bb",
        "g2": "a=aa,b=b",
        "commute": True,
    }


def test_classify_json_record(capsys):
    code, out, _ = run(capsys, "classify", "a=a,b=baab", "a=a,b=baabaab", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["kind"] == "classification"
    assert record["case"] == "MultIndependent"
    assert record["conditions"]["uniform_blocks_same_gap"] is True
    assert record["prediction"] is True
    assert record["witness"] == {"alpha": 2}


def test_classify_human_line(capsys):
    code, out, _ = run(capsys, "classify", "a=a,b=bb", "a=aa,b=ab")
    assert code == 0
    assert "case=" in out and "prediction=false" in out


def test_omega_prefix(capsys):
    code, out, _ = run(capsys, "omega", "a=a,b=bab", "--len", "7")
    assert code == 0
    assert out.strip() == "bababab"


def test_omega_json(capsys):
    code, out, _ = run(capsys, "omega", "a=a,b=bab", "--len", "5", "--json")
    assert code == 0
    record = json.loads(out)
    assert record == {"schema": 1, "kind": "omega_prefix", "length": 5, "word": "babab"}


def test_gaps_closed_and_direct_agree(capsys):
    code, closed, _ = run(capsys, "gaps", "a=aa,b=abaaab", "--upto", "40")
    assert code == 0
    code, direct, _ = run(capsys, "gaps", "a=aa,b=abaaab", "--upto", "40", "--direct")
    assert code == 0
    assert closed == direct


def test_gaps_json_record(capsys):
    code, out, _ = run(capsys, "gaps", "a=a,b=babaab", "--upto", "6", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["kind"] == "gaps"
    assert record["source"] == "closed"
    assert record["gaps"][0] == 1
    assert record["gaps"][5] == 2


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "abba", "bbaa")
    assert code == 0
    assert out.strip() == "true"
    code, out, _ = run(capsys, "conjugate", "abba", "baba")
    assert code == 0
    assert out.strip() == "false"


def test_multdep_dependent(capsys):
    code, out, _ = run(capsys, "multdep", "8", "4", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["dependent"] is True
    assert (record["r"], record["m"], record["n"]) == (2, 3, 2)


def test_multdep_independent(capsys):
    code, out, _ = run(capsys, "multdep", "2", "3")
    assert code == 0
    assert out.strip() == "independent"


def test_free_none(capsys):
    code, out, _ = run(capsys, "free", "a=aa,b=bb", "a=aa,b=abb", "--depth", "4")
    assert code == 0
    assert out.strip() == "none"


def test_free_found(capsys):
    code, out, _ = run(capsys, "free", "a=a,b=bb", "a=aa,b=b", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["found"] is True
    assert record["left"] == "12"
    assert record["right"] == "21"


def test_sweep_human_summary(capsys):
    code, out, _ = run(
        capsys,
        "sweep",
        "--max-s", "1", "--max-p", "1", "--max-exp", "1", "--max-bonly-exp", "1",
    )
    assert code == 0
    assert out.startswith("morphisms=")
    assert "mismatches=0" in out


def test_sweep_json_output_file(capsys, tmp_path):
    path = tmp_path / "sweep.jsonl"
    code, _, _ = run(
        capsys,
        "sweep",
        "--max-s", "1", "--max-p", "1", "--max-exp", "1", "--max-bonly-exp", "1",
        "--output", str(path),
    )
    assert code == 0
    lines = path.read_text().splitlines()
    summary = json.loads(lines[-1])
    assert summary["kind"] == "sweep_summary"
    assert summary["mismatches"] == 0
    assert len(lines) == 1 + summary["mismatches"]


def test_examples_all_commute(capsys):
    code, out, _ = run(capsys, "examples", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == len(EXAMPLE_PAIRS)
    assert all(r["commute"] for r in records)
    assert {r["kind"] for r in records} == {"example"}


def test_parse_error_exits_two(capsys):
    code, _, err = run(capsys, "check", "a=c,b=b", "a=a,b=b")
    assert code == 2
    assert "error:" in err


def test_usage_error_exits_two(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_omega_rejects_nontriangular(capsys):
    code, _, err = run(capsys, "omega", "a=ba,b=b", "--len", "5")
    assert code == 2
    assert "error:" in err


def test_omega_undefined_exits_two(capsys):
    code, _, err = run(capsys, "omega", "a=a,b=ab", "--len", "5")
    assert code == 2
    assert "error:" in err


def test_negative_upto_exits_two(capsys):
    code, _, _ = run(capsys, "gaps", "a=a,b=bab", "--upto", "-1")
    assert code == 2


def test_aborted_search_exits_three(capsys):
    huge = "a=" + "a" * 2048 + ",b=b"
    code, _, err = run(capsys, "free", huge, "a=a,b=ab", "--depth", "6")
    assert code == 3
    assert "error:" in err
