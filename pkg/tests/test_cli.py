import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from knotrank import cli

REPO_ROOT = Path(__file__).resolve().parent.parent


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    envelope = json.loads(out)
    # canonical re-serialization must reproduce the output byte for byte
    assert json.dumps(envelope, sort_keys=True, indent=2) == out.strip()
    assert envelope["schema_version"] == "1"
    return code, envelope, err


def write_matrix(tmp_path, rows, name="matrix.json", size=None):
    path = tmp_path / name
    payload = {"size": len(rows) if size is None else size, "entries": rows}
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.mark.parametrize(
    "strands,expected",
    [("-1,3,3", "1 - t + t^2"), ("1,1,1", "1 - t + t^2"), ("1,1,-1", "1")],
)
def test_alexander_pretzel_text(capsys, strands, expected):
    code, out, _ = run_cli(capsys, "alexander", "--pretzel", strands)
    assert code == 0
    assert out.strip() == expected


def test_alexander_json_envelope(capsys):
    code, envelope, _ = run_json(capsys, "alexander", "--pretzel", "-1,3,3")
    assert code == 0
    assert envelope["command"] == "alexander"
    assert envelope["result"]["alexander"] == {"lowest": 0, "coeffs": [1, -1, 1]}
    assert envelope["result"]["pretty"] == "1 - t + t^2"


def test_alexander_from_seifert_file(capsys, tmp_path):
    path = write_matrix(tmp_path, [[1, 1], [0, 1]])
    code, out, _ = run_cli(capsys, "alexander", "--seifert", path)
    assert code == 0
    assert out.strip() == "1 - t + t^2"


def test_alexander_rejects_even_strand(capsys):
    code, _, err = run_cli(capsys, "alexander", "--pretzel", "2,3,5")
    assert code == 2
    assert "even" in err


def test_alexander_rejects_malformed_strands(capsys):
    code, _, err = run_cli(capsys, "alexander", "--pretzel", "1,1")
    assert code == 2
    code, _, err = run_cli(capsys, "alexander", "--pretzel", "a,b,c")
    assert code == 2


def test_alexander_rejects_non_square_matrix(capsys, tmp_path):
    path = write_matrix(tmp_path, [[1, 1, 0], [0, 1, 0]], size=2)
    code, _, err = run_cli(capsys, "alexander", "--seifert", path)
    assert code == 2


def test_alexander_rejects_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "alexander", "--seifert", str(tmp_path / "no.json"))
    assert code == 2


def test_alexander_symmetric_matrix_is_domain_failure(capsys, tmp_path):
    # V - V^T = 0: input parses fine but is not a Seifert matrix of a knot
    path = write_matrix(tmp_path, [[1, 0], [0, 1]])
    code, _, err = run_cli(capsys, "alexander", "--seifert", path)
    assert code == 1
    assert "V - V^T" in err


def test_alexander_requires_exactly_one_source(capsys):
    code, _, _ = run_cli(capsys, "alexander")
    assert code == 2
    code, _, _ = run_cli(capsys, "alexander", "--pretzel", "1,1,1", "--seifert", "x.json")
    assert code == 2


def test_fibered_true(capsys):
    code, out, _ = run_cli(capsys, "fibered", "--pretzel", "-1,3,3")
    assert code == 0
    assert out.strip() == "true"


def test_fibered_false_constant_term(capsys):
    code, out, _ = run_cli(capsys, "fibered", "--pretzel", "3,3,3")
    assert code == 0
    assert out.strip() == "false (Delta(0) = 7)"


def test_fibered_false_degree(capsys):
    code, out, _ = run_cli(capsys, "fibered", "--pretzel", "1,1,-1")
    assert code == 0
    assert out.strip() == "false (degree 0 != 2)"


def test_fibered_json_reports_conditions(capsys):
    code, envelope, _ = run_json(capsys, "fibered", "--pretzel", "3,3,3")
    assert code == 0
    result = envelope["result"]
    assert result["fibered"] is False
    assert result["at_zero"] == 7
    assert result["degree_span"] == 2
    assert result["failing"] == ["Delta(0) = 7"]


def test_fibered_seifert_genus_two(capsys, tmp_path):
    # direct sum of two trefoil blocks: genus 2, still a homology product
    rows = [
        [1, 1, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
    ]
    code, out, _ = run_cli(capsys, "fibered", "--seifert", write_matrix(tmp_path, rows))
    assert code == 0
    assert out.strip() == "true"


def test_witness_five(capsys):
    code, envelope, _ = run_json(capsys, "witness", "--prime", "5")
    assert code == 0
    result = envelope["result"]
    assert result == {
        "prime": 5,
        "m": 2,
        "n": 4,
        "pretzel": [-7, 9, 33],
        "rank": 25,
        "factorization": [[5, 2]],
        "rank_mod_p": 0,
    }


def test_witness_seventeen(capsys):
    code, envelope, _ = run_json(capsys, "witness", "--prime", "17")
    assert code == 0
    result = envelope["result"]
    assert result["m"] == 13
    assert result["n"] == 7
    assert result["rank"] == 85
    assert result["factorization"] == [[5, 1], [17, 1]]
    assert result["rank_mod_p"] == 0


def test_witness_rejects_three_mod_four(capsys):
    code, _, err = run_cli(capsys, "witness", "--prime", "7")
    assert code == 2
    assert "mod 4" in err


def test_witness_rejects_composite(capsys):
    code, _, err = run_cli(capsys, "witness", "--prime", "21")
    assert code == 2
    assert "not prime" in err


def test_certificate_two_rows(capsys):
    code, envelope, _ = run_json(capsys, "certificate", "--count", "2", "--search-limit", "10")
    assert code == 0
    result = envelope["result"]
    assert result["primes"] == [5, 13]
    assert result["matrix"] == [[1, 0], [0, 1]]
    assert result["verified"] is True
    assert [w["witness"]["index"] for w in result["witnesses"]] == [2, 3]


def test_certificate_single_row(capsys):
    code, envelope, _ = run_json(capsys, "certificate", "--count", "1")
    assert code == 0
    matrix = envelope["result"]["matrix"]
    assert len(matrix) == 1 and len(matrix[0]) == 1 and matrix[0][0] >= 1


def test_certificate_exhaustion_exit_code(capsys):
    code, _, err = run_cli(capsys, "certificate", "--count", "100000", "--search-limit", "10")
    assert code == 3
    assert "witnesses" in err


def test_certificate_writes_csv(capsys, tmp_path):
    path = tmp_path / "matrix.csv"
    code, _, _ = run_cli(
        capsys, "certificate", "--count", "2", "--search-limit", "10", "--csv", str(path)
    )
    assert code == 0
    assert path.read_text() == "prime,witness_2,witness_3\n5,1,0\n13,0,1\n"


def test_certificate_text_output_ends_with_verified(capsys):
    code, out, _ = run_cli(capsys, "certificate", "--count", "2", "--search-limit", "10")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "prime,witness_2,witness_3"
    assert lines[-1] == "verified: true"


def test_rank_index_two(capsys):
    code, envelope, _ = run_json(capsys, "rank", "--index", "2")
    assert code == 0
    result = envelope["result"]
    assert result["rank"] == 5
    assert result["genus"] == 1
    assert result["bigraded"] == [[1, 2], [2, 3]]
    assert result["alexander"] == {"lowest": 0, "coeffs": [1, -1, 1]}


def test_rank_stabilized(capsys):
    code, envelope, _ = run_json(capsys, "rank", "--index", "2", "--stab", "3")
    assert code == 0
    result = envelope["result"]
    assert result["rank"] == 5
    assert result["genus"] == 4
    assert "bigraded" not in result
    # (1 - t + t^2)^4 has degree 8
    assert len(result["alexander"]["coeffs"]) == 9


def test_rank_rejects_bad_index(capsys):
    code, _, err = run_cli(capsys, "rank", "--index", "0")
    assert code == 2
    code, _, err = run_cli(capsys, "rank", "--index", "2", "--stab", "-1")
    assert code == 2


def test_selftest_fast_passes_quickly(capsys):
    start = time.perf_counter()
    code, out, _ = run_cli(capsys, "selftest", "--fast")
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed < 5.0
    for name in ("closed form", "pretzel box oracle", "rank formula", "witness verification", "certificate"):
        assert f"ok: {name}" in out


def test_selftest_json_envelope(capsys):
    code, envelope, _ = run_json(capsys, "selftest", "--fast")
    assert code == 0
    result = envelope["result"]
    assert result["ok"] is True
    assert [c["ok"] for c in result["checks"]] == [True] * 5


def test_selftest_names_sabotaged_rank_formula(capsys, monkeypatch):
    monkeypatch.setattr("knotrank.pretzel.hfk_top_rank", lambda w: 999)
    code, out, _ = run_cli(capsys, "selftest", "--fast")
    assert code == 1
    assert "FAIL: rank formula" in out


def test_help_exits_zero(capsys):
    code, _, _ = run_cli(capsys, "--help")
    assert code == 0


def test_unknown_command_exits_two(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 2


def test_module_entry_point_subprocess():
    env = dict(os.environ, PYTHONPATH=str(REPO_ROOT / "src"))
    proc = subprocess.run(
        [sys.executable, "-m", "knotrank", "rank", "--index", "2", "--json"],
        capture_output=True,
        text=True,
        env=env,
        cwd=REPO_ROOT,
    )
    assert proc.returncode == 0
    envelope = json.loads(proc.stdout)
    assert envelope["result"]["rank"] == 5
