import json

from mathieu_kit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_space_check_trace_plane(capsys):
    code, out, _ = run_cli(
        capsys,
        "space",
        "check",
        "--algebra",
        "mat:2:3",
        "--basis",
        "1,0,0,2;0,1,0,0;0,0,1,0",
        "--theta",
        "two_sided",
    )
    assert code == 0
    assert out.strip() == "true"


def test_space_check_false_with_witness_and_exit_code(capsys):
    code, out, _ = run_cli(
        capsys,
        "--json",
        "space",
        "check",
        "--algebra",
        "mat:2:2",
        "--basis",
        "1,0,0,1;0,1,0,0;0,0,1,0",
        "--theta",
        "left",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["is_mathieu"] is False
    assert doc["witness"]["e"] == ["1", "0", "0", "1"]


def test_codim1_report(capsys):
    code, out, _ = run_cli(capsys, "--json", "mat", "codim1", "--n", "2", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 15
    assert all(v == 0 for v in doc["per_theta"].values())


def test_elem_pofa_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "--json", "elem", "pofa", "--algebra", "mat:2:0", "--elem", "1,0,0,0"
    )
    assert code == 0
    assert json.loads(out) == ["1/1", "0/1", "0/1", "0/1"]
    # the emitted document feeds back through --elem @file
    path = tmp_path / "e.json"
    path.write_text(out)
    code, out2, _ = run_cli(
        capsys, "--json", "elem", "classify", "--algebra", "mat:2:0", "--elem", f"@{path}"
    )
    assert code == 0
    assert json.loads(out2)["idempotent"] is True


def test_algebra_info_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--json", "algebra", "info", "--algebra", "polyq:2:1,1,1")
    assert code == 0
    path = tmp_path / "f4.json"
    path.write_text(out)
    code, out2, _ = run_cli(capsys, "--json", "algebra", "info", "--algebra", f"@{path}")
    assert code == 0
    assert json.loads(out)["table"] == json.loads(out2)["table"]


def test_subspace_documents_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys,
        "--json",
        "space",
        "theta-ideal",
        "--algebra",
        "mat:2:2",
        "--elem",
        "1,0,0,0",
        "--theta",
        "left",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["basis"] == [["1", "0", "0", "0"], ["0", "0", "1", "0"]]
    path = tmp_path / "v.json"
    path.write_text(out)
    code, out2, _ = run_cli(
        capsys,
        "--json",
        "space",
        "max-ideal",
        "--algebra",
        "mat:2:2",
        "--basis",
        f"@{path}",
        "--theta",
        "left",
    )
    assert code == 0
    assert json.loads(out2)["basis"] == doc["basis"]  # left ideals are fixed points


def test_byte_identical_reruns(capsys):
    args = (
        "--json",
        "space",
        "radical-enum",
        "--algebra",
        "polyq:2:0,0,0,1",
        "--basis",
        "0,1,0",
    )
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    doc = json.loads(first)
    assert doc["count"] == 4


def test_alg_verbs(capsys):
    code, out, _ = run_cli(capsys, "alg", "quasi-stable", "--algebra", "polyq:2:1,1,1")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(capsys, "alg", "quasi-stable", "--algebra", "mat:2:2")
    assert code == 1 and out.strip() == "false"
    code, out, _ = run_cli(capsys, "alg", "stable", "--algebra", "dsum:mat:1:2+mat:1:2")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(capsys, "--json", "alg", "find-ms", "--algebra", "mat:2:2")
    assert code == 0
    assert json.loads(out)["basis"] == [["0", "0", "1", "0"]]


def test_mat_dual_and_witness(capsys):
    code, out, _ = run_cli(
        capsys,
        "--json",
        "mat",
        "dual",
        "--algebra",
        "mat:2:3",
        "--basis",
        "1,0,0,2;0,1,0,0;0,0,1,0",
    )
    assert code == 0
    assert json.loads(out)["canonical"] == ["1", "0", "0", "1"]
    code, out, _ = run_cli(
        capsys, "--json", "mat", "witness", "--algebra", "mat:2:3", "--elem", "0,1,0,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["a"] == ["1", "0", "0", "0"]  # case 1 with a = 0


def test_validate_reports_bad_algebra(capsys, tmp_path):
    bad = {
        "field": {"p": 2},
        "dim": 2,
        "table": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]],
        "unit": ["1", "0"],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run_cli(capsys, "algebra", "validate", "--algebra", f"@{path}")
    assert code == 1
    assert "invalid" in out


def test_usage_errors_exit_2(capsys):
    assert main(["space", "check", "--algebra", "nonsense:spec"]) == 2
    code, _, err = run_cli(
        capsys, "space", "check", "--algebra", "bogus", "--basis", "1", "--theta", "left"
    )
    assert code == 2
    assert "error" in err


def test_env_var_mirrors_max_scan(capsys, monkeypatch):
    monkeypatch.setenv("MATHIEU_KIT_MAX_SCAN", "3")
    code, _, err = run_cli(
        capsys,
        "space",
        "radical-enum",
        "--algebra",
        "mat:2:2",
        "--basis",
        "0,1,0,0",
    )
    assert code == 2
    assert "budget" in err


def test_suite_run_json_lines(capsys):
    code, out, _ = run_cli(capsys, "--json", "suite", "run", "stable")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert all(line["pass"] for line in lines)
    assert {line["suite"] for line in lines} == {"stable"}
    assert all({"suite", "check", "instance", "pass", "millis"} <= set(line) for line in lines)


def test_suite_run_text(capsys):
    code, out, _ = run_cli(capsys, "suite", "run", "lines")
    assert code == 0
    assert "checks passed" in out


def test_suite_failures_exit_nonzero(capsys):
    # an absurd scan budget turns guardrail refusals into recorded failures
    code, out, _ = run_cli(capsys, "--max-scan", "2", "suite", "run", "lines")
    assert code == 1
    assert "FAIL" in out and "TooLarge" in out


def test_trailing_seed_flag(capsys):
    code, out, _ = run_cli(capsys, "suite", "run", "stable", "--seed", "77")
    assert code == 0
    assert "(seed 77)" in out
