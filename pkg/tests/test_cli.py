import json

import pandas as pd
import pytest

import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def body(out: str) -> dict:
    data = json.loads(out)
    data.pop("elapsed_ms")
    for d in data["details"]:
        d.pop("elapsed_ms", None)
    return data


# ----------------- eval -----------------
def test_eval_prints_canonical_form(capsys):
    code, out, _ = run(capsys, "eval", "t1 o x1", "--num-x", "1", "--num-theta", "1")
    assert code == 0
    assert out.strip() == "1/2*t1*x1 + 1/2*x1*t1"


def test_eval_bullet_with_odd_right_operand(capsys):
    assert run(capsys, "eval", "x1 o t1")[1].strip() == "0"


def test_eval_parse_error_goes_to_stderr(capsys):
    code, out, err = run(capsys, "eval", "{x1+x2, x3}")
    assert code == 2
    assert out == ""
    assert "byte 1" in err


def test_eval_unknown_generator(capsys):
    assert run(capsys, "eval", "x9", "--num-x", "2")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "check", "core", "--trials", "0")[0] == 2
    assert run(capsys, "check", "nada")[0] == 2
    assert run(capsys, "--help")[0] == 0


# ----------------- check -----------------
def test_check_all_passes(capsys):
    code, out, _ = run(capsys, "check", "all", "--trials", "5", "--num-x", "3", "--num-theta", "2")
    assert code == 0
    data = json.loads(out)
    assert data["task"] == "check"
    assert data["pass"] is True
    assert data["seed"] == 7
    assert [d["check"] for d in data["details"]] == ["core", "derived"]
    assert data["params"]["trials"] == 5


def test_check_is_deterministic(capsys):
    args = ("check", "core", "--trials", "6", "--seed", "11", "--num-x", "2", "--num-theta", "1")
    first = body(run(capsys, *args)[1])
    second = body(run(capsys, *args)[1])
    assert first == second


def test_check_exhaustive(capsys):
    code, out, _ = run(capsys, "check", "core", "--exhaustive")
    assert code == 0
    assert json.loads(out)["details"][0]["mode"] == "exhaustive"


@pytest.mark.slow
def test_check_all_at_desk_scale(capsys):
    code, _, _ = run(capsys, "check", "all", "--trials", "200", "--seed", "7",
                     "--num-x", "3", "--num-theta", "2", "--max-deg", "2")
    assert code == 0


# ----------------- cohn -----------------
def test_cohn_small(capsys):
    code, out, _ = run(capsys, "cohn", "--num-x", "2", "--num-theta", "1", "--max-deg", "3")
    assert code == 0
    detail = json.loads(out)["details"][0]
    assert detail["dim_reversible"] == detail["dim_closure"] == 22


def test_cohn_degree_zero(capsys):
    code, out, _ = run(capsys, "cohn", "--num-x", "4", "--num-theta", "1", "--max-deg", "0")
    assert code == 0
    assert json.loads(out)["details"][0]["dim_closure"] == 1


def test_cohn_with_congruences(capsys):
    code, out, _ = run(capsys, "cohn", "--num-x", "3", "--num-theta", "1", "--max-deg", "3",
                       "--congruences", "--random-perms", "2")
    assert code == 0
    checks = [d["check"] for d in json.loads(out)["details"]]
    assert checks == ["cohn", "brace_bootstrap", "identity15", "congruences"]


def test_cohn_without_odd_generators_skips_inductive_step(capsys):
    code, out, _ = run(capsys, "cohn", "--num-x", "2", "--num-theta", "0", "--max-deg", "2",
                       "--congruences", "--threads", "2")
    assert code == 0
    details = json.loads(out)["details"]
    assert [d["check"] for d in details] == ["cohn"]
    assert details[0]["dim_closure"] == 6


@pytest.mark.slow
def test_cohn_at_desk_scale(capsys):
    code, _, _ = run(capsys, "cohn", "--num-x", "4", "--num-theta", "1", "--max-deg", "5", "--congruences")
    assert code == 0


# ----------------- algebra -----------------
def test_split_then_check_then_annihilator(capsys, tmp_path, data_dir):
    ext = str(tmp_path / "ext.json")
    code, _, _ = run(capsys, "algebra", "split", str(data_dir / "sym2.json"),
                     str(data_dir / "sym2_regular.json"), "-o", ext)
    assert code == 0

    assert run(capsys, "algebra", "check", ext)[0] == 0
    assert run(capsys, "algebra", "check", ext, "--mode", "multilinear")[0] == 0

    code, out, _ = run(capsys, "algebra", "annihilator", ext)
    assert code == 0
    detail = json.loads(out)["details"][0]
    assert detail["dim"] == 3
    assert detail["basis"] == ["ve11", "ve12", "ve22"]
    assert detail["is_ideal"] is True
    induced = json.loads(out)["details"][1]
    assert induced["check"].startswith("bimodule[")
    assert induced["pass"] is True

    code, out, _ = run(capsys, "algebra", "quotient", ext, "-o", str(tmp_path / "q.json"))
    assert code == 0
    detail = json.loads(out)["details"][0]
    assert detail["basis"] == ["e11", "e12", "e22"]
    assert (tmp_path / "q.json").exists()

    code, out, _ = run(capsys, "algebra", "units", ext)
    assert code == 0
    detail = json.loads(out)["details"][0]
    assert detail["right_units"] == "e11 + e22"
    assert detail["homogeneous_is_annihilator"] is True
    assert detail["two_sided_identity"] is None


def test_check_with_bimodule(capsys, data_dir):
    code, out, _ = run(capsys, "algebra", "check", str(data_dir / "sym2.json"),
                       str(data_dir / "sym2_regular.json"), "--mode", "multilinear")
    assert code == 0
    assert len(json.loads(out)["details"]) == 2


def test_noncommutative_table_fails_check(capsys, data_dir):
    code, out, _ = run(capsys, "algebra", "check", str(data_dir / "noncommutative.json"),
                       "--mode", "multilinear")
    assert code == 1
    data = json.loads(out)
    assert data["pass"] is False
    assert data["details"][0]["failures"]


def test_split_needs_a_jordan_table(capsys, tmp_path, data_dir):
    code, _, err = run(capsys, "algebra", "split", str(data_dir / "noncommutative.json"),
                       str(data_dir / "sym2_regular.json"), "-o", str(tmp_path / "x.json"))
    assert code == 2
    assert "noncommutative.json" in err


def test_non_rational_coefficient_is_a_format_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 1, "products": [{"i": 0, "j": 0, "coeffs": {"0": "meio"}}]}),
                   encoding="utf-8")
    code, out, err = run(capsys, "algebra", "check", str(bad))
    assert code == 2
    assert out == ""
    assert "products[0]" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "algebra", "units", str(tmp_path / "nao_existe.json"))[0] == 2


# ----------------- saídas -----------------
def test_out_file(capsys, tmp_path):
    path = tmp_path / "rel" / "check.json"
    code, out, _ = run(capsys, "check", "core", "--trials", "3", "--num-x", "2", "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["pass"] is True


@pytest.mark.parametrize("ext", ["csv", "xlsx"])
def test_table_export(capsys, tmp_path, ext):
    path = tmp_path / f"detalhe.{ext}"
    code, _, _ = run(capsys, "check", "all", "--trials", "3", "--num-x", "2", "--table", str(path))
    assert code == 0
    df = pd.read_csv(path, encoding="utf-8-sig") if ext == "csv" else pd.read_excel(path)
    assert list(df["Verificação"]) == ["core", "derived"]
    assert df["Passou"].all()


def test_table_with_unknown_extension(capsys, tmp_path):
    code, _, _ = run(capsys, "check", "core", "--trials", "2", "--table", str(tmp_path / "x.txt"))
    assert code == 2
