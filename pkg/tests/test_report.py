import json
from fractions import Fraction

import numpy as np
import pytest
from openpyxl import load_workbook

from freealg import FreePoly, t, x
from gja import COMMUTATIVITY, check_identity
from report import Report, detail_rows, emit, write_table


def _failing_report() -> Report:
    report = Report("check", {"trials": 1}, seed=3)
    report.add({"check": "sanity", "pass": True})
    report.add(check_identity(COMMUTATIVITY, (FreePoly.gen(t(1)), FreePoly.gen(x(1)))))
    return report


def test_pass_flag_follows_details():
    report = Report("check", {})
    assert report.passed
    report.add({"check": "a", "pass": True})
    assert report.passed
    report.add({"check": "b", "pass": False})
    assert not report.passed
    assert report.to_dict()["pass"] is False


def test_json_uses_rational_strings():
    report = Report("algebra units", {"dim": np.int64(3)})
    report.add({"check": "units", "coef": Fraction(-1, 2), "vec": np.array([Fraction(1, 3), Fraction(2)], dtype=object),
                "pass": True})
    data = json.loads(report.to_json())
    assert data["params"] == {"dim": 3}
    assert data["details"][0]["coef"] == "-1/2"
    assert data["details"][0]["vec"] == ["1/3", "2"]
    assert list(data) == ["task", "params", "pass", "details", "seed", "elapsed_ms"]


def test_emit_to_stdout_and_file(capsys, tmp_path):
    report = _failing_report()
    emit(report)
    assert json.loads(capsys.readouterr().out)["pass"] is False
    path = tmp_path / "sub" / "r.json"
    emit(report, str(path))
    assert json.loads(path.read_text(encoding="utf-8")) == report.to_dict()


def test_detail_rows():
    df = detail_rows(_failing_report())
    assert list(df.columns) == ["Tarefa", "Verificação", "Identidade", "Tentativa",
                                "Entradas", "Resíduo", "Passou"]
    assert len(df) == 2
    row = df.iloc[1]
    assert row["Identidade"] == "commutativity"
    assert row["Entradas"] == "x=t1; y=x1"
    assert row["Resíduo"] == "1/2*t1*x1 + 1/2*x1*t1"
    assert not row["Passou"]


def test_write_table_xlsx_autosizes(tmp_path):
    path = str(tmp_path / "t.xlsx")
    write_table(detail_rows(_failing_report()), path)
    ws = load_workbook(path)["Detalhe"]
    assert ws["A1"].value == "Tarefa"
    assert ws.column_dimensions["F"].width == len("1/2*t1*x1 + 1/2*x1*t1") + 2


def test_write_table_rejects_unknown_extension(tmp_path):
    with pytest.raises(ValueError):
        write_table(detail_rows(_failing_report()), str(tmp_path / "t.ods"))
