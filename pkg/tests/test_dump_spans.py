import pandas as pd

from cohn import reversible_basis
from dump_spans import dump, main, span_frame


def test_span_frame_columns():
    df = span_frame(reversible_basis(1, 1, 2))
    assert list(df.columns) == ["Grau", "Paridade", "Multigrau", "Termos", "Polinômio"]
    # 1, t1, x1, {t1,x1}, x1*x1
    assert len(df) == 5
    assert set(df["Paridade"]) == {"par", "ímpar"}


def test_dump_csv(tmp_path):
    paths = dump(2, 1, 3, "csv", str(tmp_path))
    assert len(paths) == 2
    for p in paths:
        assert len(pd.read_csv(p, encoding="utf-8-sig")) == 22


def test_dump_xlsx(tmp_path):
    assert main(["--num-x", "2", "--num-theta", "1", "--max-deg", "3", "--output-dir", str(tmp_path)]) == 0
    sheets = pd.read_excel(tmp_path / "SPANS_x2_t1_d3.xlsx", sheet_name=None)
    assert set(sheets) == {"Reversivel", "Fecho"}
    assert len(sheets["Fecho"]) == 22
