# report.py
"""
Relatório das tarefas da CLI: JSON na saída padrão (ou em --out) e, com
--table, os registros de detalhe como tabela CSV/XLSX via pandas.
"""
import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pandas as pd
from openpyxl.utils import get_column_letter

from freealg import format_rational

log = logging.getLogger(__name__)


@dataclass
class Report:
    task: str
    params: dict
    details: list = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(d.get("pass", True) for d in self.details)

    def add(self, detail) -> "Report":
        """Aceita dicts ou objetos com to_dict() (IdentityReport, CohnReport)."""
        self.details.append(detail.to_dict() if hasattr(detail, "to_dict") else dict(detail))
        return self

    def to_dict(self) -> dict:
        return {
            "task": self.task,
            "params": self.params,
            "pass": self.passed,
            "details": self.details,
            "seed": self.seed,
            "elapsed_ms": round(self.elapsed_ms, 1),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, default=_json_default)


def _json_default(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, np.ndarray):
        return [_json_default(c) if isinstance(c, Fraction) else c for c in obj.tolist()]
    if isinstance(obj, np.integer):
        return int(obj)
    return str(obj)


def emit(report: Report, out_path: str | None = None):
    text = report.to_json()
    if out_path:
        folder = os.path.dirname(out_path)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with open(out_path, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        log.info(f"💾 Relatório salvo em {out_path}")
    else:
        print(text)


# ----------------- tabelas -----------------
def detail_rows(report: Report) -> pd.DataFrame:
    """
    Uma linha por falha; verificações sem falha viram uma linha-resumo.
    Colunas: Tarefa, Verificação, Identidade, Tentativa, Entradas, Resíduo, Passou.
    """
    rows = []
    for d in report.details:
        check = d.get("check", report.task)
        failures = d.get("failures") or []
        if not failures:
            rows.append({
                "Tarefa": report.task,
                "Verificação": check,
                "Identidade": ", ".join(d.get("identities", [])),
                "Tentativa": d.get("trials"),
                "Entradas": "",
                "Resíduo": "0",
                "Passou": d.get("pass", True),
            })
            continue
        for f in failures:
            rows.append({
                "Tarefa": report.task,
                "Verificação": check,
                "Identidade": f["identity"],
                "Tentativa": f["trial"],
                "Entradas": "; ".join(f"{k}={v}" for k, v in f["inputs"].items()),
                "Resíduo": f["residual"],
                "Passou": False,
            })
    return pd.DataFrame(rows, columns=["Tarefa", "Verificação", "Identidade", "Tentativa",
                                       "Entradas", "Resíduo", "Passou"])


def autosize_columns(ws, df: pd.DataFrame, max_width: int = 80):
    for col_idx, col_name in enumerate(df.columns, start=1):
        values = [str(col_name)] + [str(v) for v in df[col_name].tolist()]
        width = min(max(len(v) for v in values) + 2, max_width)
        ws.column_dimensions[get_column_letter(col_idx)].width = width


def write_table(df: pd.DataFrame, path: str, sheet_name: str = "Detalhe"):
    """CSV (utf-8-sig) ou XLSX (openpyxl), pela extensão do arquivo."""
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    ext = os.path.splitext(path)[1].lower()
    if ext == ".csv":
        df.to_csv(path, index=False, encoding="utf-8-sig")
    elif ext == ".xlsx":
        with pd.ExcelWriter(path, engine="openpyxl") as writer:
            df.to_excel(writer, index=False, sheet_name=sheet_name)
            autosize_columns(writer.sheets[sheet_name], df)
    else:
        raise ValueError(f"Extensão de tabela não suportada: {ext or '(nenhuma)'} (use .csv ou .xlsx)")
    log.info(f"💾 Tabela salva em {path} ({len(df):,} linhas)")


def export_table(report: Report, path: str):
    write_table(detail_rows(report), path)
