# algebra_io.py
"""
Leitura e escrita de álgebras e bimódulos em arquivos JSON.

Álgebra:   {"name", "dim", "basis": [...], "grading": [0|1, ...] (opcional),
            "products": [{"i", "j", "coeffs": {"k": "p/q"}}]}
Bimódulo:  {"name", "algebra": caminho relativo ao próprio arquivo, "dim",
            "basis": [...], "action": [{"i": índice no módulo, "j": índice na
            álgebra, "coeffs": {...}}]}

Índices começam em 0; entradas omitidas valem zero. Floats são recusados.
"""
import json
import logging
import os
import re
from fractions import Fraction

from freealg import format_rational
from scalg import BimoduleSC, JordanSC, NotCommutative, SCAlgebra, zeros

log = logging.getLogger(__name__)

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class AlgebraFileError(ValueError):
    pass


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise AlgebraFileError(f"{where}: coeficiente {value!r} não é racional exato")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.fullmatch(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise AlgebraFileError(f"{where}: denominador zero em {value!r}") from None
    raise AlgebraFileError(f"{where}: coeficiente {value!r} não é racional exato (use \"p/q\")")


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise AlgebraFileError(f"Arquivo não encontrado: {path}") from None
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{path}: JSON inválido na linha {e.lineno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise AlgebraFileError(f"{path}: esperado um objeto JSON no topo")
    return data


def _int_field(data: dict, key: str, path: str) -> int:
    v = data.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise AlgebraFileError(f"{path}: campo {key!r} precisa ser inteiro >= 0, recebido {v!r}")
    return v


def _labels(data: dict, dim: int, prefix: str, path: str) -> list[str]:
    labels = data.get("basis") or [f"{prefix}{i + 1}" for i in range(dim)]
    if len(labels) != dim:
        raise AlgebraFileError(f"{path}: 'basis' tem {len(labels)} rótulos, dim = {dim}")
    return [str(lab) for lab in labels]


def _fill(table, entries, key: str, rows: int, cols: int, out: int, path: str):
    if not isinstance(entries, list):
        raise AlgebraFileError(f"{path}: '{key}' precisa ser uma lista")
    for n, entry in enumerate(entries):
        where = f"{path}: {key}[{n}]"
        try:
            i, j, coeffs = entry["i"], entry["j"], entry["coeffs"]
        except (KeyError, TypeError):
            raise AlgebraFileError(f"{where}: entrada precisa ter 'i', 'j' e 'coeffs'") from None
        if not isinstance(i, int) or not 0 <= i < rows or not isinstance(j, int) or not 0 <= j < cols:
            raise AlgebraFileError(f"{where}: índices ({i!r}, {j!r}) fora do intervalo")
        if not isinstance(coeffs, dict):
            raise AlgebraFileError(f"{where}: 'coeffs' precisa ser um objeto {{k: \"p/q\"}}")
        for k, c in coeffs.items():
            if not str(k).isdigit() or not 0 <= int(k) < out:
                raise AlgebraFileError(f"{where}: índice de saída {k!r} fora do intervalo")
            table[i, j, int(k)] = parse_rational(c, f"{where}.coeffs[{k}]")


def load_algebra(path: str, jordan: bool = False) -> SCAlgebra:
    data = _read_json(path)
    dim = _int_field(data, "dim", path)
    labels = _labels(data, dim, "e", path)
    grading = data.get("grading")
    if grading is not None and (
        len(grading) != dim or any(g not in (0, 1) or isinstance(g, bool) for g in grading)
    ):
        raise AlgebraFileError(f"{path}: 'grading' precisa ter {dim} entradas 0/1")
    table = zeros(dim, dim, dim)
    _fill(table, data.get("products", []), "products", dim, dim, dim, path)
    name = str(data.get("name", os.path.splitext(os.path.basename(path))[0]))
    if not jordan:
        A = SCAlgebra(table, labels, grading, name=name)
        if not A.respects_grading():
            raise AlgebraFileError(f"{path}: produtos não respeitam 'grading'")
        return A
    try:
        return JordanSC(table, labels, grading, name=name)
    except NotCommutative as e:
        raise AlgebraFileError(f"{path}: {e}") from None


def load_bimodule(path: str) -> BimoduleSC:
    data = _read_json(path)
    ref = data.get("algebra")
    if not isinstance(ref, str):
        raise AlgebraFileError(f"{path}: campo 'algebra' precisa ser o caminho da álgebra de Jordan")
    base_path = os.path.join(os.path.dirname(os.path.abspath(path)), ref)
    J = load_algebra(base_path, jordan=True)
    dim = _int_field(data, "dim", path)
    labels = _labels(data, dim, "v", path)
    action = zeros(dim, J.dim, dim)
    _fill(action, data.get("action", []), "action", dim, J.dim, dim, path)
    name = str(data.get("name", os.path.splitext(os.path.basename(path))[0]))
    return BimoduleSC(J, action, labels, name=name)


def algebra_to_dict(A: SCAlgebra) -> dict:
    products: dict = {}
    for i, j, k, c in A.entries():
        products.setdefault((i, j), {})[str(k)] = format_rational(c)
    out = {"name": A.name, "dim": A.dim, "basis": list(A.labels)}
    if A.grading is not None:
        out["grading"] = list(A.grading)
    out["products"] = [{"i": i, "j": j, "coeffs": coeffs} for (i, j), coeffs in sorted(products.items())]
    return out


def bimodule_to_dict(V: BimoduleSC, algebra_ref: str) -> dict:
    action: dict = {}
    for p in range(V.dim):
        for a in range(V.base.dim):
            for q in range(V.dim):
                c = V.action[p, a, q]
                if c:
                    action.setdefault((p, a), {})[str(q)] = format_rational(c)
    return {
        "name": V.name,
        "algebra": algebra_ref,
        "dim": V.dim,
        "basis": list(V.labels),
        "action": [{"i": i, "j": j, "coeffs": c} for (i, j), c in sorted(action.items())],
    }


def _write_json(data: dict, path: str):
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, ensure_ascii=False, indent=2)
        f.write("\n")


def save_algebra(A: SCAlgebra, path: str):
    _write_json(algebra_to_dict(A), path)
    log.info(f"💾 Álgebra {A.name or ''} (dim {A.dim}) salva em {path}")


def save_bimodule(V: BimoduleSC, path: str, algebra_ref: str):
    _write_json(bimodule_to_dict(V, algebra_ref), path)
    log.info(f"💾 Bimódulo {V.name or ''} (dim {V.dim}) salvo em {path}")
