# dump_spans.py
"""
Dump para auditoria: base do espaço reversível e do fecho de Cohn em grau
limitado, um polinômio canônico por linha, em XLSX (duas abas) ou CSV.
"""
import argparse
import logging
import os
import sys
from datetime import datetime

import pandas as pd

import config
from cohn import closure, cohn_generators, reversible_basis
from freealg import SpanBasis, multidegree, theta_degree
from report import autosize_columns

log = logging.getLogger("dump_spans")

pd.set_option("display.max_columns", None)
pd.set_option("display.width", 1800)


def parse_args(argv=None):
    p = argparse.ArgumentParser(description="Dump das bases (reversível e fecho de Cohn) como tabelas")
    p.add_argument("--num-x", type=int, default=config.NUM_X)
    p.add_argument("--num-theta", type=int, default=config.NUM_THETA)
    p.add_argument("--max-deg", type=int, default=config.MAX_DEG)
    p.add_argument("--format", choices=["xlsx", "csv"], default="xlsx")
    p.add_argument("--output-dir", default=config.OUTPUT_DIR)
    return p.parse_args(argv)


def span_frame(span: SpanBasis) -> pd.DataFrame:
    rows = []
    for r in span.rows():
        piv = r.leading_monomial
        rows.append({
            "Grau": len(piv),
            "Paridade": "ímpar" if theta_degree(piv) else "par",
            "Multigrau": " ".join(f"{g}^{k}" for g, k in multidegree(piv)),
            "Termos": len(r),
            "Polinômio": str(r),
        })
    return pd.DataFrame(rows, columns=["Grau", "Paridade", "Multigrau", "Termos", "Polinômio"])


def dump(num_x: int, num_theta: int, maxdeg: int, fmt: str, output_dir: str) -> list[str]:
    os.makedirs(output_dir, exist_ok=True)
    tag = f"x{num_x}_t{num_theta}_d{maxdeg}"

    log.info("📊 Calculando espaço reversível...")
    rev = span_frame(reversible_basis(num_x, num_theta, maxdeg))
    log.info(f"   • {len(rev):,} vetores")

    log.info("📊 Calculando fecho de Cohn...")
    clo = span_frame(closure(cohn_generators(num_x, num_theta, maxdeg), maxdeg))
    log.info(f"   • {len(clo):,} vetores")

    paths = []
    if fmt == "xlsx":
        path = os.path.join(output_dir, f"SPANS_{tag}.xlsx")
        with pd.ExcelWriter(path, engine="openpyxl") as writer:
            for name, df in (("Reversivel", rev), ("Fecho", clo)):
                df.to_excel(writer, index=False, sheet_name=name)
                autosize_columns(writer.sheets[name], df)
        paths.append(path)
    else:
        for name, df in (("reversivel", rev), ("fecho", clo)):
            path = os.path.join(output_dir, f"{name}_{tag}.csv")
            df.to_csv(path, index=False, encoding="utf-8-sig")
            paths.append(path)
    for p in paths:
        log.info(f"💾 {p} ({os.path.getsize(p) / 1024:.1f} KB)")
    return paths


def main(argv=None) -> int:
    logging.basicConfig(level=config.LOG_LEVEL, format="%(message)s", stream=sys.stderr)
    args = parse_args(argv)
    inicio = datetime.now()
    log.info("=" * 60)
    log.info(f"📊 Dump de bases: |X|={args.num_x}, |Θ|={args.num_theta}, grau <= {args.max_deg}")
    log.info("=" * 60)
    try:
        dump(args.num_x, args.num_theta, args.max_deg, args.format, args.output_dir)
    except PermissionError as e:
        log.error(f"❌ ERRO: Permissão negada ao salvar ({e})")
        log.error("   → O arquivo está aberto no Excel? Feche-o e tente novamente.")
        return 1
    except KeyboardInterrupt:
        log.warning("\n⚠️ Operação cancelada pelo usuário")
        return 1
    duracao = (datetime.now() - inicio).total_seconds()
    log.info(f"🏁 Concluído em {duracao:.1f} segundos")
    return 0


if __name__ == "__main__":
    sys.exit(main())
