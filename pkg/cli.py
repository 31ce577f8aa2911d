# cli.py
"""
Linha de comando: eval, check, cohn e algebra {check|annihilator|quotient|split|units}.

Códigos de saída: 0 = tudo passou, 1 = alguma verificação matemática falhou,
2 = erro de uso ou de formato.
"""
import argparse
import logging
import sys
import time

import config
from algebra_io import AlgebraFileError, load_algebra, load_bimodule, save_algebra
from cohn import (
    CohnError,
    check_brace_bootstrap,
    check_identity15_sweep,
    congruence_suite,
    verify_cohn,
)
from expressions import ParseError, eval_text
from freealg import FreeAlgebraError
from gja import Sampler, check_core_identities, check_derived_identities
from report import Report, emit, export_table
from scalg import (
    AlgebraError,
    IllDefinedAction,
    annihilator,
    check_bimodule,
    check_gja_axioms,
    find_right_units,
    induced_bimodule,
    is_ideal,
    quotient,
    split_extension,
    unit_element,
    vec_str,
)

log = logging.getLogger("cli")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
USAGE_ERRORS = (ParseError, FreeAlgebraError, AlgebraFileError, AlgebraError, CohnError, ValueError)


# ----------------- CLI -----------------
def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro esperado, recebido {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"precisa ser >= 1, recebido {n}")
    return n


def _non_negative(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro esperado, recebido {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"precisa ser >= 0, recebido {n}")
    return n


def _universe(p: argparse.ArgumentParser):
    p.add_argument("--num-x", type=_non_negative, default=config.NUM_X, help="Quantidade de geradores pares")
    p.add_argument("--num-theta", type=_non_negative, default=config.NUM_THETA, help="Quantidade de geradores ímpares")


def _output(p: argparse.ArgumentParser):
    p.add_argument("--out", help="Arquivo do relatório JSON (padrão: saída padrão)")
    p.add_argument("--table", help="Exporta os detalhes como tabela .csv ou .xlsx")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        description="Álgebras de Jordan generalizadas: aritmética exata em FA2[X ∪ Θ], identidades e Cohn"
    )
    p.add_argument("--verbose", "-v", action="store_true", help="Mostra mensagens de depuração")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="Avalia uma expressão e imprime a forma canônica")
    pe.add_argument("expr")
    _universe(pe)

    pc = sub.add_parser("check", help="Verifica as identidades de bullet")
    pc.add_argument("suite", choices=["core", "derived", "all"])
    _universe(pc)
    pc.add_argument("--trials", type=_positive, default=None,
                    help=f"Amostras (padrão: {config.TRIALS} core / {config.DERIVED_TRIALS} derived)")
    pc.add_argument("--seed", type=int, default=config.SEED)
    pc.add_argument("--max-deg", type=_non_negative, default=config.SAMPLE_DEG, help="Grau máximo das amostras")
    pc.add_argument("--threads", type=_positive, default=config.THREADS)
    pc.add_argument("--exhaustive", action="store_true",
                    help="Identidades centrais linearizadas em todos os padrões de paridade")
    _output(pc)

    pk = sub.add_parser("cohn", help="Teorema de Cohn generalizado em grau limitado")
    _universe(pk)
    pk.add_argument("--max-deg", type=_non_negative, default=config.MAX_DEG)
    pk.add_argument("--congruences", action="store_true", help="Roda também as congruências do passo indutivo")
    pk.add_argument("--random-perms", type=_non_negative, default=20)
    pk.add_argument("--seed", type=int, default=config.SEED)
    pk.add_argument("--threads", type=_positive, default=config.THREADS)
    _output(pk)

    pa = sub.add_parser("algebra", help="Álgebras por constantes de estrutura")
    asub = pa.add_subparsers(dest="action", required=True)

    a1 = asub.add_parser("check", help="Axiomas GJA (e de bimódulo, se informado)")
    a1.add_argument("algebra")
    a1.add_argument("bimodule", nargs="?")
    a1.add_argument("--mode", choices=["random", "multilinear"], default="random")
    a1.add_argument("--trials", type=_positive, default=config.TRIALS)
    a1.add_argument("--seed", type=int, default=config.SEED)
    a1.add_argument("--threads", type=_positive, default=config.THREADS)
    _output(a1)

    a2 = asub.add_parser("annihilator", help="Base do anulador span{x∙y - y∙x}")
    a2.add_argument("algebra")
    _output(a2)

    a3 = asub.add_parser("quotient", help="Quociente pelo anulador")
    a3.add_argument("algebra")
    a3.add_argument("-o", "--output", help="Grava a álgebra quociente neste arquivo")
    _output(a3)

    a4 = asub.add_parser("split", help="Extensão J ⊕ V com (a, v)∙(b, u) = (a⊙b, vb)")
    a4.add_argument("jordan")
    a4.add_argument("bimodule")
    a4.add_argument("-o", "--output", required=True, help="Arquivo da álgebra resultante")
    _output(a4)

    a5 = asub.add_parser("units", help="Unidades à direita (e identidade bilateral, se houver)")
    a5.add_argument("algebra")
    _output(a5)
    return p


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def setup_logging(verbose: bool = False):
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.INFO)
    root = logging.getLogger()
    for h in list(root.handlers):
        root.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


# ----------------- tarefas -----------------
def _params(args) -> dict:
    skip = {"verbose", "out", "table", "command", "action"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def run_eval(args) -> int:
    print(eval_text(args.expr, args.num_x, args.num_theta))
    return EXIT_OK


def run_check(args) -> Report:
    report = Report("check", _params(args), seed=args.seed)
    mode = "exhaustive" if args.exhaustive else "random"
    if args.suite in ("core", "all"):
        sampler = Sampler(args.num_x, args.num_theta, max_deg=args.max_deg, seed=args.seed)
        report.add(check_core_identities(sampler, args.trials or config.TRIALS, args.threads, mode))
    if args.suite in ("derived", "all"):
        sampler = Sampler(args.num_x, args.num_theta, max_deg=args.max_deg, seed=args.seed + 1)
        report.add(check_derived_identities(sampler, args.trials or config.DERIVED_TRIALS, args.threads))
    return report


def run_cohn(args) -> Report:
    report = Report("cohn", _params(args), seed=args.seed)
    report.add(verify_cohn(args.num_x, args.num_theta, args.max_deg, args.threads))
    if args.congruences:
        if args.num_theta >= 1:
            report.add(check_brace_bootstrap(args.num_x, args.num_theta))
            report.add(check_identity15_sweep(max_m=min(4, max(args.num_x, 1))))
        else:
            log.warning("⚠️ Sem geradores ímpares: chaves e identidade do passo indutivo ignoradas")
        ms = [m for m in (3, 4, 5) if m <= args.num_x]
        if ms and args.num_theta >= 1:
            report.add(congruence_suite(args.num_x, args.num_theta, ms, args.random_perms, args.seed))
        else:
            log.warning("⚠️ Congruências exigem |X| >= 3 e |Θ| >= 1; etapa ignorada")
    return report


def run_algebra(args) -> Report:
    report = Report(f"algebra {args.action}", _params(args), seed=getattr(args, "seed", None))

    if args.action == "check":
        A = load_algebra(args.algebra)
        report.add(check_gja_axioms(A, args.mode, args.trials, args.seed, args.threads))
        if args.bimodule:
            V = load_bimodule(args.bimodule)
            bmode = "multilinear" if args.mode == "multilinear" else "random"
            report.add(check_bimodule(V, bmode, args.trials, args.seed))
        return report

    if args.action == "split":
        J = load_algebra(args.jordan, jordan=True)
        V = load_bimodule(args.bimodule)
        if not V.base.same_table(J):
            raise AlgebraError(f"{args.bimodule} foi definido sobre outra álgebra, não {args.jordan}")
        A = split_extension(J, V)
        save_algebra(A, args.output)
        return report.add({"check": "split", "dim": A.dim, "output": args.output, "pass": True})

    A = load_algebra(args.algebra)
    ann = annihilator(A)

    if args.action == "annihilator":
        ideal = is_ideal(A, ann)
        report.add({
            "check": "annihilator",
            "dim": ann.dim,
            "basis": [vec_str(b, A.labels) for b in ann.basis()],
            "is_ideal": ideal,
            "pass": ideal,
        })
        if ideal and ann.dim:
            try:
                report.add(induced_bimodule(A).report)
            except IllDefinedAction as e:
                report.add({"check": "induced_bimodule", "error": str(e), "pass": False})
        return report

    if args.action == "quotient":
        Q = quotient(A, ann)
        commutative = Q.is_commutative()
        if args.output:
            save_algebra(Q, args.output)
        products = [
            f"{Q.labels[i]}∙{Q.labels[j]} = {vec_str(Q.table[i, j], Q.labels)}"
            for i in range(Q.dim) for j in range(Q.dim)
            if any(Q.table[i, j])
        ]
        return report.add({
            "check": "quotient",
            "dim": Q.dim,
            "basis": list(Q.labels),
            "products": products,
            "commutative": commutative,
            "pass": commutative,
        })

    # units
    units = find_right_units(A)
    try:
        unit = vec_str(unit_element(A), A.labels)
    except AlgebraError:
        unit = None
    return report.add({
        "check": "units",
        "right_units": None if units.empty else vec_str(units.particular, A.labels),
        "homogeneous": [vec_str(b, A.labels) for b in units.homogeneous.basis()],
        "homogeneous_is_annihilator": units.homogeneous.same_as(ann),
        "two_sided_identity": unit,
        "pass": True,
    })


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    setup_logging(args.verbose)

    inicio = time.perf_counter()
    try:
        if args.command == "eval":
            return run_eval(args)
        if args.command == "check":
            report = run_check(args)
        elif args.command == "cohn":
            report = run_cohn(args)
        else:
            report = run_algebra(args)
    except KeyboardInterrupt:
        log.warning("\n⚠️ Processo interrompido pelo usuário")
        return EXIT_FAIL
    except USAGE_ERRORS as e:
        log.error(f"❌ {e}")
        return EXIT_USAGE

    report.elapsed_ms = (time.perf_counter() - inicio) * 1000
    emit(report, args.out)
    if args.table:
        try:
            export_table(report, args.table)
        except (ValueError, PermissionError) as e:
            log.error(f"❌ Erro ao salvar tabela {args.table}: {e}")
            return EXIT_USAGE

    if report.passed:
        log.info(f"🏁 Concluído em {report.elapsed_ms / 1000:.1f} segundos: tudo passou")
        return EXIT_OK
    log.warning(f"🏁 Concluído em {report.elapsed_ms / 1000:.1f} segundos: há falhas")
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
