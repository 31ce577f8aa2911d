# cohn.py
"""
Tétrades, espaço dos elementos reversíveis e fecho por bullet.

O fecho usa o fato de bullet ser multigraduado pelas multiplicidades das
letras: o produto de blocos de multigraus a e b cai no bloco a + b. Com
geradores multi-homogêneos basta uma passada em grau crescente.
"""
import itertools
import logging
import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, field

import config
from freealg import (
    FreePoly,
    SpanBasis,
    all_words,
    brace,
    generators,
    is_reversible,
    multidegree,
    t,
    x,
)
from gja import Failure, Identity, IdentityReport, bullet, evaluate_cases

log = logging.getLogger(__name__)

__all__ = [
    "CohnError", "DegreeExceedsCap", "InvalidIndices", "SpanBasis", "TetradSet",
    "CohnReport", "enumerate_tetrads", "reversible_basis", "count_reversible",
    "cohn_generators", "closure", "membership", "verify_cohn", "congruence_suite",
    "identity15_exact", "check_brace_bootstrap",
]


class CohnError(ValueError):
    pass


class DegreeExceedsCap(CohnError):
    pass


class InvalidIndices(CohnError):
    pass


# ----------------- tétrades -----------------
@dataclass(frozen=True)
class TetradSet:
    even: tuple   # (x_a, x_b, x_c, x_d) com a < b < c < d
    odd: tuple    # (t_k, x_a, x_b, x_c) com a < b < c

    def polys(self) -> list[FreePoly]:
        return [brace(s) for s in self.even + self.odd]

    def __len__(self):
        return len(self.even) + len(self.odd)


def enumerate_tetrads(num_x: int, num_theta: int) -> TetradSet:
    xs = [x(i) for i in range(1, num_x + 1)]
    ts = [t(i) for i in range(1, num_theta + 1)]
    even = tuple(itertools.combinations(xs, 4))
    odd = tuple((th,) + c for th in ts for c in itertools.combinations(xs, 3))
    return TetradSet(even, odd)


# ----------------- espaço reversível -----------------
def _representatives(num_x: int, num_theta: int, maxdeg: int):
    # um representante por órbita {w, w reverso}
    for w in all_words(num_x, num_theta, maxdeg):
        if w <= w[::-1]:
            yield w


def reversible_basis(num_x: int, num_theta: int, maxdeg: int) -> SpanBasis:
    """Base do autoespaço +1 da involução: chaves {w} das palavras até reversão."""
    span = SpanBasis(cap=maxdeg)
    for w in _representatives(num_x, num_theta, maxdeg):
        span.add(brace(w))
    return span


def count_reversible(num_x: int, num_theta: int, maxdeg: int) -> int:
    """(#palavras + #palíndromos) / 2, somado por grau e por Θ-grau."""
    a, b = num_x, num_theta
    total = 0
    for n in range(maxdeg + 1):
        total += (a ** n + a ** ((n + 1) // 2)) // 2
        if n >= 1:
            odd_words = n * b * a ** (n - 1)
            odd_pal = b * a ** ((n - 1) // 2) if n % 2 == 1 else 0
            total += (odd_words + odd_pal) // 2
    return total


def cohn_generators(num_x: int, num_theta: int, maxdeg: int | None = None) -> list[FreePoly]:
    """1, as letras de X ∪ Θ e todas as tétrades (as de grau > maxdeg são omitidas)."""
    gens = [FreePoly.one()] + [FreePoly.gen(g) for g in generators(num_x, num_theta)]
    if maxdeg is None or maxdeg >= 4:
        gens += enumerate_tetrads(num_x, num_theta).polys()
    return gens


# ----------------- fecho -----------------
def _md_add(a: tuple, b: tuple) -> tuple:
    return tuple(sorted((Counter(dict(a)) + Counter(dict(b))).items()))


def _md_within(md: tuple, bound: tuple | None) -> bool:
    if bound is None:
        return True
    lim = dict(bound)
    return all(lim.get(g, 0) >= k for g, k in md)


def _md_degree(md: tuple) -> int:
    return sum(k for _, k in md)


def _md_is_even(md: tuple) -> bool:
    return all(not g.is_odd for g, _ in md)


def closure(gens, maxdeg: int, within: tuple | None = None,
            saturation: dict | None = None, threads: int = 1) -> SpanBasis:
    """
    Menor subespaço de grau <= maxdeg que contém `gens` e é fechado por bullet
    nas duas ordens. Produtos de grau total > maxdeg são descartados.

    within: limite de multigrau (só blocos abaixo dele são calculados).
    saturation: dimensão máxima conhecida por bloco; bloco cheio não recebe mais produtos.
    threads: produtos de cada par de blocos calculados em paralelo; o resultado não muda.
    """
    gens = [g for g in gens if g]
    if all(g.multidegree is not None for g in gens):
        return _block_closure(gens, maxdeg, within, saturation or {}, threads)
    log.debug("   • Geradores não multi-homogêneos: fecho genérico")
    return _worklist_closure(gens, maxdeg)


def _block_products(pool, spa: SpanBasis, spb: SpanBasis):
    pairs = itertools.product(spa.rows(), spb.rows())
    if pool is None:
        return (bullet(a, b) for a, b in pairs)
    return pool.map(lambda ab: bullet(*ab), pairs)


def _block_closure(gens, maxdeg, within, saturation, threads: int = 1) -> SpanBasis:
    blocks: dict[tuple, SpanBasis] = {}
    for g in gens:
        md = g.multidegree
        if _md_degree(md) > maxdeg or not _md_within(md, within):
            continue
        blocks.setdefault(md, SpanBasis(cap=maxdeg)).add(g)

    def full(md):
        cap = saturation.get(md)
        return cap is not None and md in blocks and blocks[md].dim >= cap

    # produtos com o bloco de grau 0 não trazem nada novo: p∙1 = p, 1∙q = q0
    with ThreadPoolExecutor(max_workers=threads) if threads > 1 else nullcontext() as pool:
        for n in range(2, maxdeg + 1):
            current = sorted(blocks.items(), key=lambda kv: kv[0])
            low = [(md, sp) for md, sp in current if 1 <= _md_degree(md) < n]
            for (mda, spa), (mdb, spb) in itertools.product(low, repeat=2):
                if _md_degree(mda) + _md_degree(mdb) != n or not _md_is_even(mdb):
                    continue
                target = _md_add(mda, mdb)
                if not _md_within(target, within) or full(target):
                    continue
                dest = blocks.setdefault(target, SpanBasis(cap=maxdeg))
                for prod in _block_products(pool, spa, spb):
                    dest.add(prod)
                    if full(target):
                        break
            log.debug(f"   • grau {n}: {sum(sp.dim for md, sp in blocks.items() if _md_degree(md) == n)} vetores")

    out = SpanBasis(cap=maxdeg)
    for md in sorted(blocks, key=lambda md: (_md_degree(md), md)):
        out.extend(blocks[md].rows())
    return out


def _truncate(p: FreePoly, maxdeg: int) -> FreePoly:
    return FreePoly({m: c for m, c in p.items() if len(m) <= maxdeg})


def _worklist_closure(gens, maxdeg) -> SpanBasis:
    # quociente pelo ideal das palavras de grau > maxdeg
    span = SpanBasis(cap=maxdeg)
    queue = [r for g in gens if (r := span.add(_truncate(g, maxdeg))) is not None]
    while queue:
        new = queue.pop(0)
        for old in span.rows():
            for prod in (bullet(new, old), bullet(old, new)):
                prod = _truncate(prod, maxdeg)
                if prod and (row := span.add(prod)) is not None:
                    queue.append(row)
    return span


def membership(p: FreePoly, span: SpanBasis) -> bool:
    if span.cap is not None and p.degree > span.cap:
        raise DegreeExceedsCap(f"Grau {p.degree} acima do limite {span.cap} do espaço")
    return p in span


# ----------------- verificação do teorema -----------------
@dataclass
class CohnReport:
    num_x: int
    num_theta: int
    maxdeg: int
    generator_counts: dict
    dim_reversible: int
    dim_closure: int
    closure_reversible: bool
    saturated: bool = False
    failed_braces: list = field(default_factory=list)
    dims_by_degree: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def equal(self) -> bool:
        return (
            self.dim_reversible == self.dim_closure
            and self.closure_reversible
            and not self.failed_braces
        )

    def to_dict(self) -> dict:
        return {
            "check": "cohn",
            "num_x": self.num_x,
            "num_theta": self.num_theta,
            "max_deg": self.maxdeg,
            "generators": dict(self.generator_counts),
            "dim_reversible": self.dim_reversible,
            "dim_closure": self.dim_closure,
            "closure_reversible": self.closure_reversible,
            "saturated": self.saturated,
            "dims_by_degree": {str(k): v for k, v in sorted(self.dims_by_degree.items())},
            "failed_braces": list(self.failed_braces),
            "pass": self.equal,
            "elapsed_ms": round(self.elapsed_ms, 1),
        }


def verify_cohn(num_x: int, num_theta: int, maxdeg: int, threads: int = 1,
                saturate: bool | None = None) -> CohnReport:
    """
    Compara o fecho de {1, X ∪ Θ, tétrades} com o espaço reversível em grau <= maxdeg.

    Com saturação, um bloco que já atingiu a dimensão reversível não recebe
    mais produtos, e closure_reversible só vê os produtos formados até ali.
    Sem saturação todos os produtos são formados e testados. Padrão: saturar
    só acima de config.EXACT_CLOSURE_DEG.
    """
    if saturate is None:
        saturate = maxdeg > config.EXACT_CLOSURE_DEG
    inicio = time.perf_counter()
    log.info(f"📊 Teorema de Cohn generalizado: |X|={num_x}, |Θ|={num_theta}, grau <= {maxdeg}")

    rev = reversible_basis(num_x, num_theta, maxdeg)
    log.info(f"   • Espaço reversível: dim {rev.dim}")

    tetrads = enumerate_tetrads(num_x, num_theta)
    gens = cohn_generators(num_x, num_theta, maxdeg)
    saturation = dict(rev.dims_by(multidegree)) if saturate else None
    span = closure(gens, maxdeg, saturation=saturation, threads=threads)
    log.info(f"   • Fecho: dim {span.dim}" + (" (blocos saturados)" if saturate else ""))

    closure_reversible = all(is_reversible(r) for r in span.rows())
    if not closure_reversible:
        log.warning("⚠️ O fecho contém elementos não reversíveis")

    failed = [
        str(brace(w))
        for w in _representatives(num_x, num_theta, maxdeg)
        if not membership(brace(w), span)
    ]

    report = CohnReport(
        num_x=num_x,
        num_theta=num_theta,
        maxdeg=maxdeg,
        generator_counts={
            "identity": 1,
            "letters": num_x + num_theta,
            "even_tetrads": len(tetrads.even) if maxdeg >= 4 else 0,
            "odd_tetrads": len(tetrads.odd) if maxdeg >= 4 else 0,
        },
        dim_reversible=rev.dim,
        dim_closure=span.dim,
        closure_reversible=closure_reversible,
        saturated=saturate,
        failed_braces=failed,
        dims_by_degree=dict(span.dims_by(len)),
        elapsed_ms=(time.perf_counter() - inicio) * 1000,
    )
    if report.equal:
        log.info(f"   ✅ Iguais: {rev.dim} = {span.dim}")
    else:
        log.warning(f"   ❌ Diferentes: reversível {rev.dim}, fecho {span.dim}, {len(failed)} chaves fora")
    return report


# ----------------- identidade exata do passo indutivo -----------------
def identity15_exact(n: int, h: int, m: int, num_x: int | None = None,
                     letters=None, theta=None) -> FreePoly:
    """
    8 {x1..xn, θ, x(n+1)..x(n+h)} ∙ {x(n+h+1)..xm} menos 2 vezes a soma das
    quatro chaves da expansão. Resíduo esperado: 0.

    `letters` permite repetir letras (lista de m símbolos pares).
    """
    if n < 0 or h < 0 or n + h >= m:
        raise InvalidIndices(f"Índices inválidos: precisa 0 <= h < m - n, recebido n={n}, h={h}, m={m}")
    if letters is None:
        if num_x is not None and m > num_x:
            raise InvalidIndices(f"m={m} exige pelo menos {m} geradores pares (há {num_x})")
        letters = [x(i) for i in range(1, m + 1)]
    if len(letters) != m:
        raise InvalidIndices(f"Esperado {m} letras pares, recebido {len(letters)}")
    th = theta or t(1)
    xs = list(letters)
    head, mid, tail = xs[:n], xs[n:n + h], xs[n + h:]

    lhs = bullet(brace(head + [th] + mid), brace(tail)).scale(8)
    four = (
        brace(head + [th] + mid + tail)
        + brace(head + [th] + mid + tail[::-1])
        + brace(mid[::-1] + [th] + head[::-1] + tail)
        + brace(mid[::-1] + [th] + head[::-1] + tail[::-1])
    )
    return lhs - four.scale(2)


def check_identity15_sweep(max_m: int = 4, repeats: bool = True) -> IdentityReport:
    """identity15_exact em todo (n, h, m) com m <= max_m, com e sem letras repetidas."""
    failures = []
    trial = 0
    for m in range(1, max_m + 1):
        choices = [None]
        if repeats and m >= 2:
            choices.append([x(1)] * 2 + [x(i) for i in range(2, m)])
        for letters in choices:
            for n in range(m):
                for h in range(m - n):
                    res = identity15_exact(n, h, m, letters=letters)
                    if res:
                        tag = "repetidas" if letters else "distintas"
                        failures.append(Failure("identity15", trial,
                                                {"n": str(n), "h": str(h), "m": str(m), "letras": tag},
                                                str(res)))
                    trial += 1
    report = IdentityReport("identity15", trial, failures, ("identity15",), mode="exhaustive")
    log.info(f"   {'✅' if report.passed else '❌'} identity15: {trial} instâncias")
    return report


# ----------------- identidades de partida (graus <= 3) -----------------
def _brace_theta(mul, th, a, b):
    return brace([th]) - FreePoly.gen(th)


def _brace_theta_x(mul, th, a, b):
    tb = mul(FreePoly.gen(th), FreePoly.gen(a))
    return (brace([a, th]) - tb) + (brace([th, a]) - tb)


def _brace_theta_x_x(mul, th, a, b):
    T, X1, X2 = FreePoly.gen(th), FreePoly.gen(a), FreePoly.gen(b)
    rhs = mul(mul(T, X1), X2) - mul(mul(T, X2), X1) + mul(T, mul(X1, X2))
    return (brace([th, a, b]) - rhs) + (brace([b, a, th]) - rhs)


def _brace_x_theta_x(mul, th, a, b):
    T, X1, X2 = FreePoly.gen(th), FreePoly.gen(a), FreePoly.gen(b)
    rhs = mul(mul(T, X1), X2) + mul(mul(T, X2), X1) - mul(T, mul(X1, X2))
    return brace([a, th, b]) - rhs


BOOTSTRAP = (
    Identity("brace_theta", ("θ", "x1", "x2"), _brace_theta, False, "{θ} - θ"),
    Identity("brace_theta_x", ("θ", "x1", "x2"), _brace_theta_x, False, "{x1,θ} = {θ,x1} = θ∙x1"),
    Identity("brace_theta_x_x", ("θ", "x1", "x2"), _brace_theta_x_x, False,
             "{θ,x1,x2} = {x2,x1,θ} = (θ∙x1)∙x2 - (θ∙x2)∙x1 + θ∙(x1∙x2)"),
    Identity("brace_x_theta_x", ("θ", "x1", "x2"), _brace_x_theta_x, False,
             "{x1,θ,x2} = (θ∙x1)∙x2 + (θ∙x2)∙x1 - θ∙(x1∙x2)"),
)


def check_brace_bootstrap(num_x: int, num_theta: int) -> IdentityReport:
    """Chaves de grau <= 3 escritas com bullet, para toda escolha de geradores (com repetição)."""
    xs = [x(i) for i in range(1, num_x + 1)]
    ts = [t(i) for i in range(1, num_theta + 1)]
    combos = [(th, a, b) for th in ts for a in xs for b in xs]
    cases = [(k, ident, args) for k, args in enumerate(combos) for ident in BOOTSTRAP]
    return evaluate_cases("brace_bootstrap", cases, mode="exhaustive")


# ----------------- congruências do passo indutivo -----------------
def _sign(perm) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _congruences(m: int, rng: random.Random, random_perms: int):
    """(nome, índices, α - β) para cada congruência com m letras pares."""
    th = t(1)
    X = [x(i) for i in range(1, m + 1)]
    B = brace

    def xs(i, j):
        # x_i..x_j, 1-based inclusive; vazio se i > j
        return X[i - 1:j] if i <= j else []

    def rx(i, j):
        return xs(i, j)[::-1]

    for n in range(m):
        for h in range(m - n):
            yield "four_brace_sum", {"n": n, "h": h}, (
                B(xs(1, n) + [th] + xs(n + 1, m))
                + B(xs(1, n) + [th] + xs(n + 1, n + h) + rx(n + h + 1, m))
                + B(rx(n + 1, n + h) + [th] + rx(1, n) + xs(n + h + 1, m))
                + B(rx(n + 1, n + h) + [th] + rx(1, n) + rx(n + h + 1, m))
            )

    yield "full_reversal", {}, B([th] + X) + B([th] + X[::-1])

    for n in range(m):
        base = B(xs(1, n) + [th] + xs(n + 1, m))
        yield "last_letter_inside", {"n": n}, base + B(rx(n + 1, m - 1) + [th] + rx(1, n) + [X[-1]])
        yield "last_letter_front", {"n": n}, base + B([X[-1]] + xs(1, n) + [th] + xs(n + 1, m - 1))

    for n in range(m + 1):
        base = B(xs(1, n) + [th] + xs(n + 1, m))
        s = (-1) ** (m - n)
        yield "rotation", {"n": n}, base - B(xs(n + 1, m) + xs(1, n) + [th]).scale(s)
        yield "block_reversal", {"n": n}, base - B([th] + rx(1, n) + rx(n + 1, m)).scale(s)
        if m % 2 == 0:
            yield "even_length_vanishes", {"n": n}, base.scale(2)

    if m >= 2:
        yield "last_pair_four_sum", {}, (
            B([th] + X)
            + B([th] + X[:m - 2] + [X[m - 1], X[m - 2]])
            + B(X[:m - 2][::-1] + [th, X[m - 2], X[m - 1]])
            + B(X[:m - 2][::-1] + [th, X[m - 1], X[m - 2]])
        )
        yield "last_pair_swap", {}, B([th] + X) + B([th] + X[:m - 2] + [X[m - 1], X[m - 2]])
    yield "theta_to_end", {}, B([th] + X) + B(X + [th])

    # σ permuta as posições de (θ, x1, ..., xm)
    letters = [th] + X
    k = len(letters)
    perms = [("transposicao", tuple(range(k - 2)) + (k - 1, k - 2)),
             ("ciclo", tuple(range(1, k)) + (0,))]
    for i in range(random_perms):
        p = list(range(k))
        rng.shuffle(p)
        perms.append((f"aleatoria{i + 1}", tuple(p)))
    for label, p in perms:
        yield "signed_permutation", {"sigma": label, "perm": list(p)}, (
            B(letters) - B([letters[j] for j in p]).scale(_sign(p))
        )

    if m >= 4:
        yield "split_after_three", {}, (
            B([th] + X)
            + B([th] + X[:3] + X[3:][::-1])
            + B(X[:3][::-1] + [th] + X[3:])
            + B(X[:3][::-1] + [th] + X[3:][::-1])
        )
    yield "theta_brace", {}, B([th] + X).scale(4)


def congruence_suite(num_x: int, num_theta: int, m_values=(3, 4, 5),
                     random_perms: int = 20, seed: int = config.SEED) -> IdentityReport:
    """
    Cada congruência α ≡ β vira o teste α - β ∈ H′, com H′ calculado no bloco
    multilinear em {θ, x1..xm} e grau <= m + 1.
    """
    if num_theta < 1:
        raise InvalidIndices("As congruências precisam de pelo menos um gerador ímpar")
    rng = random.Random(seed)
    failures = []
    names = []
    trial = 0
    for m in m_values:
        if m > num_x:
            raise InvalidIndices(f"m={m} exige pelo menos {m} geradores pares (há {num_x})")
        log.info(f"📊 Congruências com m={m}")
        th = t(1)
        letters = [th] + [x(i) for i in range(1, m + 1)]
        bound = tuple(sorted((g, 1) for g in letters))
        gens = cohn_generators(m, 1, m + 1)
        span = closure(gens, m + 1, within=bound)
        log.info(f"   • H′ no bloco multilinear: dim {span.dim}")
        count = 0
        for name, idx, diff in _congruences(m, rng, random_perms):
            names.append(name)
            if not membership(diff, span):
                inputs = {"m": str(m)} | {k: str(v) for k, v in idx.items()}
                failures.append(Failure(name, trial, inputs, str(span.reduce(diff))))
            trial += 1
            count += 1
        log.info(f"   • {count} congruências testadas")
    report = IdentityReport("congruences", trial, failures, tuple(dict.fromkeys(names)),
                            mode="membership", seed=seed)
    if report.passed:
        log.info(f"   ✅ Todas as {trial} congruências pertencem a H′")
    else:
        log.warning(f"   ❌ {len(failures)} congruências fora de H′")
    return report
