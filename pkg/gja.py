# gja.py
"""
Produto bullet x∙y = 1/2 (x y0 + y0 x) sobre FA2[X ∪ Θ] e verificação exata
das identidades de álgebra de Jordan generalizada.

As identidades são escritas em função de um produto `mul` qualquer, então a
mesma fórmula serve para polinômios (mul=bullet) e para tabelas de constantes
de estrutura (mul=SCAlgebra.mul, ver scalg.py).

Falhas não são exceções: cada resíduo não nulo vira um registro do relatório.
"""
import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import config
from freealg import (
    EVEN,
    FreePoly,
    SpanBasis,
    all_words,
    multiply,
    t,
    word,
    x,
)

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)


# ----------------- produtos -----------------
def bullet(p: FreePoly, q: FreePoly) -> FreePoly:
    q0 = q.even_part
    if not q0 or not p:
        return FreePoly.zero()
    return (multiply(p, q0) + multiply(q0, p)).scale(HALF)


def jordan_circle(p: FreePoly, q: FreePoly) -> FreePoly:
    """Produto de Jordan clássico 1/2 (pq + qp); coincide com bullet em elementos pares."""
    return (multiply(p, q) + multiply(q, p)).scale(HALF)


def right_leibniz_bracket(p: FreePoly, q: FreePoly) -> FreePoly:
    """<p, q> = p q0 - q0 p, a passagem de Leibniz (à direita) espelhada por bullet."""
    q0 = q.even_part
    return multiply(p, q0) - multiply(q0, p)


def long_associator(x, y, z, mul: Callable = bullet):
    """[x, y, z]_l = x∙(y∙z) - (x∙y)∙z - 2 z∙(y∙x) + 2 (z∙y)∙x."""
    return (
        mul(x, mul(y, z))
        - mul(mul(x, y), z)
        - 2 * mul(z, mul(y, x))
        + 2 * mul(mul(z, y), x)
    )


# ----------------- operadores de multiplicação -----------------
@dataclass(frozen=True)
class MultOp:
    """L_a(x) = a∙x, R_a(x) = x∙a, S_a = L_a + R_a."""
    tag: str
    anchor: object

    def __post_init__(self):
        if self.tag not in ("L", "R", "S"):
            raise ValueError(f"Operador desconhecido: {self.tag!r}")


def apply_mult_op(op: MultOp, v, mul: Callable = bullet):
    if op.tag == "L":
        return mul(op.anchor, v)
    if op.tag == "R":
        return mul(v, op.anchor)
    return mul(op.anchor, v) + mul(v, op.anchor)


def apply_chain(v, *ops: MultOp, mul: Callable = bullet):
    """(op1 op2 ... opn)(v): aplica da direita para a esquerda."""
    for op in reversed(ops):
        v = apply_mult_op(op, v, mul)
    return v


def L(a):
    return MultOp("L", a)


def R(a):
    return MultOp("R", a)


def S(a):
    return MultOp("S", a)


# ----------------- identidades -----------------
@dataclass(frozen=True)
class Identity:
    name: str
    params: tuple
    residual: Callable
    multilinear: bool = False
    formula: str = ""

    @property
    def arity(self) -> int:
        return len(self.params)

    def __call__(self, mul, *args):
        return self.residual(mul, *args[: self.arity])


def right_commutativity(mul, x, y, z):
    return mul(x, mul(y, z)) - mul(x, mul(z, y))


def jordan_identity(mul, x, y):
    xx = mul(x, x)
    return mul(mul(y, x), xx) - mul(mul(y, xx), x)


def square_associator_identity(mul, x, y):
    xx = mul(x, x)
    return (
        mul(x, mul(y, xx))
        - mul(mul(x, y), xx)
        - 2 * mul(xx, mul(y, x))
        + 2 * mul(mul(xx, y), x)
    )


def jordan_linearized(mul, y, a, b, c):
    total = None
    for p, q, r in itertools.permutations((a, b, c)):
        term = mul(mul(y, p), mul(q, r)) - mul(mul(y, mul(p, q)), r)
        total = term if total is None else total + term
    return total


def square_associator_linearized(mul, y, a, b, c):
    total = None
    for p, q, r in itertools.permutations((a, b, c)):
        qr = mul(q, r)
        term = (
            mul(p, mul(y, qr))
            - mul(mul(p, y), qr)
            - 2 * mul(qr, mul(y, p))
            + 2 * mul(mul(qr, y), p)
        )
        total = term if total is None else total + term
    return total


def commutativity(mul, x, y):
    # identidade falsa; serve de controle negativo
    return mul(x, y) - mul(y, x)


def long_associator_square(mul, x, y):
    return long_associator(x, y, mul(x, x), mul)


def long_associator_linear(mul, x, y, z):
    return (
        long_associator(x, y, mul(x, z), mul)
        + long_associator(x, y, mul(z, x), mul)
        + long_associator(z, y, mul(x, x), mul)
    )


def long_associator_multilinear(mul, x, y, z, w):
    return (
        long_associator(x, y, mul(w, z) + mul(z, w), mul)
        + long_associator(w, y, mul(z, x) + mul(x, z), mul)
        + long_associator(z, y, mul(x, w) + mul(w, x), mul)
    )


def left_left_vs_left_right(mul, x, y, z):
    return apply_chain(z, L(x), L(y), mul=mul) - apply_chain(z, L(x), R(y), mul=mul)


def right_anchor_symmetry(mul, x, y, z):
    return apply_chain(z, R(mul(x, y)), mul=mul) - apply_chain(z, R(mul(y, x)), mul=mul)


def right_square_commutes(mul, x, z):
    xx = mul(x, x)
    return apply_chain(z, R(x), R(xx), mul=mul) - apply_chain(z, R(xx), R(x), mul=mul)


def square_associator_operator(mul, x, z):
    xx = mul(x, x)
    return (
        apply_chain(z, L(x), R(xx), mul=mul)
        - apply_chain(z, R(xx), L(x), mul=mul)
        - 2 * apply_chain(z, L(xx), R(x), mul=mul)
        + 2 * apply_chain(z, R(x), L(xx), mul=mul)
    )


def _assoc_operator_on_z(mul, x, y, z):
    # (L_x L_y - L_{x∙y} - 2 R_{y∙x} + 2 R_x R_y)(z)
    return (
        apply_chain(z, L(x), L(y), mul=mul)
        - apply_chain(z, L(mul(x, y)), mul=mul)
        - 2 * apply_chain(z, R(mul(y, x)), mul=mul)
        + 2 * apply_chain(z, R(x), R(y), mul=mul)
    )


def associator_via_x(mul, x, y, z):
    # (R_{y∙z} - R_z R_y - 2 L_z L_y + 2 L_{z∙y})(x)
    form = (
        apply_chain(x, R(mul(y, z)), mul=mul)
        - apply_chain(x, R(z), R(y), mul=mul)
        - 2 * apply_chain(x, L(z), L(y), mul=mul)
        + 2 * apply_chain(x, L(mul(z, y)), mul=mul)
    )
    return form - long_associator(x, y, z, mul)


def associator_via_y(mul, x, y, z):
    # (L_x R_z - R_z L_x - 2 L_z R_x + 2 R_x L_z)(y)
    form = (
        apply_chain(y, L(x), R(z), mul=mul)
        - apply_chain(y, R(z), L(x), mul=mul)
        - 2 * apply_chain(y, L(z), R(x), mul=mul)
        + 2 * apply_chain(y, R(x), L(z), mul=mul)
    )
    return form - long_associator(x, y, z, mul)


def associator_via_z(mul, x, y, z):
    return _assoc_operator_on_z(mul, x, y, z) - long_associator(x, y, z, mul)


def linearized_operator(mul, x, y, z, u):
    zx = mul(z, x)
    c = zx + mul(x, z)
    middle = (
        apply_chain(u, R(mul(y, zx)), mul=mul)
        - apply_chain(u, R(zx), R(y), mul=mul)
        - apply_chain(u, L(c), L(y), mul=mul)
        + apply_chain(u, L(mul(c, y)), mul=mul)
    )
    return (
        _assoc_operator_on_z(mul, x, y, apply_mult_op(S(z), u, mul))
        + 2 * middle
        + _assoc_operator_on_z(mul, z, y, apply_mult_op(S(x), u, mul))
    )


def linearized_operator_diagonal(mul, x, y, u):
    xx = mul(x, x)
    return (
        _assoc_operator_on_z(mul, x, y, apply_mult_op(S(x), u, mul))
        + apply_chain(u, R(mul(xx, y)), mul=mul)
        - apply_chain(u, R(xx), R(y), mul=mul)
        - 2 * apply_chain(u, L(xx), L(y), mul=mul)
        + 2 * apply_chain(u, L(mul(xx, y)), mul=mul)
    )


CORE_IDENTITIES = (
    Identity("right_commutativity", ("x", "y", "z"), right_commutativity, True,
             "x∙(y∙z) - x∙(z∙y)"),
    Identity("jordan", ("x", "y"), jordan_identity, False,
             "(y∙x)∙(x∙x) - (y∙(x∙x))∙x"),
    Identity("square_associator", ("x", "y"), square_associator_identity, False,
             "x∙(y∙(x∙x)) - (x∙y)∙(x∙x) - 2(x∙x)∙(y∙x) + 2((x∙x)∙y)∙x"),
)

LINEARIZED_CORE = (
    CORE_IDENTITIES[0],
    Identity("jordan_linearized", ("y", "a", "b", "c"), jordan_linearized, True,
             "soma sobre permutações de (y∙p)∙(q∙r) - (y∙(p∙q))∙r"),
    Identity("square_associator_linearized", ("y", "a", "b", "c"), square_associator_linearized, True,
             "soma sobre permutações de x∙(y∙(x∙x)) - (x∙y)∙(x∙x) - 2(x∙x)∙(y∙x) + 2((x∙x)∙y)∙x"),
)

COMMUTATIVITY = Identity("commutativity", ("x", "y"), commutativity, True, "x∙y - y∙x")

DERIVED_IDENTITIES = (
    Identity("long_associator_square", ("x", "y"), long_associator_square, False,
             "[x, y, x∙x]_l"),
    Identity("long_associator_linear", ("x", "y", "z"), long_associator_linear, False,
             "[x,y,x∙z]_l + [x,y,z∙x]_l + [z,y,x∙x]_l"),
    Identity("long_associator_multilinear", ("x", "y", "z", "w"), long_associator_multilinear, True,
             "[x,y,w∙z+z∙w]_l + [w,y,z∙x+x∙z]_l + [z,y,x∙w+w∙x]_l"),
    Identity("left_left_vs_left_right", ("x", "y", "z"), left_left_vs_left_right, True,
             "(L_x L_y - L_x R_y)(z)"),
    Identity("right_anchor_symmetry", ("x", "y", "z"), right_anchor_symmetry, True,
             "(R_{x∙y} - R_{y∙x})(z)"),
    Identity("right_square_commutes", ("x", "z"), right_square_commutes, False,
             "(R_x R_{x∙x} - R_{x∙x} R_x)(z)"),
    Identity("square_associator_operator", ("x", "z"), square_associator_operator, False,
             "(L_x R_{x∙x} - R_{x∙x} L_x - 2 L_{x∙x} R_x + 2 R_x L_{x∙x})(z)"),
    Identity("associator_via_x", ("x", "y", "z"), associator_via_x, True,
             "(R_{y∙z} - R_z R_y - 2 L_z L_y + 2 L_{z∙y})(x) - [x,y,z]_l"),
    Identity("associator_via_y", ("x", "y", "z"), associator_via_y, True,
             "(L_x R_z - R_z L_x - 2 L_z R_x + 2 R_x L_z)(y) - [x,y,z]_l"),
    Identity("associator_via_z", ("x", "y", "z"), associator_via_z, True,
             "(L_x L_y - L_{x∙y} - 2 R_{y∙x} + 2 R_x R_y)(z) - [x,y,z]_l"),
    Identity("linearized_operator", ("x", "y", "z", "u"), linearized_operator, True,
             "forma de operadores da linearização completa, aplicada a u"),
    Identity("linearized_operator_diagonal", ("x", "y", "u"), linearized_operator_diagonal, False,
             "a forma anterior com z = x, aplicada a u"),
)


# ----------------- relatórios -----------------
@dataclass(frozen=True)
class Failure:
    identity: str
    trial: int
    inputs: dict
    residual: str

    def to_dict(self) -> dict:
        return {"identity": self.identity, "trial": self.trial,
                "inputs": dict(self.inputs), "residual": self.residual}


@dataclass
class IdentityReport:
    name: str
    trials: int
    failures: list = field(default_factory=list)
    identities: tuple = ()
    mode: str = "random"
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "mode": self.mode,
            "identities": list(self.identities),
            "trials": self.trials,
            "pass": self.passed,
            "failures": [f.to_dict() for f in self.failures],
        }


def _poly_is_zero(value) -> bool:
    return not value


def evaluate_cases(name, cases, mul=bullet, is_zero=_poly_is_zero, show=str,
                   threads: int = 1, mode: str = "random", seed=None) -> IdentityReport:
    """
    Avalia uma lista de casos (trial, Identity, args). A ordem das falhas segue
    a ordem dos casos, com ou sem paralelismo.
    """
    cases = list(cases)

    def run(case):
        trial, ident, args = case
        res = ident(mul, *args)
        if is_zero(res):
            return None
        inputs = {p: show(a) for p, a in zip(ident.params, args)}
        return Failure(ident.name, trial, inputs, show(res))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, cases))
    else:
        results = [run(c) for c in cases]

    failures = [f for f in results if f is not None]
    names = tuple(dict.fromkeys(c[1].name for c in cases))
    trials = len({c[0] for c in cases})
    report = IdentityReport(name, trials, failures, names, mode, seed)
    if report.passed:
        log.info(f"   ✅ {name}: {len(cases):,} avaliações, todos os resíduos nulos")
    else:
        log.warning(f"   ❌ {name}: {len(failures):,} resíduos não nulos")
    return report


# ----------------- amostragem -----------------
@dataclass
class Sampler:
    """Elementos aleatórios (semente fixa) de grau <= max_deg, com `terms` monômios cada."""
    num_x: int
    num_theta: int
    max_deg: int = config.SAMPLE_DEG
    seed: int = config.SEED
    terms: int = config.SAMPLE_TERMS
    coeff_range: int = config.COEFF_RANGE
    _rng: random.Random = field(init=False, repr=False)
    _pool: list = field(init=False, repr=False)
    _coeffs: list = field(init=False, repr=False)

    def __post_init__(self):
        self._rng = random.Random(self.seed)
        self._pool = list(all_words(self.num_x, self.num_theta, self.max_deg))
        self._coeffs = [c for c in range(-self.coeff_range, self.coeff_range + 1) if c]

    def element(self) -> FreePoly:
        acc = FreePoly.zero()
        for _ in range(self.terms):
            m = self._rng.choice(self._pool)
            c = self._rng.choice(self._coeffs)
            acc = acc + word(m).scale(c)
        return acc

    def draw(self, k: int) -> tuple:
        return tuple(self.element() for _ in range(k))


def _random_cases(identities, sampler: Sampler, trials: int):
    if trials < 1:
        raise ValueError("trials precisa ser >= 1")
    arity = max(i.arity for i in identities)
    samples = [sampler.draw(arity) for _ in range(trials)]
    return [(k, ident, s[: ident.arity]) for k, s in enumerate(samples) for ident in identities]


def _parity_patterns(identity: Identity):
    # letras distintas por posição: x_k ou t_k conforme a paridade escolhida
    for trial, pattern in enumerate(itertools.product((EVEN, 1 - EVEN), repeat=identity.arity)):
        args = tuple(
            FreePoly.gen(x(k + 1) if par == EVEN else t(k + 1))
            for k, par in enumerate(pattern)
        )
        yield trial, identity, args


def check_identity(identity: Identity, args, mul=bullet) -> IdentityReport:
    return evaluate_cases(identity.name, [(0, identity, tuple(args))], mul=mul, mode="single")


def check_core_identities(sampler: Sampler | None, trials: int, threads: int = 1,
                          mode: str = "random") -> IdentityReport:
    """
    Comutatividade à direita, identidade de Jordan e [x, y, x∙x]_l = 0 escrita por extenso.

    mode="exhaustive": as formas multilineares são avaliadas em letras
    distintas para todo padrão de paridades; pela propriedade universal isso
    cobre todos os elementos da álgebra livre.
    """
    log.info(f"📊 Identidades centrais ({mode})")
    if mode == "exhaustive":
        cases = [c for ident in LINEARIZED_CORE for c in _parity_patterns(ident)]
        return evaluate_cases("core", cases, threads=threads, mode=mode)
    if mode != "random":
        raise ValueError(f"Modo desconhecido: {mode!r}")
    cases = _random_cases(CORE_IDENTITIES, sampler, trials)
    return evaluate_cases("core", cases, threads=threads, mode=mode, seed=sampler.seed)


def check_derived_identities(sampler: Sampler, trials: int, threads: int = 1) -> IdentityReport:
    """Anulamento do associador longo, linearizações e identidades de operadores (pontualmente)."""
    log.info("📊 Identidades derivadas (random)")
    cases = _random_cases(DERIVED_IDENTITIES, sampler, trials)
    return evaluate_cases("derived", cases, threads=threads, seed=sampler.seed)


def free_annihilator(num_x: int, num_theta: int, maxdeg: int) -> SpanBasis:
    """span{u∙v - v∙u} sobre pares de monômios com deg u + deg v <= maxdeg."""
    words = list(all_words(num_x, num_theta, maxdeg))
    span = SpanBasis(cap=maxdeg)
    for u in words:
        for v in words:
            if len(u) + len(v) > maxdeg:
                continue
            pu, pv = word(u), word(v)
            span.add(bullet(pu, pv) - bullet(pv, pu))
    return span
