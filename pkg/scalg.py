# scalg.py
"""
Álgebras de dimensão finita dadas por constantes de estrutura.

Tabela = array numpy (dim, dim, dim) de Fraction (dtype=object):
table[i, j] é o vetor de coordenadas de e_i∙e_j. Nenhum float é criado.

Graduação: lista de 0 (par) / 1 (ímpar) por vetor da base, opcional.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

import config
from echelon import Echelon, leftmost_pivot, solve_linear
from freealg import (
    all_words,
    format_rational,
    monomial_str,
    multiply,
    theta_degree,
    word,
)
from gja import (
    COMMUTATIVITY,
    CORE_IDENTITIES,
    LINEARIZED_CORE,
    Identity,
    IdentityReport,
    bullet,
    evaluate_cases,
    jordan_identity,
    jordan_linearized,
)

log = logging.getLogger(__name__)


class AlgebraError(ValueError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    pass


class BaseMismatch(AlgebraError):
    pass


class NotCommutative(AlgebraError):
    pass


class IllDefinedAction(AlgebraError):
    pass


class NoIdentityElement(AlgebraError):
    pass


# ----------------- vetores -----------------
def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def as_vector(values, dim: int) -> np.ndarray:
    v = np.array([Fraction(c) for c in values], dtype=object)
    if v.shape != (dim,):
        raise DimensionMismatch(f"Vetor de tamanho {len(v)}, esperado {dim}")
    return v


def basis_vector(i: int, dim: int) -> np.ndarray:
    v = zeros(dim)
    v[i] = Fraction(1)
    return v


def is_zero_vector(v) -> bool:
    return all(c == 0 for c in v)


def sparse(v) -> dict:
    return {i: Fraction(c) for i, c in enumerate(v) if c}


def dense(d: dict, dim: int) -> np.ndarray:
    v = zeros(dim)
    for i, c in d.items():
        v[i] = Fraction(c)
    return v


def vec_str(v, labels=None) -> str:
    """Combinação linear legível, ex.: 'e1 - 1/2*e3'."""
    labels = labels or [f"e{i + 1}" for i in range(len(v))]
    out = ""
    for i, c in enumerate(v):
        if not c:
            continue
        mag = abs(Fraction(c))
        body = labels[i] if mag == 1 else f"{format_rational(mag)}*{labels[i]}"
        if not out:
            out = f"-{body}" if c < 0 else body
        else:
            out += f" - {body}" if c < 0 else f" + {body}"
    return out or "0"


def random_vector(rng: random.Random, dim: int, coeff_range: int = config.COEFF_RANGE) -> np.ndarray:
    return np.array(
        [Fraction(rng.randint(-coeff_range, coeff_range)) for _ in range(dim)], dtype=object
    )


# ----------------- álgebras -----------------
class SCAlgebra:
    """Álgebra por constantes de estrutura, imutável depois de construída."""

    def __init__(self, table, labels=None, grading=None, name: str = ""):
        table = np.asarray(table, dtype=object)
        if table.ndim != 3 or table.shape[0] != table.shape[1] or table.shape[1] != table.shape[2]:
            raise DimensionMismatch(f"Tabela precisa ter formato (d, d, d), recebido {table.shape}")
        d = table.shape[0]
        self.table = np.vectorize(Fraction, otypes=[object])(table) if d else zeros(0, 0, 0)
        self.table.setflags(write=False)
        self.labels = list(labels) if labels else [f"e{i + 1}" for i in range(d)]
        if len(self.labels) != d:
            raise DimensionMismatch(f"{len(self.labels)} rótulos para dimensão {d}")
        self.grading = None if grading is None else [int(g) for g in grading]
        if self.grading is not None and len(self.grading) != d:
            raise DimensionMismatch(f"Graduação com {len(self.grading)} entradas para dimensão {d}")
        self.name = name
        self._nonzero = [dict() for _ in range(d)]
        for i, j, k, c in self.entries():
            self._nonzero[i].setdefault(j, []).append((k, c))

    @classmethod
    def from_products(cls, dim: int, products: dict, **kw) -> "SCAlgebra":
        """products: {(i, j): {k: coef}}; pares omitidos valem zero."""
        table = zeros(dim, dim, dim)
        for (i, j), coeffs in products.items():
            for k, c in coeffs.items():
                table[i, j, k] = Fraction(c)
        return cls(table, **kw)

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def zero_vector(self) -> np.ndarray:
        return zeros(self.dim)

    def basis(self, i: int) -> np.ndarray:
        return basis_vector(i, self.dim)

    def mul(self, u, v) -> np.ndarray:
        return sc_mul(self, u, v)

    def unit_element(self) -> np.ndarray:
        return unit_element(self)

    def is_commutative(self) -> bool:
        return bool(np.all(self.table == self.table.transpose(1, 0, 2)))

    def respects_grading(self, odd_odd_zero: bool = False) -> bool:
        """Produtos preservam a Z2-graduação (e, opcionalmente, ímpar∙ímpar = 0)."""
        if self.grading is None:
            return True
        g = self.grading
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            if not self.table[i, j, k]:
                continue
            if odd_odd_zero and g[i] == 1 and g[j] == 1:
                return False
            if g[k] != (g[i] + g[j]) % 2:
                return False
        return True

    def entries(self):
        """(i, j, k, coef) não nulos, em ordem de índice."""
        for i, j, k in zip(*np.nonzero(self.table != 0)):
            yield int(i), int(j), int(k), self.table[i, j, k]

    def same_table(self, other: "SCAlgebra") -> bool:
        return self.dim == other.dim and bool(np.all(self.table == other.table))

    def __repr__(self):
        return f"SCAlgebra(name={self.name!r}, dim={self.dim})"


class JordanSC(SCAlgebra):
    """Álgebra com produto ⊙ comutativo (a identidade de Jordan é verificada à parte)."""

    def __init__(self, table, labels=None, grading=None, name: str = ""):
        super().__init__(table, labels, grading, name)
        if not self.is_commutative():
            raise NotCommutative(f"Tabela de {name or 'J'} não é simétrica")

    @classmethod
    def from_algebra(cls, A: SCAlgebra) -> "JordanSC":
        return cls(A.table, A.labels, A.grading, A.name)


class BimoduleSC:
    """
    Bimódulo V sobre uma JordanSC: action[p, a] = coordenadas de v_p∙a.
    `report` guarda a verificação dos axiomas, quando feita na construção.
    """

    def __init__(self, base: JordanSC, action, labels=None, name: str = "",
                 report: IdentityReport | None = None):
        action = np.asarray(action, dtype=object)
        m = action.shape[0] if action.ndim == 3 else 0
        if action.ndim != 3 or action.shape != (m, base.dim, m):
            raise DimensionMismatch(
                f"Ação precisa ter formato (m, {base.dim}, m), recebido {action.shape}"
            )
        self.base = base
        self.action = np.vectorize(Fraction, otypes=[object])(action) if action.size else zeros(m, base.dim, m)
        self.action.setflags(write=False)
        self.labels = list(labels) if labels else [f"v{i + 1}" for i in range(m)]
        self.name = name
        self.report = report
        self._nonzero = [dict() for _ in range(m)]
        for p, a, q in zip(*np.nonzero(self.action != 0)):
            self._nonzero[int(p)].setdefault(int(a), []).append((int(q), self.action[p, a, q]))

    @property
    def dim(self) -> int:
        return self.action.shape[0]

    def act(self, v, a) -> np.ndarray:
        m, d = self.dim, self.base.dim
        v = np.asarray(v, dtype=object)
        a = np.asarray(a, dtype=object)
        if v.shape != (m,) or a.shape != (d,):
            raise DimensionMismatch(f"Ação espera vetores ({m},) e ({d},)")
        return _bilinear(self._nonzero, v, a, m)

    def __repr__(self):
        return f"BimoduleSC(name={self.name!r}, dim={self.dim}, base={self.base.dim})"


def sc_mul(A: SCAlgebra, u, v) -> np.ndarray:
    """Extensão bilinear da tabela: (u∙v)_k = Σ u_i v_j T[i, j, k]."""
    d = A.dim
    u = np.asarray(u, dtype=object)
    v = np.asarray(v, dtype=object)
    if u.shape != (d,) or v.shape != (d,):
        raise DimensionMismatch(f"Produto em {A.name or 'A'} espera vetores de tamanho {d}")
    return _bilinear(A._nonzero, u, v, d)


def _bilinear(nonzero, u, v, size: int) -> np.ndarray:
    # percorre só as entradas não nulas da tabela e as coordenadas não nulas de u, v
    out = zeros(size)
    vs = [(j, c) for j, c in enumerate(v) if c]
    for i, a in enumerate(u):
        if not a:
            continue
        row = nonzero[i]
        for j, b in vs:
            ab = a * b
            for k, c in row.get(j, ()):
                out[k] += ab * c
    return out


# ----------------- subespaços -----------------
class Subspace:
    """Subespaço de k^n em forma escalonada reduzida (pivô = coordenada mais à esquerda)."""

    def __init__(self, ambient: int, vectors=()):
        self.ambient = ambient
        self._ech = Echelon(order_key=leftmost_pivot)
        for v in vectors:
            self.add(v)

    def _check(self, v):
        if len(v) != self.ambient:
            raise DimensionMismatch(f"Vetor de tamanho {len(v)} em espaço de dimensão {self.ambient}")

    def add(self, v) -> bool:
        self._check(v)
        return self._ech.add(sparse(v)) is not None

    @property
    def dim(self) -> int:
        return len(self._ech)

    def __len__(self):
        return self.dim

    def __contains__(self, v):
        self._check(v)
        return not self._ech.reduce(sparse(v))

    def reduce(self, v) -> np.ndarray:
        self._check(v)
        return dense(self._ech.reduce(sparse(v)), self.ambient)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._ech.pivots)

    def basis(self) -> list[np.ndarray]:
        """Base escalonada, em ordem crescente de coordenada pivô."""
        return [dense(self._ech.row(p), self.ambient) for p in self.pivots]

    def complement_coords(self) -> list[int]:
        piv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in piv]

    def coordinates(self, v) -> np.ndarray:
        """Coordenadas de v (que deve pertencer ao subespaço) na base escalonada."""
        if v not in self:
            raise AlgebraError("Vetor fora do subespaço")
        return np.array([Fraction(v[p]) for p in self.pivots], dtype=object)

    def same_as(self, other: "Subspace") -> bool:
        return (
            self.ambient == other.ambient
            and self.dim == other.dim
            and all(b in self for b in other.basis())
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


# ----------------- verificações -----------------
def _random_cases(identities, dim: int, trials: int, seed: int):
    if trials < 1:
        raise ValueError("trials precisa ser >= 1")
    rng = random.Random(seed)
    arity = max(i.arity for i in identities)
    samples = [tuple(random_vector(rng, dim) for _ in range(arity)) for _ in range(trials)]
    return [(k, ident, s[: ident.arity]) for k, s in enumerate(samples) for ident in identities]


def _multilinear_cases(identities, dim: int):
    """Tripla de base para cada identidade multilinear; y livre e multiconjunto {a,b,c} nas linearizações."""
    cases = []
    trial = 0
    basis = [basis_vector(i, dim) for i in range(dim)]
    for ident in identities:
        if ident.arity == 4:
            combos = (
                (y, a, b, c)
                for y in range(dim)
                for a, b, c in itertools.combinations_with_replacement(range(dim), 3)
            )
        else:
            combos = itertools.product(range(dim), repeat=ident.arity)
        for idx in combos:
            cases.append((trial, ident, tuple(basis[i] for i in idx)))
            trial += 1
    return cases


def check_gja_axioms(A: SCAlgebra, mode: str = "random", trials: int = config.TRIALS,
                     seed: int = config.SEED, threads: int = 1) -> IdentityReport:
    """Comutatividade à direita, Jordan e [x, y, x∙x]_l = 0 na álgebra A."""
    log.info(f"📊 Axiomas GJA em {A.name or 'A'} (dim {A.dim}, modo {mode})")
    if mode == "multilinear":
        cases = _multilinear_cases(LINEARIZED_CORE, A.dim)
    elif mode == "random":
        cases = _random_cases(CORE_IDENTITIES, A.dim, trials, seed)
    else:
        raise ValueError(f"Modo desconhecido: {mode!r}")
    show = lambda v: vec_str(v, A.labels)
    return evaluate_cases(f"gja_axioms[{A.name}]", cases, mul=A.mul, is_zero=is_zero_vector,
                          show=show, threads=threads, mode=mode,
                          seed=seed if mode == "random" else None)


JORDAN = Identity("jordan", ("x", "y"), jordan_identity, False, "(y⊙x)⊙(x⊙x) - (y⊙(x⊙x))⊙x")
JORDAN_LIN = Identity("jordan_linearized", ("y", "a", "b", "c"), jordan_linearized, True,
                      "soma sobre permutações de (y⊙p)⊙(q⊙r) - (y⊙(p⊙q))⊙r")


def check_jordan(J: SCAlgebra, mode: str = "multilinear", trials: int = config.TRIALS,
                 seed: int = config.SEED) -> IdentityReport:
    """Comutatividade + identidade de Jordan."""
    log.info(f"📊 Axiomas de Jordan em {J.name or 'J'} (modo {mode})")
    if mode == "multilinear":
        cases = _multilinear_cases((COMMUTATIVITY, JORDAN_LIN), J.dim)
    elif mode == "random":
        cases = _random_cases((COMMUTATIVITY, JORDAN), J.dim, trials, seed)
    else:
        raise ValueError(f"Modo desconhecido: {mode!r}")
    return evaluate_cases(f"jordan[{J.name}]", cases, mul=J.mul, is_zero=is_zero_vector,
                          show=lambda v: vec_str(v, J.labels), mode=mode)


# Axiomas de bimódulo, totalmente linearizados. Aqui `mul` é o próprio bimódulo.
def bimodule_cubic(V: BimoduleSC, v, a, b, c):
    # (v(a⊙a))a = (va)(a⊙a), linearizada em a -> a, b, c
    j = V.base.mul
    act = V.act
    lhs = act(act(v, j(a, b)), c) + act(act(v, j(b, c)), a) + act(act(v, j(c, a)), b)
    rhs = act(act(v, a), j(b, c)) + act(act(v, b), j(c, a)) + act(act(v, c), j(a, b))
    return 2 * (lhs - rhs)


def bimodule_quadratic(V: BimoduleSC, v, a, b, c):
    # 2((va)b)a + v((a⊙a)⊙b) = 2(va)(a⊙b) + (vb)(a⊙a), linearizada em a -> a, c
    j = V.base.mul
    act = V.act
    ac = j(a, c)
    lhs = 2 * act(act(act(v, a), b), c) + 2 * act(act(act(v, c), b), a) + act(v, j(2 * ac, b))
    rhs = 2 * act(act(v, a), j(c, b)) + 2 * act(act(v, c), j(a, b)) + 2 * act(act(v, b), ac)
    return lhs - rhs


BIMODULE_IDENTITIES = (
    Identity("bimodule_cubic", ("v", "a", "b", "c"), bimodule_cubic, True,
             "(v(a⊙a))a - (va)(a⊙a), linearizada"),
    Identity("bimodule_quadratic", ("v", "a", "b", "c"), bimodule_quadratic, True,
             "2((va)b)a + v((a⊙a)⊙b) - 2(va)(a⊙b) - (vb)(a⊙a), linearizada"),
)


def check_bimodule(V: BimoduleSC, mode: str = "multilinear", trials: int = config.TRIALS,
                   seed: int = config.SEED) -> IdentityReport:
    log.info(f"📊 Axiomas de bimódulo em {V.name or 'V'} (dim {V.dim}, modo {mode})")
    m, d = V.dim, V.base.dim
    cases = []
    if mode == "multilinear":
        mb = [basis_vector(i, m) for i in range(m)]
        jb = [basis_vector(i, d) for i in range(d)]
        trial = 0
        cubic, quadratic = BIMODULE_IDENTITIES
        for p in range(m):
            for a, b, c in itertools.combinations_with_replacement(range(d), 3):
                cases.append((trial, cubic, (mb[p], jb[a], jb[b], jb[c])))
                trial += 1
            for a, c in itertools.combinations_with_replacement(range(d), 2):
                for b in range(d):
                    cases.append((trial, quadratic, (mb[p], jb[a], jb[b], jb[c])))
                    trial += 1
    elif mode == "random":
        if trials < 1:
            raise ValueError("trials precisa ser >= 1")
        rng = random.Random(seed)
        for k in range(trials):
            args = (random_vector(rng, m),) + tuple(random_vector(rng, d) for _ in range(3))
            cases.extend((k, ident, args) for ident in BIMODULE_IDENTITIES)
    else:
        raise ValueError(f"Modo desconhecido: {mode!r}")
    return evaluate_cases(f"bimodule[{V.name}]", cases, mul=V, is_zero=is_zero_vector,
                          show=vec_str, mode=mode)


# ----------------- anulador, ideais, quocientes -----------------
def annihilator(A: SCAlgebra) -> Subspace:
    """span{e_i∙e_j - e_j∙e_i}."""
    ann = Subspace(A.dim)
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            diff = A.table[i, j] - A.table[j, i]
            if not is_zero_vector(diff):
                ann.add(diff)
    return ann


def is_ideal(A: SCAlgebra, I: Subspace) -> bool:
    if I.ambient != A.dim:
        raise DimensionMismatch(f"Subespaço em dimensão {I.ambient}, álgebra em {A.dim}")
    for b in I.basis():
        for i in range(A.dim):
            e = A.basis(i)
            if A.mul(b, e) not in I or A.mul(e, b) not in I:
                return False
    return True


def quotient(A: SCAlgebra, I: Subspace) -> SCAlgebra:
    """A/I com base nas classes das coordenadas não pivô da forma escalonada de I."""
    if not is_ideal(A, I):
        raise NotAnIdeal(f"Subespaço de dimensão {I.dim} não é ideal de {A.name or 'A'}")
    coords = I.complement_coords()
    q = len(coords)
    table = zeros(q, q, q)
    for a, ca in enumerate(coords):
        for b, cb in enumerate(coords):
            rest = I.reduce(A.table[ca, cb])
            table[a, b] = rest[coords] if q else zeros(0)
    labels = [A.labels[c] for c in coords]
    grading = None if A.grading is None else [A.grading[c] for c in coords]
    return SCAlgebra(table, labels, grading, name=f"{A.name}/I" if A.name else "A/I")


def induced_bimodule(A: SCAlgebra, verify: bool = True, strict: bool = False) -> BimoduleSC:
    """
    O anulador de A como bimódulo sobre A/A^ann, com ação u∙x̄ := u∙x.
    A base do módulo é a base escalonada do anulador.

    Com verify, o relatório dos axiomas de bimódulo fica em `V.report`;
    com strict, uma falha levanta IllDefinedAction.
    """
    ann = annihilator(A)
    basis = ann.basis()
    for u in basis:
        for a in basis:
            if not is_zero_vector(A.mul(u, a)):
                raise IllDefinedAction("Ação mal definida: u∙a ≠ 0 para u, a no anulador")

    Q = quotient(A, ann)
    J = JordanSC.from_algebra(Q)
    coords = ann.complement_coords()
    m, d = len(basis), len(coords)
    action = zeros(m, d, m)
    for p, u in enumerate(basis):
        for a, ca in enumerate(coords):
            action[p, a] = ann.coordinates(A.mul(u, A.basis(ca)))
    labels = [vec_str(u, A.labels) for u in basis]
    name = f"{A.name}^ann" if A.name else "ann"
    V = BimoduleSC(J, action, labels, name=name)
    log.info(f"   • Bimódulo induzido: dim {m} sobre quociente de dim {d}")
    if not verify:
        return V
    report = check_bimodule(V)
    if not report.passed:
        log.warning(f"⚠️ Bimódulo induzido falhou em {len(report.failures)} casos")
        if strict:
            raise IllDefinedAction(
                f"Bimódulo induzido de {A.name or 'A'} viola os axiomas em {len(report.failures)} casos"
            )
    return BimoduleSC(J, V.action, labels, name=name, report=report)


def split_extension(J: JordanSC, V: BimoduleSC) -> SCAlgebra:
    """A = J ⊕ V com (a, v)∙(b, u) := (a⊙b, vb); J par, V ímpar."""
    if V.base is not J and not V.base.same_table(J):
        raise BaseMismatch("O bimódulo foi definido sobre outra álgebra de Jordan")
    dj, dv = J.dim, V.dim
    n = dj + dv
    table = zeros(n, n, n)
    table[:dj, :dj, :dj] = J.table
    for p in range(dv):
        for b in range(dj):
            table[dj + p, b, dj:] = V.action[p, b]
    labels = list(J.labels) + list(V.labels)
    name = f"{J.name}⋉{V.name}" if J.name or V.name else ""
    return SCAlgebra(table, labels, [0] * dj + [1] * dv, name=name)


# ----------------- unidades -----------------
@dataclass(frozen=True)
class RightUnits:
    """Conjunto afim {particular + k}: particular é None quando não há unidade à direita."""
    particular: object
    homogeneous: Subspace

    @property
    def empty(self) -> bool:
        return self.particular is None

    def contains(self, u) -> bool:
        return not self.empty and (np.asarray(u, dtype=object) - self.particular) in self.homogeneous


def _unit_equations(A: SCAlgebra, left: bool, right: bool):
    eqs, rhs = [], []
    d = A.dim
    for i in range(d):
        for l in range(d):
            if right:  # e_i∙u = e_i
                eqs.append({k: A.table[i, k, l] for k in range(d) if A.table[i, k, l]})
                rhs.append(Fraction(1 if i == l else 0))
            if left:   # u∙e_i = e_i
                eqs.append({k: A.table[k, i, l] for k in range(d) if A.table[k, i, l]})
                rhs.append(Fraction(1 if i == l else 0))
    return eqs, rhs


def find_right_units(A: SCAlgebra) -> RightUnits:
    """Soluções de x∙u = x para todo x da base: particular + núcleo."""
    eqs, rhs = _unit_equations(A, left=False, right=True)
    particular, kernel = solve_linear(eqs, rhs, A.dim)
    hom = Subspace(A.dim, [np.array(k, dtype=object) for k in kernel])
    part = None if particular is None else np.array(particular, dtype=object)
    return RightUnits(part, hom)


def unit_element(A: SCAlgebra) -> np.ndarray:
    eqs, rhs = _unit_equations(A, left=True, right=True)
    particular, _ = solve_linear(eqs, rhs, A.dim)
    if particular is None:
        raise NoIdentityElement(f"{A.name or 'A'} não tem identidade bilateral")
    return np.array(particular, dtype=object)


# ----------------- exemplos construídos -----------------
def truncated_free_algebra(num_x: int, num_theta: int, maxdeg: int,
                           product: str = "associative") -> SCAlgebra:
    """Palavras de grau <= maxdeg como base; produtos de grau maior são descartados."""
    if product not in ("associative", "bullet"):
        raise ValueError(f"Produto desconhecido: {product!r}")
    words = list(all_words(num_x, num_theta, maxdeg))
    index = {w: i for i, w in enumerate(words)}
    d = len(words)
    table = zeros(d, d, d)
    op = multiply if product == "associative" else bullet
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if len(u) + len(v) > maxdeg:
                continue
            for m, c in op(word(u), word(v)).items():
                table[i, j, index[m]] = c
    labels = [monomial_str(w) for w in words]
    grading = [theta_degree(w) for w in words]
    return SCAlgebra(table, labels, grading, name=f"FA2[{num_x},{num_theta}]<={maxdeg}:{product}")


def _unitriangular(rng: random.Random, idx: list[int], n: int) -> np.ndarray:
    P = zeros(n, n)
    for a, i in enumerate(idx):
        P[i, i] = Fraction(1)
        for j in idx[a + 1:]:
            P[i, j] = Fraction(rng.randint(-2, 2))
    return P


def change_basis(A: SCAlgebra, P: np.ndarray, name: str = "") -> SCAlgebra:
    """Nova base f_i = Σ_k P[k, i] e_k; P precisa ser inversível."""
    d = A.dim
    cols = [P[:, i] for i in range(d)]
    inv_cols = []
    for i in range(d):
        particular, kernel = solve_linear(
            [{k: P[r, k] for k in range(d) if P[r, k]} for r in range(d)],
            [Fraction(1 if r == i else 0) for r in range(d)],
            d,
        )
        if particular is None or kernel:
            raise AlgebraError("Mudança de base singular")
        inv_cols.append(particular)
    Pinv = np.array(inv_cols, dtype=object).T
    table = zeros(d, d, d)
    for i in range(d):
        for j in range(d):
            table[i, j] = Pinv @ A.mul(cols[i], cols[j])
    return SCAlgebra(table, [f"f{i + 1}" for i in range(d)], A.grading, name=name or A.name)


def random_graded_associative(seed: int = config.SEED) -> SCAlgebra:
    """
    Álgebra associativa Z2-graduada de dim 6 com ímpar∙ímpar = 0: FA2 truncada
    em uma letra par e uma ímpar, grau <= 2, numa base aleatória que preserva
    a graduação.
    """
    A = truncated_free_algebra(1, 1, 2, "associative")
    rng = random.Random(seed)
    even = [i for i, g in enumerate(A.grading) if g == 0]
    odd = [i for i, g in enumerate(A.grading) if g == 1]
    P = _unitriangular(rng, even, A.dim) + _unitriangular(rng, odd, A.dim)
    return change_basis(A, P, name=f"graded-assoc[seed={seed}]")


def symmetric_matrix_jordan(n: int) -> JordanSC:
    """Matrizes simétricas n×n com A⊙B = 1/2 (AB + BA); base E_ii e E_ij + E_ji."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]

    def mat(p):
        i, j = pairs[p]
        M = zeros(n, n)
        M[i, j] = Fraction(1)
        M[j, i] = Fraction(1)
        return M

    mats = [mat(p) for p in range(len(pairs))]
    d = len(pairs)
    table = zeros(d, d, d)
    for a in range(d):
        for b in range(d):
            P = (mats[a] @ mats[b] + mats[b] @ mats[a]) * Fraction(1, 2)
            table[a, b] = [P[i, j] for i, j in pairs]
    labels = [f"e{i + 1}{j + 1}" for i, j in pairs]
    return JordanSC(table, labels, name=f"Sym{n}")


def regular_bimodule(J: JordanSC) -> BimoduleSC:
    """v∙a = v⊙a."""
    return BimoduleSC(J, J.table, [f"v{lab}" for lab in J.labels], name=f"{J.name}-reg")

