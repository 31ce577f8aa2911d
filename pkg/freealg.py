# freealg.py
"""
Álgebra associativa livre Z2-graduada FA2[X ∪ Θ] com coeficientes racionais.

- Geradores pares x1, x2, ... (X) e ímpares t1, t2, ... (Θ).
- Monômio = tupla de geradores; a tupla vazia é a identidade 1.
- Palavras com duas ou mais letras ímpares pertencem ao ideal I_Θ e são
  descartadas na construção (nunca ficam armazenadas).
- FreePoly = dict monômio -> Fraction, sem coeficientes nulos.

Ordem fixa dos geradores: todo ímpar antes de todo par, depois pelo índice.
Formas escalonadas e impressão usam a ordem grau-lexicográfica (deglex).
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

from echelon import Echelon

log = logging.getLogger(__name__)

ODD = 0
EVEN = 1
PARITIES = ("even", "odd")


class FreeAlgebraError(ValueError):
    pass


class UnassignedGenerator(FreeAlgebraError):
    pass


class OddImageViolation(FreeAlgebraError):
    pass


# ----------------- geradores e monômios -----------------
class GeneratorSymbol(NamedTuple):
    kind: int   # ODD (0) ou EVEN (1): a ordem natural da tupla já coloca ímpares antes
    index: int

    def __str__(self):
        return f"{'t' if self.kind == ODD else 'x'}{self.index}"

    def __repr__(self):
        return str(self)

    @property
    def is_odd(self) -> bool:
        return self.kind == ODD


Monomial = tuple  # tuple[GeneratorSymbol, ...]
IDENTITY: Monomial = ()


def x(i: int) -> GeneratorSymbol:
    return GeneratorSymbol(EVEN, i)


def t(i: int) -> GeneratorSymbol:
    return GeneratorSymbol(ODD, i)


def symbol(name: str) -> GeneratorSymbol:
    """'x3' -> x3, 't1' -> t1."""
    name = name.strip()
    if len(name) < 2 or name[0] not in "xt" or not name[1:].isdigit() or int(name[1:]) < 1:
        raise FreeAlgebraError(f"Símbolo de gerador inválido: {name!r}")
    return GeneratorSymbol(ODD if name[0] == "t" else EVEN, int(name[1:]))


def symbols(names: str) -> tuple[GeneratorSymbol, ...]:
    """'t1 x1 x2' -> (t1, x1, x2)."""
    return tuple(symbol(n) for n in names.replace(",", " ").split())


def generators(num_x: int, num_theta: int) -> list[GeneratorSymbol]:
    """Universo declarado, já na ordem fixa (ímpares primeiro)."""
    return [t(i) for i in range(1, num_theta + 1)] + [x(i) for i in range(1, num_x + 1)]


def theta_degree(m: Monomial) -> int:
    return sum(1 for g in m if g.kind == ODD)


def degree(m: Monomial) -> int:
    return len(m)


def deglex_key(m: Monomial):
    return (len(m), m)


def multidegree(m: Monomial) -> tuple:
    """Multigrau como tupla ordenada de (gerador, multiplicidade)."""
    return tuple(sorted(Counter(m).items()))


def monomial_str(m: Monomial) -> str:
    return "*".join(str(g) for g in m) if m else "1"


def all_words(num_x: int, num_theta: int, maxdeg: int) -> Iterator[Monomial]:
    """Todas as palavras de grau <= maxdeg e Θ-grau <= 1, em ordem deglex."""
    letters = generators(num_x, num_theta)
    for n in range(maxdeg + 1):
        for w in itertools.product(letters, repeat=n):
            if theta_degree(w) <= 1:
                yield w


def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ----------------- polinômios -----------------
class FreePoly:
    """Elemento imutável de FA2[X ∪ Θ] em forma canônica."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        acc: dict = {}
        for m, c in (terms or {}).items():
            m = tuple(GeneratorSymbol(*g) for g in m)
            if theta_degree(m) >= 2:
                continue
            acc[m] = acc.get(m, 0) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _wrap(cls, terms: dict) -> "FreePoly":
        # dict já canônico (sem zeros, Θ-grau <= 1); não copia
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "FreePoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "FreePoly":
        return cls._wrap({IDENTITY: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "FreePoly":
        c = Fraction(c)
        return cls._wrap({IDENTITY: c} if c else {})

    @classmethod
    def gen(cls, g: GeneratorSymbol) -> "FreePoly":
        return cls._wrap({(g,): Fraction(1)})

    # --- acesso ---
    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == FreePoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @property
    def degree(self) -> int:
        """Maior comprimento de palavra; -1 para o polinômio nulo."""
        return max((len(m) for m in self._terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({len(m) for m in self._terms}) <= 1

    @property
    def multidegree(self) -> tuple | None:
        """Multigrau comum a todos os termos, ou None se não for multi-homogêneo."""
        degs = {multidegree(m) for m in self._terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else ()

    @property
    def leading_monomial(self) -> Monomial | None:
        return max(self._terms, key=deglex_key) if self._terms else None

    @property
    def even_part(self) -> "FreePoly":
        return grade_component(self, "even")

    @property
    def odd_part(self) -> "FreePoly":
        return grade_component(self, "odd")

    # --- aritmética ---
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return FreePoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "FreePoly":
        c = Fraction(c)
        if not c:
            return FreePoly.zero()
        return FreePoly._wrap({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    # --- texto ---
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, m in enumerate(sorted(self._terms, key=deglex_key)):
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = format_rational(a)
            elif a == 1:
                body = monomial_str(m)
            else:
                body = f"{format_rational(a)}*{monomial_str(m)}"
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"FreePoly('{self}')"


def _coerce(value) -> FreePoly | None:
    if isinstance(value, FreePoly):
        return value
    if isinstance(value, (int, Fraction)):
        return FreePoly.constant(value)
    return None


def word(seq: Iterable[GeneratorSymbol]) -> FreePoly:
    """Monômio como polinômio; Θ-grau >= 2 vira o polinômio nulo."""
    m = tuple(seq)
    if theta_degree(m) >= 2:
        return FreePoly.zero()
    return FreePoly._wrap({m: Fraction(1)})


# ----------------- operações -----------------
def multiply(p: FreePoly, q: FreePoly) -> FreePoly:
    """Produto associativo por justaposição; Θ-grau >= 2 é descartado na hora."""
    left = [(m, c, theta_degree(m)) for m, c in p._terms.items()]
    right = [(m, c, theta_degree(m)) for m, c in q._terms.items()]
    out: dict = {}
    for m1, c1, d1 in left:
        for m2, c2, d2 in right:
            if d1 + d2 > 1:
                continue
            m = m1 + m2
            out[m] = out.get(m, 0) + c1 * c2
    return FreePoly._wrap({m: c for m, c in out.items() if c})


def grade_component(p: FreePoly, parity: str) -> FreePoly:
    if parity not in PARITIES:
        raise FreeAlgebraError(f"Paridade inválida: {parity!r} (use 'even' ou 'odd')")
    want = 0 if parity == "even" else 1
    return FreePoly._wrap({m: c for m, c in p._terms.items() if theta_degree(m) == want})


def involute(p: FreePoly) -> FreePoly:
    """Involução de reversão: linear, inverte as palavras."""
    return FreePoly._wrap({m[::-1]: c for m, c in p._terms.items()})


def brace(seq: Iterable[GeneratorSymbol]) -> FreePoly:
    """{y1,...,yn} = 1/2 (y1...yn + yn...y1); a chave vazia é 1."""
    seq = tuple(seq)
    return (word(seq) + word(seq[::-1])).scale(Fraction(1, 2))


def is_reversible(p: FreePoly) -> bool:
    return involute(p) == p


# ----------------- propriedade universal -----------------
@dataclass(frozen=True)
class HomMap:
    """Atribuição gerador -> elemento de uma SCAlgebra graduada (vetor de coordenadas)."""
    assignment: Mapping
    target: object

    def image(self, g: GeneratorSymbol):
        try:
            return self.assignment[g]
        except KeyError:
            raise UnassignedGenerator(f"Gerador {g} sem imagem atribuída") from None


def _check_odd_images(phi: HomMap):
    grading = getattr(phi.target, "grading", None)
    for g, v in phi.assignment.items():
        if not g.is_odd:
            continue
        if grading is None:
            raise OddImageViolation(f"Álgebra alvo sem graduação: não dá para enviar {g} na parte ímpar")
        bad = [i for i, c in enumerate(v) if c and grading[i] == 0]
        if bad:
            raise OddImageViolation(
                f"Imagem de {g} tem componente par nas coordenadas {bad}"
            )


def extend_hom(phi: HomMap, p: FreePoly):
    """
    Extensão única de phi a um homomorfismo FA2[X ∪ Θ] -> alvo, avaliada em p.
    Cada monômio vira o produto (no alvo) das imagens das letras.
    """
    _check_odd_images(phi)
    target = phi.target
    result = target.zero_vector()
    for m, c in p.items():
        if not m:
            value = target.unit_element()
        else:
            value = phi.image(m[0])
            for g in m[1:]:
                value = target.mul(value, phi.image(g))
        result = result + value * c
    return result


# ----------------- subespaços -----------------
class SpanBasis:
    """
    Subespaço da álgebra livre truncada em grau `cap`, guardado em forma
    escalonada reduzida com pivô = maior monômio na ordem deglex.
    """

    def __init__(self, cap: int | None = None):
        self.cap = cap
        self._ech = Echelon(order_key=deglex_key)

    def __len__(self):
        return len(self._ech)

    @property
    def dim(self) -> int:
        return len(self._ech)

    def __contains__(self, p: FreePoly):
        return not self._ech.reduce(p._terms)

    def reduce(self, p: FreePoly) -> FreePoly:
        return FreePoly._wrap(self._ech.reduce(p._terms))

    def add(self, p: FreePoly) -> FreePoly | None:
        """Insere p; retorna a nova linha reduzida ou None se p já estava no span."""
        row = self._ech.add(p._terms)
        return None if row is None else FreePoly._wrap(row)

    def extend(self, polys: Iterable[FreePoly]) -> int:
        return sum(1 for p in polys if self.add(p) is not None)

    @property
    def pivots(self) -> list:
        return self._ech.pivots

    def rows(self) -> list[FreePoly]:
        return [FreePoly._wrap(r) for r in self._ech.rows()]

    def dims_by(self, key) -> Counter:
        """Contagem de linhas por `key(pivô)` (ex.: grau, paridade, multigrau)."""
        return Counter(key(p) for p in self._ech.pivots)
