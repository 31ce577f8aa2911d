# expressions.py
"""
Sintaxe textual de polinômios em FA2[X ∪ Θ].

Precedência (da maior para a menor): menos unário; `*` (produto associativo);
`o` (bullet); `+` e `-`. Todos os binários associam à esquerda.

Átomos: inteiros, p/q, x<k>, t<k>, rev(e), ev(e), od(e), lassoc(e,e,e),
{g1,...,gn} (só geradores) e expressões entre parênteses.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from freealg import FreePoly, GeneratorSymbol, brace, grade_component, involute, t, x
from gja import bullet, long_associator

log = logging.getLogger(__name__)

FUNCTIONS = {"rev": 1, "ev": 1, "od": 1, "lassoc": 3}

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>lassoc|rev|od|ev|o|[xt]\d+|[A-Za-z_]\w*)|(?P<op>[-+*/(){},]))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class UnknownGenerator(ParseError):
    pass


class BraceArgumentNotGenerator(ParseError):
    pass


@dataclass(frozen=True)
class Expr:
    """Nó da árvore: op em {num, gen, add, sub, neg, mul, bullet, brace, rev, ev, od, lassoc}."""
    op: str
    args: tuple = ()
    value: object = None

    def __str__(self):
        if self.op == "num":
            return str(self.value)
        if self.op == "gen":
            return str(self.value)
        if self.op == "brace":
            return "{" + ",".join(str(g) for g in self.value) + "}"
        if self.op in FUNCTIONS:
            return f"{self.op}(" + ", ".join(str(a) for a in self.args) + ")"
        if self.op == "neg":
            return f"-({self.args[0]})"
        sym = {"add": "+", "sub": "-", "mul": "*", "bullet": "o"}[self.op]
        return f"({self.args[0]} {sym} {self.args[1]})"


class _Parser:
    def __init__(self, text: str, num_x: int, num_theta: int):
        self.text = text
        self.num_x = num_x
        self.num_theta = num_theta
        self.tokens = self._tokenize(text)
        self.i = 0

    def _offset(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8"))

    def _tokenize(self, text: str):
        out = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"Caractere inesperado {text[start]!r}", self._offset(start))
            kind = m.lastgroup
            out.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        out.append(("end", "", len(text)))
        return out

    # --- navegação ---
    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            got = "fim da entrada" if kind == "end" else repr(val)
            raise ParseError(f"Esperado {value!r}, encontrado {got}", self._offset(pos))

    def at(self, value: str) -> bool:
        return self.peek()[1] == value and self.peek()[0] != "end"

    # --- gramática ---
    def parse(self) -> Expr:
        e = self.sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"Símbolo inesperado {val!r}", self._offset(pos))
        return e

    def sum(self) -> Expr:
        e = self.bullet_level()
        while self.at("+") or self.at("-"):
            op = "add" if self.next()[1] == "+" else "sub"
            e = Expr(op, (e, self.bullet_level()))
        return e

    def bullet_level(self) -> Expr:
        e = self.product()
        while self.peek()[0] == "name" and self.peek()[1] == "o":
            self.next()
            e = Expr("bullet", (e, self.product()))
        return e

    def product(self) -> Expr:
        e = self.unary()
        while self.at("*"):
            self.next()
            e = Expr("mul", (e, self.unary()))
        return e

    def unary(self) -> Expr:
        if self.at("-"):
            self.next()
            return Expr("neg", (self.unary(),))
        return self.atom()

    def generator(self, name: str, pos: int) -> GeneratorSymbol | None:
        m = re.fullmatch(r"([xt])(\d+)", name)
        if not m:
            return None
        k = int(m.group(2))
        limit = self.num_x if m.group(1) == "x" else self.num_theta
        if k < 1 or k > limit:
            raise UnknownGenerator(
                f"Gerador {name} fora do universo (|X|={self.num_x}, |Θ|={self.num_theta})",
                self._offset(pos),
            )
        return x(k) if m.group(1) == "x" else t(k)

    def atom(self) -> Expr:
        kind, val, pos = self.next()
        if kind == "num":
            num = int(val)
            if self.at("/"):
                self.next()
                k2, v2, p2 = self.next()
                if k2 != "num":
                    raise ParseError("Denominador precisa ser inteiro", self._offset(p2))
                if int(v2) == 0:
                    raise ParseError("Denominador zero", self._offset(p2))
                return Expr("num", value=Fraction(num, int(v2)))
            return Expr("num", value=Fraction(num))
        if kind == "name":
            if val in FUNCTIONS and self.at("("):
                self.next()
                args = [self.sum()]
                while self.at(","):
                    self.next()
                    args.append(self.sum())
                self.expect(")")
                if len(args) != FUNCTIONS[val]:
                    raise ParseError(
                        f"{val} recebe {FUNCTIONS[val]} argumento(s), recebido {len(args)}",
                        self._offset(pos),
                    )
                return Expr(val, tuple(args))
            g = self.generator(val, pos)
            if g is None:
                raise ParseError(f"Nome desconhecido {val!r}", self._offset(pos))
            return Expr("gen", value=g)
        if val == "(":
            e = self.sum()
            self.expect(")")
            return e
        if val == "{":
            return self.brace_args()
        got = "fim da entrada" if kind == "end" else repr(val)
        raise ParseError(f"Esperado um termo, encontrado {got}", self._offset(pos))

    def brace_args(self) -> Expr:
        gens = []
        if self.at("}"):
            self.next()
            return Expr("brace", value=())
        while True:
            kind, val, pos = self.next()
            g = self.generator(val, pos) if kind == "name" else None
            nxt = self.peek()[1]
            if g is None or nxt not in (",", "}"):
                raise BraceArgumentNotGenerator(
                    "Argumentos de {...} precisam ser geradores", self._offset(pos)
                )
            gens.append(g)
            if self.next()[1] == "}":
                return Expr("brace", value=tuple(gens))


def parse(text: str, num_x: int, num_theta: int) -> Expr:
    return _Parser(text, num_x, num_theta).parse()


def evaluate(e: Expr) -> FreePoly:
    op = e.op
    if op == "num":
        return FreePoly.constant(e.value)
    if op == "gen":
        return FreePoly.gen(e.value)
    if op == "brace":
        return brace(e.value)
    vals = [evaluate(a) for a in e.args]
    if op == "add":
        return vals[0] + vals[1]
    if op == "sub":
        return vals[0] - vals[1]
    if op == "neg":
        return -vals[0]
    if op == "mul":
        return vals[0] * vals[1]
    if op == "bullet":
        return bullet(vals[0], vals[1])
    if op == "rev":
        return involute(vals[0])
    if op == "ev":
        return grade_component(vals[0], "even")
    if op == "od":
        return grade_component(vals[0], "odd")
    if op == "lassoc":
        return long_associator(*vals)
    raise ParseError(f"Operação desconhecida {op!r}")


def eval_text(text: str, num_x: int, num_theta: int) -> FreePoly:
    e = parse(text, num_x, num_theta)
    log.debug(f"   • Árvore: {e}")
    return evaluate(e)
