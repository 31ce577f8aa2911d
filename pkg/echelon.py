# echelon.py
"""
Eliminação gaussiana exata sobre os racionais - versão esparsa.

Um vetor é um dict chave -> Fraction sem entradas nulas. As chaves podem ser
índices de coordenadas (int) ou monômios; a escolha do pivô é dada por
`order_key`: o pivô de uma linha é a sua chave de maior `order_key`.

A forma é mantida reduzida o tempo todo (cada coluna pivô aparece só na
própria linha), então reduzir um vetor é uma única passada.
"""
from fractions import Fraction


class Echelon:
    """Base escalonada reduzida de um subespaço, indexada pelo pivô."""

    def __init__(self, order_key=None):
        self.order_key = order_key
        self._rows: dict = {}

    def __len__(self):
        return len(self._rows)

    def __contains__(self, vec):
        return not self.reduce(vec)

    def _pivot(self, vec):
        if self.order_key is None:
            return max(vec)
        return max(vec, key=self.order_key)

    @property
    def pivots(self) -> list:
        return sorted(self._rows, key=self.order_key)

    def row(self, pivot) -> dict:
        return dict(self._rows[pivot])

    def rows(self) -> list[dict]:
        """Linhas em ordem crescente de pivô (cópias)."""
        return [dict(self._rows[p]) for p in self.pivots]

    def reduce(self, vec) -> dict:
        """Resto de `vec` módulo o subespaço (zero nas colunas pivô)."""
        out = dict(vec)
        hits = [(k, c) for k, c in vec.items() if k in self._rows]
        for pivot, c in hits:
            for k, rc in self._rows[pivot].items():
                v = out.get(k, 0) - c * rc
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def add(self, vec) -> dict | None:
        """
        Insere `vec`. Retorna o vetor reduzido (normalizado, pivô = 1) quando
        ele aumenta a dimensão, ou None quando já pertencia ao subespaço.
        """
        rest = self.reduce(vec)
        if not rest:
            return None
        pivot = self._pivot(rest)
        inv = Fraction(1) / rest[pivot]
        new = {k: c * inv for k, c in rest.items()}
        for other in self._rows.values():
            c = other.get(pivot)
            if not c:
                continue
            for k, nc in new.items():
                v = other.get(k, 0) - c * nc
                if v:
                    other[k] = v
                else:
                    other.pop(k, None)
        self._rows[pivot] = new
        return dict(new)

    def extend(self, vecs) -> int:
        """Insere vários vetores; retorna quantos aumentaram a dimensão."""
        return sum(1 for v in vecs if self.add(v) is not None)


def leftmost_pivot(index: int) -> int:
    # pivô na coluna mais à esquerda, como no escalonamento clássico
    return -index


def solve_linear(equations: list[dict], rhs: list, n: int):
    """
    Resolve exatamente M c = b, com as linhas de M dadas como dicts esparsos
    coluna -> coeficiente (colunas 0..n-1).

    Retorna (particular, kernel): `particular` é uma lista de n Fractions ou
    None se o sistema é inconsistente; `kernel` é a base do núcleo de M
    (listas de n Fractions), uma por variável livre.
    """
    ech = Echelon(order_key=leftmost_pivot)
    for eq, b in zip(equations, rhs):
        row = {k: Fraction(c) for k, c in eq.items() if c}
        if b:
            row[n] = Fraction(b)
        if row:
            ech.add(row)

    pivots = [p for p in ech.pivots if p < n]
    free = [c for c in range(n) if c not in ech._rows]

    kernel = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for p in pivots:
            vec[p] = -ech._rows[p].get(f, Fraction(0))
        kernel.append(vec)

    if n in ech._rows:
        return None, kernel
    particular = [Fraction(0)] * n
    for p in pivots:
        particular[p] = ech._rows[p].get(n, Fraction(0))
    return particular, kernel
