"""
Poset retângulo [r]×[s] e o nível combinatório: ideais de ordem, toggles,
rowmotion, anticadeias e a palavra 0/1 de Stanley-Thomas.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import FrozenSet, Iterable, List, NamedTuple, Tuple

from rowmotion_report.utils import (
    CellRangeError,
    GuardExceededError,
    NotAnAntichainError,
    RowmotionError,
)

logger = logging.getLogger(__name__)

# Limite de r·s para enumeração exaustiva de ideais
IDEAL_ENUMERATION_LIMIT = 30


class Cell(NamedTuple):
    """Célula (i, j) com índices a partir de 1."""

    i: int
    j: int

    @property
    def rank(self) -> int:
        return self.i + self.j

    @property
    def file(self) -> int:
        return self.j - self.i

    def transpose(self) -> "Cell":
        return Cell(self.j, self.i)

    def below(self, other) -> bool:
        """Ordem do poset: (i,j) ⪯ (i',j') sse i ≤ i' e j ≤ j'."""
        return self.i <= other[0] and self.j <= other[1]


@dataclass(frozen=True)
class Rect:
    """Retângulo [r]×[s] com a ordem componente a componente."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise CellRangeError(f"Retângulo inválido: r={self.r}, s={self.s}")

    @property
    def order(self) -> int:
        """Ordem de rowmotion, r + s."""
        return self.r + self.s

    @property
    def size(self) -> int:
        return self.r * self.s

    def cells(self) -> List[Cell]:
        return [Cell(i, j) for i in range(1, self.r + 1) for j in range(1, self.s + 1)]

    def contains(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.r and 1 <= j <= self.s

    def check_cell(self, cell) -> Cell:
        if not self.contains(cell):
            raise CellRangeError(f"Célula {tuple(cell)} fora de [{self.r}]×[{self.s}]")
        return Cell(*cell)

    def lower_covers(self, cell) -> List[Cell]:
        i, j = cell
        return [c for c in (Cell(i - 1, j), Cell(i, j - 1)) if self.contains(c)]

    def upper_covers(self, cell) -> List[Cell]:
        i, j = cell
        return [c for c in (Cell(i + 1, j), Cell(i, j + 1)) if self.contains(c)]

    def is_cover_pair(self, p, q) -> bool:
        """True quando p e q formam uma relação de cobertura (em qualquer sentido)."""
        di, dj = q[0] - p[0], q[1] - p[1]
        return (abs(di), abs(dj)) in ((1, 0), (0, 1))

    def bit(self, cell) -> int:
        """Posição da célula na ordem por linhas (base do bitset)."""
        i, j = self.check_cell(cell)
        return (i - 1) * self.s + (j - 1)

    def rank_cells(self, rank: int) -> List[Cell]:
        """Células de posto `rank`, em ordem crescente de linha."""
        return [
            Cell(i, rank - i)
            for i in range(max(1, rank - self.s), min(self.r, rank - 1) + 1)
        ]

    def is_border(self, cell) -> bool:
        return cell[0] == self.r or cell[1] == self.s

    def transpose(self) -> "Rect":
        return Rect(self.s, self.r)

    def whole(self) -> "Interval":
        return Interval(1, self.r, 1, self.s)


@dataclass(frozen=True)
class Interval:
    """Intervalo [i1, i2]×[j1, j2] dentro de um retângulo."""

    i1: int
    i2: int
    j1: int
    j2: int

    def __post_init__(self):
        if not (1 <= self.i1 <= self.i2 and 1 <= self.j1 <= self.j2):
            raise CellRangeError(
                f"Intervalo inválido: [{self.i1},{self.i2}]×[{self.j1},{self.j2}]"
            )

    @property
    def rows(self) -> int:
        return self.i2 - self.i1 + 1

    @property
    def cols(self) -> int:
        return self.j2 - self.j1 + 1

    def check_within(self, rect: Rect) -> "Interval":
        if self.i2 > rect.r or self.j2 > rect.s:
            raise CellRangeError(f"Intervalo {self} não cabe em [{rect.r}]×[{rect.s}]")
        return self

    def is_corner_anchored(self, rect: Rect) -> bool:
        """(i1 = 1 ou j2 = s) e (j1 = 1 ou i2 = r)."""
        return (self.i1 == 1 or self.j2 == rect.s) and (self.j1 == 1 or self.i2 == rect.r)

    def contains(self, cell) -> bool:
        i, j = cell
        return self.i1 <= i <= self.i2 and self.j1 <= j <= self.j2

    def cells(self) -> List[Cell]:
        return [
            Cell(i, j)
            for i in range(self.i1, self.i2 + 1)
            for j in range(self.j1, self.j2 + 1)
        ]

    def linear_extension(self) -> List[Cell]:
        return sorted(self.cells(), key=lambda c: (c.rank, c.i))

    def transpose(self) -> "Interval":
        return Interval(self.j1, self.j2, self.i1, self.i2)

    def __str__(self) -> str:
        return f"[{self.i1},{self.i2}]×[{self.j1},{self.j2}]"


def linear_extension(rect: Rect, reverse_within_rank: bool = False) -> List[Cell]:
    """
    Extensão linear canônica: posto crescente, linha crescente dentro do posto.

    Args:
        rect: Retângulo
        reverse_within_rank: Se True, usa linha decrescente dentro do posto
            (extensão alternativa para testes de independência)

    Returns:
        Lista ordenada de células
    """
    sign = -1 if reverse_within_rank else 1
    return sorted(rect.cells(), key=lambda c: (c.rank, sign * c.i))


@dataclass(frozen=True)
class OrderIdeal:
    """Ideal de ordem guardado como bitset sobre a ordem por linhas."""

    rect: Rect
    bits: int = 0

    @classmethod
    def from_cells(cls, rect: Rect, cells: Iterable) -> "OrderIdeal":
        bits = 0
        for cell in cells:
            bits |= 1 << rect.bit(cell)
        ideal = cls(rect, bits)
        if not ideal.is_downward_closed():
            raise RowmotionError(f"Conjunto não é ideal de ordem: {ideal.cells()}")
        return ideal

    def __contains__(self, cell) -> bool:
        return self.rect.contains(cell) and bool(self.bits >> self.rect.bit(cell) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def cells(self) -> List[Cell]:
        return [c for c in self.rect.cells() if c in self]

    def is_downward_closed(self) -> bool:
        return all(
            all(q in self for q in self.rect.lower_covers(p))
            for p in self.cells()
        )

    def _with(self, cell, present: bool) -> "OrderIdeal":
        mask = 1 << self.rect.bit(cell)
        return OrderIdeal(self.rect, self.bits | mask if present else self.bits & ~mask)


@dataclass(frozen=True)
class Antichain:
    """Conjunto de células duas a duas incomparáveis."""

    rect: Rect
    cells: FrozenSet[Cell]

    def __post_init__(self):
        check_antichain(self.cells)

    def sorted_cells(self) -> List[Cell]:
        return sorted(self.cells)


def check_antichain(cells: Iterable) -> FrozenSet[Cell]:
    """Valida incomparabilidade dois a dois; devolve o conjunto normalizado."""
    members = frozenset(Cell(*c) for c in cells)
    for p in members:
        for q in members:
            if p != q and p.below(q):
                raise NotAnAntichainError(f"Células comparáveis: {tuple(p)} ⪯ {tuple(q)}")
    return members


def enumerate_order_ideals(rect: Rect) -> List[OrderIdeal]:
    """
    Enumera todos os ideais de ordem de [r]×[s].

    Cada ideal corresponde a uma sequência fracamente decrescente de
    comprimentos de linha s ≥ λ_1 ≥ ... ≥ λ_r ≥ 0.

    Args:
        rect: Retângulo com r·s ≤ IDEAL_ENUMERATION_LIMIT

    Returns:
        Lista com binomial(r+s, r) ideais, cada um exatamente uma vez
    """
    if rect.size > IDEAL_ENUMERATION_LIMIT:
        raise GuardExceededError(
            f"Enumeração de ideais recusada: r·s = {rect.size} > {IDEAL_ENUMERATION_LIMIT}"
        )

    ideals = []
    for lengths in combinations_with_replacement(range(rect.s, -1, -1), rect.r):
        # combinations_with_replacement sobre valores decrescentes produz
        # sequências fracamente decrescentes
        bits = 0
        for i, length in enumerate(lengths, start=1):
            for j in range(1, length + 1):
                bits |= 1 << rect.bit((i, j))
        ideals.append(OrderIdeal(rect, bits))

    logger.debug(f"{len(ideals)} ideais enumerados em [{rect.r}]×[{rect.s}]")
    return ideals


def combinatorial_toggle(ideal: OrderIdeal, p) -> OrderIdeal:
    """
    Toggle t_p: adiciona ou remove p quando o resultado continua ideal.

    Args:
        ideal: Ideal de ordem
        p: Célula do retângulo

    Returns:
        Novo ideal (ou o mesmo, se o toggle não puder agir)
    """
    rect = ideal.rect
    p = rect.check_cell(p)
    if p in ideal:
        if any(q in ideal for q in rect.upper_covers(p)):
            return ideal
        return ideal._with(p, False)
    if all(q in ideal for q in rect.lower_covers(p)):
        return ideal._with(p, True)
    return ideal


def ideal_of_antichain(antichain) -> OrderIdeal:
    """Fecho para baixo de uma anticadeia."""
    rect = antichain.rect
    tops = list(antichain.cells)
    return OrderIdeal.from_cells(rect, [c for c in rect.cells() if any(c.below(a) for a in tops)])


def antichain_of_ideal(ideal: OrderIdeal) -> Antichain:
    """Elementos maximais de um ideal."""
    rect = ideal.rect
    maximal = [p for p in ideal.cells() if not any(q in ideal for q in rect.upper_covers(p))]
    return Antichain(rect, frozenset(maximal))


def combinatorial_rowmotion(ideal: OrderIdeal, method: str = "complement") -> OrderIdeal:
    """
    Rowmotion combinatório.

    Args:
        ideal: Ideal de ordem
        method: "complement" (ideal gerado pelos minimais do complemento) ou
            "toggles" (toggles de cima para baixo na extensão canônica)

    Returns:
        Ideal ρ(I)
    """
    rect = ideal.rect
    if method == "complement":
        minimal = [
            p for p in rect.cells()
            if p not in ideal and all(q in ideal for q in rect.lower_covers(p))
        ]
        return ideal_of_antichain(Antichain(rect, frozenset(minimal)))
    if method == "toggles":
        for p in reversed(linear_extension(rect)):
            ideal = combinatorial_toggle(ideal, p)
        return ideal
    raise CellRangeError(f"Método de rowmotion desconhecido: '{method}'")


def stanley_thomas_word(cells: Iterable, rect: Rect) -> Tuple[int, ...]:
    """
    Palavra 0/1 de Stanley-Thomas de uma anticadeia.

    Bit i (i ≤ r) vale 1 se a anticadeia encontra a linha i; bit r+j vale 1
    se ela não encontra a coluna j.

    Args:
        cells: Anticadeia (Antichain ou iterável de células)
        rect: Retângulo

    Returns:
        Tupla de r+s bits com exatamente s uns
    """
    if isinstance(cells, Antichain):
        cells = cells.cells
    members = check_antichain(cells)
    for cell in members:
        rect.check_cell(cell)
    rows_hit = {c.i for c in members}
    cols_hit = {c.j for c in members}
    word = [1 if i in rows_hit else 0 for i in range(1, rect.r + 1)]
    word += [0 if j in cols_hit else 1 for j in range(1, rect.s + 1)]
    return tuple(word)


def combinatorial_orbits(rect: Rect) -> List[List[OrderIdeal]]:
    """
    Particiona os ideais de [r]×[s] em órbitas de rowmotion.

    Returns:
        Lista de órbitas, cada uma na ordem I, ρ(I), ρ²(I), ...
    """
    seen = set()
    orbits = []
    for ideal in enumerate_order_ideals(rect):
        if ideal.bits in seen:
            continue
        orbit = []
        current = ideal
        while current.bits not in seen:
            seen.add(current.bits)
            orbit.append(current)
            current = combinatorial_rowmotion(current)
        orbits.append(orbit)

    logger.info(f"[{rect.r}]×[{rect.s}]: {len(seen)} ideais em {len(orbits)} órbitas")
    return orbits
