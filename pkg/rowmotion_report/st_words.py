"""
Palavras de Stanley-Thomas birracionais e generalizadas, somas ω_ab e a
verificação do deslocamento cíclico sob φ∘ρ∘φ^{-1}.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from rowmotion_report.algebra import BIRATIONAL, ToggleAlgebra, format_rational
from rowmotion_report.closed_form import rho_power_any
from rowmotion_report.dynamics import Labeling, conjugated_rowmotion
from rowmotion_report.paths import CheckReport, MinorArray, minors_of, w_interval
from rowmotion_report.poset import Cell, Interval
from rowmotion_report.utils import (
    CellRangeError,
    IdentityViolationError,
    OmegaEmptyError,
    rotate_right,
)

logger = logging.getLogger(__name__)

CLASSIC = "classic"
ROW = "ST_i"
COLUMN = "ST_bar_j"


@dataclass(frozen=True)
class STWord:
    """Palavra de comprimento r+s; `index` é a linha (ST_i) ou coluna (ST̄_j)."""

    kind: str
    index: Optional[int]
    entries: Tuple[Fraction, ...]

    def rotated(self, steps: int = 1) -> "STWord":
        return STWord(self.kind, self.index, rotate_right(self.entries, steps))

    def to_json(self) -> dict:
        payload = {"kind": self.kind}
        if self.kind == ROW:
            payload["i"] = self.index
        elif self.kind == COLUMN:
            payload["j"] = self.index
        payload["entries"] = [format_rational(v) for v in self.entries]
        return payload


def birational_st(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> STWord:
    """
    Palavra birracional clássica: produtos das linhas seguidos dos inversos
    dos produtos das colunas.
    """
    rect = x.rect
    rows = [alg.fold_product(x[(i, j)] for j in range(1, rect.s + 1)) for i in range(1, rect.r + 1)]
    cols = [
        alg.inverse(alg.fold_product(x[(i, j)] for i in range(1, rect.r + 1)))
        for j in range(1, rect.s + 1)
    ]
    return STWord(CLASSIC, None, tuple(rows + cols))


def omega(x: Labeling, a: int, b: int) -> Fraction:
    """
    ω_ab: soma dos inversos dos pesos das sequências de células com postos
    a, a+1, ..., b e linhas estritamente crescentes.

    Calculada por programação dinâmica sobre os postos.

    Args:
        x: Rotulagem positiva
        a, b: 2 ≤ a ≤ b ≤ r+s

    Returns:
        Racional positivo
    """
    rect = x.rect
    if not 2 <= a <= b <= rect.order:
        raise CellRangeError(f"Índices de omega fora de 2 ≤ a ≤ b ≤ {rect.order}: ({a}, {b})")

    current: Dict[Cell, Fraction] = {c: 1 / x[c] for c in rect.rank_cells(a)}
    for rank in range(a + 1, b + 1):
        following = {}
        for cell in rect.rank_cells(rank):
            incoming = sum((v for p, v in current.items() if p.i < cell.i), Fraction(0))
            if incoming:
                following[cell] = incoming / x[cell]
        current = following

    if not current:
        raise OmegaEmptyError(f"Nenhuma sequência de postos {a}..{b} em [{rect.r}]×[{rect.s}]")
    return sum(current.values(), Fraction(0))


def omega_oracle(x: Labeling, a: int, b: int) -> Fraction:
    """ω_ab por enumeração explícita das sequências (uso em testes)."""
    rect = x.rect
    sequences: List[List[Cell]] = [[c] for c in rect.rank_cells(a)]
    for rank in range(a + 1, b + 1):
        sequences = [
            seq + [c] for seq in sequences for c in rect.rank_cells(rank) if c.i > seq[-1].i
        ]
    if not sequences:
        raise OmegaEmptyError(f"Nenhuma sequência de postos {a}..{b}")
    total = Fraction(0)
    for seq in sequences:
        weight = Fraction(1)
        for cell in seq:
            weight *= x[cell]
        total += 1 / weight
    return total


def row_word_by_orbit(x: Labeling, i: int, w: Optional[MinorArray] = None) -> Tuple[Fraction, ...]:
    """(ρ^{−k}(y)_{is})_{k=0..r+s−1} pela fórmula fechada das potências."""
    rect = x.rect
    w = w if w is not None else minors_of(x)
    return tuple(rho_power_any(x, i, rect.s, -k, w) for k in range(rect.order))


def row_word_by_chain_sums(x: Labeling, i: int, w: Optional[MinorArray] = None) -> Tuple[Fraction, ...]:
    """
    ST_i por somas de cadeias: w^{(1)}_{[k+1,k+i]×[s]} para 0 ≤ k ≤ r−i, seguido
    de ω_{k−r+i+1, k+1} para r−i < k < r+s.
    """
    rect = x.rect
    w = w if w is not None else minors_of(x)
    prefix = [
        w_interval(Interval(k + 1, k + i, 1, rect.s), 1, x, w)
        for k in range(rect.r - i + 1)
    ]
    suffix = [omega(x, k - rect.r + i + 1, k + 1) for k in range(rect.r - i + 1, rect.order)]
    return tuple(prefix + suffix)


def generalized_st(x: Labeling, row: Optional[int] = None, col: Optional[int] = None) -> STWord:
    """
    Palavra generalizada ST_i (row) ou ST̄_j (col), calculada por duas rotas.

    A palavra de coluna é a palavra de linha do retângulo transposto.

    Args:
        x: Rotulagem positiva
        row: Linha i, 1 ≤ i ≤ r
        col: Coluna j, 1 ≤ j ≤ s

    Returns:
        STWord com as entradas confirmadas pelas duas rotas
    """
    if (row is None) == (col is None):
        raise CellRangeError("Informe exatamente um entre linha e coluna")
    if row is not None:
        kind, index, source = ROW, row, x
        limit = x.rect.r
    else:
        kind, index, source = COLUMN, col, x.transpose()
        limit = x.rect.s
    if not 1 <= index <= limit:
        raise CellRangeError(f"Índice {index} fora de 1..{limit} para {kind}")

    w = minors_of(source)
    by_orbit = row_word_by_orbit(source, index, w)
    by_sums = row_word_by_chain_sums(source, index, w)
    if by_orbit != by_sums:
        raise IdentityViolationError(
            f"{kind}[{index}]: órbita {[format_rational(v) for v in by_orbit]} "
            f"≠ somas de cadeias {[format_rational(v) for v in by_sums]}"
        )
    return STWord(kind, index, by_orbit)


def all_generalized_words(x: Labeling) -> List[STWord]:
    words = [generalized_st(x, row=i) for i in range(1, x.rect.r + 1)]
    words += [generalized_st(x, col=j) for j in range(1, x.rect.s + 1)]
    return words


def cyclic_shift_check(x: Labeling) -> CheckReport:
    """
    Verifica que φ∘ρ∘φ^{-1} gira cada palavra um passo para a direita:
    ST(x')_k = ST(x)_{k−1 mod r+s}.
    """
    report = CheckReport("deslocamento_ciclico_st")
    moved = conjugated_rowmotion(x)

    report.record(
        birational_st(moved) == birational_st(x).rotated(),
        kind=CLASSIC,
    )
    for before, after in zip(all_generalized_words(x), all_generalized_words(moved)):
        report.record(after == before.rotated(), kind=before.kind, index=before.index)

    logger.debug(report.summary())
    return report
