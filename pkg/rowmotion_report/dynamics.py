"""
Dinâmica de toggles genérica sobre uma ToggleAlgebra: rotulagens, toggles,
rowmotion e inversa, rowmotion parcial em intervalos e os mapas de transferência.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

from rowmotion_report.algebra import BIRATIONAL, ToggleAlgebra, format_rational
from rowmotion_report.poset import Cell, Interval, Rect, linear_extension
from rowmotion_report.utils import CellRangeError, IdentityViolationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Labeling:
    """
    Atribuição de um valor da álgebra a cada célula de [r]×[s].

    Imutável e hashable: o hash usa o retângulo e os pares (célula, valor).
    """

    rect: Rect
    values: Mapping[Cell, Fraction]

    @classmethod
    def from_mapping(
        cls,
        rect: Rect,
        mapping: Mapping[Any, Any],
        alg: ToggleAlgebra = BIRATIONAL,
    ) -> "Labeling":
        """
        Constrói e valida uma rotulagem.

        Args:
            rect: Retângulo
            mapping: Dicionário célula → valor (Fraction, int ou "p/q")
            alg: Álgebra usada para validar os valores

        Returns:
            Labeling com exatamente uma entrada por célula
        """
        values = {}
        for cell, value in mapping.items():
            values[rect.check_cell(cell)] = alg.validate(value)
        missing = [c for c in rect.cells() if c not in values]
        if missing:
            raise CellRangeError(f"Rotulagem incompleta, faltam células: {missing}")
        return cls(rect, values)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], alg: ToggleAlgebra = BIRATIONAL) -> "Labeling":
        """Constrói a partir de uma matriz (linha i, coluna j)."""
        rect = Rect(len(rows), len(rows[0]))
        return cls.from_mapping(
            rect,
            {(i, j): rows[i - 1][j - 1] for i in range(1, rect.r + 1) for j in range(1, rect.s + 1)},
            alg,
        )

    @classmethod
    def constant(cls, rect: Rect, value: Any = 1, alg: ToggleAlgebra = BIRATIONAL) -> "Labeling":
        return cls.from_mapping(rect, {c: value for c in rect.cells()}, alg)

    def __hash__(self) -> int:
        return hash((self.rect, frozenset(self.values.items())))

    def __getitem__(self, cell) -> Fraction:
        return self.values[Cell(*cell)]

    def replace(self, updates: Mapping[Any, Fraction]) -> "Labeling":
        values = dict(self.values)
        for cell, value in updates.items():
            values[self.rect.check_cell(cell)] = Fraction(value)
        return Labeling(self.rect, values)

    def transpose(self) -> "Labeling":
        return Labeling(self.rect.transpose(), {c.transpose(): v for c, v in self.values.items()})

    def rows(self) -> List[List[Fraction]]:
        return [[self[(i, j)] for j in range(1, self.rect.s + 1)] for i in range(1, self.rect.r + 1)]

    def describe(self) -> str:
        return "; ".join(
            " ".join(format_rational(v) for v in row) for row in self.rows()
        )


def require_domain(x: Labeling, alg: ToggleAlgebra) -> None:
    """Levanta AlgebraDomainError se algum rótulo estiver fora do portador de `alg`."""
    for value in x.values.values():
        alg.validate(value)


def toggle_in_place(values: Dict[Cell, Fraction], rect: Rect, p: Cell, alg: ToggleAlgebra) -> None:
    above = alg.fold_above(values[q] for q in rect.upper_covers(p))
    below = alg.fold_below(values[q] for q in rect.lower_covers(p))
    values[p] = alg.quotient(alg.product(above, below), values[p])


def toggle(labeling: Labeling, p, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """
    Toggle t_p: só a coordenada p muda, para (⊛ superiores) ⊗ (⊕ inferiores) ⊘ L(p).

    Args:
        labeling: Rotulagem
        p: Célula
        alg: Álgebra de toggle

    Returns:
        Nova rotulagem
    """
    p = labeling.rect.check_cell(p)
    values = dict(labeling.values)
    toggle_in_place(values, labeling.rect, p, alg)
    return Labeling(labeling.rect, values)


def apply_toggles(labeling: Labeling, cells: Iterable, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """Aplica toggles na ordem dada (o primeiro da lista age primeiro)."""
    rect = labeling.rect
    values = dict(labeling.values)
    for p in cells:
        toggle_in_place(values, rect, rect.check_cell(p), alg)
    return Labeling(rect, values)


def toggles_commute(labeling: Labeling, p, q, alg: ToggleAlgebra = BIRATIONAL) -> bool:
    """True quando t_p ∘ t_q e t_q ∘ t_p coincidem em `labeling`."""
    return apply_toggles(labeling, [p, q], alg) == apply_toggles(labeling, [q, p], alg)


def rowmotion(
    labeling: Labeling,
    alg: ToggleAlgebra = BIRATIONAL,
    extension: Optional[Sequence[Cell]] = None,
) -> Labeling:
    """Rowmotion: toggles de cima para baixo ao longo de uma extensão linear."""
    extension = extension if extension is not None else linear_extension(labeling.rect)
    return apply_toggles(labeling, reversed(list(extension)), alg)


def rowmotion_inverse(
    labeling: Labeling,
    alg: ToggleAlgebra = BIRATIONAL,
    extension: Optional[Sequence[Cell]] = None,
) -> Labeling:
    """Rowmotion inverso: toggles de baixo para cima."""
    extension = extension if extension is not None else linear_extension(labeling.rect)
    return apply_toggles(labeling, extension, alg)


def rowmotion_power(labeling: Labeling, k: int, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """ρ^k por iteração direta (k de qualquer sinal)."""
    step = rowmotion if k >= 0 else rowmotion_inverse
    for _ in range(abs(k)):
        labeling = step(labeling, alg)
    return labeling


def partial_rowmotion(labeling: Labeling, interval: Interval, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """
    Rowmotion parcial ρ_I: toggles apenas nas células de I, de cima para baixo.

    Os vizinhos fora de I entram no toggle com seus valores atuais.
    """
    interval.check_within(labeling.rect)
    return apply_toggles(labeling, reversed(interval.linear_extension()), alg)


def partial_rowmotion_inverse(labeling: Labeling, interval: Interval, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    interval.check_within(labeling.rect)
    return apply_toggles(labeling, interval.linear_extension(), alg)


def transfer(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """φ(x)_p = x_p ⊘ (⊕ das coberturas inferiores de x)."""
    rect = x.rect
    return Labeling(rect, {
        p: alg.quotient(x[p], alg.fold_below(x[q] for q in rect.lower_covers(p)))
        for p in rect.cells()
    })


def transfer_inverse(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """
    φ^{-1} por varredura de baixo para cima: y_p = x_p ⊗ (⊕ das coberturas inferiores de y).

    No birracional, y_ij é o peso total das cadeias maximais de [i]×[j].
    """
    require_domain(x, alg)
    rect = x.rect
    y: Dict[Cell, Fraction] = {}
    for p in linear_extension(rect):
        y[p] = alg.product(x[p], alg.fold_below(y[q] for q in rect.lower_covers(p)))
    return Labeling(rect, y)


def dual_transfer(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """φ*(x)_p = x_p ⊘ (⊕ das coberturas superiores de x)."""
    rect = x.rect
    return Labeling(rect, {
        p: alg.quotient(x[p], alg.fold_below(x[q] for q in rect.upper_covers(p)))
        for p in rect.cells()
    })


def dual_transfer_inverse(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """(φ*)^{-1} por varredura de cima para baixo; no birracional soma cadeias de [i,r]×[j,s]."""
    require_domain(x, alg)
    rect = x.rect
    z: Dict[Cell, Fraction] = {}
    for p in reversed(linear_extension(rect)):
        z[p] = alg.product(x[p], alg.fold_below(z[q] for q in rect.upper_covers(p)))
    return Labeling(rect, z)


def shifted_labeling(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """x̃ = φ ∘ ρ^{-1} ∘ φ^{-1}(x), a rotulagem deslocada das somas de cadeias."""
    return transfer(rowmotion_inverse(transfer_inverse(x, alg), alg), alg)


def conjugated_rowmotion(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """φ ∘ ρ ∘ φ^{-1}(x), que gira as palavras de Stanley-Thomas."""
    return transfer(rowmotion(transfer_inverse(x, alg), alg), alg)


class OrbitTable:
    """
    Potências ρ^k(base) memorizadas sob demanda.

    Expoentes só são reduzidos módulo r+s depois que `verify_period` confirma
    a periodicidade para esta instância.
    """

    def __init__(self, base: Labeling, alg: ToggleAlgebra = BIRATIONAL):
        self.base = base
        self.alg = alg
        self.order = base.rect.order
        self.powers: Dict[int, Labeling] = {0: base}
        self.period_verified = False

    def _compute(self, k: int) -> Labeling:
        nearest = min(self.powers, key=lambda e: (abs(e - k), e))
        current = self.powers[nearest]
        step = 1 if k > nearest else -1
        for e in range(nearest + step, k + step, step):
            current = rowmotion(current, self.alg) if step > 0 else rowmotion_inverse(current, self.alg)
            self.powers[e] = current
        return current

    def verify_period(self) -> bool:
        """
        Calcula ρ^{r+s}(base) diretamente e compara com a base.

        Returns:
            True se ρ^{r+s}(base) = base
        """
        wrapped = self.powers.get(self.order) or self._compute(self.order)
        self.period_verified = wrapped == self.base
        if not self.period_verified:
            logger.warning(
                f"ρ^{self.order} difere da base em [{self.base.rect.r}]×[{self.base.rect.s}]"
            )
        return self.period_verified

    def power(self, k: int) -> Labeling:
        if self.period_verified:
            k %= self.order
        if k in self.powers:
            return self.powers[k]
        return self._compute(k)

    def entry(self, cell, k: int) -> Fraction:
        return self.power(k)[cell]

    def require_period(self) -> None:
        if not self.verify_period():
            raise IdentityViolationError(
                f"Ordem de rowmotion diferente de {self.order} para a base {self.base.describe()}"
            )
