"""
Fórmula fechada de rowmotion birracional iterado.

Para y = φ^{-1}(x):
  (a) ρ^{−k}(y)_ij = W^{(j−1)}_{k+2,i+k+1} / W^{(j)}_{k+1,i+k+1}, 0 ≤ k ≤ r+s−i−j;
  (b) ρ^k(y)_ij = 1 / ρ^{k−i−j+1}(y)_{r+1−i,s+1−j}, 0 < k < i+j;
  (c) ρ tem ordem r+s, o que leva qualquer k à janela [i+j−r−s, i+j−1].
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from rowmotion_report.dynamics import Labeling, shifted_labeling
from rowmotion_report.paths import CheckReport, MinorArray, minors_of
from rowmotion_report.poset import Cell, Rect
from rowmotion_report.utils import CellRangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerQuery:
    """Consulta ρ^k(y)_ij com expoente de qualquer sinal."""

    rect: Rect
    cell: Cell
    k: int

    def __post_init__(self):
        self.rect.check_cell(self.cell)


def _minors(x: Labeling, w: Optional[MinorArray]) -> MinorArray:
    return w if w is not None else minors_of(x)


def rho_power_a(x: Labeling, i: int, j: int, k: int, w: Optional[MinorArray] = None) -> Fraction:
    """
    Parte (a): ρ^{−k}(y)_ij como quociente de dois menores.

    Args:
        x: Rotulagem positiva
        i, j: Célula
        k: 0 ≤ k ≤ r+s−i−j
        w: Arranjo de menores de x (calculado se omitido)

    Returns:
        Valor exato de ρ^{−k}(φ^{-1}(x))_ij
    """
    rect = x.rect
    rect.check_cell((i, j))
    if not 0 <= k <= rect.order - i - j:
        raise CellRangeError(
            f"k = {k} fora da janela da parte (a) [0, {rect.order - i - j}] em ({i},{j}); use rho_power_any"
        )
    w = _minors(x, w)
    return w(k + 2, i + k + 1, j - 1) / w(k + 1, i + k + 1, j)


def reflect_query(rect: Rect, i: int, j: int, k: int) -> Tuple[int, int, int]:
    """Reflexão antipodal da parte (b): (i, j, k) ↦ (r+1−i, s+1−j, k−i−j+1)."""
    return rect.r + 1 - i, rect.s + 1 - j, k - i - j + 1


def rho_power_b(x: Labeling, i: int, j: int, k: int, w: Optional[MinorArray] = None) -> Fraction:
    """
    Parte (b): ρ^k(y)_ij = 1 / ρ^{k−i−j+1}(y)_{r+1−i,s+1−j}, para 0 < k < i+j.

    O expoente refletido é ≤ 0 e cai na janela da parte (a).
    """
    rect = x.rect
    rect.check_cell((i, j))
    if not 0 < k < i + j:
        raise CellRangeError(f"k = {k} fora de (0, {i + j}) para a parte (b) em ({i},{j})")
    i2, j2, k2 = reflect_query(rect, i, j, k)
    return 1 / rho_power_a(x, i2, j2, -k2, w)


def reduce_exponent(rect: Rect, i: int, j: int, k: int) -> int:
    """Representante de k módulo r+s na janela [i+j−r−s, i+j−1]."""
    low = i + j - rect.order
    return low + (k - low) % rect.order


def rho_power_any(x: Labeling, i: int, j: int, k: int, w: Optional[MinorArray] = None) -> Fraction:
    """
    ρ^k(y)_ij para qualquer inteiro k.

    Reduz k à janela e despacha: parte (a) quando o representante é ≤ 0,
    parte (b) caso contrário.
    """
    x.rect.check_cell((i, j))
    reduced = reduce_exponent(x.rect, i, j, k)
    if reduced <= 0:
        return rho_power_a(x, i, j, -reduced, w)
    return rho_power_b(x, i, j, reduced, w)


def power_labeling(x: Labeling, k: int, w: Optional[MinorArray] = None) -> Labeling:
    """Rotulagem completa ρ^k(φ^{-1}(x)) pela fórmula fechada."""
    w = _minors(x, w)
    return Labeling(x.rect, {c: rho_power_any(x, c.i, c.j, k, w) for c in x.rect.cells()})


def array_shift_check(x: Labeling) -> CheckReport:
    """
    Verifica W̃^{(k)}_ij = W^{(k)}_{i+1,j+1}, onde W̃ vem de x̃ = φ∘ρ^{-1}∘φ^{-1}(x),
    para 1 ≤ i,j ≤ r+s−k.
    """
    report = CheckReport("deslocamento_do_arranjo")
    w = minors_of(x)
    w_shifted = minors_of(shifted_labeling(x))
    n = x.rect.order
    for k in range(1, n):
        for i in range(1, n - k + 1):
            for j in range(1, n - k + 1):
                report.record(w_shifted(i, j, k) == w(i + 1, j + 1, k), i=i, j=j, k=k)
    logger.debug(report.summary())
    return report
