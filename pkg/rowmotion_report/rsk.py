"""
RSK birracional como composição de rowmotions parciais, o procedimento
equivalente por toggles de arquivo, identidades de Greene, deslocamento de
somas de cadeias e reconstrução de x a partir do perfil de somas de cadeias.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from rowmotion_report.algebra import BIRATIONAL, ToggleAlgebra, format_rational
from rowmotion_report.closed_form import rho_power_any
from rowmotion_report.dynamics import (
    Labeling,
    partial_rowmotion,
    partial_rowmotion_inverse,
    shifted_labeling,
    toggle_in_place,
    transfer,
    transfer_inverse,
)
from rowmotion_report.paths import (
    CheckReport,
    MinorArray,
    interval_weight,
    minors_of,
    oracle_weight,
    rational_determinant,
    w_interval,
)
from rowmotion_report.poset import Cell, Interval, Rect, linear_extension
from rowmotion_report.st_words import generalized_st
from rowmotion_report.utils import (
    AlgebraDomainError,
    CellRangeError,
    InconsistentProfileError,
    format_pair_key,
)

logger = logging.getLogger(__name__)

# A imagem do RSK é uma rotulagem do mesmo retângulo
RskImage = Labeling

PairMap = Dict[Tuple[int, int], Fraction]


def birational_rsk(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> RskImage:
    """
    RSK = ρ^{-1}_{[r−m]×[s−m]} ∘ ... ∘ ρ^{-1}_{[r−1]×[s−1]} ∘ φ^{-1}, com m = min(r,s) − 1.

    Args:
        x: Rotulagem (positiva no birracional)
        alg: Álgebra de toggle (BIRATIONAL ou tropical)

    Returns:
        Imagem do RSK
    """
    rect = x.rect
    y = transfer_inverse(x, alg)
    for t in range(1, min(rect.r, rect.s)):
        y = partial_rowmotion_inverse(y, Interval(1, rect.r - t, 1, rect.s - t), alg)
    return y


def rsk_inverse(image: RskImage, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """Desfaz `birational_rsk`: rowmotions parciais da menor caixa para a maior, depois φ."""
    rect = image.rect
    y = image
    for t in range(min(rect.r, rect.s) - 1, 0, -1):
        y = partial_rowmotion(y, Interval(1, rect.r - t, 1, rect.s - t), alg)
    return transfer(y, alg)


def rsk_procedure(
    x: Labeling,
    alg: ToggleAlgebra = BIRATIONAL,
    extension: Optional[Sequence[Cell]] = None,
) -> RskImage:
    """
    Procedimento por toggles de arquivo.

    Para cada p = (i,j) em ordem de extensão linear: y_p = x_p ⊗ (⊕ de y nas
    coberturas inferiores) e em seguida toggle em (i−t, j−t) para todo t ≥ 1
    dentro do retângulo. Esses toggles comutam entre si.
    """
    rect = x.rect
    extension = extension if extension is not None else linear_extension(rect)
    y: Dict[Cell, Fraction] = {}
    for p in extension:
        p = rect.check_cell(p)
        y[p] = alg.product(x[p], alg.fold_below(y[q] for q in rect.lower_covers(p)))
        for t in range(1, min(p.i, p.j)):
            toggle_in_place(y, rect, Cell(p.i - t, p.j - t), alg)
    if len(y) != rect.size:
        raise CellRangeError("A extensão linear não cobre todas as células")
    return Labeling(rect, y)


# ---------------------------------------------------------------------------
# Identidades de Greene
# ---------------------------------------------------------------------------

def _diagonal_factor(image: RskImage, cell: Cell, alg: ToggleAlgebra) -> Optional[Fraction]:
    if image.rect.contains(cell):
        return image[cell]
    if cell == (0, 1):
        return alg.identity
    return alg.absorbing


def greene_lhs(image: RskImage, i: int, j: int, k: int, alg: ToggleAlgebra = BIRATIONAL) -> Optional[Fraction]:
    """⊗_{t<k} RSK_{i−t,j−t}; (0,1) fora do retângulo vale a identidade e as demais, o absorvente."""
    acc = alg.identity
    for t in range(k):
        factor = _diagonal_factor(image, Cell(i - t, j - t), alg)
        if factor is None:
            return None
        acc = alg.product(acc, factor)
    return acc


def greene_rhs(
    x: Labeling,
    i: int,
    j: int,
    k: int,
    alg: ToggleAlgebra = BIRATIONAL,
    w: Optional[MinorArray] = None,
    use_oracle: bool = False,
) -> Optional[Fraction]:
    """w^{(k)}_{[i]×[j]}(x): rota rápida ou oráculo no birracional, oráculo max no tropical."""
    interval = Interval(1, i, 1, j)
    if k > interval.cols:
        return alg.absorbing
    if alg is BIRATIONAL and not use_oracle:
        return w_interval(interval, k, x, w)
    return oracle_weight(interval, k, x, alg)


def _check_greene_query(rect: Rect, i: int, j: int, k: int) -> None:
    cell = rect.check_cell((i, j))
    if not rect.is_border(cell):
        raise CellRangeError(f"({i},{j}) não está na borda (i = r ou j = s)")
    if not 1 <= k <= min(i, j) + 1:
        raise CellRangeError(f"k = {k} fora de 1..{min(i, j) + 1}")


def greene_identity(
    x: Labeling,
    i: int,
    j: int,
    k: int,
    alg: ToggleAlgebra = BIRATIONAL,
    use_oracle: bool = False,
) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """
    Os dois lados da identidade de Greene para uma célula de borda.

    Args:
        x: Rotulagem
        i, j: Célula com i = r ou j = s
        k: 1 ≤ k ≤ min(i,j) + 1
        alg: Álgebra
        use_oracle: Calcula o lado direito por enumeração

    Returns:
        (lado esquerdo, lado direito)
    """
    _check_greene_query(x.rect, i, j, k)
    image = birational_rsk(x, alg)
    return greene_lhs(image, i, j, k, alg), greene_rhs(x, i, j, k, alg, use_oracle=use_oracle)


def greene_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL, use_oracle: bool = False) -> CheckReport:
    """
    Verifica a identidade de Greene em todas as células de borda e todo k.

    Com `use_oracle` no birracional também confronta a rota rápida com a
    enumeração de caminhos.
    """
    report = CheckReport(f"greene_{alg.name}")
    rect = x.rect
    image = birational_rsk(x, alg)
    w = minors_of(x) if alg is BIRATIONAL else None
    for cell in rect.cells():
        if not rect.is_border(cell):
            continue
        for k in range(1, min(cell.i, cell.j) + 2):
            lhs = greene_lhs(image, cell.i, cell.j, k, alg)
            rhs = greene_rhs(x, cell.i, cell.j, k, alg, w)
            report.record(lhs == rhs, i=cell.i, j=cell.j, k=k)
            if use_oracle and alg is BIRATIONAL:
                report.record(
                    rhs == greene_rhs(x, cell.i, cell.j, k, alg, use_oracle=True),
                    i=cell.i, j=cell.j, k=k, route="oraculo",
                )
    logger.debug(report.summary())
    return report


def tropical_greene_check(x: Labeling, alg: ToggleAlgebra) -> CheckReport:
    """Greene tropical: somas de RSK tropical contra o max dos pesos de famílias."""
    return greene_check(x, alg, use_oracle=True)


def rsk_entry_identity_check(x: Labeling, w: Optional[MinorArray] = None) -> CheckReport:
    """Verifica RSK(x)_{r−i,s−j} = ρ^{−min(i,j)}(φ^{-1}(x))_{r−i,s−j}."""
    report = CheckReport("rsk_por_potencia")
    rect = x.rect
    w = w if w is not None else minors_of(x)
    image = birational_rsk(x)
    for cell in rect.cells():
        steps = min(rect.r - cell.i, rect.s - cell.j)
        report.record(image[cell] == rho_power_any(x, cell.i, cell.j, -steps, w), i=cell.i, j=cell.j)
    return report


# ---------------------------------------------------------------------------
# Perfil de somas de cadeias e reconstrução
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainSumProfile:
    """
    Somas de cadeias maximais: rows[(u,v)] = w^{(1)}_{[u,v]×[s]} e
    cols[(u,v)] = w^{(1)}_{[r]×[u,v]}.
    """

    rect: Rect
    rows: PairMap = field(default_factory=dict)
    cols: PairMap = field(default_factory=dict)

    def validate(self) -> "ChainSumProfile":
        for name, values, size in (("rows", self.rows, self.rect.r), ("cols", self.cols, self.rect.s)):
            expected = {(u, v) for u in range(1, size + 1) for v in range(u, size + 1)}
            missing = sorted(expected - set(values))
            extra = sorted(set(values) - expected)
            if missing or extra:
                raise InconsistentProfileError(
                    f"Perfil {name}: faltam {missing}, sobram {extra}"
                )
            for key, value in values.items():
                if value <= 0:
                    raise InconsistentProfileError(
                        f"Perfil {name}[{format_pair_key(*key)}] não positivo: {format_rational(value)}"
                    )
        return self


def chain_sum_profile(x: Labeling, w: Optional[MinorArray] = None) -> ChainSumProfile:
    """Perfil de x: usa a rota rápida nos intervalos ancorados e o oráculo nos demais."""
    rect = x.rect
    w = w if w is not None else minors_of(x)
    rows = {
        (u, v): interval_weight(Interval(u, v, 1, rect.s), 1, x, w)
        for u in range(1, rect.r + 1) for v in range(u, rect.r + 1)
    }
    cols = {
        (u, v): interval_weight(Interval(1, rect.r, u, v), 1, x, w)
        for u in range(1, rect.s + 1) for v in range(u, rect.s + 1)
    }
    return ChainSumProfile(rect, rows, cols)


def _family_weight(values: PairMap, end: int, k: int) -> Fraction:
    """
    Determinante k×k com entrada (a,b) = values[(a, end−k+b)] se a ≤ end−k+b, senão 0.

    Com values = cols dá w^{(k)}_{[r]×[end]}; com values = rows, w^{(k)}_{[end]×[s]}.
    """
    if k == 0:
        return Fraction(1)
    matrix = [
        [values[(a, end - k + b)] if a <= end - k + b else Fraction(0) for b in range(1, k + 1)]
        for a in range(1, k + 1)
    ]
    return rational_determinant(matrix)


def border_family_weight(profile: ChainSumProfile, i: int, j: int, k: int) -> Fraction:
    """w^{(k)}_{[i]×[j]} em uma célula de borda, só a partir do perfil."""
    rect = profile.rect
    if j == rect.s and i != rect.r:
        return _family_weight(profile.rows, i, k)
    if i == rect.r:
        return _family_weight(profile.cols, j, k)
    raise CellRangeError(f"({i},{j}) não está na borda")


def reconstruct_from_chain_sums(profile: ChainSumProfile, rect: Optional[Rect] = None) -> Labeling:
    """
    Recupera x a partir do perfil de somas de cadeias.

    Cada entrada do RSK é um quociente de determinantes do perfil
    (Greene na borda); depois aplica-se o RSK inverso. O resultado é conferido
    recalculando o perfil.

    Args:
        profile: Perfil completo de [r]×[s]
        rect: Retângulo esperado (opcional; deve coincidir com o do perfil)

    Returns:
        Rotulagem positiva x com esse perfil

    Raises:
        InconsistentProfileError: Se o perfil não vem de nenhuma rotulagem positiva
    """
    if rect is not None and rect != profile.rect:
        raise InconsistentProfileError(
            f"Perfil de [{profile.rect.r}]×[{profile.rect.s}] para retângulo [{rect.r}]×[{rect.s}]"
        )
    profile.validate()
    rect = profile.rect
    values: Dict[Cell, Fraction] = {}
    for cell in rect.cells():
        d = min(rect.r - cell.i, rect.s - cell.j)
        numerator = border_family_weight(profile, cell.i + d, cell.j + d, d + 1)
        denominator = border_family_weight(profile, cell.i + d, cell.j + d, d)
        if numerator <= 0 or denominator <= 0:
            raise InconsistentProfileError(
                f"Determinante não positivo ao reconstruir RSK{format_pair_key(*cell)}"
            )
        values[cell] = numerator / denominator

    try:
        x = rsk_inverse(Labeling(rect, values))
    except AlgebraDomainError as exc:
        raise InconsistentProfileError(f"RSK inverso saiu do domínio positivo: {exc}") from exc

    if any(v <= 0 for v in x.values.values()):
        raise InconsistentProfileError(f"Reconstrução com rótulo não positivo: {x.describe()}")
    recomputed = chain_sum_profile(x)
    if recomputed.rows != profile.rows or recomputed.cols != profile.cols:
        raise InconsistentProfileError("O perfil recalculado difere do perfil informado")
    logger.info(f"Rotulagem reconstruída em [{rect.r}]×[{rect.s}]")
    return x


def profile_from_st_words(x: Labeling) -> ChainSumProfile:
    """Lê o perfil nas palavras ST_i e ST̄_j: rows[(u,v)] = ST_{v−u+1}[u−1]."""
    rect = x.rect
    row_words = {i: generalized_st(x, row=i).entries for i in range(1, rect.r + 1)}
    col_words = {j: generalized_st(x, col=j).entries for j in range(1, rect.s + 1)}
    rows = {
        (u, v): row_words[v - u + 1][u - 1]
        for u in range(1, rect.r + 1) for v in range(u, rect.r + 1)
    }
    cols = {
        (u, v): col_words[v - u + 1][u - 1]
        for u in range(1, rect.s + 1) for v in range(u, rect.s + 1)
    }
    return ChainSumProfile(rect, rows, cols)


def reconstruct_from_st_words(x: Labeling) -> Labeling:
    return reconstruct_from_chain_sums(profile_from_st_words(x))


# ---------------------------------------------------------------------------
# Deslocamento de somas de cadeias
# ---------------------------------------------------------------------------

def _column_shift_records(x: Labeling, report: CheckReport, side: str) -> None:
    rect = x.rect
    shifted = shifted_labeling(x)
    w, w_shifted = minors_of(x), minors_of(shifted)
    for u in range(2, rect.s + 1):
        for v in range(u, rect.s + 1):
            for k in range(1, v - u + 2):
                lhs = interval_weight(Interval(1, rect.r, u, v), k, x, w)
                rhs = interval_weight(Interval(1, rect.r, u - 1, v - 1), k, shifted, w_shifted)
                report.record(lhs == rhs, side=side, u=u, v=v, k=k)


def chain_shift_check(x: Labeling) -> CheckReport:
    """
    Verifica w^{(k)}_{[r]×[u,v]}(x) = w^{(k)}_{[r]×[u−1,v−1]}(x̃) e a versão
    refletida nas linhas, para 1 < u ≤ v e 1 ≤ k ≤ v−u+1.
    """
    report = CheckReport("deslocamento_somas_de_cadeias")
    _column_shift_records(x, report, "colunas")
    _column_shift_records(x.transpose(), report, "linhas")
    logger.debug(report.summary())
    return report


def _shifted_rsk_entry(x: Labeling, cell: Cell, w: MinorArray) -> Fraction:
    """RSK(x̃)_ij = w^{(t+1)}/w^{(t)} em [r]×[2, J+1], com t = r−i e J = j+t (exige j−i < s−r)."""
    rect = x.rect
    t = rect.r - cell.i
    interval = Interval(1, rect.r, 2, cell.j + t + 1)
    return interval_weight(interval, t + 1, x, w) / interval_weight(interval, t, x, w)


def chain_shift_rsk_check(x: Labeling) -> CheckReport:
    """
    Confronta RSK(x̃) calculado diretamente com a expressão em somas de
    cadeias de x. Células com j − i = s − r não têm expressão e são puladas.
    """
    report = CheckReport("rsk_deslocado")
    rect = x.rect
    direct = birational_rsk(shifted_labeling(x))
    transposed = x.transpose()
    w, w_transposed = minors_of(x), minors_of(transposed)
    for cell in rect.cells():
        gap = cell.j - cell.i
        if gap == rect.s - rect.r:
            report.skipped += 1
            continue
        if gap < rect.s - rect.r:
            value = _shifted_rsk_entry(x, cell, w)
        else:
            value = _shifted_rsk_entry(transposed, cell.transpose(), w_transposed)
        report.record(value == direct[cell], i=cell.i, j=cell.j)
    logger.debug(report.summary())
    return report


def rsk_round_trip(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> bool:
    return rsk_inverse(birational_rsk(x, alg), alg) == x


def describe_profile(profile: ChainSumProfile) -> List[str]:
    lines = [f"rows {format_pair_key(*k)} = {format_rational(v)}" for k, v in sorted(profile.rows.items())]
    lines += [f"cols {format_pair_key(*k)} = {format_rational(v)}" for k, v in sorted(profile.cols.items())]
    return lines
