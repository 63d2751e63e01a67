"""
Aritmética racional exata e as álgebras de toggle (birracional e tropical).

Toda a dinâmica do pacote é genérica sobre uma ToggleAlgebra: a instância
birracional usa (+, ∥, ×, ÷) e a tropical usa (max, min, +, −).
"""

import re
import logging
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Iterable, Optional

from rowmotion_report.utils import AlgebraDomainError

logger = logging.getLogger(__name__)

_RATIONAL_RE = re.compile(r'([+-]?\d+)(?:/(\d+))?')


def parse_rational(text: Any) -> Fraction:
    """
    Converte texto "p/q" (ou "p") em Fraction reduzida.

    Args:
        text: Texto com sinal opcional e dígitos de tamanho arbitrário;
            int e Fraction são aceitos diretamente

    Returns:
        Fraction equivalente
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise AlgebraDomainError(f"Valor racional inválido: {text!r}")

    match = _RATIONAL_RE.fullmatch(text.strip())
    if not match:
        raise AlgebraDomainError(f"Valor racional inválido: '{text}' (esperado 'p/q')")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise AlgebraDomainError(f"Denominador zero em '{text}'")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Serializa como "p/q", omitindo q quando vale 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_add(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) + Fraction(b)


def rational_mul(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) * Fraction(b)


def rational_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise AlgebraDomainError(f"Divisão por zero: {format_rational(a)} / 0")
    return Fraction(a) / Fraction(b)


def rational_negate(a: Fraction) -> Fraction:
    return -Fraction(a)


def rational_compare(a: Fraction, b: Fraction) -> int:
    """Retorna -1, 0 ou 1 conforme a < b, a = b ou a > b."""
    a, b = Fraction(a), Fraction(b)
    return (a > b) - (a < b)


def parallel_sum(a: Fraction, b: Fraction) -> Fraction:
    """
    Soma paralela a∥b = ab/(a+b) de dois racionais positivos.

    Args:
        a: Racional positivo
        b: Racional positivo

    Returns:
        Racional positivo a∥b
    """
    if a <= 0 or b <= 0:
        raise AlgebraDomainError(
            f"Soma paralela exige valores positivos: {format_rational(a)}, {format_rational(b)}"
        )
    return Fraction(a) * Fraction(b) / (Fraction(a) + Fraction(b))


def parallel_sum_all(values: Iterable[Fraction]) -> Fraction:
    """Dobra a soma paralela sobre uma coleção não vazia."""
    values = list(values)
    if not values:
        raise AlgebraDomainError("Soma paralela de coleção vazia não é definida")
    return reduce(parallel_sum, values)


def _positive_quotient(a: Fraction, b: Fraction) -> Fraction:
    if b <= 0:
        raise AlgebraDomainError(f"Quociente por valor não positivo: {format_rational(b)}")
    return Fraction(a) / Fraction(b)


@dataclass(frozen=True)
class ToggleAlgebra:
    """
    Pacote de operações sobre o qual toggles, rowmotion e RSK são genéricos.

    combine_below (⊕) agrega coberturas inferiores, combine_above (⊛) as
    superiores; product (⊗) e quotient (⊘) são a operação multiplicativa e sua
    inversa, com identidade `identity`. `absorbing` é o total de uma soma ⊕
    vazia sobre famílias de caminhos (0 no birracional, None = −∞ no tropical).
    """

    name: str
    combine_below: Callable[[Fraction, Fraction], Fraction]
    combine_above: Callable[[Fraction, Fraction], Fraction]
    product: Callable[[Fraction, Fraction], Fraction]
    quotient: Callable[[Fraction, Fraction], Fraction]
    unit_below: Fraction
    unit_above: Fraction
    identity: Fraction
    absorbing: Optional[Fraction]
    positive_only: bool

    def fold_below(self, values: Iterable[Fraction]) -> Fraction:
        values = list(values)
        if not values:
            return self.unit_below
        return reduce(self.combine_below, values)

    def fold_above(self, values: Iterable[Fraction]) -> Fraction:
        values = list(values)
        if not values:
            return self.unit_above
        return reduce(self.combine_above, values)

    def fold_product(self, values: Iterable[Fraction]) -> Fraction:
        return reduce(self.product, values, self.identity)

    def inverse(self, value: Fraction) -> Fraction:
        return self.quotient(self.identity, value)

    def total(self, values: Iterable[Optional[Fraction]]) -> Optional[Fraction]:
        """
        Soma ⊕ de pesos de famílias de caminhos.

        Valores None (−∞ tropical) são ignorados; coleção vazia devolve
        `absorbing`.
        """
        present = [v for v in values if v is not None]
        if not present:
            return self.absorbing
        return reduce(self.combine_below, present)

    def validate(self, value: Any) -> Fraction:
        """
        Converte e valida um valor do portador da álgebra.

        Args:
            value: Valor bruto (Fraction, int ou texto "p/q")

        Returns:
            Fraction validada
        """
        value = parse_rational(value)
        if self.positive_only and value <= 0:
            raise AlgebraDomainError(
                f"Álgebra {self.name} exige rótulos positivos, recebeu {format_rational(value)}"
            )
        return value


BIRATIONAL = ToggleAlgebra(
    name="birational",
    combine_below=operator.add,
    combine_above=parallel_sum,
    product=operator.mul,
    quotient=_positive_quotient,
    unit_below=Fraction(1),
    unit_above=Fraction(1),
    identity=Fraction(1),
    absorbing=Fraction(0),
    positive_only=True,
)


def tropical_algebra(ceiling: Fraction = Fraction(1)) -> ToggleAlgebra:
    """
    Instância tropical (max, min, +, −) com teto configurável para o min vazio.

    Teto 1 realiza o toggle linear por partes do politopo de ordem; teto 0 é a
    tropicalização ingênua do toggle birracional.

    Args:
        ceiling: Valor devolvido por um min vazio

    Returns:
        ToggleAlgebra tropical
    """
    ceiling = parse_rational(ceiling)
    logger.debug(f"Criando álgebra tropical com teto {format_rational(ceiling)}")
    return ToggleAlgebra(
        name=f"tropical[{format_rational(ceiling)}]",
        combine_below=max,
        combine_above=min,
        product=operator.add,
        quotient=operator.sub,
        unit_below=Fraction(0),
        unit_above=ceiling,
        identity=Fraction(0),
        absorbing=None,
        positive_only=False,
    )


TROPICAL = tropical_algebra(Fraction(1))
