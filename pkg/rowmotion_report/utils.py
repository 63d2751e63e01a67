"""
Utilitários gerais: hierarquia de erros, normalização e parsing de chaves "i,j".
"""

import re
import logging
from typing import Any, Sequence, Tuple

logger = logging.getLogger(__name__)


class RowmotionError(ValueError):
    """Erro base do pacote. A CLI converte qualquer subclasse em código de saída 2."""


class AlgebraDomainError(RowmotionError):
    """Valor fora do domínio da álgebra (rótulo não positivo, divisão por zero)."""


class CellRangeError(RowmotionError):
    """Célula, índice ou expoente fora do intervalo permitido."""


class GuardExceededError(RowmotionError):
    """Enumeração recusada por exceder o limite de tamanho."""


class NotAnAntichainError(RowmotionError):
    """Conjunto de células com dois elementos comparáveis."""


class CornerAnchorError(RowmotionError):
    """Intervalo não ancorado em canto: a fórmula de quocientes não se aplica."""


class MalformedCollectionError(RowmotionError):
    """Coleção de caminhos que não pertence à família esperada."""


class OmegaEmptyError(RowmotionError):
    """Família de sequências vazia no cálculo de omega."""


class InconsistentProfileError(RowmotionError):
    """Perfil de somas de cadeias que não vem de nenhum rótulo positivo."""


class IdentityViolationError(RowmotionError):
    """Duas rotas de cálculo da mesma quantidade discordam."""


class MalformedPayloadError(RowmotionError):
    """JSON válido com estrutura inesperada (tipo, campo ausente, dimensão)."""


def normalize_key(text: str) -> str:
    """
    Normaliza uma chave textual: trim e remoção de espaços internos.

    Args:
        text: Chave a normalizar (ex: " 1, 2 ")

    Returns:
        Chave normalizada (ex: "1,2")
    """
    if not isinstance(text, str):
        return ""
    return re.sub(r'\s+', '', text.strip())


def parse_pair_key(key: str) -> Tuple[int, int]:
    """
    Converte uma chave "a,b" em par de inteiros.

    Usada para células "i,j" de rotulagens e para intervalos "u,v" de perfis.

    Args:
        key: Chave no formato "a,b"

    Returns:
        Tupla (a, b)
    """
    key_norm = normalize_key(key)
    match = re.fullmatch(r'(-?\d+),(-?\d+)', key_norm)
    if not match:
        raise CellRangeError(f"Chave inválida: '{key}' (esperado 'a,b')")
    return int(match.group(1)), int(match.group(2))


def format_pair_key(a: int, b: int) -> str:
    """Formata um par de inteiros como chave "a,b"."""
    return f"{a},{b}"


def rotate_right(word: Sequence[Any], steps: int = 1) -> Tuple[Any, ...]:
    """
    Rotação cíclica para a direita: a entrada k vai para a posição k + steps.

    Args:
        word: Sequência a rotacionar
        steps: Número de passos (negativo rotaciona para a esquerda)

    Returns:
        Tupla rotacionada
    """
    word = tuple(word)
    if not word:
        return word
    steps %= len(word)
    return word[-steps:] + word[:-steps] if steps else word
