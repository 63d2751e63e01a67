"""
Leitura e escrita dos arquivos JSON: rotulagens, perfis de somas de cadeias,
arranjos de menores e ideais.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from rowmotion_report.algebra import BIRATIONAL, ToggleAlgebra, format_rational, parse_rational
from rowmotion_report.dynamics import Labeling
from rowmotion_report.paths import MinorArray
from rowmotion_report.poset import Antichain, OrderIdeal, Rect
from rowmotion_report.rsk import ChainSumProfile
from rowmotion_report.utils import CellRangeError, MalformedPayloadError, format_pair_key, parse_pair_key

logger = logging.getLogger(__name__)

FALLBACK_ENCODINGS = ("utf-8", "utf-8-sig", "latin-1")


def read_json_file(file_path: str, encoding: Optional[str] = None) -> Any:
    """
    Lê um arquivo JSON.

    Args:
        file_path: Caminho do arquivo
        encoding: Encoding a tentar primeiro (default: utf-8, depois utf-8-sig e latin-1)

    Returns:
        Objeto JSON decodificado
    """
    logger.info(f"Lendo arquivo: {file_path}")
    encodings = ([encoding] if encoding else []) + [e for e in FALLBACK_ENCODINGS if e != encoding]

    raw = Path(file_path).read_bytes()
    for candidate in encodings:
        try:
            text = raw.decode(candidate)
        except UnicodeDecodeError:
            logger.warning(f"Erro de encoding com {candidate}, tentando o próximo...")
            continue
        # BOM residual quando o arquivo foi salvo com utf-8-sig
        return json.loads(text.lstrip("\ufeff"))

    raise ValueError(f"Não foi possível decodificar {file_path}")


def _require_mapping(value: Any, what: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise MalformedPayloadError(f"{what} deve ser um objeto JSON, recebeu {type(value).__name__}")
    return value


def _field(payload: Dict[str, Any], key: str) -> Any:
    try:
        return payload[key]
    except KeyError:
        raise MalformedPayloadError(f"Campo obrigatório ausente: '{key}'") from None


def _dimension(payload: Dict[str, Any], key: str) -> int:
    value = payload[key]
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedPayloadError(f"Dimensão '{key}' inválida: {value!r}")
    try:
        return int(value)
    except ValueError:
        raise MalformedPayloadError(f"Dimensão '{key}' não é inteira: {value!r}") from None


def _rect_from_payload(payload: Dict[str, Any], keys: List[str]) -> Rect:
    if "r" in payload and "s" in payload:
        return Rect(_dimension(payload, "r"), _dimension(payload, "s"))
    cells = [parse_pair_key(k) for k in keys]
    if not cells:
        raise CellRangeError("Rotulagem vazia sem 'r' e 's'")
    return Rect(max(i for i, _ in cells), max(j for _, j in cells))


def labeling_from_json(payload: Dict[str, Any], alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    """
    Converte {"r":2,"s":3,"labels":{"1,1":"2",...}} em Labeling.

    Args:
        payload: Objeto JSON
        alg: Álgebra usada para validar os valores

    Returns:
        Labeling validada

    Raises:
        MalformedPayloadError: Se o JSON não tem a forma esperada
    """
    payload = _require_mapping(payload, "Rotulagem")
    labels = _require_mapping(_field(payload, "labels"), "'labels'")
    rect = _rect_from_payload(payload, list(labels))
    mapping = {parse_pair_key(k): parse_rational(v) for k, v in labels.items()}
    return Labeling.from_mapping(rect, mapping, alg)


def load_labeling(file_path: str, alg: ToggleAlgebra = BIRATIONAL) -> Labeling:
    labeling = labeling_from_json(read_json_file(file_path), alg)
    logger.info(f"Rotulagem [{labeling.rect.r}]×[{labeling.rect.s}] carregada")
    return labeling


def labeling_to_json(labeling: Labeling) -> Dict[str, Any]:
    """Ordem das chaves: coluna a coluna, como no arquivo de exemplo."""
    rect = labeling.rect
    return {
        "r": rect.r,
        "s": rect.s,
        "labels": {
            format_pair_key(i, j): format_rational(labeling[(i, j)])
            for j in range(1, rect.s + 1)
            for i in range(1, rect.r + 1)
        },
    }


def _pair_map(values: Dict[str, Any]) -> Dict:
    return {parse_pair_key(k): parse_rational(v) for k, v in values.items()}


def profile_from_json(payload: Dict[str, Any]) -> ChainSumProfile:
    """
    Converte {"r":..,"s":..,"rows":{"u,v":..},"cols":{"u,v":..}} em ChainSumProfile.

    Sem "r"/"s", o retângulo é deduzido das maiores chaves.
    """
    payload = _require_mapping(payload, "Perfil")
    rows = _pair_map(_require_mapping(payload.get("rows", {}), "'rows'"))
    cols = _pair_map(_require_mapping(payload.get("cols", {}), "'cols'"))
    if "r" in payload and "s" in payload:
        rect = Rect(_dimension(payload, "r"), _dimension(payload, "s"))
    else:
        if not rows or not cols:
            raise CellRangeError("Perfil sem 'rows'/'cols' nem dimensões")
        rect = Rect(max(v for _, v in rows), max(v for _, v in cols))
    return ChainSumProfile(rect, rows, cols).validate()


def load_chain_sum_profile(file_path: str) -> ChainSumProfile:
    profile = profile_from_json(read_json_file(file_path))
    logger.info(f"Perfil de [{profile.rect.r}]×[{profile.rect.s}] carregado")
    return profile


def profile_to_json(profile: ChainSumProfile) -> Dict[str, Any]:
    return {
        "r": profile.rect.r,
        "s": profile.rect.s,
        "rows": {format_pair_key(*k): format_rational(v) for k, v in sorted(profile.rows.items())},
        "cols": {format_pair_key(*k): format_rational(v) for k, v in sorted(profile.cols.items())},
    }


def minor_array_to_json(w: MinorArray) -> Dict[str, str]:
    """Só o suporte guardado: chaves "i,j,k"."""
    return {f"{i},{j},{k}": format_rational(w(i, j, k)) for i, j, k in w.support()}


def ideal_to_json(ideal: OrderIdeal) -> List[List[int]]:
    return [[c.i, c.j] for c in ideal.cells()]


def antichain_to_json(antichain: Antichain) -> List[List[int]]:
    return [[c.i, c.j] for c in antichain.sorted_cells()]


def dumps(payload: Any) -> str:
    """Serialização determinística: ordem de inserção, indentação fixa."""
    return json.dumps(payload, ensure_ascii=False, indent=2)


def write_json_file(payload: Any, output_path: str) -> None:
    output_file = Path(output_path)
    output_file.parent.mkdir(parents=True, exist_ok=True)
    output_file.write_text(dumps(payload) + "\n", encoding="utf-8")
    logger.info(f"JSON exportado: {output_path}")
