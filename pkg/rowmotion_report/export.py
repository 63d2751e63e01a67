"""
Exportação de relatórios de verificação e tabelas de órbitas para CSV e JSON.
"""

import logging
from pathlib import Path
from typing import Any, Dict

import pandas as pd

from rowmotion_report.io import antichain_to_json, ideal_to_json, write_json_file
from rowmotion_report.poset import Rect, antichain_of_ideal, combinatorial_orbits, stanley_thomas_word
from rowmotion_report.suite import VerificationReport

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ['suite', 'check', 'status', 'runs', 'checked', 'skipped', 'violations']


def export_to_csv(df: pd.DataFrame, output_path: str):
    """
    Exporta DataFrame para CSV.

    Args:
        df: DataFrame a exportar
        output_path: Caminho do arquivo de saída
    """
    output_file = Path(output_path)
    output_file.parent.mkdir(parents=True, exist_ok=True)

    df.to_csv(output_path, index=False, encoding='utf-8-sig')
    logger.info(f"CSV exportado: {output_path}")


def report_to_dataframe(report: VerificationReport) -> pd.DataFrame:
    """
    Uma linha por verificação.

    Args:
        report: Relatório da suíte

    Returns:
        DataFrame com as colunas de REPORT_COLUMNS (mais elapsed_ms com --timing)
    """
    rows = [summary.to_json(report.config.timing) for summary in report.checks.values()]
    columns = REPORT_COLUMNS + (['elapsed_ms'] if report.config.timing else [])
    df = pd.DataFrame(rows, columns=columns)
    logger.debug(f"Relatório tabulado: {len(df)} verificações")
    return df


def export_report_json(report: VerificationReport, output_path: str):
    write_json_file(report.to_json(), output_path)


def get_next_report_folder(base_output: str) -> Path:
    """
    Cria a próxima pasta relatorio_N dentro de `base_output`.

    Args:
        base_output: Diretório base (criado se não existir)

    Returns:
        Caminho da pasta criada
    """
    base = Path(base_output)
    base.mkdir(parents=True, exist_ok=True)

    existing_reports = []
    for item in base.iterdir():
        if item.is_dir() and item.name.startswith("relatorio_"):
            num_str = item.name.replace("relatorio_", "")
            if num_str.isdigit():
                existing_reports.append(int(num_str))

    next_number = max(existing_reports) + 1 if existing_reports else 1
    output_path = base / f"relatorio_{next_number}"
    output_path.mkdir(parents=True, exist_ok=True)
    logger.info(f"Relatório criado: relatorio_{next_number}")
    return output_path


def export_verification(report: VerificationReport, base_output: str) -> Dict[str, Path]:
    """Grava verificacao.json e verificacao.csv em uma nova pasta relatorio_N."""
    folder = get_next_report_folder(base_output)
    paths = {
        'json': folder / 'verificacao.json',
        'csv': folder / 'verificacao.csv',
    }
    export_report_json(report, str(paths['json']))
    export_to_csv(report_to_dataframe(report), str(paths['csv']))
    return paths


def orbit_table_dataframe(rect: Rect) -> pd.DataFrame:
    """
    Tabela das órbitas de rowmotion combinatório.

    Colunas: orbita, tamanho, posicao, ideal, anticadeia, palavra.
    """
    records = []
    for orbit_id, orbit in enumerate(combinatorial_orbits(rect), start=1):
        for position, ideal in enumerate(orbit):
            antichain = antichain_of_ideal(ideal)
            records.append({
                'orbita': orbit_id,
                'tamanho': len(orbit),
                'posicao': position,
                'ideal': ideal_to_json(ideal),
                'anticadeia': antichain_to_json(antichain),
                'palavra': ''.join(str(b) for b in stanley_thomas_word(antichain, rect)),
            })
    df = pd.DataFrame(records, columns=['orbita', 'tamanho', 'posicao', 'ideal', 'anticadeia', 'palavra'])
    logger.info(f"{df['orbita'].nunique() if len(df) else 0} órbitas, {len(df)} ideais em [{rect.r}]×[{rect.s}]")
    return df


def orbit_table_records(df: pd.DataFrame) -> Any:
    """Registros JSON da tabela de órbitas, com tipos nativos."""
    return [
        {
            'orbita': int(row.orbita),
            'tamanho': int(row.tamanho),
            'posicao': int(row.posicao),
            'ideal': row.ideal,
            'anticadeia': row.anticadeia,
            'palavra': row.palavra,
        }
        for row in df.itertuples(index=False)
    ]
