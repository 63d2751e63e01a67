"""
Testes para exportação de relatórios e tabelas de órbitas.
"""

import json

import pandas as pd
import pytest

from rowmotion_report.export import (
    REPORT_COLUMNS,
    export_to_csv,
    export_verification,
    get_next_report_folder,
    orbit_table_dataframe,
    orbit_table_records,
    report_to_dataframe,
)
from rowmotion_report.poset import Rect
from rowmotion_report.suite import SuiteConfig, run_suite


@pytest.fixture
def small_report():
    return run_suite(SuiteConfig(r_max=2, s_max=2, trials=1, suites=("octahedron", "dual_transfer")))


class TestReportFolders:
    """Testes para get_next_report_folder."""

    def test_sequence(self, tmp_path):
        assert get_next_report_folder(str(tmp_path)).name == "relatorio_1"
        assert get_next_report_folder(str(tmp_path)).name == "relatorio_2"

    def test_after_existing(self, tmp_path):
        (tmp_path / "relatorio_7").mkdir()
        (tmp_path / "relatorio_x").mkdir()
        (tmp_path / "outro").mkdir()
        assert get_next_report_folder(str(tmp_path)).name == "relatorio_8"

    def test_creates_base(self, tmp_path):
        folder = get_next_report_folder(str(tmp_path / "novo" / "relatorios"))
        assert folder.is_dir()


class TestVerificationExport:
    """Testes para exportação do relatório de verificação."""

    def test_dataframe(self, small_report):
        df = report_to_dataframe(small_report)
        assert list(df.columns) == REPORT_COLUMNS
        assert (df['status'] == 'pass').all()
        assert set(df['suite']) == {"octahedron", "dual_transfer"}

    def test_dataframe_with_timing(self):
        report = run_suite(SuiteConfig(r_max=1, s_max=1, trials=1, suites=("dual_transfer",), timing=True))
        assert list(report_to_dataframe(report).columns) == REPORT_COLUMNS + ['elapsed_ms']

    def test_csv_has_bom(self, tmp_path, small_report):
        path = tmp_path / "sub" / "checks.csv"
        export_to_csv(report_to_dataframe(small_report), str(path))
        assert path.read_bytes().startswith(b"\xef\xbb\xbf")
        assert list(pd.read_csv(path, encoding='utf-8-sig').columns) == REPORT_COLUMNS

    def test_export_verification(self, tmp_path, small_report):
        paths = export_verification(small_report, str(tmp_path))
        assert paths['json'].parent.name == "relatorio_1"
        payload = json.loads(paths['json'].read_text(encoding="utf-8"))
        assert payload["status"] == "pass"
        assert len(payload["checks"]) == len(small_report.checks)
        assert paths['csv'].exists()


class TestOrbitTable:
    """Testes para a tabela de órbitas do rowmotion combinatório."""

    def test_rect_23(self):
        df = orbit_table_dataframe(Rect(2, 3))
        assert len(df) == 10
        assert all(5 % size == 0 for size in df['tamanho'])
        assert all(word.count('1') == 3 for word in df['palavra'])

    def test_first_orbit_starts_full(self):
        """A enumeração começa pelo ideal cheio."""
        df = orbit_table_dataframe(Rect(1, 1))
        assert list(df['tamanho']) == [2, 2]
        assert df.iloc[0]['ideal'] == [[1, 1]]
        assert df.iloc[0]['palavra'] == "10"
        assert df.iloc[1]['anticadeia'] == []
        assert df.iloc[1]['palavra'] == "01"

    def test_records(self):
        records = orbit_table_records(orbit_table_dataframe(Rect(1, 2)))
        assert [r['palavra'] for r in records] == ["110", "011", "101"]
        assert isinstance(records[0]['orbita'], int)
        json.dumps(records)
