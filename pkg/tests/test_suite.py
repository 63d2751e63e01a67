"""
Testes para a suíte de verificação, geradores aleatórios e minimização de
contraexemplos.
"""

import operator
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from rowmotion_report.algebra import BIRATIONAL, TROPICAL
from rowmotion_report.dynamics import transfer_inverse
from rowmotion_report.paths import CheckReport, MinorArray
from rowmotion_report.poset import Rect
from rowmotion_report.suite import (
    ALL_SUITES,
    Check,
    SuiteConfig,
    build_checks,
    combinatorial_word_check,
    minimize_counterexample,
    random_chain_polytope_point,
    random_labeling,
    random_order_polytope_point,
    run_suite,
    toggle_laws_check,
    worked_example_check,
)
from rowmotion_report.utils import CellRangeError


@pytest.fixture
def mutant():
    """Álgebra com a soma paralela trocada por soma comum."""
    return replace(BIRATIONAL, name="mutante", combine_above=operator.add)


@pytest.fixture
def small_config():
    return SuiteConfig(r_max=2, s_max=2, trials=1, seed=3)


class TestGenerators:
    """Testes para os geradores com semente."""

    def test_reproducible(self):
        rect = Rect(3, 3)
        assert random_labeling(rect, 42) == random_labeling(rect, 42)
        assert random_labeling(rect, 42) != random_labeling(rect, 43)

    def test_accepts_generator(self):
        rect = Rect(2, 2)
        assert random_labeling(rect, np.random.default_rng(1)) == random_labeling(rect, 1)

    def test_positive_and_bounded(self):
        x = random_labeling(Rect(3, 4), 7, bound=5)
        for value in x.values.values():
            assert value > 0
            assert value.numerator <= 5
            assert value.denominator <= 5

    def test_bound_one(self):
        x = random_labeling(Rect(2, 3), 0, bound=1)
        assert set(x.values.values()) == {Fraction(1)}

    def test_chain_polytope(self):
        """Entradas ≥ 0 e toda cadeia maximal soma no máximo 1."""
        for seed in range(5):
            point = random_chain_polytope_point(Rect(3, 3), seed)
            assert all(v >= 0 for v in point.values.values())
            assert transfer_inverse(point, TROPICAL)[(3, 3)] <= 1

    def test_order_polytope(self):
        """Valores em [0,1] e crescentes na ordem do poset."""
        point = random_order_polytope_point(Rect(3, 3), 4)
        rect = point.rect
        for cell in rect.cells():
            assert 0 <= point[cell] <= 1
            for upper in rect.upper_covers(cell):
                assert point[cell] <= point[upper]


class TestSuiteConfig:
    """Testes para SuiteConfig."""

    def test_normalize_suites(self):
        assert SuiteConfig.normalize_suites(" Octahedron, rsk ") == ("octahedron", "rsk")
        assert SuiteConfig.normalize_suites("closed-form,rsk,rsk") == ("closed_form", "rsk")
        assert SuiteConfig.normalize_suites(None) == ALL_SUITES
        assert SuiteConfig.normalize_suites("  ") == ALL_SUITES

    def test_validate(self):
        with pytest.raises(CellRangeError):
            SuiteConfig(suites=("nope",)).validate()
        with pytest.raises(CellRangeError):
            SuiteConfig(trials=0).validate()
        with pytest.raises(CellRangeError):
            SuiteConfig(oracle_limit=-1).validate()
        assert SuiteConfig().validate().r_max == 3

    def test_to_json(self):
        payload = SuiteConfig(seed=9, suites=("rsk",)).to_json()
        assert payload["seed"] == 9
        assert payload["suites"] == ["rsk"]
        assert "timing" not in payload


class TestIndividualChecks:
    """Testes para verificações que moram na suíte."""

    def test_worked_example(self, primes):
        report = worked_example_check(primes)
        assert report.ok
        assert report.checked == 21

    def test_combinatorial_words(self):
        assert combinatorial_word_check(Rect(3, 3)).ok
        report = combinatorial_word_check(Rect(5, 7))
        assert report.skipped == 1
        assert report.checked == 0

    def test_toggle_laws(self, labeling_33, chain_point_33):
        assert toggle_laws_check(labeling_33).ok
        assert toggle_laws_check(transfer_inverse(chain_point_33, TROPICAL), TROPICAL).ok

    def test_build_checks_names(self, small_config):
        rng = np.random.default_rng(0)
        names = [c.name for c in build_checks("octahedron", Rect(2, 2), rng, small_config, BIRATIONAL, True)]
        assert names[:3] == ["octaedro", "toggle_do_arranjo", "desnanot_jacobi"]
        assert "bijecao_de_ladrilhos" in names


class TestMinimize:
    """Testes para a minimização de contraexemplos."""

    def test_keeps_only_failing_cell(self, primes):
        """A verificação falha enquanto x_22 ≠ 1: só x_22 sobrevive."""
        def run(x):
            report = CheckReport("sintetica")
            report.record(x[(2, 2)] == 1)
            return report

        check = Check("teste", "sintetica", run, primes)
        minimized = minimize_counterexample(check, primes)
        assert minimized[(2, 2)] == 7
        assert all(minimized[c] == 1 for c in primes.rect.cells() if c != (2, 2))

    def test_neutral_none(self, primes):
        check = Check("teste", "sintetica", lambda x: CheckReport("x"), primes, None)
        assert minimize_counterexample(check, primes) is primes


class TestRunSuite:
    """Testes para run_suite."""

    def test_all_suites_pass(self, small_config):
        report = run_suite(small_config)
        assert report.ok
        assert {suite for suite, _ in report.checks} == set(ALL_SUITES)
        assert report.to_json()["status"] == "pass"

    def test_selected_suite(self):
        report = run_suite(SuiteConfig(r_max=2, s_max=2, trials=2, suites=("octahedron",)))
        assert {suite for suite, _ in report.checks} == {"octahedron"}
        summary = report.checks[("octahedron", "octaedro")]
        assert summary.runs == 8

    def test_deterministic(self, small_config):
        assert run_suite(small_config).to_json() == run_suite(small_config).to_json()

    def test_timing(self):
        config = SuiteConfig(r_max=1, s_max=2, trials=1, suites=("dual_transfer",), timing=True)
        rows = run_suite(config).to_json()["checks"]
        assert all("elapsed_ms" in row for row in rows)
        config = replace(config, timing=False)
        assert all("elapsed_ms" not in row for row in run_suite(config).to_json()["checks"])

    def test_mutation_detected(self, mutant):
        """Trocar ∥ por + quebra a dualidade, a fórmula fechada e Greene."""
        config = SuiteConfig(r_max=2, s_max=2, trials=1, suites=("dual_transfer", "closed_form", "rsk"))
        report = run_suite(config, alg=mutant)
        assert not report.ok
        failed = {summary.check for summary in report.failures}
        assert {"dualidade_birracional", "formula_fechada", "greene"} <= failed

        summary = report.checks[("dual_transfer", "dualidade_birracional")]
        assert summary.counterexample["rect"] == [2, 2]
        labels = summary.counterexample["labeling"]["labels"]
        assert set(labels.values()) == {"1"}
        assert report.to_json()["status"] == "fail"

    def test_transposed_minor_detected(self, monkeypatch):
        """Trocar i e j nos menores W_ij^(k) quebra a fórmula fechada, Greene e o deslocamento."""
        original = MinorArray.get
        monkeypatch.setattr(MinorArray, "get", lambda self, i, j, k: original(self, j, i, k))

        config = SuiteConfig(r_max=2, s_max=3, trials=1, suites=("closed_form", "rsk", "chain_shift"))
        report = run_suite(config)
        assert not report.ok
        failed_suites = {summary.suite for summary in report.failures}
        assert failed_suites == {"closed_form", "rsk", "chain_shift"}
        failed = {summary.check for summary in report.failures}
        assert {"formula_fechada", "greene", "deslocamento_somas_de_cadeias"} <= failed
        assert "rsk_igual_procedimento" not in failed
