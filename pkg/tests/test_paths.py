"""
Testes para G_R, matriz de caminhos, menores sólidos e oráculos de enumeração.
"""

from fractions import Fraction

import numpy as np
import pytest

from rowmotion_report.paths import (
    CheckReport,
    PathCollection,
    array_toggle_check,
    bareiss_determinant,
    build_gr,
    desnanot_jacobi_check,
    enumerate_gr_families,
    enumerate_paths,
    interval_oracle_check,
    interval_weight,
    minor_array,
    minors_of,
    minors_oracle_check,
    octahedron_check,
    oracle_weight,
    path_matrix,
    rational_determinant,
    solid_minor,
    tile_bijection,
    tile_bijection_check,
    transpose_weight,
    w_interval,
)
from rowmotion_report.poset import Interval
from rowmotion_report.utils import CornerAnchorError, GuardExceededError, MalformedCollectionError


@pytest.fixture
def primes_matrix(primes):
    return path_matrix(build_gr(primes))


class TestCheckReport:
    """Testes para CheckReport."""

    def test_record_and_merge(self):
        report = CheckReport("a")
        report.record(True, i=1)
        report.record(False, i=2)
        other = CheckReport("b", skipped=3)
        other.record(True)
        report.merge(other)
        assert report.checked == 3
        assert report.skipped == 3
        assert report.violations == [{"i": 2}]
        assert not report.ok
        assert "1 violações" in report.summary()


class TestGraph:
    """Testes para G_R."""

    def test_edges(self, primes):
        """r·s arestas ponderadas e r·(s−1) diagonais."""
        g = build_gr(primes)
        assert g.edge_count() == 10
        assert g.weight(((1, 1), (2, 1))) == Fraction(1, 2)
        assert g.weight(((2, 3), (3, 2))) == 1
        with pytest.raises(MalformedCollectionError):
            g.weight(((1, 1), (2, 2)))

    def test_sources_and_sinks(self, primes):
        g = build_gr(primes)
        assert g.source(1) == (1, 1)
        assert g.source(4) == (2, 3)
        assert g.sink(2) == (2, 1)
        assert g.sink(3) == (3, 1)
        assert g.sink(4) == (3, 2)
        with pytest.raises(GuardExceededError):
            g.source(6)

    def test_path_matrix(self, primes_matrix):
        """a12 = 1/x11, a23 = 1/c + 1/b, a15 = 0."""
        assert primes_matrix.shape == (5, 5)
        assert primes_matrix[0, 0] == 1
        assert primes_matrix[0, 1] == Fraction(1, 2)
        assert primes_matrix[1, 2] == Fraction(8, 15)
        assert primes_matrix[0, 4] == 0
        assert primes_matrix[1, 0] == 0


class TestDeterminants:
    """Testes para os determinantes exatos."""

    def test_bareiss(self):
        assert bareiss_determinant([[2, 1], [1, 3]]) == 5
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0
        assert bareiss_determinant([]) == 1
        assert bareiss_determinant([[2, -1, 3], [0, 4, 1], [5, 2, -2]]) == -85

    def test_rational(self):
        matrix = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1)]]
        assert rational_determinant(matrix) == Fraction(5, 12)

    def test_solid_minor(self, primes_matrix):
        assert solid_minor(primes_matrix, 1, 3, 2) == Fraction(1, 210)
        assert solid_minor(primes_matrix, 2, 2, 0) == 1

    def test_desnanot_jacobi(self):
        assert desnanot_jacobi_check([[2, -1, 3], [0, 4, 1], [5, 2, -2]]).ok
        rng = np.random.default_rng(4)
        assert desnanot_jacobi_check(rng.integers(-9, 10, size=(5, 5)).astype(object)).ok


class TestMinorArray:
    """Testes para o arranjo de menores."""

    def test_primes_values(self, primes):
        w = minors_of(primes)
        assert w(1, 3, 2) == Fraction(1, 210)
        assert w(2, 4, 2) == Fraction(1, 5005)
        assert w(1, 2, 1) == Fraction(1, 2)

    def test_conventions(self, primes):
        """W^{(0)} ≡ 1, W^{(−1)} ≡ 0 e zero fora do suporte."""
        w = minors_of(primes)
        assert w(7, 9, 0) == 1
        assert w(1, 1, -1) == 0
        assert w(6, 1, 1) == 0
        assert w(0, 3, 2) == 0

    def test_above_stored_levels(self, primes):
        """Acima de s+1 valem os menores de uma matriz unitriangular por blocos."""
        w = minors_of(primes)
        assert w.max_stored == 4
        assert w(1, 1, 5) == 1
        assert w(1, 2, 5) == 0

    def test_support_order(self, primes_matrix, primes):
        w = minor_array(primes_matrix, primes.rect)
        support = w.support()
        assert support[0] == (1, 1, 1)
        assert [key[2] for key in support] == sorted(key[2] for key in support)

    def test_octahedron(self, primes, labeling_33):
        assert octahedron_check(minors_of(primes)).ok
        assert octahedron_check(minors_of(labeling_33)).ok

    def test_octahedron_detects_perturbation(self, primes):
        w = minors_of(primes)
        assert not octahedron_check(w.with_entry(1, 1, 1, Fraction(2))).ok

    def test_array_toggle(self, primes, labeling_33):
        assert array_toggle_check(minors_of(primes)).ok
        report = array_toggle_check(minors_of(labeling_33))
        assert report.ok
        assert report.counters["ambos_termos"] > 0


class TestOracles:
    """Testes para os oráculos de enumeração de caminhos."""

    def test_chain_sums(self, primes):
        """As três cadeias maximais de [2]×[3] somam 546 + 910 + 1430."""
        families = enumerate_paths(primes.rect.whole(), 1, primes)
        assert sorted(c.weight for c in families) == [546, 910, 1430]
        assert oracle_weight(primes.rect.whole(), 1, primes) == 2886

    def test_two_paths(self, primes):
        families = enumerate_paths(primes.rect.whole(), 2, primes)
        assert len(families) == 1
        assert families[0].weight == 30030

    def test_empty_family(self, primes):
        assert [c.weight for c in enumerate_paths(primes.rect.whole(), 0, primes)] == [1]

    def test_guards(self, primes):
        with pytest.raises(GuardExceededError):
            enumerate_paths(primes.rect.whole(), 7, primes)
        with pytest.raises(GuardExceededError):
            enumerate_paths(primes.rect.whole(), 4, primes)
        assert oracle_weight(Interval(1, 1, 1, 1), 2, primes) == 0

    def test_transpose_symmetry(self, primes):
        whole = primes.rect.whole()
        for k in range(3):
            assert transpose_weight(whole, k, primes) == oracle_weight(whole, k, primes)

    def test_gr_families(self, primes):
        """W_13^{(2)} soma as famílias P_1,P_2 → Q_3,Q_4."""
        families = enumerate_gr_families(build_gr(primes), 1, 3, 2)
        assert sum(c.weight for c in families) == Fraction(1, 210)
        assert enumerate_gr_families(build_gr(primes), 5, 5, 2) == []

    def test_minors_oracle(self, primes):
        assert minors_oracle_check(primes).ok


class TestIntervalWeights:
    """Testes para w_interval e interval_weight."""

    def test_whole_rect(self, primes):
        whole = primes.rect.whole()
        assert w_interval(whole, 0, primes) == 1
        assert w_interval(whole, 1, primes) == 2886
        assert w_interval(whole, 2, primes) == 30030
        assert w_interval(whole, 3, primes) == 30030

    def test_sub_intervals(self, primes):
        assert w_interval(Interval(1, 2, 2, 3), 1, primes) == 1170
        assert w_interval(Interval(1, 1, 1, 1), 1, primes) == 2
        assert w_interval(Interval(2, 2, 1, 3), 1, primes) == 273

    def test_not_anchored(self, labeling_33):
        interval = Interval(2, 2, 2, 2)
        with pytest.raises(CornerAnchorError):
            w_interval(interval, 1, labeling_33)
        assert interval_weight(interval, 1, labeling_33) == labeling_33[(2, 2)]

    def test_k_out_of_range(self, primes):
        with pytest.raises(GuardExceededError):
            w_interval(Interval(1, 2, 2, 3), 3, primes)

    def test_matches_oracle(self, primes, labeling_33):
        assert interval_oracle_check(primes).ok
        assert interval_oracle_check(labeling_33).ok


class TestTileBijection:
    """Testes para a bijeção de ladrilhos."""

    def test_weights(self, primes):
        """Peso da imagem é w(L)/w_I."""
        whole = primes.rect.whole()
        images = [tile_bijection(c, whole, primes) for c in enumerate_paths(whole, 1, primes)]
        assert sum(img.weight for img in images) == Fraction(37, 385)
        assert all(img.k == 2 for img in images)

        (single,) = enumerate_paths(whole, 2, primes)
        assert tile_bijection(single, whole, primes).weight == 1

    def test_rejects_gr_collection(self, primes):
        with pytest.raises(MalformedCollectionError):
            tile_bijection(PathCollection("G_R", (), Fraction(1)), primes.rect.whole(), primes)

    def test_rejects_bad_endpoints(self, primes):
        bad = PathCollection("R", (((1, 2), (2, 2), (2, 3)),), Fraction(455))
        with pytest.raises(MalformedCollectionError):
            tile_bijection(bad, primes.rect.whole(), primes)

    def test_exhaustive(self, primes, labeling_33):
        assert tile_bijection_check(primes).ok
        assert tile_bijection_check(labeling_33).ok
