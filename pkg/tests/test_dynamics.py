"""
Testes para toggles, rowmotion e mapas de transferência.
"""

from dataclasses import replace
from fractions import Fraction

import pytest

from rowmotion_report.algebra import BIRATIONAL, TROPICAL, tropical_algebra
from rowmotion_report.dynamics import (
    Labeling,
    OrbitTable,
    conjugated_rowmotion,
    dual_transfer,
    dual_transfer_inverse,
    partial_rowmotion,
    partial_rowmotion_inverse,
    rowmotion,
    rowmotion_inverse,
    rowmotion_power,
    shifted_labeling,
    toggle,
    toggles_commute,
    transfer,
    transfer_inverse,
)
from rowmotion_report.poset import Interval, Rect, linear_extension
from rowmotion_report.suite import random_order_polytope_point
from rowmotion_report.utils import AlgebraDomainError, CellRangeError, IdentityViolationError


class TestLabeling:
    """Testes para Labeling."""

    def test_from_rows(self, primes):
        assert primes.rect == Rect(2, 3)
        assert primes[(1, 3)] == 11
        assert primes[(2, 1)] == 3
        assert primes.rows() == [[2, 5, 11], [3, 7, 13]]

    def test_missing_cell(self):
        with pytest.raises(CellRangeError):
            Labeling.from_mapping(Rect(1, 2), {(1, 1): 1})

    def test_outside_cell(self):
        with pytest.raises(CellRangeError):
            Labeling.from_mapping(Rect(1, 1), {(1, 1): 1, (2, 1): 1})

    def test_nonpositive(self):
        with pytest.raises(AlgebraDomainError):
            Labeling.from_rows([[1, 0]])
        assert Labeling.from_rows([[1, 0]], TROPICAL)[(1, 2)] == 0

    def test_transpose(self, primes):
        transposed = primes.transpose()
        assert transposed.rect == Rect(3, 2)
        assert transposed[(3, 2)] == 13
        assert transposed.transpose() == primes

    def test_describe(self, primes):
        assert primes.describe() == "2 5 11; 3 7 13"

    def test_hashable(self, primes):
        """Rotulagens iguais têm o mesmo hash e servem de chave."""
        same = Labeling.from_rows([[2, 5, 11], [3, 7, 13]])
        assert hash(same) == hash(primes)
        assert len({primes, same, primes.transpose()}) == 2
        assert {primes: "primos"}[same] == "primos"


class TestToggle:
    """Testes para o toggle genérico."""

    def test_birational_single_cell(self):
        """Em [1]×[1], t(x) = 1/x."""
        assert toggle(Labeling.from_rows([[5]]), (1, 1))[(1, 1)] == Fraction(1, 5)

    def test_tropical_single_cell(self):
        """No politopo de ordem com teto 1, t(x) = 1 − x."""
        x = Labeling.from_rows([["1/3"]], TROPICAL)
        assert toggle(x, (1, 1), TROPICAL)[(1, 1)] == Fraction(2, 3)

    def test_only_one_coordinate_changes(self, primes):
        moved = toggle(primes, (1, 2))
        assert moved[(1, 2)] == Fraction(2) * parallel(Fraction(7), Fraction(11)) / 5
        assert all(moved[c] == primes[c] for c in primes.rect.cells() if c != (1, 2))

    def test_involution(self, labeling_34):
        for p in labeling_34.rect.cells():
            assert toggle(toggle(labeling_34, p), p) == labeling_34

    def test_commutation(self, labeling_34):
        """Toggles sem relação de cobertura comutam."""
        assert toggles_commute(labeling_34, (1, 1), (2, 2))
        assert toggles_commute(labeling_34, (1, 3), (3, 1))

    def test_cover_pair_does_not_commute(self):
        """Em [1]×[2] com x = (2, 3): ordens diferentes dão (1/3, 2/3) e (3/2, 1/2)."""
        x = Labeling.from_rows([[2, 3]])
        assert not toggles_commute(x, (1, 1), (1, 2))


def parallel(a, b):
    return a * b / (a + b)


class TestRowmotion:
    """Testes para rowmotion e rowmotion parcial."""

    def test_inverse(self, labeling_34):
        assert rowmotion_inverse(rowmotion(labeling_34)) == labeling_34
        assert rowmotion(rowmotion_inverse(labeling_34)) == labeling_34

    def test_period(self, labeling_33):
        """ρ^{r+s} = id no birracional."""
        assert rowmotion_power(labeling_33, 6) == labeling_33
        assert rowmotion_power(labeling_33, -6) == labeling_33

    def test_period_is_exact(self, primes):
        assert rowmotion_power(primes, 1) != primes

    def test_extension_independent(self, labeling_34):
        alternative = linear_extension(labeling_34.rect, reverse_within_rank=True)
        assert rowmotion(labeling_34, extension=alternative) == rowmotion(labeling_34)

    def test_primes_inverse_value(self, primes):
        """ρ^{-1}(φ^{-1}(x))_22 = 1170."""
        assert rowmotion_inverse(transfer_inverse(primes))[(2, 2)] == 1170

    def test_partial_whole(self, labeling_34):
        whole = labeling_34.rect.whole()
        assert partial_rowmotion(labeling_34, whole) == rowmotion(labeling_34)
        assert partial_rowmotion_inverse(labeling_34, whole) == rowmotion_inverse(labeling_34)

    def test_partial_single_cell(self, labeling_34):
        assert partial_rowmotion(labeling_34, Interval(2, 2, 3, 3)) == toggle(labeling_34, (2, 3))

    def test_partial_outside(self, primes):
        with pytest.raises(CellRangeError):
            partial_rowmotion(primes, Interval(1, 3, 1, 1))

    def test_pl_period(self):
        """Rowmotion linear por partes tem ordem r+s no politopo de ordem."""
        point = random_order_polytope_point(Rect(3, 4), 9)
        assert rowmotion_power(point, 7, TROPICAL) == point


class TestTransfers:
    """Testes para φ, φ* e inversas."""

    def test_transfer_inverse_primes(self, primes):
        """y_ij soma as cadeias maximais de [i]×[j]."""
        y = transfer_inverse(primes)
        assert y[(1, 1)] == 2
        assert y[(1, 2)] == 10
        assert y[(1, 3)] == 110
        assert y[(2, 1)] == 6
        assert y[(2, 2)] == 112
        assert y[(2, 3)] == 2886

    def test_round_trips(self, labeling_34):
        assert transfer(transfer_inverse(labeling_34)) == labeling_34
        assert transfer_inverse(transfer(labeling_34)) == labeling_34
        assert dual_transfer(dual_transfer_inverse(labeling_34)) == labeling_34

    def test_dual_transfer_inverse_primes(self, primes):
        assert dual_transfer_inverse(primes)[(1, 1)] == 2886
        assert dual_transfer_inverse(primes)[(2, 3)] == 13

    def test_birational_duality(self, primes, labeling_34):
        """ρ(φ^{-1}(x))_p · (φ*)^{-1}(x)_p = 1."""
        for x in (primes, labeling_34):
            moved = rowmotion(transfer_inverse(x))
            dual = dual_transfer_inverse(x)
            assert all(moved[c] * dual[c] == 1 for c in x.rect.cells())

    def test_tropical_duality_ceiling_zero(self, chain_point_33):
        naive = tropical_algebra(Fraction(0))
        moved = rowmotion(transfer_inverse(chain_point_33, naive), naive)
        dual = dual_transfer_inverse(chain_point_33, naive)
        assert all(moved[c] == -dual[c] for c in chain_point_33.rect.cells())

    def test_shifted_labeling(self, primes):
        """x̃_11 · x̃_21 = 35."""
        z = shifted_labeling(primes)
        assert z[(1, 1)] * z[(2, 1)] == 35

    def test_conjugated_rowmotion(self, primes):
        assert conjugated_rowmotion(primes) == transfer(rowmotion(transfer_inverse(primes)))

    @pytest.mark.parametrize("inverse", [transfer_inverse, dual_transfer_inverse])
    def test_inverse_rejects_nonpositive(self, inverse):
        """Rótulo não positivo é erro de domínio no birracional, como em φ."""
        x = Labeling(Rect(1, 2), {(1, 1): Fraction(-2), (1, 2): Fraction(3)})
        with pytest.raises(AlgebraDomainError):
            transfer(x)
        with pytest.raises(AlgebraDomainError):
            inverse(x)

    @pytest.mark.parametrize("inverse", [transfer_inverse, dual_transfer_inverse])
    def test_inverse_rejects_zero_after_replace(self, primes, inverse):
        with pytest.raises(AlgebraDomainError):
            inverse(primes.replace({(2, 2): 0}))

    @pytest.mark.parametrize("inverse", [transfer_inverse, dual_transfer_inverse])
    def test_inverse_tropical_accepts_negative(self, inverse):
        x = Labeling(Rect(1, 2), {(1, 1): Fraction(-2), (1, 2): Fraction(3)})
        assert inverse(x, TROPICAL).rect == Rect(1, 2)


class TestOrbitTable:
    """Testes para OrbitTable."""

    def test_primes_orbit(self, primes):
        """ρ^k(y)_22 para k = 0..−4."""
        table = OrbitTable(transfer_inverse(primes))
        expected = [112, 1170, Fraction(1, 10), Fraction(37, 385), Fraction(1, 91)]
        assert [table.entry((2, 2), -k) for k in range(5)] == expected

    def test_period_reduction(self, labeling_33):
        table = OrbitTable(transfer_inverse(labeling_33))
        assert table.verify_period()
        assert table.power(8) == table.power(2)
        assert table.power(-1) == table.power(5)
        table.require_period()

    def test_require_period_fails_for_broken_algebra(self):
        """Um toggle que só aumenta os rótulos não tem ordem finita."""
        broken = replace(BIRATIONAL, name="crescente", quotient=lambda a, b: a + b)
        table = OrbitTable(Labeling.constant(Rect(2, 2)), broken)
        with pytest.raises(IdentityViolationError):
            table.require_period()
