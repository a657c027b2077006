"""Tests for the scalar bracket functions and parameter containers."""

import dataclasses
import math
from fractions import Fraction

import pytest

from qgatelab import (
    DeformationParams,
    psi_bracket,
    q_bracket,
    q_factorial,
)


class TestQBracket:
    @pytest.mark.parametrize(
        ("n", "q", "expected"),
        [
            (0, 2.0, 0.0),
            (1, 2.0, 1.0),
            (2, 2.0, 2.5),
            (3, 2.0, 5.25),
            (3, 0.5, 5.25),
            (2, 0.5, 2.5),
        ],
    )
    def test_known_values(self, n, q, expected):
        assert q_bracket(n, q) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("n", range(7))
    def test_undeformed_at_q_one(self, n):
        assert q_bracket(n, 1.0) == float(n)

    @pytest.mark.parametrize("q", [0.25, 0.5, 1.5, 3.0, 7.0])
    @pytest.mark.parametrize("n", range(6))
    def test_invariant_under_q_inversion(self, n, q):
        assert q_bracket(n, q) == pytest.approx(q_bracket(n, 1.0 / q), rel=1e-14)

    @pytest.mark.parametrize("q", [0.5, 0.9, 1.1, 2.0])
    def test_recurrence_step(self, q):
        # Climbing one level multiplies by q and adds a q**(-n) correction.
        for n in range(6):
            lhs = q_bracket(n + 1, q) - q * q_bracket(n, q)
            assert lhs == pytest.approx(q ** (-n), rel=1e-13)

    def test_error_near_one_shrinks_at_least_linearly(self):
        # The deviation from the integer value must decay at least as fast
        # as the distance to q = 1 (it is in fact quadratic).  Steps below
        # 1e-5 drown the signal in rounding noise, so stop there.
        coarse = abs(q_bracket(4, 1.0 + 1e-3) - 4.0)
        fine = abs(q_bracket(4, 1.0 + 1e-5) - 4.0)
        assert fine > 0.0
        assert coarse / fine >= 90.0

    @pytest.mark.parametrize("bad_q", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_bad_base(self, bad_q):
        with pytest.raises(ValueError):
            q_bracket(2, bad_q)

    def test_rejects_negative_level(self):
        with pytest.raises(ValueError):
            q_bracket(-1, 2.0)


class TestPsiBracket:
    def test_equal_weights_reduce_to_plain_bracket(self):
        for q in (0.5, 0.9, 1.1, 2.0):
            for n in range(7):
                assert psi_bracket(n, q, 1.0, 1.0) == q_bracket(n, q)

    def test_level_one_with_equal_pair_returns_weight(self):
        # (q * w - w / q) / (q - 1/q) collapses to w for any valid q.
        assert psi_bracket(1, 2.0, 3.0, 3.0) == pytest.approx(3.0, abs=1e-15)
        assert psi_bracket(1, 0.5, 0.25, 0.25) == pytest.approx(0.25, abs=1e-15)

    def test_mixed_pair_value_frozen_by_exact_arithmetic(self):
        # Independent rational evaluation of (q**n * wa - q**-n * wb) / (q - 1/q)
        # at n=2, q=2, wa=1, wb=4: (4 - 1) / (3/2) = 2.
        q = Fraction(2)
        exact = (q**2 * 1 - q**-2 * 4) / (q - 1 / q)
        assert exact == Fraction(2)
        assert psi_bracket(2, 2.0, 1.0, 4.0) == pytest.approx(float(exact), abs=1e-15)

    def test_base_level_measures_weight_imbalance(self):
        # At n=0 the bracket is (wa - wb) / (q - 1/q), nonzero for unequal weights.
        assert psi_bracket(0, 2.0, 1.0, 4.0) == pytest.approx(-2.0, abs=1e-15)
        assert psi_bracket(0, 2.0, 5.0, 5.0) == 0.0

    def test_q_one_allowed_only_for_equal_weights(self):
        assert psi_bracket(3, 1.0, 2.5, 2.5) == pytest.approx(7.5, abs=1e-15)
        with pytest.raises(ValueError):
            psi_bracket(3, 1.0, 1.0, 2.0)

    @pytest.mark.parametrize(("q", "wb"), [(2.0, 1.0), (2.0, 3.0), (0.5, 0.7)])
    def test_shift_identity(self, q, wb):
        # bracket(n+1) - q * bracket(n) == wb * q**(-n), for any wa.
        wa = 1.3
        for n in range(6):
            lhs = psi_bracket(n + 1, q, wa, wb) - q * psi_bracket(n, q, wa, wb)
            assert lhs == pytest.approx(wb * q ** (-n), rel=1e-12)


class TestQFactorial:
    def test_known_value(self):
        # [1] * [2] * [3] at q=2 is 1 * 2.5 * 5.25.
        assert q_factorial(3, 2.0) == pytest.approx(13.125, abs=1e-12)

    def test_empty_product(self):
        assert q_factorial(0, 2.0) == 1.0

    def test_reduces_to_plain_factorial(self):
        assert q_factorial(5, 1.0) == pytest.approx(math.factorial(5), abs=1e-12)


class TestDeformationParams:
    def test_defaults_are_uniform(self):
        params = DeformationParams(q=2.0)
        assert params.psi == (1.0,) * 12
        assert params.s == pytest.approx(math.log(2.0))

    def test_pair_indexing_is_one_based(self):
        params = DeformationParams.from_values(2.0, [1, 2, 3, 4])
        assert params.pair(1) == (1.0, 2.0)
        assert params.pair(2) == (3.0, 4.0)
        assert params.pair(3) == (1.0, 1.0)

    def test_with_pairs_replaces_selected_modes(self):
        base = DeformationParams.uniform(2.0)
        updated = base.with_pairs({2: (5.0, 6.0)})
        assert updated.pair(2) == (5.0, 6.0)
        assert updated.pair(1) == (1.0, 1.0)
        assert base.pair(2) == (1.0, 1.0)

    def test_uniform_fills_every_slot(self):
        params = DeformationParams.uniform(0.5, 3.0)
        assert params.psi == (3.0,) * 12

    def test_from_values_pads_with_ones(self):
        params = DeformationParams.from_values(2.0, [4.0])
        assert params.psi == (4.0,) + (1.0,) * 11

    def test_instances_are_frozen(self):
        params = DeformationParams(q=2.0)
        with pytest.raises(dataclasses.FrozenInstanceError):
            params.q = 3.0

    @pytest.mark.parametrize("bad_q", [0.0, -2.0, math.nan])
    def test_rejects_bad_base(self, bad_q):
        with pytest.raises(ValueError):
            DeformationParams(q=bad_q)

    def test_rejects_wrong_weight_count(self):
        with pytest.raises(ValueError):
            DeformationParams(q=2.0, psi=(1.0, 2.0))

    def test_rejects_pair_index_out_of_range(self):
        params = DeformationParams(q=2.0)
        with pytest.raises(ValueError):
            params.pair(0)
        with pytest.raises(ValueError):
            params.pair(7)
