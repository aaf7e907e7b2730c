"""Contraction ratios, exact and sampled alpha, class checks."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcon import (
    ContractionClass,
    TableMap,
    Verdict,
    alpha_exact,
    alpha_sampled,
    check_iterated_class,
    iterate,
    random_instance,
    ratio,
    ratio_limit_probe,
)

from builders import unit_space


def exact_two_phase_ratio(n, idx):
    """Independent rational evaluation of the order-n ratio at x_idx."""
    def coord(j):
        return Fraction(-1, 2**j) if j % 2 == 1 else 1 + Fraction(1, 2**j)

    numer = abs(coord(idx + 2 * n) - coord(idx + n))
    denom = abs(coord(idx + n) - coord(idx))
    return numer / denom


class TestRatio:
    def test_two_phase_order2_is_quarter(self, two_phase):
        space, map_ = two_phase
        for k in (0, 1, 2, 5, 20):
            idx = 2 * k + 1
            assert exact_two_phase_ratio(2, idx) == Fraction(1, 4)
            sample = ratio(space, map_, 2, space.x(idx))
            assert sample.value == 0.25

    def test_five_swap_order6_trivial(self, five_swap):
        space, map_ = five_swap
        for x in space.points():
            sample = ratio(space, map_, 6, x)
            assert sample.trivial
            assert sample.numer == 0 and sample.denom == 0

    def test_four_phase_order3_at_anchor_is_one(self, four_phase):
        space, map_ = four_phase
        sample = ratio(space, map_, 3, space.a_point)
        assert sample.value == 1.0
        # both sides of the inequality equal the anchor gap
        assert sample.numer == 1.0 and sample.denom == 1.0

    def test_exact_rationals_on_finite(self, banach_chain):
        space, map_ = banach_chain
        sample = ratio(space, map_, 2, space.index_of("c16"))
        assert sample.value == Fraction(1, 15)

    def test_order_validated(self, five_swap):
        space, map_ = five_swap
        with pytest.raises(ValueError):
            ratio(space, map_, 0, 0)

    def test_zero_denominator_forces_zero_numerator(self):
        for seed in range(30):
            space, map_ = random_instance(seed, 8)
            for n in (1, 2, 3):
                for x in space.points():
                    s = ratio(space, map_, n, x)
                    if s.denom == 0:
                        assert s.numer == 0 and s.trivial


class TestAlphaExact:
    def test_five_swap_order6_contraction_zero(self, five_swap):
        space, map_ = five_swap
        rep = alpha_exact(space, map_, 6)
        assert rep.verdict is Verdict.CONTRACTION
        assert rep.alpha_min == 0
        assert rep.exact
        assert rep.trivial_count == 5

    def test_five_swap_order1_not_contraction(self, five_swap):
        space, map_ = five_swap
        rep = alpha_exact(space, map_, 1)
        assert rep.verdict is Verdict.NOT_CONTRACTION
        assert rep.alpha_min == 1
        assert rep.witness is not None
        witness_sample = next(s for s in rep.samples if s.point == rep.witness)
        assert witness_sample.value >= 1

    def test_five_swap_intermediate_orders_fail(self, five_swap):
        space, map_ = five_swap
        for n in (2, 3, 4, 5):
            assert alpha_exact(space, map_, n).verdict is Verdict.NOT_CONTRACTION

    def test_identity_map_all_trivial(self):
        space = unit_space(4)
        ident = TableMap(space, (0, 1, 2, 3))
        for n in (1, 2, 3):
            rep = alpha_exact(space, ident, n)
            assert rep.verdict is Verdict.CONTRACTION
            assert rep.alpha_min == 0
            assert rep.trivial_count == 4

    def test_banach_chain_orders(self, banach_chain):
        space, map_ = banach_chain
        rep1 = alpha_exact(space, map_, 1)
        assert rep1.verdict is Verdict.CONTRACTION
        assert rep1.alpha_min == Fraction(1, 3)
        rep2 = alpha_exact(space, map_, 2)
        assert rep2.alpha_min == Fraction(1, 15)

    def test_rejects_sequence_space(self, two_phase):
        space, map_ = two_phase
        with pytest.raises(TypeError):
            alpha_exact(space, map_, 1)

    def test_contraction_bound_holds_pointwise(self):
        # verdict Contraction(alpha) means numer <= alpha * denom exactly
        for seed in range(60):
            space, map_ = random_instance(seed, 7)
            for n in (1, 2, 3):
                rep = alpha_exact(space, map_, n)
                if rep.verdict is Verdict.CONTRACTION:
                    for s in rep.samples:
                        assert s.numer <= rep.alpha_min * s.denom


class TestAlphaSampled:
    def test_two_phase_order2(self, two_phase):
        space, map_ = two_phase
        rep = alpha_sampled(space, map_, 2, index_cap=200)
        assert rep.verdict is Verdict.CONTRACTION
        assert abs(rep.alpha_min - 0.25) <= 1e-12
        assert not rep.exact

    def test_two_phase_order1_inconclusive(self, two_phase):
        space, map_ = two_phase
        rep = alpha_sampled(space, map_, 1, index_cap=200)
        assert rep.verdict is Verdict.INCONCLUSIVE_SAMPLED
        assert rep.alpha_min >= 0.999

    def test_four_phase_order4(self, four_phase):
        space, map_ = four_phase
        rep = alpha_sampled(space, map_, 4, index_cap=200)
        assert rep.verdict is Verdict.CONTRACTION
        assert abs(rep.alpha_min - 0.5) <= 1e-9

    def test_four_phase_low_orders_refuted(self, four_phase):
        space, map_ = four_phase
        for n in (1, 2, 3):
            rep = alpha_sampled(space, map_, n, index_cap=200)
            assert rep.verdict is Verdict.NOT_CONTRACTION
            assert rep.witness is not None

    def test_four_phase_order2_witness_value(self, four_phase):
        space, map_ = four_phase
        rep = alpha_sampled(space, map_, 2, index_cap=200)
        # the third family point already violates: exact ratio 5/3
        bad = next(s for s in rep.samples if s.point == space.x(3))
        assert abs(bad.value - float(Fraction(5, 3))) <= 1e-15

    def test_monotone_in_cap(self, four_phase):
        space, map_ = four_phase
        values = [
            alpha_sampled(space, map_, 1, index_cap=cap).alpha_min
            for cap in (5, 20, 80, 200)
        ]
        assert all(values[i] <= values[i + 1] for i in range(len(values) - 1))

    def test_rejects_finite_space(self, five_swap):
        space, map_ = five_swap
        with pytest.raises(TypeError):
            alpha_sampled(space, map_, 1)


class TestRatioLimitProbe:
    def test_four_phase_order2_probe(self, four_phase):
        space, map_ = four_phase
        val = ratio_limit_probe(space, map_, 2, lambda k: 4 * k - 1, 15)
        # exact rational value of the ratio at x_59, frozen:
        # (1/3^16 - 1/2^16) over (1/2^16 - 1/3^15) = 42981185/42850113
        assert abs(val - float(Fraction(42981185, 42850113))) <= 1e-12
        assert abs(val - 1.0) <= 1e-2

    def test_two_phase_order1_probe(self, two_phase):
        space, map_ = two_phase

        def coord(j):
            return Fraction(-1, 2**j) if j % 2 == 1 else 1 + Fraction(1, 2**j)

        exact = abs(coord(22) - coord(21)) / abs(coord(21) - coord(20))
        val = ratio_limit_probe(space, map_, 1, lambda k: k, 20)
        assert abs(val - float(exact)) <= 1e-12
        assert abs(val - 1.0) <= 1e-4

    def test_four_phase_order4_halving_strand(self, four_phase):
        space, map_ = four_phase
        val = ratio_limit_probe(space, map_, 4, lambda k: 4 * k - 3, 5)
        assert val == 0.5

    def test_selector_out_of_range(self, four_phase):
        from graphcon import InvalidPointError

        space, map_ = four_phase
        with pytest.raises(InvalidPointError):
            ratio_limit_probe(space, map_, 2, lambda k: k - 5, 2)


class TestIteratedClassCheck:
    def test_banach_chain_holds(self, banach_chain):
        space, map_ = banach_chain
        res = check_iterated_class(space, map_, 2, ContractionClass.BANACH, Fraction(1, 4))
        assert res.holds
        assert res.effective_alpha == Fraction(1, 4)
        assert res.tightest == Fraction(1, 12)
        assert alpha_exact(space, map_, 2).alpha_min <= res.effective_alpha

    def test_constant_map_trivially_banach(self):
        space = unit_space(2)
        const = TableMap(space, (0, 0))
        res = check_iterated_class(space, const, 1, ContractionClass.BANACH, Fraction(1, 2))
        assert res.holds
        assert res.effective_alpha == Fraction(1, 2)

    def test_identity_fails_banach(self):
        space = unit_space(2)
        ident = TableMap(space, (0, 1))
        res = check_iterated_class(space, ident, 1, ContractionClass.BANACH, Fraction(9, 10))
        assert not res.holds
        assert res.witness is not None
        x, y = res.witness
        assert x != y

    def test_kannan_constant_square(self):
        space = unit_space(3)
        map_ = TableMap(space, (1, 2, 2))  # T^2 is constant
        res = check_iterated_class(space, map_, 2, ContractionClass.KANNAN, Fraction(2, 5))
        assert res.holds
        assert res.effective_alpha == Fraction(2, 3)
        assert alpha_exact(space, map_, 2).alpha_min <= Fraction(2, 3)

    def test_chatterjea_constant_square(self):
        space = unit_space(4)
        map_ = TableMap(space, (1, 3, 3, 3))
        res = check_iterated_class(space, map_, 2, ContractionClass.CHATTERJEA, Fraction(2, 5))
        assert res.holds
        assert res.effective_alpha == Fraction(2, 3)

    def test_identity_fails_kannan(self):
        # lhs positive while both self-displacements vanish
        space = unit_space(2)
        ident = TableMap(space, (0, 1))
        res = check_iterated_class(space, ident, 1, ContractionClass.KANNAN, Fraction(2, 5))
        assert not res.holds

    def test_alpha_range_validated(self, banach_chain):
        space, map_ = banach_chain
        for bad in (0, 1, Fraction(3, 2), -0.25):
            with pytest.raises(ValueError):
                check_iterated_class(space, map_, 1, ContractionClass.BANACH, bad)

    def test_accepts_decimal_alpha(self, banach_chain):
        space, map_ = banach_chain
        res = check_iterated_class(space, map_, 2, ContractionClass.KANNAN, "0.4")
        assert res.alpha == Fraction(2, 5)


class TestCompositionIdentity:
    def test_order_n_ratio_equals_iterate_order1(self, five_swap):
        space, map_ = five_swap
        for n in (1, 2, 3, 6):
            composed = TableMap(
                space, tuple(iterate(map_, x, n) for x in space.points())
            )
            assert (
                alpha_exact(space, map_, n).alpha_min
                == alpha_exact(space, composed, 1).alpha_min
            )

    @settings(deadline=None, max_examples=40)
    @given(st.integers(min_value=0, max_value=5_000), st.integers(min_value=1, max_value=4))
    def test_on_random_instances(self, seed, n):
        space, map_ = random_instance(seed, 6)
        composed = TableMap(space, tuple(iterate(map_, x, n) for x in space.points()))
        assert (
            alpha_exact(space, map_, n).alpha_min
            == alpha_exact(space, composed, 1).alpha_min
        )
