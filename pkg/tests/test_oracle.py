"""Exhaustive enumeration, random instances, solver crosschecks."""

import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcon import (
    TableMap,
    Verdict,
    alpha_exact,
    crosscheck,
    enumerate_periodic,
    random_instance,
    solve,
    validate_finite,
)

from builders import unit_space


class TestEnumeratePeriodic:
    def test_five_swap_order6(self, five_swap):
        space, map_ = five_swap
        res = enumerate_periodic(space, map_, 6)
        assert dict(res.periodic) == {0: 2, 1: 2, 2: 3, 3: 3, 4: 3}
        assert len(res.orbits) == 2
        orbit_sets = [set(c) for c in res.orbits]
        assert orbit_sets[0] & orbit_sets[1] == set()
        assert res.divisor_ok

    def test_identity_map(self):
        space = unit_space(4)
        ident = TableMap(space, (0, 1, 2, 3))
        res = enumerate_periodic(space, ident, 1)
        assert dict(res.periodic) == {0: 1, 1: 1, 2: 1, 3: 1}
        assert len(res.orbits) == 4

    def test_four_cycle_has_no_order2_points(self, four_cycle):
        space, map_ = four_cycle
        res = enumerate_periodic(space, map_, 2)
        assert res.periodic == ()
        # no contradiction: order 2 is not a contraction here
        assert alpha_exact(space, map_, 2).verdict is Verdict.NOT_CONTRACTION
        assert res.divisor_ok

    def test_full_scan_exhibits_non_divisor_periods(self, four_cycle):
        space, map_ = four_cycle
        res = enumerate_periodic(space, map_, 2, full_scan=True)
        assert dict(res.periodic) == {0: 4, 1: 4, 2: 4, 3: 4}
        assert not res.divisor_ok  # 4 does not divide 2

    def test_orbits_partition_periodic_points(self):
        for seed in range(30):
            space, map_ = random_instance(seed, 8)
            for n in (1, 2, 4, 6):
                res = enumerate_periodic(space, map_, n)
                listed = {p for p, _ in res.periodic}
                in_orbits = [p for cyc in res.orbits for p in cyc]
                assert sorted(in_orbits) == sorted(listed)
                assert len(in_orbits) == len(set(in_orbits))


class TestRandomInstance:
    def test_construction_is_valid(self):
        space, map_ = random_instance(1, 5)
        validate_finite(space.dist)
        assert len(map_.images) == space.size

    def test_deterministic(self):
        a_space, a_map = random_instance(2, 8)
        b_space, b_map = random_instance(2, 8)
        assert a_space == b_space
        assert a_map.images == b_map.images

    def test_seeds_vary(self):
        instances = {random_instance(seed, 8)[0].dist for seed in range(20)}
        assert len(instances) > 10

    def test_respects_size_bounds(self):
        for seed in range(50):
            space, _ = random_instance(seed, 4)
            assert 2 <= space.size <= 4

    def test_max_points_range_enforced(self):
        with pytest.raises(ValueError):
            random_instance(0, 1)
        with pytest.raises(ValueError):
            random_instance(0, 13)

    @settings(deadline=None, max_examples=60)
    @given(st.integers(min_value=0, max_value=10**9))
    def test_any_seed_validates(self, seed):
        space, _ = random_instance(seed, 8)
        validate_finite(space.dist)


class TestCrosscheck:
    def test_five_swap_agrees(self, five_swap):
        space, map_ = five_swap
        sol = solve(space, map_, 6, 0)
        cc = crosscheck(space, map_, 6, sol)
        assert cc.agree
        assert cc.label == "Agree"

    def test_singleton_agrees(self):
        space = unit_space(1)
        map_ = TableMap(space, (0,))
        sol = solve(space, map_, 3, 0)
        cc = crosscheck(space, map_, 3, sol)
        assert cc.agree

    def test_wrong_period_disagrees(self, five_swap):
        space, map_ = five_swap
        sol = solve(space, map_, 6, 0)
        doctored = dataclasses.replace(sol, period=3)
        cc = crosscheck(space, map_, 6, doctored)
        assert not cc.agree
        assert "period" in cc.detail

    def test_wrong_cycle_disagrees(self, five_swap):
        space, map_ = five_swap
        sol = solve(space, map_, 6, 0)
        doctored = dataclasses.replace(sol, cycle=(0, 2))
        cc = crosscheck(space, map_, 6, doctored)
        assert not cc.agree
        assert "cycle" in cc.detail

    def test_non_periodic_representative_disagrees(self, five_swap):
        space, map_ = five_swap
        sol = solve(space, map_, 6, 0)
        doctored = dataclasses.replace(sol, representative=2, period=2)
        # x3 has period 3, not 2
        cc = crosscheck(space, map_, 6, doctored)
        assert not cc.agree


class TestContractionImpliesPeriodic:
    def test_contraction_implies_periodic_points(self):
        # subset of the full acceptance sweep
        qualifying = 0
        for seed in range(60):
            space, map_ = random_instance(seed, 8)
            for n in range(1, 7):
                rep = alpha_exact(space, map_, n)
                if rep.verdict is not Verdict.CONTRACTION:
                    continue
                qualifying += 1
                res = enumerate_periodic(space, map_, n)
                assert res.periodic, f"seed {seed} order {n}: no periodic points"
                assert all(n % p == 0 for _, p in res.periodic)
                assert res.divisor_ok
                for start in space.points():
                    sol = solve(space, map_, n, start)
                    assert crosscheck(space, map_, n, sol).agree
        assert qualifying > 5
