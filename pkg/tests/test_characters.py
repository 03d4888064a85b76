import pytest

from rigged.bijection import RiggedPartition, e0, e1
from rigged.characters import (
    RestrictedSet,
    RiggingFloor,
    chi_closed,
    chi_general,
    config_sum,
    enumerate_rigged,
    floor_for,
    initial_columns_set,
    member,
    member_floor_difference,
    rigged_sum,
    satisfies_boundary,
)
from rigged.qseries import QPolynomial


def rp(weights, riggings):
    return RiggedPartition.of(tuple(weights), tuple(riggings))


def poly(coeffs, order=None):
    return QPolynomial.from_dict(coeffs, order)


class TestFloors:
    def test_examples(self):
        assert floor_for(1, 0, 1, 1).values == (0,)
        assert floor_for(0, 0, 1, 1).values == (2,)
        assert floor_for(0, 0, 2, 2).values == (2, 4)

    def test_three_block_shape(self):
        assert floor_for(1, 2, 4, 4).values == (0, 1, 2, 4)
        assert floor_for(2, 1, 5, 6).values == (0, 0, 1, 3, 5, 7)

    def test_validation(self):
        with pytest.raises(ValueError):
            floor_for(2, 2, 3, 3)
        with pytest.raises(ValueError):
            floor_for(-1, 0, 2, 2)
        with pytest.raises(ValueError):
            RiggingFloor((0, -1))


class TestMembership:
    def test_floor_and_bump(self):
        one_zero = initial_columns_set(1, 0, 1, 1)
        assert member(rp((1,), (0,)), one_zero, 1)
        assert not member(rp((1,), (1,)), one_zero, 1)

    def test_empty_partition(self):
        assert member(RiggedPartition(), initial_columns_set(0, 0, 2, 3), 3)
        assert not member(RiggedPartition(), initial_columns_set(0, 1, 2, 3), 3)
        assert not member(RiggedPartition(), initial_columns_set(1, 1, 2, 3), 3)

    def test_boundary_ceiling(self):
        floor = RiggingFloor((0,))
        bounded = RestrictedSet(floor, (), 1, boundary=3)
        assert member(rp((1, 1), (0, 0)), bounded, 1)
        assert not member(rp((1, 1), (1, 0)), bounded, 1)

    def test_weight_cap(self):
        capped = RestrictedSet(RiggingFloor((0, 0)), (), 1, boundary=5)
        assert not member(rp((2,), (0,)), capped, 2)

    def test_satisfies_boundary(self):
        assert satisfies_boundary(rp((1, 1), (0, 0)), 1, 3)
        assert not satisfies_boundary(rp((1, 1), (1, 0)), 1, 3)


class TestChiClosed:
    def test_level_one_values(self):
        assert chi_closed(1, 1, 0, 0, 3) == poly({0: 1, 2: 1, 3: 1})
        assert chi_closed(1, 1, 1, 0, 3) == poly({0: 2, 1: 1, 2: 1, 3: 2})

    def test_zero_boundary(self):
        for k, l in ((1, 1), (2, 1), (2, 2), (3, 2)):
            assert chi_closed(k, l, 0, 0, 0) == QPolynomial.one()

    def test_minus_one_convention(self):
        assert chi_closed(2, 2, -1, 1, 4).is_zero

    def test_overshoot_wraps(self):
        # a + b = k + 1 collapses onto the a + b = k column.
        assert chi_closed(2, 2, 1, 2, 4) == chi_closed(2, 2, 1, 1, 4)

    def test_rejects_bad_ranges(self):
        with pytest.raises(ValueError):
            chi_closed(2, 2, 1, 3, 4)
        with pytest.raises(ValueError):
            chi_closed(2, 2, 0, 0, -1)


class TestChiGeneral:
    def test_matches_closed_form(self):
        assert chi_general(1, RiggingFloor((2,)), 3) == chi_closed(1, 1, 0, 0, 3)

    def test_tiny_boundary(self):
        assert chi_general(1, RiggingFloor((0,)), 0) == poly({0: 2})

    def test_huge_floor_leaves_empty_partition(self):
        assert chi_general(2, RiggingFloor((9, 9)), 2) == QPolynomial.one()

    def test_order_cap(self):
        capped = chi_general(1, RiggingFloor((0,)), 6, order_cap=2)
        assert capped.order == 2
        assert capped == chi_closed(1, 1, 1, 0, 6).truncated(2)


class TestConfigSum:
    def test_truncated_series(self):
        assert config_sum(1, 3, max_degree=3) == poly({0: 2, 1: 1, 2: 1, 3: 2}, order=3)

    def test_pinned_columns(self):
        assert config_sum(1, 3, a0=1, a1=0, N=3) == poly({0: 1, 3: 1})

    def test_zero_boundary_with_pins(self):
        for k in (1, 2, 3):
            assert config_sum(k, 3, a0=0, a1=0, N=0) == QPolynomial.one()

    def test_needs_bound(self):
        with pytest.raises(ValueError):
            config_sum(2, 3)


class TestRiggedSum:
    def test_examples(self):
        assert rigged_sum(1, RestrictedSet(RiggingFloor((2,)), (), 1, 3)) == poly({0: 1, 2: 1, 3: 1})
        assert rigged_sum(1, RestrictedSet(RiggingFloor((0,)), (), 1, 3)) == poly(
            {0: 2, 1: 1, 2: 1, 3: 2}
        )

    def test_floor_above_ceiling(self):
        assert rigged_sum(2, RestrictedSet(RiggingFloor((9, 9)), (), 2, 3)) == QPolynomial.one()

    def test_needs_boundary(self):
        with pytest.raises(ValueError):
            rigged_sum(1, RestrictedSet(RiggingFloor((0,)), (), 1, None))

    def test_matches_closed_form(self):
        for k in (1, 2, 3):
            for l in range(1, k + 1):
                for N in range(5):
                    for a in range(k + 1):
                        for b in range(k + 1 - a):
                            brute = rigged_sum(
                                k, RestrictedSet(floor_for(a, b, k, k), (), l, N)
                            )
                            assert brute == chi_closed(k, l, a, b, N), (k, l, a, b, N)


class TestEnumerateRigged:
    def test_small_family(self):
        family = set(enumerate_rigged(1, 1, 3))
        expected = {RiggedPartition()}
        expected |= {rp((1,), (r,)) for r in range(4)}
        expected |= {rp((1, 1), (0, 0))}
        assert family == expected

    def test_respects_floor(self):
        family = set(enumerate_rigged(1, 1, 3, RiggingFloor((2,))))
        assert family == {RiggedPartition(), rp((1,), (2,)), rp((1,), (3,))}

    def test_degrees_match_sum(self):
        rset = RestrictedSet(RiggingFloor((0, 0)), (), 2, 4)
        total = rigged_sum(2, rset)
        degrees = {}
        for part in enumerate_rigged(2, 2, 4):
            d = e0(part.weights, 2) + e1(part.riggings)
            degrees[d] = degrees.get(d, 0) + 1
        assert poly(degrees) == total


class TestSetAlgebra:
    def grid(self, k, l, N):
        return list(enumerate_rigged(k, l, N))

    def test_bump_splits_floor(self):
        # A floor family splits into the bumped family and its complement.
        k, l, N = 2, 2, 4
        floor = RiggingFloor((0, 1))
        for J in (frozenset({1}), frozenset({2}), frozenset({1, 2})):
            raised = RiggingFloor(floor.bumped(J))
            plain = RestrictedSet(floor, (), l, N)
            with_bump = RestrictedSet(floor, (J,), l, N)
            lifted = RestrictedSet(raised, (), l, N)
            for part in self.grid(k, l, N):
                in_plain = member(part, plain, k)
                assert in_plain == (member(part, with_bump, k) or member(part, lifted, k))
                assert not (member(part, with_bump, k) and member(part, lifted, k))

    def test_union_bump_decomposes(self):
        # Disjoint bump sets: bumping their union splits through either one.
        k, l, N = 2, 2, 4
        floor = RiggingFloor((0, 0))
        j1, j2 = frozenset({1}), frozenset({2})
        union = RestrictedSet(floor, (j1 | j2,), l, N)
        first = RestrictedSet(floor, (j1,), l, N)
        second = RestrictedSet(RiggingFloor(floor.bumped(j1)), (j2,), l, N)
        for part in self.grid(k, l, N):
            lhs = member(part, union, k)
            rhs1, rhs2 = member(part, first, k), member(part, second, k)
            assert lhs == (rhs1 or rhs2)
            assert not (rhs1 and rhs2)

    def test_two_bumps_decompose_by_intersection(self):
        k, l, N = 3, 3, 3
        floor = RiggingFloor((0, 0, 1))
        j1, j2 = frozenset({1, 2}), frozenset({2, 3})
        both = RestrictedSet(floor, (j1, j2), l, N)
        meet = RestrictedSet(floor, (j1 & j2,), l, N)
        rest = RestrictedSet(RiggingFloor(floor.bumped(j1 & j2)), (j1 - j2, j2 - j1), l, N)
        for part in self.grid(k, l, N):
            lhs = member(part, both, k)
            rhs1, rhs2 = member(part, meet, k), member(part, rest, k)
            assert lhs == (rhs1 or rhs2)
            assert not (rhs1 and rhs2)

    def test_nested_bumps_collapse(self):
        k, l, N = 2, 2, 4
        floor = RiggingFloor((0, 0))
        j1, j2 = frozenset({1}), frozenset({1, 2})
        nested = RestrictedSet(floor, (j1, j2), l, N)
        single = RestrictedSet(floor, (j1,), l, N)
        for part in self.grid(k, l, N):
            assert member(part, nested, k) == member(part, single, k)

    def test_difference_form_matches_bump_form(self):
        for k in (1, 2):
            for N in range(4):
                for a in range(k + 1):
                    for b in range(k + 1 - a):
                        rset = initial_columns_set(a, b, k, k, boundary=N)
                        for part in self.grid(k, k, N):
                            assert member(part, rset, k) == member_floor_difference(
                                part, a, b, k, N
                            )
