from functools import lru_cache

import pytest

from rigged.bijection import e0, multiplicities
from rigged.qseries import (
    QPolynomial,
    gordon_quadratic_form,
    inv_pochhammer,
    q_binomial,
    quadratic_form_Q,
)


def poly(coeffs, order=None):
    return QPolynomial.from_dict(coeffs, order)


@lru_cache(maxsize=None)
def box_partition_counts(rows: int, max_part: int) -> tuple[tuple[int, int], ...]:
    """Sizes of partitions with at most ``rows`` parts, each at most ``max_part``."""
    if rows == 0:
        return ((0, 1),)
    acc: dict[int, int] = {}
    for first in range(max_part + 1):
        for size, count in box_partition_counts(rows - 1, first):
            acc[size + first] = acc.get(size + first, 0) + count
    return tuple(sorted(acc.items()))


def partitions_with_at_most(parts: int, total: int) -> int:
    """Number of partitions of ``total`` into at most ``parts`` parts."""

    def rec(remaining: int, largest: int, slots: int) -> int:
        if remaining == 0:
            return 1
        if slots == 0:
            return 0
        return sum(rec(remaining - p, p, slots - 1) for p in range(1, min(largest, remaining) + 1))

    return rec(total, total, parts)


class TestArithmetic:
    def test_product(self):
        one_plus_q = poly({0: 1, 1: 1})
        assert one_plus_q * one_plus_q == poly({0: 1, 1: 2, 2: 1})

    def test_cancellation(self):
        p = poly({0: 2, 3: 5})
        assert (p - p).is_zero

    def test_truncation_propagates(self):
        t = poly({0: 1, 1: 1}, order=1)
        assert t * t == poly({0: 1, 1: 2}, order=1)

    def test_mixing_exact_and_truncated(self):
        exact = poly({0: 1, 2: 1})
        series = poly({0: 1}, order=3)
        assert (exact * series).order == 3
        assert (exact + series).order == 3

    def test_int_coercion(self):
        p = poly({1: 1})
        assert p + 1 == poly({0: 1, 1: 1})
        assert 2 * p == poly({1: 2})
        assert 1 - p == poly({0: 1, 1: -1})

    def test_coefficient_lookup(self):
        p = poly({0: 4, 7: -2})
        assert p.coefficient(7) == -2 and p[1] == 0

    def test_degree(self):
        assert poly({0: 1, 5: 3}).degree() == 5
        assert QPolynomial.zero().degree() is None

    def test_rejects_negative_degree(self):
        with pytest.raises(ValueError):
            poly({-1: 1})

    def test_text_form(self):
        assert poly({0: 1, 2: 1, 3: 2}).to_text() == "1 + q^2 + 2*q^3"
        assert poly({1: -1, 4: 3}).to_text() == "-q + 3*q^4"
        assert QPolynomial.zero().to_text() == "0"

    def test_json_roundtrip(self):
        p = poly({0: 1, 2: 10**30}, order=5)
        assert QPolynomial.from_json_dict(p.to_json_dict()) == p


class TestQBinomial:
    def test_examples(self):
        assert q_binomial(5, 0) == QPolynomial.one()
        assert q_binomial(2, 1) == poly({0: 1, 1: 1})
        assert q_binomial(4, 2) == poly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
        assert q_binomial(1, 2).is_zero
        assert q_binomial(3, -1).is_zero

    def test_symmetry_and_degree(self):
        for m in range(11):
            for n in range(m + 1):
                b = q_binomial(m, n)
                assert b == q_binomial(m, m - n)
                assert all(c > 0 for _, c in b.terms)
                assert b.degree() == n * (m - n)

    def test_against_box_partition_oracle(self):
        for m in range(11):
            for n in range(m + 1):
                expected = dict(box_partition_counts(n, m - n))
                assert dict(q_binomial(m, n).terms) == {d: c for d, c in expected.items() if c}


class TestInvPochhammer:
    def test_examples(self):
        assert inv_pochhammer(0, 9) == QPolynomial.one(order=9)
        assert inv_pochhammer(1, 3) == poly({0: 1, 1: 1, 2: 1, 3: 1}, order=3)
        four = inv_pochhammer(2, 4)
        assert [four[j] for j in range(5)] == [1, 1, 2, 2, 3]

    def test_against_partition_oracle(self):
        for m in range(5):
            series = inv_pochhammer(m, 12)
            for j in range(13):
                assert series[j] == partitions_with_at_most(m, j)


class TestQuadraticForm:
    def test_unit_vectors_vanish(self):
        for k in (1, 2, 3, 4):
            for l in range(1, k + 1):
                m = tuple(1 if i == l - 1 else 0 for i in range(k))
                assert quadratic_form_Q(m, k) == 0

    def test_examples(self):
        assert quadratic_form_Q((2,), 1) == 3
        assert quadratic_form_Q((1, 1), 2) == 3

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            quadratic_form_Q((1, 0), 3)

    def test_matches_pairwise_interaction(self):
        # Ground-state energy from multiplicities equals the pairwise sum,
        # across all partitions with at most six parts.
        def partitions(max_part, slots):
            yield ()
            if slots == 0:
                return
            for first in range(1, max_part + 1):
                for rest in partitions(first, slots - 1):
                    yield (first,) + rest

        for k in (1, 2, 3, 4):
            for lam in set(partitions(k, 6)):
                assert quadratic_form_Q(multiplicities(lam, k), k) == e0(lam, k)

    def test_gordon_form_is_integral_and_positive(self):
        assert gordon_quadratic_form((1,)) == 1
        assert gordon_quadratic_form((2,)) == 4
        assert gordon_quadratic_form((1, 1)) == 5
        assert gordon_quadratic_form(()) == 0
