from fractions import Fraction

import pytest

from fliess_prelie.errors import ConsistencyError, DomainError, TruncationError
from fliess_prelie.rtrees import binom
from fliess_prelie.series import (
    PowerSeries1,
    euler_product,
    series_admissible,
    series_bigraded_v,
    series_fh,
    series_fibonacci_fv,
    series_ladders,
)

DIM_V = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
DIM_H = [1, 1, 2, 4, 8, 15, 30, 56, 108, 203, 384]


class TestPowerSeries1:
    def test_geometric_inverse(self):
        one_minus_x = PowerSeries1.from_list([1, -1], 6)
        assert one_minus_x.inverse().integers() == [1] * 7

    def test_division(self):
        x = PowerSeries1.monomial(1, 5)
        q = x / PowerSeries1.from_list([1, -1], 5)
        assert q.integers() == [0, 1, 1, 1, 1, 1]

    def test_products_truncate_at_the_smaller_order(self):
        a = PowerSeries1.from_list([1, 1], 3)
        b = PowerSeries1.from_list([1, 1], 5)
        assert (a * b).order == 3
        assert (a * b).integers() == [1, 2, 1, 0]

    def test_coefficient_beyond_order(self):
        s = PowerSeries1.constant(1, 2)
        assert s.coefficient(-1) == 0
        with pytest.raises(TruncationError):
            s.coefficient(3)

    def test_zero_constant_term_is_not_invertible(self):
        with pytest.raises(DomainError):
            PowerSeries1.monomial(1, 3).inverse()

    def test_integers_rejects_fractions(self):
        with pytest.raises(ConsistencyError):
            PowerSeries1.from_list([Fraction(1, 2)], 0).integers()

    def test_euler_product_counts_partitions(self):
        counts = [0] + [1] * 8
        assert euler_product(counts, 8).integers() == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_euler_product_rejects_negative_counts(self):
        with pytest.raises(DomainError):
            euler_product([0, -1], 2)


class TestGeneratingFunctions:
    def test_fibonacci(self):
        assert series_fibonacci_fv(10).integers() == DIM_V

    def test_dim_h(self):
        assert series_fh(10).integers() == DIM_H

    def test_dim_h_small_orders(self):
        assert series_fh(0).integers() == [1]
        assert series_fh(2).integers() == [1, 1, 2]

    def test_ladders_match_fibonacci(self):
        assert series_ladders(14).integers() == series_fibonacci_fv(14).integers()

    @pytest.mark.parametrize("k", range(1, 13))
    def test_bigraded_coefficients(self, k):
        s = series_bigraded_v(12, 12)
        for n in range(0, 12):
            assert s.coefficient(k, n) == binom(n, k - n - 1)

    def test_bigraded_rows_sum_to_fibonacci(self):
        s = series_bigraded_v(10, 10)
        fib = series_fibonacci_fv(10).integers()
        for k in range(1, 11):
            assert sum(s.coefficient(k, n) for n in range(11)) == fib[k]

    def test_admissible_coefficients(self):
        s = series_admissible(10, 10)
        for n in range(1, 11):
            for k in range(1, 11):
                assert s.coefficient(n, k) == binom(n - k, k - 1)

    @pytest.mark.parametrize(
        "factory", [series_fibonacci_fv, series_ladders, lambda n: series_bigraded_v(n, 1)]
    )
    def test_orders_below_one_are_rejected(self, factory):
        with pytest.raises(DomainError):
            factory(0)
