from fractions import Fraction

import pytest
from hypothesis import given

from fliess_prelie.lincomb import LinComb, as_scalar, format_scalar, tensor, tensor_map
from fliess_prelie.words import EMPTY, X0, X1, BinaryWord
from tests.strategies import algebraic, scalars, word_lcs


class TestLinComb:
    def test_cancellation_gives_zero(self):
        x = LinComb.monomial(X1) + LinComb.monomial(X1, -1)
        assert x == LinComb.zero()
        assert x == 0
        assert not x
        assert x.keys() == []

    def test_exact_rational_sum(self):
        x = LinComb.monomial(X0, Fraction(1, 2)) + LinComb.monomial(X0, Fraction(1, 3))
        assert x.coefficient(X0) == Fraction(5, 6)

    def test_zero_coefficients_are_dropped(self):
        x = LinComb({X0: 0, X1: 2})
        assert x.keys() == [X1]
        assert len(x) == 1
        assert X0 not in x

    def test_from_terms_merges_repeated_keys(self):
        x = LinComb.from_terms([(X1, 1), (X0, 2), (X1, 3)])
        assert x.coefficient(X1) == 4
        assert x.coefficient(X0) == 2

    def test_keys_follow_canonical_word_order(self):
        x = LinComb.from_terms([(BinaryWord("10"), 1), (X1, 1), (EMPTY, 1), (BinaryWord("01"), 1)])
        assert [str(w) for w in x.keys()] == ["e", "1", "01", "10"]

    def test_format(self):
        x = LinComb({X1: 2, EMPTY: -1, BinaryWord("01"): Fraction(-1, 2)})
        assert x.format() == "-1*e + 2*1 - 1/2*01"
        assert LinComb.zero().format() == "0"

    def test_mass(self):
        assert LinComb({X0: 3, X1: Fraction(-1, 2)}).mass() == Fraction(5, 2)

    def test_scalar_multiplication(self):
        x = LinComb({X0: 3})
        assert (x * Fraction(1, 3)).coefficient(X0) == 1
        assert 2 * x == x + x
        assert x * 0 == 0

    def test_map_extends_linearly(self):
        x = LinComb({X0: 2, X1: 3})
        doubled = x.map(lambda w: LinComb({w + w: 1, EMPTY: 1}))
        assert doubled == LinComb({BinaryWord("00"): 2, BinaryWord("11"): 3, EMPTY: 5})

    def test_map_keys_collects_collisions(self):
        x = LinComb({X0: 2, X1: 3})
        assert x.map_keys(len) == LinComb({1: 5})

    def test_tensor_and_tensor_map(self):
        a = LinComb({X0: 2})
        b = LinComb({X1: 1, EMPTY: -1})
        t = tensor(a, b)
        assert t == LinComb({(X0, X1): 2, (X0, EMPTY): -2})
        swapped = tensor_map(t, lambda x: LinComb.monomial(x + x), LinComb.monomial)
        assert swapped.coefficient((BinaryWord("00"), X1)) == 2

    def test_lincombs_are_hashable(self):
        assert len({LinComb({X0: 1}), LinComb({X0: 1}), LinComb({X1: 1})}) == 2

    @algebraic
    @given(word_lcs(), word_lcs(), word_lcs())
    def test_abelian_group(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a - a == 0
        assert a + LinComb.zero() == a

    @algebraic
    @given(word_lcs(), word_lcs(), scalars(), scalars())
    def test_vector_space(self, a, b, k, m):
        assert (a + b) * k == a * k + b * k
        assert a * (k + m) == a * k + a * m
        assert (a * k) * m == a * (k * m)


class TestScalars:
    def test_as_scalar(self):
        assert as_scalar("3/4") == Fraction(3, 4)
        assert as_scalar(-2) == Fraction(-2)
        assert as_scalar(Fraction(1, 3)) == Fraction(1, 3)

    def test_as_scalar_rejects_floats_and_bools(self):
        with pytest.raises(TypeError):
            as_scalar(0.5)
        with pytest.raises(TypeError):
            as_scalar(True)

    def test_format_scalar(self):
        assert format_scalar(Fraction(-3, 2)) == "-3/2"
        assert format_scalar(Fraction(4, 2)) == "2"
