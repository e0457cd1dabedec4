import pytest
from hypothesis import given

from fliess_prelie.errors import DomainError
from fliess_prelie.fliess import NCSeries, compose, reduced_compose
from fliess_prelie.lincomb import LinComb
from fliess_prelie.words import EMPTY, X0, X1, BinaryWord
from tests.strategies import algebraic, polynomials


ONE = NCSeries.exact(LinComb.monomial(EMPTY))
ZERO = NCSeries.exact(LinComb.zero())


class TestComposition:
    def test_x1_composed_with_one(self):
        c = NCSeries.exact(LinComb.monomial(X1))
        assert reduced_compose(c, ONE).body == LinComb({X1: 1, X0: 1})
        assert str(compose(c, ONE)) == "1*e + 1*0 + 1*1"

    def test_x1_composed_with_x1(self):
        c = NCSeries.exact(LinComb.monomial(X1))
        assert reduced_compose(c, c).body == LinComb({X1: 1, BinaryWord("01"): 1})
        assert compose(c, c).body == LinComb({X1: 2, BinaryWord("01"): 1})

    def test_letter_recursion(self):
        d = NCSeries.exact(LinComb({X1: 1, EMPTY: 2}))
        c = NCSeries.exact(LinComb.monomial(X1))
        inner = reduced_compose(c, d).body
        assert inner == LinComb({X1: 1, BinaryWord("01"): 1, X0: 2})
        prefixed = NCSeries.exact(LinComb.monomial(BinaryWord("01")))
        assert reduced_compose(prefixed, d).body == inner.map_keys(lambda t: X0 + t)

    def test_x0_words_are_left_alone(self):
        c = NCSeries.exact(LinComb.monomial(BinaryWord("00")))
        d = NCSeries.exact(LinComb({X1: 3}))
        assert reduced_compose(c, d).body == LinComb.monomial(BinaryWord("00"))

    def test_x1_x1_composed_with_one(self):
        c = NCSeries.exact(LinComb.monomial(BinaryWord("11")))
        expected = LinComb.from_terms(
            [(BinaryWord("11"), 1), (BinaryWord("10"), 1), (BinaryWord("01"), 1), (BinaryWord("00"), 1)]
        )
        assert reduced_compose(c, ONE).body == expected

    def test_zero_is_a_right_identity(self):
        c = NCSeries.exact(LinComb({X1: 2, BinaryWord("101"): -1}))
        assert compose(c, ZERO).body == c.body

    def test_zero_is_a_left_identity(self):
        d = NCSeries.exact(LinComb({X0: 5, EMPTY: 1}))
        assert compose(ZERO, d).body == d.body

    @algebraic
    @given(polynomials(), polynomials(), polynomials())
    def test_linear_in_the_left_argument(self, a, b, d):
        assert reduced_compose(a + b, d).body == reduced_compose(a, d).body + reduced_compose(b, d).body

    @algebraic
    @given(polynomials(1), polynomials(1), polynomials(1))
    def test_associative(self, f, g, h):
        assert compose(compose(f, g), h).body == compose(f, compose(g, h)).body


class TestTruncation:
    def test_truncated_series_prints_its_order(self):
        s = NCSeries.truncated(LinComb({EMPTY: 1, BinaryWord("011"): 1}), 2)
        assert str(s) == "1*e + O(3)"

    def test_truncation_is_the_meet(self):
        c = NCSeries.truncated(LinComb.monomial(X1), 3)
        d = NCSeries.truncated(LinComb.monomial(EMPTY), 1)
        result = compose(c, d)
        assert result.truncation == 1
        assert result.body == LinComb({EMPTY: 1, X0: 1, X1: 1})

    def test_truncated_result_agrees_with_exact_result(self):
        c = NCSeries.exact(LinComb({BinaryWord("111"): 1, X1: 2}))
        d = NCSeries.exact(LinComb({EMPTY: 1, X1: -1}))
        exact = compose(c, d)
        cut = compose(c.truncate(2), d)
        assert cut.body == exact.body.filter(lambda w: len(w) <= 2)

    def test_negative_truncation_is_rejected(self):
        with pytest.raises(DomainError):
            NCSeries.truncated(LinComb.zero(), -1)
