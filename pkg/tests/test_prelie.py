import pytest
from hypothesis import given

from fliess_prelie.algebra import WORDS
from fliess_prelie.errors import DomainError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.prelie import (
    check_decomposition,
    generator_complement_rank,
    minimal_generators,
    prelie,
    prelie_words,
)
from fliess_prelie.words import EMPTY, X0, X1, BinaryWord, degree, words_of_degree, x1_power
from tests.strategies import algebraic, word_lcs, words


def w(letters):
    return BinaryWord(letters)


PRELIE_TABLE = [
    ("0", "0", {}),
    ("0", "1", {}),
    ("1", "0", {"00": 1}),
    ("1", "1", {"01": 1}),
    ("0", "00", {}),
    ("0", "01", {}),
    ("0", "10", {}),
    ("0", "11", {}),
    ("1", "00", {"000": 1}),
    ("1", "01", {"001": 1}),
    ("1", "10", {"010": 1}),
    ("1", "11", {"011": 1}),
    ("00", "0", {}),
    ("01", "0", {"000": 1}),
    ("10", "0", {"000": 2}),
    ("11", "0", {"100": 1, "010": 1, "001": 1}),
    ("00", "1", {}),
    ("01", "1", {"001": 1}),
    ("10", "1", {"001": 1, "010": 1}),
    ("11", "1", {"101": 1, "011": 2}),
]


class TestPrelieProduct:
    @pytest.mark.parametrize("u, v, terms", PRELIE_TABLE)
    def test_product_table(self, u, v, terms):
        assert prelie_words(w(u), w(v)) == LinComb({w(t): c for t, c in terms.items()})

    def test_x1_times_empty_word(self):
        assert prelie_words(X1, EMPTY) == LinComb.monomial(X0)

    def test_x1_x1_times_empty_word(self):
        assert prelie_words(w("11"), EMPTY) == LinComb({w("10"): 1, w("01"): 1})

    def test_words_without_x1_act_as_zero(self):
        assert prelie_words(EMPTY, X1) == 0
        assert prelie_words(w("00"), w("11")) == 0

    @algebraic
    @given(words(4), words(3))
    def test_degree_is_additive(self, u, v):
        assert all(degree(t) == degree(u) + degree(v) for t in prelie_words(u, v).keys())

    @algebraic
    @given(word_lcs(), word_lcs(), word_lcs())
    def test_prelie_identity(self, x, y, z):
        assert WORDS.prelie_residual(x, y, z) == 0

    @algebraic
    @given(word_lcs(), word_lcs(), word_lcs())
    def test_compatible_with_shuffle(self, x, y, z):
        assert WORDS.comprelie_residual(x, y, z) == 0

    def test_not_associative(self):
        x, y = LinComb.monomial(w("11")), LinComb.monomial(X1)
        assert prelie(prelie(x, y), y) != prelie(x, prelie(y, y))


class TestGenerators:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_products_have_codimension_one(self, n):
        assert generator_complement_rank(n) == len(words_of_degree(n)) - 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_decomposition(self, n):
        assert check_decomposition(n)

    def test_minimal_generators(self):
        found = minimal_generators(6)
        assert [g for g, _ in found] == [x1_power(n) for n in range(6)]
        assert all(outside for _, outside in found)

    def test_rank_needs_positive_degree(self):
        with pytest.raises(DomainError):
            generator_complement_rank(0)
