import pytest
from hypothesis import given

from fliess_prelie.admissible import (
    PosWord,
    adm_dimension,
    admissible_words,
    dendriform_left,
    dendriform_residuals,
    dendriform_right,
    dendriform_star,
    is_admissible,
    m_eval,
    m_eval_lc,
    m_prelie,
    star_lc,
    to_m_basis,
)
from fliess_prelie.errors import DomainError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.prelie import prelie
from fliess_prelie.words import EMPTY, X0, BinaryWord, words_of_degree
from tests.strategies import admissible, algebraic, poswords

DIM_V = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def p(*letters):
    return PosWord(letters)


def w(letters):
    return BinaryWord(letters)


class TestDendriform:
    def test_single_letters(self):
        assert dendriform_left(p(1), p(1)) == LinComb.monomial(p(2, 1))
        assert dendriform_right(p(1), p(1)) == LinComb.monomial(p(2, 1))
        assert dendriform_star(p(1), p(1)) == LinComb({p(2, 1): 2})

    def test_left_product(self):
        assert dendriform_left(p(3, 1), p(2)) == LinComb({p(3, 3, 1): 2})

    def test_right_product(self):
        assert dendriform_right(p(1), p(2, 1)) == LinComb({p(2, 2, 1): 2})

    def test_empty_words_are_rejected(self):
        with pytest.raises(DomainError):
            dendriform_left(PosWord(), p(1))

    @algebraic
    @given(poswords(), poswords(), poswords())
    def test_dendriform_axioms(self, x, y, z):
        assert all(r == 0 for r in dendriform_residuals(x, y, z))

    @algebraic
    @given(poswords(), poswords(), poswords())
    def test_star_is_associative(self, x, y, z):
        X, Y, Z = (LinComb.monomial(v) for v in (x, y, z))
        assert star_lc(star_lc(X, Y), Z) == star_lc(X, star_lc(Y, Z))

    @algebraic
    @given(admissible(), admissible())
    def test_star_preserves_admissibility(self, u, v):
        assert all(is_admissible(t) for t in dendriform_star(u, v).keys())


class TestAdmissibleWords:
    def test_admissibility(self):
        assert is_admissible(p(3, 2, 1))
        assert is_admissible(p(1))
        assert not is_admissible(p(1, 2))
        assert not is_admissible(PosWord())

    def test_words_of_small_weight(self):
        assert [str(x) for x in admissible_words(4)] == ["4", "2,2", "3,1"]
        assert [str(x) for x in admissible_words(3)] == ["3", "2,1"]

    @pytest.mark.parametrize("n", range(1, 11))
    def test_counts(self, n):
        words = admissible_words(n)
        assert len(words) == DIM_V[n - 1]
        assert sum(adm_dimension(n, k) for k in range(1, n + 1)) == DIM_V[n - 1]
        for k in range(1, n + 1):
            assert sum(1 for x in words if len(x) == k) == adm_dimension(n, k)

    def test_weight_must_be_positive(self):
        with pytest.raises(DomainError):
            admissible_words(0)


class TestMBasis:
    @pytest.mark.parametrize(
        "word, expected",
        [
            (p(1), LinComb.monomial(EMPTY)),
            (p(2, 1), LinComb.monomial(X0)),
            (p(2, 2), LinComb.monomial(w("01"))),
            (p(3, 1), LinComb({w("10"): 1, w("01"): 1})),
            (p(4), LinComb.monomial(w("111"))),
        ],
    )
    def test_m_eval(self, word, expected):
        assert m_eval(word) == expected

    def test_m_prelie_examples(self):
        assert m_prelie(p(2), p(1)) == LinComb.monomial(p(2, 1))
        assert m_prelie(p(3, 2), p(1)) == LinComb({p(2, 3, 1): 1, p(2, 2, 2): 1, p(3, 2, 1): 1})

    def test_m_prelie_needs_admissible_words(self):
        with pytest.raises(DomainError):
            m_prelie(p(1, 2), p(1))

    @algebraic
    @given(admissible(4), admissible(4))
    def test_m_prelie_matches_the_word_product(self, u, v):
        assert m_eval_lc(m_prelie(u, v)) == prelie(m_eval(u), m_eval(v))

    @algebraic
    @given(admissible(5), admissible(5))
    def test_m_prelie_is_bigraded(self, u, v):
        for t in m_prelie(u, v).keys():
            assert t.weight == u.weight + v.weight
            assert len(t) == len(u) + len(v)

    def test_to_m_basis_examples(self):
        assert to_m_basis(LinComb.monomial(X0), 3) == LinComb.monomial(p(2, 1))
        assert to_m_basis(LinComb.monomial(w("01")), 4) == LinComb.monomial(p(2, 2))
        assert to_m_basis(LinComb.monomial(w("10")), 4) == LinComb({p(3, 1): 1, p(2, 2): -1})
        assert to_m_basis(LinComb.zero(), 4) == 0

    @pytest.mark.parametrize("n", range(1, 8))
    def test_to_m_basis_inverts_m_eval(self, n):
        for c in words_of_degree(n):
            x = LinComb.monomial(c)
            assert m_eval_lc(to_m_basis(x, n)) == x

    def test_to_m_basis_needs_the_stated_degree(self):
        with pytest.raises(DomainError):
            to_m_basis(LinComb.monomial(X0), 4)
