"""The prelie product on binary words, dual to the prelie coproduct.

    e • d = 0
    (x0 c) • d = x0 (c • d)
    (x1 c) • d = x1 (c • d) + x0 (c ⧢ d)
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

from fliess_prelie import linalg
from fliess_prelie.errors import DomainError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.words import EMPTY, BinaryWord, prefix, shuffle, words_of_degree, x1_power


@lru_cache(maxsize=4096)
def prelie_words(u: BinaryWord, v: BinaryWord) -> LinComb[BinaryWord]:
    if u == EMPTY:
        return LinComb.zero()
    rest = prelie_words(u.tail, v)
    if u.head == "0":
        return prefix("0", rest)
    return prefix("1", rest) + prefix("0", shuffle(u.tail, v))


def prelie(x: LinComb[BinaryWord], y: LinComb[BinaryWord]) -> LinComb[BinaryWord]:
    return x.bilinear(y, prelie_words)


def products_of_degree(n: int) -> List[LinComb[BinaryWord]]:
    """All u • v with deg u + deg v = n."""
    out: List[LinComb[BinaryWord]] = []
    for i in range(1, n):
        for u in words_of_degree(i):
            for v in words_of_degree(n - i):
                p = prelie_words(u, v)
                if p:
                    out.append(p)
    return out


def generator_complement_rank(n: int) -> int:
    """Rank of B•B in degree n; equals p_n - 1."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    return linalg.rank(products_of_degree(n))


def minimal_generators(nmax: int) -> List[Tuple[BinaryWord, bool]]:
    """x1^{n-1} for n <= nmax, each paired with whether it lies outside B•B."""
    out: List[Tuple[BinaryWord, bool]] = []
    for n in range(1, nmax + 1):
        gen = x1_power(n - 1)
        products = products_of_degree(n)
        outside = linalg.rank(products + [LinComb.monomial(gen)]) == linalg.rank(products) + 1
        out.append((gen, outside))
    return out


def check_decomposition(n: int) -> bool:
    """Degree n splits as span(x1^{n-1}) plus the span of products."""
    p_n = len(words_of_degree(n))
    products = products_of_degree(n)
    full = linalg.rank(products + [LinComb.monomial(x1_power(n - 1))])
    return generator_complement_rank(n) == p_n - 1 and full == p_n
