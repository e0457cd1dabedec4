"""Com-Prelie algebras as a small interface.

A Com-Prelie algebra has a prelie product • and a commutative associative
product ⧢ with (x⧢y)•z = (x•z)⧢y + x⧢(y•z). The symmetric multi-argument
product x • y1...yk is defined from • alone:

    x • (empty) = x
    x • y1...yk = (x • y1...y_{k-1}) • yk - sum_i x • y1...(yi • yk)...y_{k-1}
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Generic, Hashable, Sequence, TypeVar

from fliess_prelie.lincomb import LinComb
from fliess_prelie.prelie import prelie
from fliess_prelie.words import shuffle_lc

K = TypeVar("K", bound=Hashable)


class ComPrelieAlgebra(ABC, Generic[K]):
    name: str = "algebra"

    @abstractmethod
    def prelie(self, x: LinComb[K], y: LinComb[K]) -> LinComb[K]:
        ...

    @abstractmethod
    def shuffle(self, x: LinComb[K], y: LinComb[K]) -> LinComb[K]:
        ...

    def multi_prelie(self, x: LinComb[K], forest: Sequence[LinComb[K]]) -> LinComb[K]:
        if not forest:
            return x
        head, last = list(forest[:-1]), forest[-1]
        result = self.prelie(self.multi_prelie(x, head), last)
        for i in range(len(head)):
            modified = list(head)
            modified[i] = self.prelie(head[i], last)
            result = result - self.multi_prelie(x, modified)
        return result

    def shuffle_all(self, items: Sequence[LinComb[K]]) -> LinComb[K]:
        if not items:
            raise ValueError("shuffle of an empty family has no value without a unit")
        result = items[0]
        for item in items[1:]:
            result = self.shuffle(result, item)
        return result

    # -- axioms -----------------------------------------------------------

    def prelie_residual(self, x: LinComb[K], y: LinComb[K], z: LinComb[K]) -> LinComb[K]:
        """(x•y)•z - x•(y•z) - (x•z)•y + x•(z•y)."""
        p = self.prelie
        return p(p(x, y), z) - p(x, p(y, z)) - p(p(x, z), y) + p(x, p(z, y))

    def comprelie_residual(self, x: LinComb[K], y: LinComb[K], z: LinComb[K]) -> LinComb[K]:
        """(x⧢y)•z - (x•z)⧢y - x⧢(y•z)."""
        p, s = self.prelie, self.shuffle
        return p(s(x, y), z) - s(p(x, z), y) - s(x, p(y, z))

    def shuffle_residuals(self, x: LinComb[K], y: LinComb[K], z: LinComb[K]) -> LinComb[K]:
        """Commutativity and associativity defects of ⧢, summed in a tagged tensor."""
        s = self.shuffle
        comm = (s(x, y) - s(y, x)).map_keys(lambda k: ("comm", k))
        assoc = (s(s(x, y), z) - s(x, s(y, z))).map_keys(lambda k: ("assoc", k))
        return comm + assoc


class WordAlgebra(ComPrelieAlgebra):
    """Binary words with the word prelie product and the shuffle."""

    name = "words"

    def prelie(self, x, y):
        return prelie(x, y)

    def shuffle(self, x, y):
        return shuffle_lc(x, y)


WORDS = WordAlgebra()
