"""Binary words over {x0, x1}, the shuffle product and the degree gradation."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import total_ordering
from typing import Dict, List, NamedTuple, Sequence, Tuple, TypeVar

from fliess_prelie.errors import DomainError
from fliess_prelie.lincomb import LinComb

T = TypeVar("T")


@total_ordering
@dataclass(frozen=True)
class BinaryWord:
    """A word x_{i1}...x_{in}; ``letters`` is the string of indices, e.g. "011"."""

    letters: str = ""

    def __post_init__(self) -> None:
        if any(ch not in "01" for ch in self.letters):
            raise DomainError(f"binary word letters must be 0 or 1, got {self.letters!r}")

    def __lt__(self, other: "BinaryWord") -> bool:
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        return BinaryWord(self.letters + other.letters)

    def prefixed(self, letter: str) -> "BinaryWord":
        return BinaryWord(letter + self.letters)

    @property
    def head(self) -> str:
        return self.letters[0]

    @property
    def tail(self) -> "BinaryWord":
        return BinaryWord(self.letters[1:])

    def count(self, letter: str) -> int:
        return self.letters.count(letter)

    def __str__(self) -> str:
        return self.letters or "e"

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"


EMPTY = BinaryWord("")
X0 = BinaryWord("0")
X1 = BinaryWord("1")


def x1_power(n: int) -> BinaryWord:
    return BinaryWord("1" * n)


class WordDegree(NamedTuple):
    length: int
    degree: int


def word_degree(w: BinaryWord) -> WordDegree:
    n = len(w)
    return WordDegree(n, n + 1 + w.count("0"))


def degree(w: BinaryWord) -> int:
    return word_degree(w).degree


def lc_degree(x: LinComb[BinaryWord]) -> int:
    """Common degree of a nonzero homogeneous element."""
    degrees = {degree(w) for w in x.keys()}
    if len(degrees) != 1:
        raise DomainError(f"element is not homogeneous (degrees {sorted(degrees)})")
    return degrees.pop()


def interleavings(a: Sequence[T], b: Sequence[T]) -> Dict[Tuple[T, ...], int]:
    """All interleavings of ``a`` and ``b`` with multiplicity, by dynamic programming."""
    memo: Dict[Tuple[int, int], Dict[Tuple[T, ...], int]] = {}

    def go(i: int, j: int) -> Dict[Tuple[T, ...], int]:
        if i == len(a):
            return {tuple(b[j:]): 1}
        if j == len(b):
            return {tuple(a[i:]): 1}
        cached = memo.get((i, j))
        if cached is not None:
            return cached
        out: Dict[Tuple[T, ...], int] = defaultdict(int)
        for w, c in go(i + 1, j).items():
            out[(a[i],) + w] += c
        for w, c in go(i, j + 1).items():
            out[(b[j],) + w] += c
        memo[(i, j)] = dict(out)
        return memo[(i, j)]

    return go(0, 0)


def shuffle(u: BinaryWord, v: BinaryWord) -> LinComb[BinaryWord]:
    return LinComb(
        {BinaryWord("".join(w)): c for w, c in interleavings(u.letters, v.letters).items()}
    )


def shuffle_lc(x: LinComb[BinaryWord], y: LinComb[BinaryWord]) -> LinComb[BinaryWord]:
    return x.bilinear(y, shuffle)


def prefix(letter: str, x: LinComb[BinaryWord]) -> LinComb[BinaryWord]:
    return x.map_keys(lambda w: w.prefixed(letter))


def words_of_length(n: int) -> List[BinaryWord]:
    return [BinaryWord("".join(p)) for p in itertools.product("01", repeat=n)]


def words_up_to_length(n: int) -> List[BinaryWord]:
    return [w for k in range(n + 1) for w in words_of_length(k)]


def words_of_degree(k: int) -> List[BinaryWord]:
    """All words of degree k in canonical order; there are p_k of them."""
    if k < 1:
        raise DomainError(f"degree must be >= 1, got {k}")
    out: List[BinaryWord] = []
    for n in range(k):
        zeros = k - n - 1
        if zeros < 0 or zeros > n:
            continue
        for positions in itertools.combinations(range(n), zeros):
            letters = ["1"] * n
            for p in positions:
                letters[p] = "0"
            out.append(BinaryWord("".join(letters)))
    return sorted(out)


def homogeneous_components(x: LinComb[BinaryWord]) -> Dict[int, LinComb[BinaryWord]]:
    parts: Dict[int, Dict[BinaryWord, object]] = defaultdict(dict)
    for w, c in x.items():
        parts[degree(w)][w] = c
    return {d: LinComb(terms) for d, terms in sorted(parts.items())}
