"""Words over positive integers: the dendriform products and the m_w basis of B.

For nonempty u = a1..ak and v = b1..bl:

  u ≺ v  interleaves a1..a_{k-1} with b1..b_{l-1}(b_l+1), then appends a_k
  u ≻ v  interleaves a1..a_{k-1}(a_k+1) with b1..b_{l-1}, then appends b_l
  u ⋆ v  = u ≺ v + u ≻ v

A word is admissible when every letter but the last is at least 2; the
elements m_w = x1^{a1-1} • (x1^{a2-1} • (... • x1^{ak-1})) over admissible w
form a basis of B.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import List, Sequence, Tuple

import sympy

from fliess_prelie import linalg
from fliess_prelie.errors import ConsistencyError, DomainError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.prelie import prelie
from fliess_prelie.rtrees import binom
from fliess_prelie.words import BinaryWord, degree, interleavings, words_of_degree, x1_power


@total_ordering
@dataclass(frozen=True)
class PosWord:
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any((not isinstance(a, int)) or a < 1 for a in self.letters):
            raise DomainError(f"letters must be positive integers, got {self.letters}")

    @classmethod
    def of(cls, *letters: int) -> "PosWord":
        return cls(tuple(letters))

    def __lt__(self, other: "PosWord") -> bool:
        if not isinstance(other, PosWord):
            return NotImplemented
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "PosWord") -> "PosWord":
        return PosWord(self.letters + other.letters)

    @property
    def weight(self) -> int:
        return sum(self.letters)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.letters)


def is_admissible(w: PosWord) -> bool:
    return bool(w.letters) and all(a >= 2 for a in w.letters[:-1])


def _require_nonempty(*words: PosWord) -> None:
    for w in words:
        if not w.letters:
            raise DomainError("dendriform products need nonempty words")


def _bump_last(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    return letters[:-1] + (letters[-1] + 1,)


def _interleave_then(a: Sequence[int], b: Sequence[int], last: int) -> LinComb[PosWord]:
    return LinComb({PosWord(w + (last,)): c for w, c in interleavings(tuple(a), tuple(b)).items()})


def dendriform_left(u: PosWord, v: PosWord) -> LinComb[PosWord]:
    _require_nonempty(u, v)
    return _interleave_then(u.letters[:-1], _bump_last(v.letters), u.letters[-1])


def dendriform_right(u: PosWord, v: PosWord) -> LinComb[PosWord]:
    _require_nonempty(u, v)
    return _interleave_then(_bump_last(u.letters), v.letters[:-1], v.letters[-1])


def dendriform_star(u: PosWord, v: PosWord) -> LinComb[PosWord]:
    return dendriform_left(u, v) + dendriform_right(u, v)


def left_lc(x: LinComb[PosWord], y: LinComb[PosWord]) -> LinComb[PosWord]:
    return x.bilinear(y, dendriform_left)


def right_lc(x: LinComb[PosWord], y: LinComb[PosWord]) -> LinComb[PosWord]:
    return x.bilinear(y, dendriform_right)


def star_lc(x: LinComb[PosWord], y: LinComb[PosWord]) -> LinComb[PosWord]:
    return x.bilinear(y, dendriform_star)


def dendriform_residuals(x: PosWord, y: PosWord, z: PosWord) -> List[LinComb[PosWord]]:
    """The three dendriform axioms, as residuals."""
    X, Y, Z = (LinComb.monomial(w) for w in (x, y, z))
    return [
        left_lc(left_lc(X, Y), Z) - left_lc(X, star_lc(Y, Z)),
        left_lc(right_lc(X, Y), Z) - right_lc(X, left_lc(Y, Z)),
        right_lc(star_lc(X, Y), Z) - right_lc(X, right_lc(Y, Z)),
    ]


# -- the m_w basis ----------------------------------------------------------------


@lru_cache(maxsize=None)
def m_eval(w: PosWord) -> LinComb[BinaryWord]:
    if not w.letters:
        raise DomainError("m_w needs a nonempty word")
    acc = LinComb.monomial(x1_power(w.letters[-1] - 1))
    for a in reversed(w.letters[:-1]):
        if not acc:
            break
        acc = prelie(LinComb.monomial(x1_power(a - 1)), acc)
    return acc


def m_eval_lc(x: LinComb[PosWord]) -> LinComb[BinaryWord]:
    return x.map(m_eval)


def m_prelie(u: PosWord, v: PosWord) -> LinComb[PosWord]:
    """m_u • m_v in the m basis, by the closed formula."""
    if not (is_admissible(u) and is_admissible(v)):
        raise DomainError(f"m_prelie needs admissible words, got {u} and {v}")
    a = u.letters
    terms = []
    for i in range(len(a) - 1):
        head = PosWord(a[:i] + (a[i] - 1,))
        for w, c in dendriform_star(PosWord(a[i + 1 :]), v).items():
            terms.append((head + w, c))
    terms.append((u + v, 1))
    return LinComb.from_terms((w, c) for w, c in terms if is_admissible(w))


def admissible_words(weight: int) -> List[PosWord]:
    """Admissible words of the given weight, canonical order."""
    if weight < 1:
        raise DomainError(f"weight must be >= 1, got {weight}")
    out: List[PosWord] = []

    def go(prefix: Tuple[int, ...], remaining: int) -> None:
        out.append(PosWord(prefix + (remaining,)))
        for a in range(2, remaining):
            go(prefix + (a,), remaining - a)

    go((), weight)
    return sorted(out)


def adm_dimension(n: int, k: int) -> int:
    """Number of admissible words with k letters and weight n."""
    if n < 1 or k < 1:
        raise DomainError("need n >= 1 and k >= 1")
    return binom(n - k, k - 1)


@lru_cache(maxsize=None)
def _conversion(n: int) -> Tuple[Tuple[PosWord, ...], Tuple[BinaryWord, ...], sympy.Matrix]:
    labels = tuple(admissible_words(n))
    rows = tuple(words_of_degree(n))
    if len(labels) != len(rows):
        raise ConsistencyError(f"degree {n}: {len(labels)} admissible words for {len(rows)} binary words")
    matrix = linalg.column_matrix([m_eval(w) for w in labels], rows)
    return labels, rows, linalg.inverse(matrix)


def to_m_basis(x: LinComb[BinaryWord], n: int) -> LinComb[PosWord]:
    """Coordinates of a degree-n element in the m basis."""
    if any(degree(w) != n for w in x.keys()):
        raise DomainError(f"element is not homogeneous of degree {n}")
    if not x:
        return LinComb.zero()
    labels, rows, inv = _conversion(n)
    vec = linalg.column_matrix([x], rows)
    coords = inv * vec
    result = LinComb(
        {labels[i]: linalg.from_sympy(coords[i, 0]) for i in range(len(labels)) if coords[i, 0] != 0}
    )
    if m_eval_lc(result) != x:
        raise ConsistencyError("basis conversion does not reproduce its input")
    return result
