"""Composition of noncommutative series in x0, x1.

A series is either exact (a polynomial, every term stored) or truncated at
a maximal word length L. The reduced composition c õ d is computed word by
word from the recursion

    e õ d = e
    (x0 c) õ d = x0 (c õ d)
    (x1 c) õ d = x1 (c õ d) + x0 (d ⧢ (c õ d))

and extended linearly in c. The full composition is c ∘ d = c õ d + d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from fliess_prelie.errors import DomainError
from fliess_prelie.lincomb import LinComb, Scalar
from fliess_prelie.words import EMPTY, BinaryWord, prefix, shuffle_lc


@dataclass(frozen=True)
class NCSeries:
    body: LinComb[BinaryWord]
    truncation: Optional[int] = None  # None means exact

    def __post_init__(self) -> None:
        if self.truncation is not None:
            if self.truncation < 0:
                raise DomainError("truncation length must be >= 0")
            if any(len(w) > self.truncation for w in self.body.keys()):
                object.__setattr__(self, "body", _cut(self.body, self.truncation))

    @classmethod
    def exact(cls, body: LinComb[BinaryWord]) -> "NCSeries":
        return cls(body, None)

    @classmethod
    def truncated(cls, body: LinComb[BinaryWord], length: int) -> "NCSeries":
        return cls(body, length)

    @property
    def is_exact(self) -> bool:
        return self.truncation is None

    def coefficient(self, w: BinaryWord):
        return self.body.coefficient(w)

    def truncate(self, length: int) -> "NCSeries":
        if self.truncation is not None:
            length = min(length, self.truncation)
        return NCSeries(self.body, length)

    def __add__(self, other: "NCSeries") -> "NCSeries":
        return NCSeries(self.body + other.body, _meet(self.truncation, other.truncation))

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return NCSeries(self.body - other.body, _meet(self.truncation, other.truncation))

    def __mul__(self, factor: Scalar) -> "NCSeries":
        return NCSeries(self.body * factor, self.truncation)

    __rmul__ = __mul__

    def __str__(self) -> str:
        text = self.body.format()
        if self.truncation is None:
            return text
        return f"{text} + O({self.truncation + 1})"


def _meet(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _cut(x: LinComb[BinaryWord], length: Optional[int]) -> LinComb[BinaryWord]:
    if length is None:
        return x
    return x.filter(lambda w: len(w) <= length)


class _WordComposer:
    """Memoized c õ d for the words c of one call, d fixed."""

    def __init__(self, d: LinComb[BinaryWord], limit: Optional[int]):
        self.d = d
        self.limit = limit
        self.memo: Dict[BinaryWord, LinComb[BinaryWord]] = {}

    def __call__(self, c: BinaryWord) -> LinComb[BinaryWord]:
        cached = self.memo.get(c)
        if cached is not None:
            return cached
        if self.limit is not None and len(c) > self.limit:
            result: LinComb[BinaryWord] = LinComb.zero()
        elif c == EMPTY:
            result = LinComb.monomial(EMPTY)
        else:
            rest = self(c.tail)
            # every term of the result is one letter longer than its tail
            inner_limit = None if self.limit is None else self.limit - 1
            rest = _cut(rest, inner_limit)
            if c.head == "0":
                result = prefix("0", rest)
            else:
                result = prefix("1", rest) + prefix("0", _cut(shuffle_lc(self.d, rest), inner_limit))
        self.memo[c] = result
        return result


def reduced_compose(c: NCSeries, d: NCSeries) -> NCSeries:
    limit = _meet(c.truncation, d.truncation)
    composer = _WordComposer(_cut(d.body, limit), limit)
    body = c.body.map(composer)
    return NCSeries(_cut(body, limit), limit)


def compose(c: NCSeries, d: NCSeries) -> NCSeries:
    limit = _meet(c.truncation, d.truncation)
    return NCSeries(reduced_compose(c, d).body + _cut(d.body, limit), limit)
