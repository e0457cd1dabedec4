"""Rooted trees decorated by positive integers.

The free prelie algebra on positive integers, with grafting as product and
a tree of degree equal to the sum of its decorations. B_n(t1..tk) is the
tree with root n and children t1..tk.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, NamedTuple, Sequence, Tuple

from fliess_prelie.algebra import ComPrelieAlgebra
from fliess_prelie.errors import DomainError, StructureError
from fliess_prelie.lincomb import LinComb


class RootedTree(NamedTuple):
    decoration: int
    children: Tuple["RootedTree", ...] = ()

    def __str__(self) -> str:
        if not self.children:
            return str(self.decoration)
        return f"{self.decoration}(" + ",".join(str(c) for c in self.children) + ")"


def B(n: int, *children: RootedTree) -> RootedTree:
    if n < 1:
        raise StructureError(f"decorations must be positive integers, got {n}")
    return RootedTree(n, tuple(sorted(children)))


def ladder(word: Sequence[int]) -> RootedTree:
    """B_{a1}(B_{a2}(...B_{ak}()))."""
    if not word:
        raise DomainError("a ladder needs at least one letter")
    tree = B(word[-1])
    for a in reversed(word[:-1]):
        tree = B(a, tree)
    return tree


@lru_cache(maxsize=None)
def rt_size(t: RootedTree) -> int:
    return 1 + sum(rt_size(c) for c in t.children)


@lru_cache(maxsize=None)
def rt_degree(t: RootedTree) -> int:
    return t.decoration + sum(rt_degree(c) for c in t.children)


def _graftings(t: RootedTree, s: RootedTree) -> List[RootedTree]:
    """One tree per vertex of t: s grafted at that vertex."""
    out = [B(t.decoration, *t.children, s)]
    for i, child in enumerate(t.children):
        for grafted in _graftings(child, s):
            out.append(B(t.decoration, *t.children[:i], grafted, *t.children[i + 1 :]))
    return out


def rt_prelie_trees(t: RootedTree, s: RootedTree) -> LinComb[RootedTree]:
    return LinComb.from_terms((g, 1) for g in _graftings(t, s))


def rt_prelie(x: LinComb[RootedTree], y: LinComb[RootedTree]) -> LinComb[RootedTree]:
    return x.bilinear(y, rt_prelie_trees)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rt_shuffle(t1: RootedTree, t2: RootedTree) -> LinComb[RootedTree]:
    """B_p(S) ⧢ B_q(T) = binom(p+q-k-l-2, p-k-1) B_{p+q-1}(S T)."""
    p, k = t1.decoration, len(t1.children)
    q, l = t2.decoration, len(t2.children)
    coeff = binom(p + q - k - l - 2, p - k - 1)
    if not coeff:
        return LinComb.zero()
    return LinComb.monomial(B(p + q - 1, *t1.children, *t2.children), coeff)


def rt_shuffle_lc(x: LinComb[RootedTree], y: LinComb[RootedTree]) -> LinComb[RootedTree]:
    return x.bilinear(y, rt_shuffle)


class RootedTreeAlgebra(ComPrelieAlgebra):
    name = "rooted-trees"

    def prelie(self, x, y):
        return rt_prelie(x, y)

    def shuffle(self, x, y):
        return rt_shuffle_lc(x, y)


RTREES = RootedTreeAlgebra()


def _multisets_by_weight(items: Sequence[Tuple[int, RootedTree]], total: int) -> List[Tuple[RootedTree, ...]]:
    out: List[Tuple[RootedTree, ...]] = []
    chosen: List[RootedTree] = []

    def go(start: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(items)):
            w, tree = items[i]
            if w <= remaining:
                chosen.append(tree)
                go(i, remaining - w)
                chosen.pop()

    go(0, total)
    return out


@lru_cache(maxsize=None)
def rt_enumerate(degree: int) -> Tuple[RootedTree, ...]:
    """All rooted trees whose decorations sum to ``degree``."""
    if degree < 1:
        raise DomainError(f"degree must be >= 1, got {degree}")
    out = []
    for root in range(1, degree + 1):
        rest = degree - root
        items = sorted(
            ((w, t) for w in range(1, rest + 1) for t in rt_enumerate(w)), key=lambda p: p[1]
        )
        for children in _multisets_by_weight(items, rest):
            out.append(RootedTree(root, children))
    return tuple(sorted(out))


def rt_trees_up_to(vertices: int, max_decoration: int) -> List[RootedTree]:
    """Rooted trees with at most ``vertices`` vertices and decorations <= max_decoration."""
    by_size: List[List[RootedTree]] = [[], [B(d) for d in range(1, max_decoration + 1)]]
    for n in range(2, vertices + 1):
        level = set()
        for m in range(1, n):
            for parent in by_size[m]:
                for child in by_size[n - m]:
                    level.add(B(parent.decoration, *parent.children, child))
        by_size.append(sorted(level))
    return [t for level in by_size for t in level]
