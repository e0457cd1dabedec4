"""Morphisms between trees and words, and the relations that present B.

    phi_CPL: partitioned trees on {1, 2} -> B, 1 -> e, 2 -> x1 (Com-Prelie)
    phi_PL:  rooted trees on positive integers -> B, n -> x1^{n-1} (prelie)
    psi:     rooted trees -> partitioned trees on {1, 2}, n -> 2^{⧢(n-1)}/(n-1)!

with phi_PL = phi_CPL o psi.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from fliess_prelie.algebra import WORDS
from fliess_prelie.errors import DomainError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.ptrees import (
    Node,
    PartitionedTree,
    pt_free_eval_lc,
    pt_multigraft,
    pt_multigraft_lc,
    pt_prelie,
    pt_shuffle_lc,
    vertex,
)
from fliess_prelie.rtrees import B, RootedTree, rt_shuffle
from fliess_prelie.words import EMPTY, X1, BinaryWord, prefix, shuffle_lc, x1_power

CPL_IMAGES = {1: LinComb.monomial(EMPTY), 2: LinComb.monomial(X1)}


def phi_cpl(x: LinComb[PartitionedTree]) -> LinComb[BinaryWord]:
    for t in x.keys():
        for r in t.to_raw().decorations:
            if r not in CPL_IMAGES:
                raise DomainError(f"phi_CPL is defined on decorations 1 and 2, got {r}")
    return pt_free_eval_lc(x, CPL_IMAGES, WORDS)


@lru_cache(maxsize=None)
def phi_pl_tree(t: RootedTree) -> LinComb[BinaryWord]:
    n, k = t.decoration, len(t.children)
    if k >= n:
        return LinComb.zero()
    result = LinComb.monomial(x1_power(n - 1 - k))
    for child in t.children:
        image = phi_pl_tree(child)
        if not image:
            return LinComb.zero()
        result = shuffle_lc(result, prefix("0", image))
    return result


def phi_pl(x: LinComb[RootedTree]) -> LinComb[BinaryWord]:
    return x.map(phi_pl_tree)


def psi_generator(n: int) -> LinComb[PartitionedTree]:
    if n == 1:
        return LinComb.monomial(vertex(1))
    block = PartitionedTree(tuple(Node(2) for _ in range(n - 1)))
    return LinComb.monomial(block, Fraction(1, math.factorial(n - 1)))


@lru_cache(maxsize=None)
def psi_tree(t: RootedTree) -> LinComb[PartitionedTree]:
    return pt_multigraft_lc(psi_generator(t.decoration), [psi_tree(c) for c in t.children])


def psi(x: LinComb[RootedTree]) -> LinComb[PartitionedTree]:
    return x.map(psi_tree)


def diagram_residual(t: RootedTree) -> LinComb[BinaryWord]:
    """phi_PL(t) - phi_CPL(psi(t))."""
    return phi_pl_tree(t) - phi_cpl(psi_tree(t))


def psi_shuffle_pair(t1: RootedTree, t2: RootedTree) -> Tuple[LinComb[PartitionedTree], LinComb[PartitionedTree]]:
    """(psi(t1 ⧢ t2), psi(t1) ⧢ psi(t2)); these differ in general."""
    return psi(rt_shuffle(t1, t2)), pt_shuffle_lc(psi_tree(t1), psi_tree(t2))


# -- relations of the Com-Prelie presentation ----------------------------------------


def _grafted(decoration: int, forest: Sequence[PartitionedTree]) -> LinComb[PartitionedTree]:
    return pt_multigraft(vertex(decoration), forest)


def cpl_relation1(forest: Sequence[PartitionedTree]) -> LinComb[BinaryWord]:
    """phi_CPL(1 • t1...tk), k >= 1."""
    if not forest:
        raise DomainError("relation needs a nonempty forest")
    return phi_cpl(_grafted(1, forest))


def cpl_relation2(forest: Sequence[PartitionedTree]) -> LinComb[BinaryWord]:
    """phi_CPL(2 • t1...tk), k >= 2."""
    if len(forest) < 2:
        raise DomainError("relation needs at least two trees")
    return phi_cpl(_grafted(2, forest))


def cpl_relation3(t: PartitionedTree) -> LinComb[BinaryWord]:
    """phi_CPL(1 ⧢ t - t)."""
    one = LinComb.monomial(vertex(1))
    tt = LinComb.monomial(t)
    return phi_cpl(pt_shuffle_lc(one, tt) - tt)


def cpl_relation4(t: PartitionedTree, t2: PartitionedTree) -> LinComb[BinaryWord]:
    """phi_CPL((2•t)⧢(2•t') - 2•((2•t)⧢t' + t⧢(2•t')))."""
    two = LinComb.monomial(vertex(2))
    a, b = LinComb.monomial(t), LinComb.monomial(t2)
    two_a, two_b = pt_prelie(two, a), pt_prelie(two, b)
    lhs = pt_shuffle_lc(two_a, two_b)
    rhs = pt_prelie(two, pt_shuffle_lc(two_a, b) + pt_shuffle_lc(a, two_b))
    return phi_cpl(lhs - rhs)


# -- relations of the prelie presentation ----------------------------------------------


def pl_relation1(forest: Sequence[RootedTree]) -> LinComb[BinaryWord]:
    """phi_PL(B_1(t1..tk)), k >= 1."""
    if not forest:
        raise DomainError("relation needs a nonempty forest")
    return phi_pl_tree(B(1, *forest))


def pl_relation(
    n: int, i: int, j: int, s_forest: Sequence[RootedTree], t_forest: Sequence[RootedTree]
) -> LinComb[BinaryWord]:
    """phi_PL of B_{n+1}(B_i(S) B_j(T)) - B_n(B_{i+1}(S B_j(T))) - B_n(B_{j+1}(B_i(S) T))."""
    if min(n, i, j) < 1:
        raise DomainError("n, i, j must be >= 1")
    bi = B(i, *s_forest)
    bj = B(j, *t_forest)
    element = (
        LinComb.monomial(B(n + 1, bi, bj))
        - LinComb.monomial(B(n, B(i + 1, *s_forest, bj)))
        - LinComb.monomial(B(n, B(j + 1, bi, *t_forest)))
    )
    return phi_pl(element)
