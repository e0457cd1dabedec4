"""Decorated partitioned trees, the free Com-Prelie algebra.

A partitioned tree is a rooted forest whose vertices are partitioned into
blocks; each block is either the set of all roots or a set of children of
one vertex. Trees are kept in canonical form:

  - a vertex is ``Node(decoration, blocks)`` where ``blocks`` is the sorted
    tuple of its child blocks, each block a sorted tuple of Nodes;
  - a tree is its sorted root block.

Since blocks only ever group siblings or roots, this bottom-up encoding is a
complete isomorphism invariant. Vertex ids used for grafting are preorder
indices of the canonical form (see ``PartitionedTree.to_raw``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import (
    Dict,
    Hashable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from fliess_prelie.algebra import ComPrelieAlgebra
from fliess_prelie.errors import ConsistencyError, DomainError, StructureError
from fliess_prelie.lincomb import LinComb
from fliess_prelie.series import euler_product

Block = Tuple["Node", ...]


class Node(NamedTuple):
    decoration: int
    blocks: Tuple[Block, ...] = ()


def make_node(decoration: int, blocks: Sequence[Sequence[Node]] = ()) -> Node:
    if decoration < 1:
        raise StructureError(f"decorations must be positive integers, got {decoration}")
    if any(len(b) == 0 for b in blocks):
        raise StructureError("child blocks must be nonempty")
    return Node(decoration, tuple(sorted(tuple(sorted(b)) for b in blocks)))


@lru_cache(maxsize=None)
def node_size(node: Node) -> int:
    return 1 + sum(node_size(m) for b in node.blocks for m in b)


@dataclass(frozen=True, order=True)
class PartitionedTree:
    size: int = field(init=False, repr=False)
    roots: Tuple[Node, ...]

    def __post_init__(self) -> None:
        if not self.roots:
            raise StructureError("a partitioned tree has at least one root")
        ordered = tuple(sorted(self.roots))
        if ordered != self.roots:
            object.__setattr__(self, "roots", ordered)
        object.__setattr__(self, "size", sum(node_size(r) for r in ordered))

    def block_count(self) -> int:
        def count(node: Node) -> int:
            return len(node.blocks) + sum(count(m) for b in node.blocks for m in b)

        return 1 + sum(count(r) for r in self.roots)

    def to_raw(self) -> "RawPartitionedTree":
        """Labelled form with preorder vertex ids and integer block labels."""
        raw = RawPartitionedTree([], [], [])
        next_block = itertools.count(1)

        def visit(node: Node, parent: Optional[int], block: int) -> None:
            vid = len(raw.decorations)
            raw.decorations.append(node.decoration)
            raw.parents.append(parent)
            raw.blocks.append(block)
            for b in node.blocks:
                label = next(next_block)
                for member in b:
                    visit(member, vid, label)

        for r in self.roots:
            visit(r, None, 0)
        return raw

    def __str__(self) -> str:
        return "{" + " ".join(_format_node(r) for r in self.roots) + "}"


def _format_node(node: Node) -> str:
    if not node.blocks:
        return str(node.decoration)
    inner = "".join("{" + " ".join(_format_node(m) for m in b) + "}" for b in node.blocks)
    return f"{node.decoration}({inner})"


@dataclass
class RawPartitionedTree:
    """A labelled partitioned tree: vertex i has ``decorations[i]``,
    ``parents[i]`` (None for roots) and block label ``blocks[i]``."""

    decorations: List[int]
    parents: List[Optional[int]]
    blocks: List[Hashable]


def vertex(decoration: int) -> PartitionedTree:
    return PartitionedTree((make_node(decoration),))


def from_block(block: Sequence[Node]) -> PartitionedTree:
    return PartitionedTree(tuple(block))


def pt_canonical(raw: RawPartitionedTree) -> PartitionedTree:
    n = len(raw.decorations)
    if n == 0 or len(raw.parents) != n or len(raw.blocks) != n:
        raise StructureError("raw tree needs one decoration, parent and block per vertex")
    block_parent: Dict[Hashable, Optional[int]] = {}
    children: Dict[Optional[int], Dict[Hashable, List[int]]] = {}
    for v in range(n):
        p = raw.parents[v]
        if p is not None and not 0 <= p < n:
            raise StructureError(f"vertex {v} has invalid parent {p}")
        label = raw.blocks[v]
        if block_parent.setdefault(label, p) != p:
            raise StructureError(f"block {label!r} spans different parents")
        children.setdefault(p, {}).setdefault(label, []).append(v)
    roots = children.get(None, {})
    if len(roots) != 1:
        raise StructureError("all roots must lie in one block")

    seen = set()

    def build(v: int) -> Node:
        if v in seen:
            raise StructureError("parent links contain a cycle")
        seen.add(v)
        blocks = [[build(c) for c in members] for members in children.get(v, {}).values()]
        return make_node(raw.decorations[v], blocks)

    (root_members,) = roots.values()
    tree = PartitionedTree(tuple(build(v) for v in root_members))
    if len(seen) != n:
        raise StructureError("some vertices are not reachable from the roots")
    return tree


def _graft_raw(
    base: RawPartitionedTree, targets: Sequence[int], forest: Sequence[PartitionedTree]
) -> PartitionedTree:
    decorations = list(base.decorations)
    parents = list(base.parents)
    blocks: List[Hashable] = [("base", b) for b in base.blocks]
    for index, (s, t) in enumerate(zip(targets, forest)):
        offset = len(decorations)
        raw = t.to_raw()
        decorations.extend(raw.decorations)
        parents.extend(s if p is None else p + offset for p in raw.parents)
        blocks.extend(("graft", index, b) for b in raw.blocks)
    return pt_canonical(RawPartitionedTree(decorations, parents, blocks))


def pt_graft(t: PartitionedTree, s: int, t2: PartitionedTree) -> PartitionedTree:
    """Graft all roots of t2, as one child block, on vertex s of t."""
    if not 0 <= s < t.size:
        raise StructureError(f"vertex id {s} out of range for a tree with {t.size} vertices")
    return _graft_raw(t.to_raw(), [s], [t2])


def pt_shuffle(t1: PartitionedTree, t2: PartitionedTree) -> PartitionedTree:
    return PartitionedTree(t1.roots + t2.roots)


def pt_shuffle_lc(x: LinComb[PartitionedTree], y: LinComb[PartitionedTree]) -> LinComb[PartitionedTree]:
    return x.bilinear(y, lambda a, b: LinComb.monomial(pt_shuffle(a, b)))


def pt_multigraft(t: PartitionedTree, forest: Sequence[PartitionedTree]) -> LinComb[PartitionedTree]:
    """t • t1...tk: sum over all k-tuples of target vertices."""
    if not forest:
        return LinComb.monomial(t)
    base = t.to_raw()
    return LinComb.from_terms(
        (_graft_raw(base, targets, forest), 1)
        for targets in itertools.product(range(t.size), repeat=len(forest))
    )


def pt_prelie_trees(t: PartitionedTree, t2: PartitionedTree) -> LinComb[PartitionedTree]:
    return pt_multigraft(t, [t2])


def pt_prelie(x: LinComb[PartitionedTree], y: LinComb[PartitionedTree]) -> LinComb[PartitionedTree]:
    return x.bilinear(y, pt_prelie_trees)


def pt_multigraft_lc(
    x: LinComb[PartitionedTree], forest: Sequence[LinComb[PartitionedTree]]
) -> LinComb[PartitionedTree]:
    """Multilinear extension of ``pt_multigraft``."""
    terms = []
    for t, c in x.items():
        for choice in itertools.product(*(f.items() for f in forest)):
            coeff = c
            for _, k in choice:
                coeff *= k
            for out, k in pt_multigraft(t, [tree for tree, _ in choice]).items():
                terms.append((out, coeff * k))
    return LinComb.from_terms(terms)


class PartitionedTreeAlgebra(ComPrelieAlgebra):
    name = "partitioned-trees"

    def prelie(self, x, y):
        return pt_prelie(x, y)

    def shuffle(self, x, y):
        return pt_shuffle_lc(x, y)

    def multi_prelie(self, x, forest):
        return pt_multigraft_lc(x, forest)


PTREES = PartitionedTreeAlgebra()


# -- universal property ---------------------------------------------------------


def child_trees(node: Node) -> List[PartitionedTree]:
    """The partitioned trees whose root blocks are the child blocks of ``node``."""
    return [from_block(b) for b in node.blocks]


def pt_free_eval(
    t: PartitionedTree,
    images: Mapping[int, LinComb],
    target: ComPrelieAlgebra,
    memo: Optional[Dict[PartitionedTree, LinComb]] = None,
) -> LinComb:
    """Value at t of the Com-Prelie morphism sending vertex d to images[d].

    Each root contributes images[d] • (values of its child-block trees); the
    roots are then shuffled together.
    """
    if memo is None:
        memo = {}
    cached = memo.get(t)
    if cached is not None:
        return cached
    parts = []
    for root in t.roots:
        if root.decoration not in images:
            raise DomainError(f"no image given for decoration {root.decoration}")
        args = [pt_free_eval(c, images, target, memo) for c in child_trees(root)]
        parts.append(target.multi_prelie(images[root.decoration], args))
    value = target.shuffle_all(parts)
    memo[t] = value
    return value


def pt_free_eval_lc(
    x: LinComb[PartitionedTree], images: Mapping[int, LinComb], target: ComPrelieAlgebra
) -> LinComb:
    memo: Dict[PartitionedTree, LinComb] = {}
    return x.map(lambda t: pt_free_eval(t, images, target, memo))


# -- enumeration ------------------------------------------------------------------


def _multisets(items: Sequence[Tuple[int, object]], total: int) -> List[tuple]:
    """Sorted multisets of ``items`` (pre-sorted (size, item) pairs) of total size."""
    out: List[tuple] = []
    chosen: List[object] = []

    def go(start: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(items)):
            size, item = items[i]
            if size <= remaining:
                chosen.append(item)
                go(i, remaining - size)
                chosen.pop()

    go(0, total)
    return out


@lru_cache(maxsize=None)
def _nodes(n: int, d: int) -> Tuple[Node, ...]:
    """Single-root trees with n vertices."""
    out = []
    for blockset in _blocksets(n - 1, d):
        for dec in range(1, d + 1):
            out.append(Node(dec, blockset))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _blocks(m: int, d: int) -> Tuple[Block, ...]:
    """Nonempty blocks of nodes with m vertices in total."""
    items = sorted(((node_size(x), x) for s in range(1, m + 1) for x in _nodes(s, d)), key=lambda p: p[1])
    return tuple(sorted(_multisets(items, m)))


@lru_cache(maxsize=None)
def _blocksets(m: int, d: int) -> Tuple[Tuple[Block, ...], ...]:
    """Multisets of blocks with m vertices in total (the empty one when m = 0)."""
    if m == 0:
        return ((),)
    items = sorted(((s, b) for s in range(1, m + 1) for b in _blocks(s, d)), key=lambda p: p[1])
    return tuple(_multisets(items, m))


def pt_enumerate(n: int, d: int) -> List[PartitionedTree]:
    """All partitioned trees with n vertices decorated in {1..d}, canonical order."""
    if n < 1 or d < 1:
        raise DomainError("need n >= 1 and d >= 1")
    return [PartitionedTree(b) for b in _blocks(n, d)]


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {value}")
    return value.numerator


def pt_counts_by_series(nmax: int, d: int) -> Tuple[List[int], List[int]]:
    """(f_1..f_nmax, t_1..t_nmax) from F = prod 1/(1-X^k)^{t_k}, T = dX prod 1/(1-X^k)^{f_k}.

    f_n counts partitioned trees with n vertices, t_n those with a single root.
    """
    if nmax < 1 or d < 1:
        raise DomainError("need nmax >= 1 and d >= 1")
    f = [0] * (nmax + 1)
    t = [0] * (nmax + 1)
    for n in range(1, nmax + 1):
        tail = euler_product(f[:n], n - 1)
        t[n] = d * _integral(tail.coefficient(n - 1), f"t_{n}")
        forest = euler_product(t[: n + 1], n)
        f[n] = _integral(forest.coefficient(n), f"f_{n}")
    return f[1:], t[1:]


def census_polynomial(n: int, d: int) -> int:
    """Closed forms of f_n(d) for n <= 5."""
    polys = {
        1: (d, 1),
        2: (d * (3 * d + 1), 2),
        3: (d * (19 * d**2 + 9 * d + 2), 6),
        4: (d * (63 * d**3 + 34 * d**2 + 13 * d + 2), 8),
        5: (d * (644 * d**4 + 400 * d**3 + 175 * d**2 + 35 * d + 6), 30),
    }
    if n not in polys:
        raise DomainError(f"closed form known only for 1 <= n <= 5, got {n}")
    num, den = polys[n]
    return _integral(Fraction(num, den), f"f_{n}({d})")


# -- rigidity coproduct -----------------------------------------------------------


def rigidity_coproduct_tree(t: PartitionedTree) -> LinComb:
    """(1/k) sum over roots i and child blocks j of (t minus t_ij) ⊗ t_ij."""
    k = len(t.roots)
    terms = []
    for i, root in enumerate(t.roots):
        for j, block in enumerate(root.blocks):
            pruned = Node(root.decoration, root.blocks[:j] + root.blocks[j + 1 :])
            rest = PartitionedTree(t.roots[:i] + (pruned,) + t.roots[i + 1 :])
            terms.append(((rest, from_block(block)), Fraction(1, k)))
    return LinComb.from_terms(terms)


def pt_rigidity_coproduct(x: LinComb[PartitionedTree]) -> LinComb:
    return x.map(rigidity_coproduct_tree)


def tensor_prelie(t: LinComb, y: LinComb[PartitionedTree]) -> LinComb:
    """Right action of y on a tensor, as a derivation on both slots."""
    terms = []
    for (a, b), c in t.items():
        for out, k in pt_prelie(LinComb.monomial(a), y).items():
            terms.append(((out, b), c * k))
        for out, k in pt_prelie(LinComb.monomial(b), y).items():
            terms.append(((a, out), c * k))
    return LinComb.from_terms(terms)


def rigidity_prelie_residual(x: LinComb[PartitionedTree], y: LinComb[PartitionedTree]) -> LinComb:
    """delta(x•y) - x⊗y - delta(x)•y."""
    xy = x.bilinear(y, lambda a, b: LinComb.monomial((a, b)))
    return pt_rigidity_coproduct(pt_prelie(x, y)) - xy - tensor_prelie(pt_rigidity_coproduct(x), y)


def rigidity_symmetry_residual(x: LinComb[PartitionedTree]) -> LinComb:
    """(delta⊗Id)delta(x) minus its image under swapping slots 2 and 3."""
    iterated = LinComb.from_terms(
        ((a, b, v), c1 * c2)
        for (u, v), c1 in pt_rigidity_coproduct(x).items()
        for (a, b), c2 in rigidity_coproduct_tree(u).items()
    )
    return iterated - iterated.map_keys(lambda p: (p[0], p[2], p[1]))


def rigidity_shuffle_residual(t1: PartitionedTree, t2: PartitionedTree) -> LinComb:
    """delta(t1⧢t2) against the root-weighted rule on the left slot."""
    k, m = len(t1.roots), len(t2.roots)
    expected = LinComb.from_terms(
        [((pt_shuffle(a, t2), b), c * Fraction(k, k + m)) for (a, b), c in rigidity_coproduct_tree(t1).items()]
        + [((pt_shuffle(t1, a), b), c * Fraction(m, k + m)) for (a, b), c in rigidity_coproduct_tree(t2).items()]
    )
    return rigidity_coproduct_tree(pt_shuffle(t1, t2)) - expected


def pt_root_forest(decorations: Sequence[int], forests: Sequence[Sequence[PartitionedTree]]) -> PartitionedTree:
    """B_{d1..dk}(F1..Fk): root i decorated d_i carries the trees of F_i as child blocks."""
    if len(decorations) != len(forests) or not decorations:
        raise DomainError("need one forest per root and at least one root")
    roots = tuple(
        make_node(dec, [t.roots for t in forest]) for dec, forest in zip(decorations, forests)
    )
    return PartitionedTree(roots)


def kernel_elements(
    t1: PartitionedTree,
    t2: PartitionedTree,
    t3: PartitionedTree,
    t4: PartitionedTree,
    decoration: int = 1,
) -> Dict[str, LinComb[PartitionedTree]]:
    """Four elements of ker(delta) built from t1..t4 with equal root decorations."""

    def b(*forests: Sequence[PartitionedTree]) -> LinComb[PartitionedTree]:
        return LinComb.monomial(pt_root_forest([decoration] * len(forests), forests))

    e: Sequence[PartitionedTree] = ()
    x = b([t1, t2], e) - b([t1], [t2])
    y = (
        b([t1, t2, t3], e, e)
        - b([t1, t2], [t3], e)
        - b([t1, t3], [t2], e)
        - b([t2, t3], [t1], e)
        + b([t1], [t2], [t3]) * 2
    )
    z = (
        b([t1, t2, t3, t4], e)
        - b([t1, t2, t3], [t4])
        - b([t1, t2, t4], [t3])
        - b([t1, t3, t4], [t2])
        - b([t2, t3, t4], [t1])
        + b([t1, t2], [t3, t4])
        + b([t1, t3], [t2, t4])
        + b([t1, t4], [t2, t3])
    )
    big_t = (
        b([t1, t2], [t3, t4], e, e)
        + b([t1, t3], [t2, t4], e, e)
        + b([t1, t4], [t2, t3], e, e)
        - b([t1, t2], [t3], [t4], e)
        - b([t1, t3], [t2], [t4], e)
        - b([t1, t4], [t2], [t3], e)
        - b([t2, t3], [t1], [t4], e)
        - b([t2, t4], [t1], [t3], e)
        - b([t3, t4], [t1], [t2], e)
        + b([t1], [t2], [t3], [t4]) * 3
    )
    return {"X": x, "Y": y, "Z": z, "T": big_t}
