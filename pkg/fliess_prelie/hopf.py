"""The coordinate Hopf algebra H = S(V) of the composition group.

V has basis X_c indexed by binary words, H is the polynomial algebra on V,
and the coproduct is dual to composition: Delta(X_c)(f, g) = X_c(f o g).

Tensors are LinCombs with tuple keys:
  - H⊗H: (CoordMonomial, CoordMonomial)
  - V⊗H: (BinaryWord, CoordMonomial), the reduced coproduct
  - V⊗V: (BinaryWord, BinaryWord), the unshuffle and prelie coproducts
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Callable, Dict, List, Sequence, Tuple

from fliess_prelie import linalg
from fliess_prelie.errors import DomainError, TruncationError
from fliess_prelie.fliess import NCSeries, compose
from fliess_prelie.lincomb import LinComb, tensor_map
from fliess_prelie.words import EMPTY, BinaryWord, degree, words_of_degree

Tensor = LinComb


@total_ordering
@dataclass(frozen=True)
class CoordMonomial:
    """A product of coordinate functions; the empty product is the unit 1."""

    factors: Tuple[BinaryWord, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.factors))
        if ordered != self.factors:
            object.__setattr__(self, "factors", ordered)

    @classmethod
    def of(cls, *words: BinaryWord) -> "CoordMonomial":
        return cls(tuple(words))

    @property
    def degree(self) -> int:
        return sum(degree(w) for w in self.factors)

    def __mul__(self, other: "CoordMonomial") -> "CoordMonomial":
        return CoordMonomial(self.factors + other.factors)

    def __lt__(self, other: "CoordMonomial") -> bool:
        if not isinstance(other, CoordMonomial):
            return NotImplemented
        return (len(self.factors), self.factors) < (len(other.factors), other.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "".join(f"X{{{w}}}" for w in self.factors)


UNIT = CoordMonomial()


def coord(w: BinaryWord) -> CoordMonomial:
    return CoordMonomial((w,))


# -- unshuffle coproduct on V -------------------------------------------------


@lru_cache(maxsize=None)
def delta_shuffle(c: BinaryWord) -> Tensor:
    """Sum over complementary subwords X_{c|I} ⊗ X_{c|I^c}."""
    if c == EMPTY:
        return LinComb.monomial((EMPTY, EMPTY))
    a = c.head
    rest = delta_shuffle(c.tail)
    return LinComb.from_terms(
        pair
        for (u, v), coeff in rest.items()
        for pair in (((u.prefixed(a), v), coeff), ((u, v.prefixed(a)), coeff))
    )


# -- reduced coproduct and coproduct on H -------------------------------------


def _theta(letter: str) -> Callable[[BinaryWord], LinComb]:
    return lambda w: LinComb.monomial(w.prefixed(letter))


def _keep(x: object) -> LinComb:
    return LinComb.monomial(x)


@lru_cache(maxsize=None)
def reduced_coproduct(c: BinaryWord) -> Tensor:
    """delta~(X_c) = Delta(X_c) - 1⊗X_c, an element of V⊗H."""
    if c == EMPTY:
        return LinComb.monomial((EMPTY, UNIT))
    rest = reduced_coproduct(c.tail)
    if c.head == "1":
        return tensor_map(rest, _theta("1"), _keep)
    terms: List[Tuple[tuple, Fraction]] = [((w.prefixed("0"), m), k) for (w, m), k in rest.items()]
    for (c1, c2), k1 in delta_shuffle(c.tail).items():
        for (w, m), k2 in reduced_coproduct(c1).items():
            terms.append(((w.prefixed("1"), m * coord(c2)), k1 * k2))
    return LinComb.from_terms(terms)


@lru_cache(maxsize=None)
def coproduct(c: BinaryWord) -> Tensor:
    """Delta(X_c) in H⊗H."""
    body = reduced_coproduct(c).map_keys(lambda pair: (coord(pair[0]), pair[1]))
    return body + LinComb.monomial((UNIT, coord(c)))


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Multiplication in H⊗H."""
    return a.bilinear(b, lambda x, y: LinComb.monomial((x[0] * y[0], x[1] * y[1])))


def coproduct_monomial(m: CoordMonomial) -> Tensor:
    result: Tensor = LinComb.monomial((UNIT, UNIT))
    for w in m.factors:
        result = tensor_product(result, coproduct(w))
    return result


def coproduct_lc(x: LinComb[CoordMonomial]) -> Tensor:
    return x.map(coproduct_monomial)


def counit(m: CoordMonomial) -> Fraction:
    return Fraction(1) if not m.factors else Fraction(0)


def check_counit(c: BinaryWord) -> bool:
    """(eps⊗Id)Delta(X_c) = X_c = (Id⊗eps)Delta(X_c)."""
    delta = coproduct(c)
    expected = LinComb.monomial(coord(c))
    left = LinComb.from_terms((m2, k * counit(m1)) for (m1, m2), k in delta.items())
    right = LinComb.from_terms((m1, k * counit(m2)) for (m1, m2), k in delta.items())
    return left == expected and right == expected


# -- evaluation against series ------------------------------------------------


def eval_monomial(m: CoordMonomial, f: NCSeries) -> Fraction:
    value = Fraction(1)
    for w in m.factors:
        if f.truncation is not None and len(w) > f.truncation:
            raise TruncationError(
                f"X_{{{w}}} needs words of length {len(w)}, series is truncated at {f.truncation}"
            )
        value *= f.coefficient(w)
        if not value:
            return value
    return value


def pair_tensor(t: Tensor, f: NCSeries, g: NCSeries) -> Fraction:
    """Evaluate an element of H⊗H on (f, g)."""
    total = Fraction(0)
    for (m1, m2), k in t.items():
        total += k * eval_monomial(m1, f) * eval_monomial(m2, g)
    return total


def check_duality(c: BinaryWord, f: NCSeries, g: NCSeries) -> bool:
    """Delta(X_c)(f, g) == X_c(f o g)."""
    return check_duality_all([c], f, g)


def check_duality_all(cs: Sequence[BinaryWord], f: NCSeries, g: NCSeries) -> bool:
    """check_duality for every c in cs; f o g is composed once."""
    fg = compose(f, g)
    return all(pair_tensor(coproduct(c), f, g) == eval_monomial(coord(c), fg) for c in cs)


# -- prelie coproduct ---------------------------------------------------------


@lru_cache(maxsize=None)
def prelie_coproduct(c: BinaryWord) -> Tensor:
    """delta(X_c) in V⊗V, computed by its own recursion."""
    if c == EMPTY:
        return LinComb.zero()
    rest = prelie_coproduct(c.tail)
    if c.head == "1":
        return tensor_map(rest, _theta("1"), _keep)
    return tensor_map(rest, _theta("0"), _keep) + tensor_map(
        delta_shuffle(c.tail), _theta("1"), _keep
    )


def project_prelie(t: Tensor) -> Tensor:
    """(Id⊗pi) on V⊗H: keep terms whose right factor is a single X_c."""
    return LinComb.from_terms(
        ((w, m.factors[0]), k) for (w, m), k in t.items() if len(m.factors) == 1
    )


def kernel_prelie_coproduct(k: int) -> List[LinComb[BinaryWord]]:
    """Basis of ker(delta) in degree k, by exact elimination."""
    if k < 1:
        raise DomainError(f"degree must be >= 1, got {k}")
    return linalg.kernel(words_of_degree(k), prelie_coproduct)


def check_prelie_coalgebra(c: BinaryWord) -> bool:
    """E = (delta⊗Id)delta - (Id⊗delta)delta is symmetric in its last two slots."""
    first = LinComb.from_terms(
        ((a, b, v), k1 * k2)
        for (u, v), k1 in prelie_coproduct(c).items()
        for (a, b), k2 in prelie_coproduct(u).items()
    )
    second = LinComb.from_terms(
        ((u, a, b), k1 * k2)
        for (u, v), k1 in prelie_coproduct(c).items()
        for (a, b), k2 in prelie_coproduct(v).items()
    )
    e = first - second
    return e == e.map_keys(lambda t: (t[0], t[2], t[1]))


# -- algebraic checks ---------------------------------------------------------


def check_coassociativity(c: BinaryWord) -> bool:
    delta = coproduct(c)
    left = LinComb.from_terms(
        ((a, b, m2), k1 * k2)
        for (m1, m2), k1 in delta.items()
        for (a, b), k2 in coproduct_monomial(m1).items()
    )
    right = LinComb.from_terms(
        ((m1, a, b), k1 * k2)
        for (m1, m2), k1 in delta.items()
        for (a, b), k2 in coproduct_monomial(m2).items()
    )
    return left == right


def check_shuffle_coproduct(c: BinaryWord) -> bool:
    """Delta_sh is cocommutative and coassociative on X_c."""
    d = delta_shuffle(c)
    if d != d.map_keys(lambda p: (p[1], p[0])):
        return False
    left = LinComb.from_terms(
        ((a, b, v), k1 * k2) for (u, v), k1 in d.items() for (a, b), k2 in delta_shuffle(u).items()
    )
    right = LinComb.from_terms(
        ((u, a, b), k1 * k2) for (u, v), k1 in d.items() for (a, b), k2 in delta_shuffle(v).items()
    )
    return left == right


def check_gradation(c: BinaryWord) -> bool:
    """Every term of Delta(X_c) has degrees summing to deg(c)."""
    target = degree(c)
    return all(m1.degree + m2.degree == target for (m1, m2) in coproduct(c).keys())


def monomials_of_degree(k: int) -> List[CoordMonomial]:
    """All monomials of H_k; there are dim H_k of them."""
    if k < 0:
        raise DomainError(f"degree must be >= 0, got {k}")
    pool: List[BinaryWord] = [w for d in range(1, k + 1) for w in words_of_degree(d)]
    out: List[CoordMonomial] = []

    def extend(start: int, remaining: int, chosen: List[BinaryWord]) -> None:
        if remaining == 0:
            out.append(CoordMonomial(tuple(chosen)))
            return
        for i in range(start, len(pool)):
            d = degree(pool[i])
            if d <= remaining:
                chosen.append(pool[i])
                extend(i, remaining - d, chosen)
                chosen.pop()

    extend(0, k, [])
    return sorted(out)


def dimension_table(kmax: int) -> Dict[int, Tuple[int, int]]:
    """k -> (dim V_k, dim H_k) by enumeration."""
    return {
        k: (len(words_of_degree(k)) if k >= 1 else 0, len(monomials_of_degree(k)))
        for k in range(kmax + 1)
    }
