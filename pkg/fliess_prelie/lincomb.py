"""Finite linear combinations with exact rational coefficients.

Every algebra element in the package is a ``LinComb`` over some canonically
ordered basis: binary words, coordinate monomials, partitioned trees,
rooted trees, positive-integer words, or tuples of those for tensors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import (
    Callable,
    Dict,
    Generic,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    TypeVar,
    Union,
)

K = TypeVar("K", bound=Hashable)
J = TypeVar("J", bound=Hashable)

Scalar = Union[int, Fraction]


def as_scalar(value: Union[Scalar, str]) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"unsupported scalar type: {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _accumulate(acc: Dict[K, Fraction], key: K, coeff: Fraction) -> None:
    total = acc.get(key, 0) + coeff
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


class LinComb(Generic[K]):
    """Immutable map from basis elements to nonzero Fractions.

    Basis keys must be hashable and totally ordered; iteration, printing and
    JSON export follow that order.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[K, Scalar]] = None):
        clean: Dict[K, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                c = as_scalar(coeff)
                if c:
                    clean[key] = c
        self._terms = clean
        self._hash: Optional[int] = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "LinComb[K]":
        return cls()

    @classmethod
    def monomial(cls, key: K, coeff: Scalar = 1) -> "LinComb[K]":
        return cls({key: coeff})

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[K, Scalar]]) -> "LinComb[K]":
        """Sum (key, coeff) pairs, merging repeated keys."""
        acc: Dict[K, Fraction] = {}
        for key, coeff in pairs:
            _accumulate(acc, key, as_scalar(coeff))
        return cls._wrap(acc)

    @classmethod
    def sum(cls, items: Iterable["LinComb[K]"]) -> "LinComb[K]":
        acc: Dict[K, Fraction] = {}
        for item in items:
            for key, coeff in item._terms.items():
                _accumulate(acc, key, coeff)
        return cls._wrap(acc)

    @classmethod
    def _wrap(cls, clean: Dict[K, Fraction]) -> "LinComb[K]":
        out = cls.__new__(cls)
        out._terms = clean
        out._hash = None
        return out

    # -- mapping protocol ---------------------------------------------------

    def coefficient(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def keys(self) -> List[K]:
        return sorted(self._terms)

    def items(self) -> List[Tuple[K, Fraction]]:
        return [(k, self._terms[k]) for k in sorted(self._terms)]

    def __iter__(self) -> Iterator[K]:
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def mass(self) -> Fraction:
        """Sum of all coefficients."""
        return sum(self._terms.values(), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LinComb[K]") -> "LinComb[K]":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(acc, key, coeff)
        return self._wrap(acc)

    def __sub__(self, other: "LinComb[K]") -> "LinComb[K]":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(acc, key, -coeff)
        return self._wrap(acc)

    def __neg__(self) -> "LinComb[K]":
        return self._wrap({k: -c for k, c in self._terms.items()})

    def scale(self, factor: Scalar) -> "LinComb[K]":
        f = as_scalar(factor)
        if not f:
            return self.zero()
        return self._wrap({k: c * f for k, c in self._terms.items()})

    def __mul__(self, factor: Scalar) -> "LinComb[K]":
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- linear extension -------------------------------------------------

    def map(self, f: Callable[[K], "LinComb[J]"]) -> "LinComb[J]":
        """Extend a basis-level map linearly."""
        acc: Dict[J, Fraction] = {}
        for key, coeff in self._terms.items():
            for k2, c2 in f(key)._terms.items():
                _accumulate(acc, k2, coeff * c2)
        return LinComb._wrap(acc)

    def map_keys(self, f: Callable[[K], J]) -> "LinComb[J]":
        acc: Dict[J, Fraction] = {}
        for key, coeff in self._terms.items():
            _accumulate(acc, f(key), coeff)
        return LinComb._wrap(acc)

    def filter(self, keep: Callable[[K], bool]) -> "LinComb[K]":
        return self._wrap({k: c for k, c in self._terms.items() if keep(k)})

    def bilinear(
        self, other: "LinComb[J]", f: Callable[[K, J], "LinComb"]
    ) -> "LinComb":
        acc: Dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                for k3, c3 in f(k1, k2)._terms.items():
                    _accumulate(acc, k3, c1 * c2 * c3)
        return LinComb._wrap(acc)

    # -- display ----------------------------------------------------------

    def format(self, key_format: Callable[[K], str] = str) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for key, coeff in self.items():
            body = f"{format_scalar(abs(coeff))}*{key_format(key)}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LinComb({self.format(repr)})"


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """a ⊗ b with pair keys."""
    return a.bilinear(b, lambda x, y: LinComb.monomial((x, y)))


def tensor_map(
    t: LinComb, left: Callable[[object], LinComb], right: Callable[[object], LinComb]
) -> LinComb:
    """Apply (left ⊗ right) to a LinComb with pair keys."""
    acc: Dict = {}
    for (x, y), coeff in t._terms.items():
        for a, ca in left(x)._terms.items():
            for b, cb in right(y)._terms.items():
                _accumulate(acc, (a, b), coeff * ca * cb)
    return LinComb._wrap(acc)


def identity(key: K) -> LinComb[K]:
    return LinComb.monomial(key)
