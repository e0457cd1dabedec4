"""Exact linear algebra over the rationals, backed by sympy matrices.

Vectors are LinCombs; a list of basis keys fixes the coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, List, Sequence, TypeVar

import sympy

from fliess_prelie.errors import ConsistencyError
from fliess_prelie.lincomb import LinComb

K = TypeVar("K", bound=Hashable)
J = TypeVar("J", bound=Hashable)


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: sympy.Expr) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def support(vectors: Sequence[LinComb[K]]) -> List[K]:
    keys = set()
    for v in vectors:
        keys.update(v.keys())
    return sorted(keys)


def column_matrix(vectors: Sequence[LinComb[K]], rows: Sequence[K]) -> sympy.Matrix:
    """Matrix whose j-th column holds the coordinates of vectors[j]."""
    index = {k: i for i, k in enumerate(rows)}
    m = sympy.zeros(len(rows), len(vectors))
    for j, v in enumerate(vectors):
        for key, coeff in v.items():
            if key not in index:
                raise ConsistencyError(f"vector has a term outside the row basis: {key}")
            m[index[key], j] = to_sympy(coeff)
    return m


def rank(vectors: Sequence[LinComb[K]]) -> int:
    rows = support(vectors)
    if not rows or not vectors:
        return 0
    return int(column_matrix(vectors, rows).rank())


def kernel(domain: Sequence[K], image: Callable[[K], LinComb[J]]) -> List[LinComb[K]]:
    """Basis of the kernel of the linear map defined on ``domain`` by ``image``."""
    columns = [image(k) for k in domain]
    rows = support(columns)
    if not rows:
        return [LinComb.monomial(k) for k in domain]
    m = column_matrix(columns, rows)
    basis: List[LinComb[K]] = []
    for vec in m.nullspace():
        basis.append(
            LinComb({domain[i]: from_sympy(vec[i]) for i in range(len(domain)) if vec[i] != 0})
        )
    return basis


def inverse(matrix: sympy.Matrix) -> sympy.Matrix:
    if matrix.rows != matrix.cols or matrix.rank() != matrix.rows:
        raise ConsistencyError("change-of-basis matrix is not invertible")
    return matrix.inv()
