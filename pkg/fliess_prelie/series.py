"""Dense truncated power series in one or two commuting variables.

Used for the generating-function side of every dimension and census check.
Coefficients are Fractions; each series carries its truncation order and
arithmetic never reads past it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from fliess_prelie.errors import ConsistencyError, DomainError, TruncationError
from fliess_prelie.lincomb import Scalar, as_scalar

Number = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries1:
    coeffs: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_list(cls, values: Sequence[Number], order: int) -> "PowerSeries1":
        if order < 0:
            raise DomainError("order must be >= 0")
        padded = [as_scalar(v) for v in values[: order + 1]]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        return cls(tuple(padded))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries1":
        return cls.from_list([value], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Scalar = 1) -> "PowerSeries1":
        values: List[Number] = [0] * (power + 1)
        values[power] = coeff
        return cls.from_list(values, order)

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise TruncationError(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    def integers(self) -> List[int]:
        """Coefficients as ints; raises if any is not integral."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ConsistencyError(f"coefficient {n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def _check(self, other: "PowerSeries1") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries1") -> "PowerSeries1":
        n = self._check(other)
        return PowerSeries1(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "PowerSeries1") -> "PowerSeries1":
        n = self._check(other)
        return PowerSeries1(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "PowerSeries1":
        return PowerSeries1(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["PowerSeries1", Scalar]) -> "PowerSeries1":
        if not isinstance(other, PowerSeries1):
            f = as_scalar(other)
            return PowerSeries1(tuple(c * f for c in self.coeffs))
        n = self._check(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries1(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries1":
        g0 = self.coeffs[0]
        if not g0:
            raise DomainError("series with zero constant term is not invertible")
        out: List[Fraction] = []
        for n in range(self.order + 1):
            s = Fraction(1) if n == 0 else Fraction(0)
            for i in range(1, n + 1):
                s -= self.coeffs[i] * out[n - i]
            out.append(s / g0)
        return PowerSeries1(tuple(out))

    def __truediv__(self, other: "PowerSeries1") -> "PowerSeries1":
        return self * other.inverse()


def euler_product(counts: Sequence[Number], order: int) -> PowerSeries1:
    """prod_{k>=1} 1/(1-X^k)^{counts[k]}, the multiset construction.

    ``counts[0]`` is ignored. Each count must be a nonnegative integer.
    """
    result = PowerSeries1.constant(1, order)
    for k in range(1, min(order, len(counts) - 1) + 1):
        c = as_scalar(counts[k])
        if c.denominator != 1 or c < 0:
            raise DomainError(f"multiset count at {k} must be a nonnegative integer, got {c}")
        c_int = c.numerator
        if c_int == 0:
            continue
        factor = [0] * (order + 1)
        for j in range(order // k + 1):
            factor[k * j] = math.comb(c_int + j - 1, j)
        result = result * PowerSeries1.from_list(factor, order)
    return result


@dataclass(frozen=True)
class PowerSeries2:
    """Bivariate series; ``coeffs[i][j]`` is the coefficient of X^i Y^j."""

    coeffs: Tuple[Tuple[Fraction, ...], ...]

    @property
    def order_x(self) -> int:
        return len(self.coeffs) - 1

    @property
    def order_y(self) -> int:
        return len(self.coeffs[0]) - 1

    @classmethod
    def from_terms(
        cls, terms: Sequence[Tuple[int, int, Scalar]], order_x: int, order_y: int
    ) -> "PowerSeries2":
        if order_x < 0 or order_y < 0:
            raise DomainError("orders must be >= 0")
        grid = [[Fraction(0)] * (order_y + 1) for _ in range(order_x + 1)]
        for i, j, c in terms:
            if i <= order_x and j <= order_y:
                grid[i][j] += as_scalar(c)
        return cls(tuple(tuple(row) for row in grid))

    def coefficient(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            return Fraction(0)
        if i > self.order_x or j > self.order_y:
            raise TruncationError(
                f"coefficient X^{i} Y^{j} beyond order ({self.order_x}, {self.order_y})"
            )
        return self.coeffs[i][j]

    def _orders(self, other: "PowerSeries2") -> Tuple[int, int]:
        return min(self.order_x, other.order_x), min(self.order_y, other.order_y)

    def __add__(self, other: "PowerSeries2") -> "PowerSeries2":
        ox, oy = self._orders(other)
        return PowerSeries2(
            tuple(
                tuple(self.coeffs[i][j] + other.coeffs[i][j] for j in range(oy + 1))
                for i in range(ox + 1)
            )
        )

    def __sub__(self, other: "PowerSeries2") -> "PowerSeries2":
        return self + other * -1

    def __mul__(self, other: Union["PowerSeries2", Scalar]) -> "PowerSeries2":
        if not isinstance(other, PowerSeries2):
            f = as_scalar(other)
            return PowerSeries2(tuple(tuple(c * f for c in row) for row in self.coeffs))
        ox, oy = self._orders(other)
        grid = [[Fraction(0)] * (oy + 1) for _ in range(ox + 1)]
        for i in range(ox + 1):
            for j in range(oy + 1):
                a = self.coeffs[i][j]
                if not a:
                    continue
                for k in range(ox + 1 - i):
                    for m in range(oy + 1 - j):
                        b = other.coeffs[k][m]
                        if b:
                            grid[i + k][j + m] += a * b
        return PowerSeries2(tuple(tuple(row) for row in grid))

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries2":
        g00 = self.coeffs[0][0]
        if not g00:
            raise DomainError("series with zero constant term is not invertible")
        ox, oy = self.order_x, self.order_y
        h = [[Fraction(0)] * (oy + 1) for _ in range(ox + 1)]
        for i in range(ox + 1):
            for j in range(oy + 1):
                s = Fraction(1) if (i, j) == (0, 0) else Fraction(0)
                for a in range(i + 1):
                    for b in range(j + 1):
                        if (a, b) == (0, 0):
                            continue
                        g = self.coeffs[a][b]
                        if g:
                            s -= g * h[i - a][j - b]
                h[i][j] = s / g00
        return PowerSeries2(tuple(tuple(row) for row in h))


def series_fibonacci_fv(order: int) -> PowerSeries1:
    """X/(1-X-X^2): p_k = dim V_k."""
    if order < 1:
        raise DomainError("order must be >= 1")
    denom = PowerSeries1.from_list([1, -1, -1], order)
    return PowerSeries1.monomial(1, order) * denom.inverse()


def series_fh(order: int) -> PowerSeries1:
    """prod_k 1/(1-X^k)^{p_k}: dim H_k."""
    if order < 0:
        raise DomainError("order must be >= 0")
    if order == 0:
        return PowerSeries1.constant(1, 0)
    return euler_product(series_fibonacci_fv(order).coeffs, order)


def series_ladders(order: int) -> PowerSeries1:
    """L = Q + XQ + X with Q = X^2/(1-X-X^2): ladders counted by weight."""
    if order < 1:
        raise DomainError("order must be >= 1")
    x = PowerSeries1.monomial(1, order)
    q = PowerSeries1.monomial(2, order) * PowerSeries1.from_list([1, -1, -1], order).inverse()
    return q + x * q + x


def series_bigraded_v(order_x: int, order_y: int) -> PowerSeries2:
    """X/(1-XY-X^2Y): X counts degree, Y counts length."""
    if order_x < 1 or order_y < 1:
        raise DomainError("orders must be >= 1")
    denom = PowerSeries2.from_terms([(0, 0, 1), (1, 1, -1), (2, 1, -1)], order_x, order_y)
    return PowerSeries2.from_terms([(1, 0, 1)], order_x, order_y) * denom.inverse()


def series_admissible(order_x: int, order_y: int) -> PowerSeries2:
    """XY/(1-X-X^2Y): X counts weight, Y counts letters of admissible words."""
    if order_x < 1 or order_y < 1:
        raise DomainError("orders must be >= 1")
    denom = PowerSeries2.from_terms([(0, 0, 1), (1, 0, -1), (2, 1, -1)], order_x, order_y)
    return PowerSeries2.from_terms([(1, 1, 1)], order_x, order_y) * denom.inverse()
