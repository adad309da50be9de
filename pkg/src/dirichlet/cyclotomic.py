"""Exact roots of unity and integer formal sums of them.

A :class:`RootValue` is either zero or ``zeta_N**e`` with ``zeta_N =
exp(2*pi*i/N)``. A :class:`CycSum` is an integer combination of powers of a
single ``zeta_N``; :func:`cycsum_is_integer` decides exactly whether it
equals a given integer by reducing modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "RootValue",
    "ZERO",
    "CycSum",
    "cyclotomic_polynomial",
    "root_mul",
    "root_conj",
    "to_complex",
    "cycsum_is_integer",
]


@dataclass(frozen=True, eq=False)
class RootValue:
    """``zeta_order ** exponent``, or the zero value when ``order == 0``.

    Equality is by value: ``zeta_4**2 == zeta_2**1``.
    """

    order: int
    exponent: int = 0

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if self.order == 0:
            if self.exponent != 0:
                raise ValueError("zero value carries no exponent")
        elif not 0 <= self.exponent < self.order:
            raise ValueError(f"exponent {self.exponent} out of range for order {self.order}")

    @classmethod
    def root(cls, order: int, exponent: int = 0) -> "RootValue":
        """Build ``zeta_order ** exponent`` with the exponent reduced mod ``order``."""
        if order <= 0:
            raise ValueError("order must be positive")
        return cls(order, exponent % order)

    @property
    def is_zero(self) -> bool:
        return self.order == 0

    def _key(self):
        return None if self.is_zero else Fraction(self.exponent, self.order)

    def __eq__(self, other):
        if not isinstance(other, RootValue):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __mul__(self, other):
        if not isinstance(other, RootValue):
            return NotImplemented
        return root_mul(self, other)

    def __pow__(self, n: int) -> "RootValue":
        if self.is_zero:
            if n <= 0:
                raise ZeroDivisionError("zero has no nonpositive powers")
            return self
        return RootValue(self.order, self.exponent * n % self.order)

    def conjugate(self) -> "RootValue":
        return root_conj(self)

    def __complex__(self) -> complex:
        return to_complex(self)

    def lift(self, order: int) -> int:
        """Exponent of this value as a power of ``zeta_order``."""
        if self.is_zero:
            raise ValueError("zero is not a root of unity")
        if order % self.order:
            raise ValueError(f"zeta_{self.order} powers are not powers of zeta_{order}")
        return self.exponent * (order // self.order)

    def __str__(self) -> str:
        return "0" if self.is_zero else f"zeta({self.order})^{self.exponent}"


ZERO = RootValue(0)


def root_mul(a: RootValue, b: RootValue) -> RootValue:
    """Product; mixed orders are lifted to the lcm of the two orders."""
    if a.is_zero or b.is_zero:
        return ZERO
    n = math.lcm(a.order, b.order)
    return RootValue(n, (a.lift(n) + b.lift(n)) % n)


def root_conj(a: RootValue) -> RootValue:
    if a.is_zero:
        return ZERO
    return RootValue(a.order, -a.exponent % a.order)


def to_complex(a: RootValue) -> complex:
    if a.is_zero:
        return 0j
    n, e = a.order, a.exponent
    # exact values on the axes
    if (4 * e) % n == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[4 * e // n]
    t = 2 * math.pi * e / n
    return complex(math.cos(t), math.sin(t))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n <= 0:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]  # x**n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            if any(rem):
                raise AssertionError(f"Phi_{d} does not divide x^{n} - 1")
    return tuple(num)


def _poly_divmod(num, den):
    """Divide integer polynomials by a monic divisor (lists, low degree first)."""
    num = list(num)
    dd = len(den) - 1
    if den[dd] != 1:
        raise ValueError("divisor must be monic")
    if len(num) <= dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                if dj:
                    num[i - dd + j] -= c * dj
    return quot, num[:dd] or [0]


@lru_cache(maxsize=None)
def _sparse_phi(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    return deg, tuple((j, c) for j, c in enumerate(phi[:-1]) if c)


@dataclass(frozen=True)
class CycSum:
    """Integer formal sum ``sum_j coefficients[j] * zeta_order**j``."""

    order: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.order <= 0:
            raise ValueError("order must be positive")
        if len(self.coefficients) != self.order:
            raise ValueError(f"need exactly {self.order} coefficients")

    @classmethod
    def from_exponents(cls, order: int, exponents: Iterable[int]) -> "CycSum":
        coeffs = [0] * order
        for e in exponents:
            coeffs[e % order] += 1
        return cls(order, tuple(coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[RootValue], order: int | None = None) -> "CycSum":
        """Collect nonzero roots into a sum; zero values contribute nothing."""
        roots = [r for r in roots if not r.is_zero]
        if order is None:
            order = math.lcm(*(r.order for r in roots)) if roots else 1
        return cls.from_exponents(order, (r.lift(order) for r in roots))

    def __add__(self, other: "CycSum") -> "CycSum":
        if self.order != other.order:
            raise ValueError("orders differ")
        return CycSum(self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def evaluate(self) -> complex:
        return sum(c * to_complex(RootValue(self.order, j)) for j, c in enumerate(self.coefficients) if c)

    def equals_integer(self, value: int) -> bool:
        return cycsum_is_integer(self, value)


def cycsum_is_integer(c: CycSum, value: int) -> bool:
    """Exact test of ``sum_j c_j zeta_N**j == value``.

    True iff Phi_N divides ``P(x) - value`` where ``P`` has the sum's
    coefficients (already reduced mod ``x**N - 1``).
    """
    p = list(c.coefficients)
    p[0] -= value
    deg, terms = _sparse_phi(c.order)
    for i in range(len(p) - 1, deg - 1, -1):
        top = p[i]
        if top:
            base = i - deg
            for j, cj in terms:
                p[base + j] -= top * cj
    return not any(p[:deg])
