"""Integer kernels: primes, factorization, totients, primitive roots, indices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Factorization",
    "sieve_primes",
    "prime_array",
    "is_prime",
    "factorize",
    "euler_phi",
    "pow_mod",
    "multiplicative_order",
    "find_primitive_root",
    "index_of",
    "power_table",
]


@dataclass(frozen=True)
class Factorization:
    k: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if math.prod(p**e for p, e in self.factors) != self.k:
            raise ValueError(f"factors do not multiply to {self.k}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**e for p, e in self.factors)


@lru_cache(maxsize=8)
def prime_array(limit: int) -> np.ndarray:
    """Primes <= limit as a read-only int64 array (Eratosthenes, odd-only)."""
    if limit < 2:
        out = np.zeros(0, dtype=np.int64)
        out.setflags(write=False)
        return out
    # index i represents the odd number 2*i + 1
    size = (limit + 1) // 2
    odd = np.ones(size, dtype=bool)
    odd[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if odd[i]:
            p = 2 * i + 1
            odd[p * p // 2 :: p] = False
    out = np.concatenate(([2], 2 * np.flatnonzero(odd) + 1)).astype(np.int64)
    out.setflags(write=False)
    return out


def sieve_primes(limit: int) -> list[int]:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return prime_array(limit).tolist()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(k: int) -> Factorization:
    """Trial-division factorization; ``factorize(1)`` has no factors."""
    if k <= 0:
        raise ValueError(f"cannot factor {k}: need a positive integer")
    factors = []
    n = k
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(k, tuple(factors))


def euler_phi(k: int) -> int:
    result = 1
    for p, e in factorize(k).factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def pow_mod(b: int, e: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(b, e, m)


def multiplicative_order(g: int, q: int) -> int:
    """Order of ``g`` in the unit group mod ``q``."""
    if math.gcd(g, q) != 1:
        raise ValueError(f"{g} is not a unit mod {q}")
    if q == 1:
        return 1
    order = euler_phi(q)
    for r, _ in factorize(order).factors:
        while order % r == 0 and pow(g, order // r, q) == 1:
            order //= r
    return order


def _odd_prime_power(q: int) -> tuple[int, int]:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"{q} is not an odd prime power")
    f = factorize(q).factors
    if len(f) != 1:
        raise ValueError(f"{q} is not an odd prime power")
    return f[0]


@lru_cache(maxsize=None)
def find_primitive_root(q: int) -> int:
    """Smallest positive primitive root modulo an odd prime power ``q``.

    A unit ``g`` is primitive iff ``g**(phi(q)/r) != 1 (mod q)`` for every
    prime ``r`` dividing ``phi(q)``.
    """
    _odd_prime_power(q)
    phi = euler_phi(q)
    rs = factorize(phi).primes
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // r, q) != 1 for r in rs):
            return g
    raise AssertionError(f"no primitive root mod {q}")  # unreachable for odd prime powers


@lru_cache(maxsize=1024)
def power_table(g: int, q: int) -> dict[int, int]:
    """Map ``g**i % q -> i`` for ``0 <= i < ord(g)``.

    The returned dict is shared between callers; treat it as read-only.
    """
    table = {}
    x = 1 % q
    i = 0
    while x not in table:
        table[x] = i
        x = x * g % q
        i += 1
    return table


def index_of(n: int, g: int, q: int) -> int:
    """Discrete logarithm of ``n`` to base ``g`` modulo ``q``.

    Returns the unique exponent in ``[0, ord(g))``. ``n`` must be a unit
    lying in the cyclic subgroup generated by ``g`` (always true when ``g``
    is a primitive root).
    """
    if q < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(n, q) != 1:
        raise ValueError(f"{n} is not coprime to {q}")
    if math.gcd(g, q) != 1:
        raise ValueError(f"base {g} is not a unit mod {q}")
    try:
        return power_table(g % q, q)[n % q]
    except KeyError:
        raise ValueError(f"{n} is not a power of {g} mod {q}") from None
