"""Independent reference computations used only by the tests.

None of these touch the package's fast paths: primes come from trial
division, characters from a brute-force homomorphism search that knows
nothing about the cyclic decomposition, zeta from a long direct sum.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_division_primes(limit: int) -> list[int]:
    """Primes <= limit: each n is tested for divisibility by every prime d <= sqrt(limit)."""
    if limit < 2:
        return []
    small = [d for d in range(2, math.isqrt(limit) + 1) if trial_division_is_prime(d)]
    n = np.arange(2, limit + 1, dtype=np.int64)
    prime = np.ones(n.size, dtype=bool)
    for d in small:
        prime &= (n % d != 0) | (n == d)
    return n[prime].tolist()


def coprime_count(k: int) -> int:
    return int(np.count_nonzero(np.gcd(np.arange(1, k + 1), k) == 1))


def repeated_squaring(b: int, e: int, m: int) -> int:
    result = 1
    b %= m
    while e:
        if e & 1:
            result = result * b % m
        b = b * b % m
        e >>= 1
    return result % m


def brute_order(g: int, q: int) -> int:
    x, n = g % q, 1
    while x != 1 % q:
        x = x * g % q
        n += 1
    return n


def brute_units(k: int) -> list[int]:
    return [n for n in range(k) if math.gcd(n, k) == 1]


def brute_characters(k: int) -> set[tuple[Fraction, ...]]:
    """Every homomorphism from the units mod k into the roots of unity.

    Each character is returned as the tuple of its values on the sorted
    units, a value ``zeta**e`` written as the fraction ``e / E``. The search
    grows a subgroup one element at a time and tries every consistent value
    for the new element, then re-verifies multiplicativity on all pairs.
    """
    us = brute_units(k)
    one = 1 % k
    E = math.lcm(*(brute_order(g, k) for g in us))

    def extend(f: dict[int, int]):
        rest = [g for g in us if g not in f]
        if not rest:
            yield f
            return
        g = rest[0]
        t, x = 1, g
        while x not in f:
            x = x * g % k
            t += 1
        for val in range(E):
            if (t * val - f[x]) % E:
                continue
            new = dict(f)
            for h, fh in f.items():
                y = h
                for j in range(1, t):
                    y = y * g % k
                    new[y] = (fh + j * val) % E
            yield from extend(new)

    out = set()
    for f in extend({one: 0}):
        for a in us:
            for b in us:
                assert f[a * b % k] == (f[a] + f[b]) % E
        out.add(tuple(Fraction(f[u], E) for u in us))
    return out


def zeta_oracle(s: float, terms: int = 10**7) -> float:
    """Direct sum of n**-s up to ``terms`` plus the integral tail."""
    total = 0.0
    chunk = 10**6
    for start in range(1, terms + 1, chunk):
        n = np.arange(start, min(start + chunk, terms + 1), dtype=float)
        total += float(np.sum(n**-s))
    m = float(terms)
    # sum_{n > M} n**-s = int_M^inf x**-s dx - M**-s / 2 + O(s M**(-s-1))
    return total + m ** (1 - s) / (s - 1) - 0.5 * m**-s


def alternating_oracle(terms: int = 10**6) -> float:
    """1 - 1/3 + 1/5 - ... with the last two partial sums averaged."""
    j = np.arange(terms + 1, dtype=float)
    signs = np.where(j % 2 == 0, 1.0, -1.0)
    terms_ = signs / (2 * j + 1)
    s_last = float(np.sum(terms_))
    s_prev = s_last - terms_[-1]
    return 0.5 * (s_last + s_prev)


def block_oracle_mod3(blocks: int = 10**7) -> float:
    """sum_j (1/(3j+1) - 1/(3j+2)) with an integral tail estimate."""
    j = np.arange(blocks, dtype=float)
    head = float(np.sum(1.0 / ((3 * j + 1) * (3 * j + 2))))
    # remaining blocks ~ 1/(9 j**2); tail ~ 1/(9 J)
    return head + 1.0 / (9 * blocks)
