"""Lagrange resolvents, their inversion, and the cyclotomy ordering.

Roots of unity are handled through exact exponents and only converted to
floating point at the last step, so ``omega**(i*j)`` never accumulates
repeated-multiplication error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .arith import find_primitive_root, is_prime, multiplicative_order
from .cyclotomic import RootValue, to_complex

__all__ = [
    "ResolventSystem",
    "resolvents",
    "recover",
    "recover_all",
    "power_ordering",
    "cyclotomic_resolvent",
    "cyclotomy_round_trip",
]


def _require_primitive(omega: RootValue, n: int):
    if omega.is_zero or omega.order != n or math.gcd(omega.exponent, n) != 1:
        raise ValueError(f"{omega} is not a primitive {n}-th root of unity")


def _powers(omega: RootValue) -> np.ndarray:
    n = omega.order
    return np.array([to_complex(RootValue(n, omega.exponent * j % n)) for j in range(n)])


@dataclass(frozen=True)
class ResolventSystem:
    roots: tuple[complex, ...]
    omega: RootValue

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(complex(t) for t in self.roots))
        if not self.roots:
            raise ValueError("need at least one root")
        _require_primitive(self.omega, len(self.roots))

    @classmethod
    def canonical(cls, roots: Sequence[complex]) -> "ResolventSystem":
        """System with ``omega = exp(2 pi i / n)``."""
        return cls(tuple(roots), RootValue(len(roots), 1 % len(roots)))

    @property
    def n(self) -> int:
        return len(self.roots)


def resolvents(sys: ResolventSystem) -> np.ndarray:
    """``x_i = sum_j omega**(i j) t_j`` for ``i = 0..n-1``."""
    n = sys.n
    w = _powers(sys.omega)
    ij = np.outer(np.arange(n), np.arange(n)) % n
    return w[ij] @ np.array(sys.roots)


def recover(x: Sequence[complex], omega: RootValue, k: int) -> complex:
    """``t_k = (1/n) sum_i omega**(-i k) x_i``."""
    n = len(x)
    _require_primitive(omega, n)
    if not 0 <= k < n:
        raise ValueError(f"root index {k} out of range 0..{n - 1}")
    w = _powers(omega)
    idx = (-np.arange(n) * k) % n
    return complex(np.dot(w[idx], np.asarray(x, dtype=complex)) / n)


def recover_all(x: Sequence[complex], omega: RootValue) -> np.ndarray:
    return np.array([recover(x, omega, k) for k in range(len(x))])


def power_ordering(p: int, g: int) -> list[int]:
    """``[g**0, g**1, ..., g**(p-2)] mod p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if math.gcd(g, p) != 1 or multiplicative_order(g, p) != p - 1:
        raise ValueError(f"{g} is not a primitive root mod {p}")
    out = []
    x = 1
    for _ in range(p - 1):
        out.append(x)
        x = x * g % p
    return out


def cyclotomic_resolvent(p: int, g: int, omega_exponent: int) -> complex:
    """``sum_i alpha**(g**i) omega**i`` with ``alpha = zeta_p`` and
    ``omega = zeta_{p-1} ** omega_exponent``."""
    order = power_ordering(p, g)
    n = p - 1
    total = 0j
    for i, r in enumerate(order):
        total += to_complex(RootValue(p, r)) * to_complex(RootValue.root(n, omega_exponent * i))
    return total


def cyclotomy_round_trip(p: int, g: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Recover ``alpha**(g**k)`` from the p - 1 cyclotomic resolvents.

    Returns ``(expected, recovered)`` arrays indexed by k.
    """
    if g is None:
        g = find_primitive_root(p) if p > 2 else 1
    n = p - 1
    expected = np.array([to_complex(RootValue(p, r)) for r in power_ordering(p, g)])
    x = [cyclotomic_resolvent(p, g, i) for i in range(n)]
    omega = RootValue(n, 1 % n)
    return expected, recover_all(x, omega)
