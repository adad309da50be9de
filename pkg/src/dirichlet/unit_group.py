"""Cyclic decomposition of the unit group mod k with explicit generators.

The 2-part comes first: for ``k = 2**lam * m`` with ``lam >= 3`` there are
two factors generated by (lifts of) -1 and 5; ``lam == 2`` gives a single
order-2 factor generated by -1; ``lam <= 1`` contributes nothing. Each odd
prime power ``p**e`` then contributes one cyclic factor generated by its
smallest primitive root. Every generator is lifted to a residue mod k that is
1 in all other prime-power coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .arith import factorize, find_primitive_root, index_of

__all__ = [
    "CyclicFactor",
    "UnitGroupStructure",
    "decompose",
    "index_vector",
    "reconstruct",
    "units",
]


@dataclass(frozen=True)
class CyclicFactor:
    generator: int  # residue mod k
    order: int
    component: int  # prime-power modulus this factor lives on
    local_generator: int  # generator reduced mod ``component``


@dataclass(frozen=True)
class UnitGroupStructure:
    modulus: int
    lam: int
    factors: tuple[CyclicFactor, ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.factors)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        """Least common multiple of the factor orders (1 for the trivial group)."""
        return math.lcm(*self.orders) if self.factors else 1

    def __len__(self) -> int:
        return len(self.factors)

    @cached_property
    def _index_cache(self) -> dict[int, tuple[int, ...]]:
        return {n: _index_vector(self, n) for n in units(self.modulus)}

    def index_vector(self, n: int) -> tuple[int, ...]:
        try:
            return self._index_cache[n % self.modulus]
        except KeyError:
            raise ValueError(f"{n} is not a unit mod {self.modulus}") from None

    def reconstruct(self, v) -> int:
        return reconstruct(self, v)


def units(k: int) -> list[int]:
    """Residues in [0, k) coprime to k (``[0]`` for k = 1)."""
    return [n for n in range(k) if math.gcd(n, k) == 1]


def _crt_lift(residue: int, component: int, k: int) -> int:
    # x = residue (mod component), x = 1 (mod k // component)
    rest = k // component
    if rest == 1:
        return residue % k
    t = (residue - 1) * pow(rest, -1, component) % component
    return (1 + rest * t) % k


@lru_cache(maxsize=1024)
def decompose(k: int) -> UnitGroupStructure:
    if k <= 0:
        raise ValueError(f"modulus must be positive, got {k}")
    factors = []
    lam = 0
    for p, e in factorize(k).factors:
        q = p**e
        if p == 2:
            lam = e
            if e == 2:
                factors.append(CyclicFactor(_crt_lift(q - 1, q, k), 2, q, q - 1))
            elif e >= 3:
                factors.append(CyclicFactor(_crt_lift(q - 1, q, k), 2, q, q - 1))
                factors.append(CyclicFactor(_crt_lift(5, q, k), 2 ** (e - 2), q, 5))
            continue
        c = find_primitive_root(q)
        factors.append(CyclicFactor(_crt_lift(c, q, k), (p - 1) * p ** (e - 1), q, c))
    return UnitGroupStructure(k, lam, tuple(factors))


def _index_vector(S: UnitGroupStructure, n: int) -> tuple[int, ...]:
    out = []
    fs = S.factors
    i = 0
    while i < len(fs):
        f = fs[i]
        r = n % f.component
        if f.component % 2 == 1:
            out.append(index_of(r, f.local_generator, f.component))
            i += 1
            continue
        # 2-part: sign bit from n mod 4, then the power of 5
        alpha = 0 if r % 4 == 1 else 1
        out.append(alpha)
        if i + 1 < len(fs) and fs[i + 1].component == f.component:
            r = r if alpha == 0 else (-r) % f.component
            out.append(index_of(r, 5, f.component))
            i += 2
        else:
            i += 1
    return tuple(out)


def index_vector(S: UnitGroupStructure, n: int) -> tuple[int, ...]:
    """Exponent tuple ``v`` with ``prod(gen_i ** v_i) == n (mod k)``."""
    if math.gcd(n, S.modulus) != 1:
        raise ValueError(f"{n} is not a unit mod {S.modulus}")
    return S.index_vector(n)


def reconstruct(S: UnitGroupStructure, v) -> int:
    v = tuple(v)
    if len(v) != len(S.factors):
        raise ValueError(f"expected {len(S.factors)} exponents, got {len(v)}")
    x = 1 % S.modulus
    for f, e in zip(S.factors, v):
        if not 0 <= e < f.order:
            raise ValueError(f"exponent {e} out of range for factor of order {f.order}")
        x = x * pow(f.generator, e, S.modulus) % S.modulus
    return x
