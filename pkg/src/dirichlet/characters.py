"""Dirichlet characters modulo k.

A character is stored by its exponent tuple ``params`` over the cyclic
factors of the unit group. With generators ``c_i`` of order ``o_i`` and
``N`` the unit-group exponent, the value at a unit ``n`` with index vector
``v`` is ``zeta_N ** sum(params_i * (N // o_i) * v_i)``. Under the canonical
choice of primitive roots of unity ``zeta_{o_i}``, ``params`` is exactly the
historical label (``L_{a,b,c,c',...}``).
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .arith import euler_phi
from .cyclotomic import ZERO, CycSum, RootValue, cycsum_is_integer, to_complex
from .unit_group import UnitGroupStructure, decompose, units

__all__ = [
    "CharacterClass",
    "DirichletCharacter",
    "OrthogonalityCheck",
    "evaluate",
    "enumerate_characters",
    "principal",
    "char_mul",
    "char_conj",
    "classify",
    "classify_by_roots",
    "classify_by_values",
    "orthogonality_over_group",
    "orthogonality_over_characters",
    "weighted_orthogonality",
    "dirichlet_label",
    "character_from_label",
]


class CharacterClass(enum.Enum):
    PRINCIPAL = "Principal"
    REAL_NON_PRINCIPAL = "RealNonPrincipal"
    COMPLEX = "ComplexClass"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DirichletCharacter:
    structure: UnitGroupStructure
    params: tuple[int, ...]

    def __post_init__(self):
        params = tuple(self.params)
        object.__setattr__(self, "params", params)
        orders = self.structure.orders
        if len(params) != len(orders):
            raise ValueError(f"expected {len(orders)} parameters, got {len(params)}")
        for a, o in zip(params, orders):
            if not 0 <= a < o:
                raise ValueError(f"parameter {a} out of range for factor of order {o}")

    @property
    def modulus(self) -> int:
        return self.structure.modulus

    @property
    def common_order(self) -> int:
        return self.structure.exponent

    @property
    def label(self) -> tuple[int, ...]:
        return self.params

    @property
    def is_principal(self) -> bool:
        return not any(self.params)

    @cached_property
    def exponents(self) -> tuple[int | None, ...]:
        """Value exponents over residues ``0..k-1``; ``None`` off the units."""
        S = self.structure
        N = self.common_order
        weights = [a * (N // o) for a, o in zip(self.params, S.orders)]
        table: list[int | None] = [None] * self.modulus
        for n in units(self.modulus):
            v = S.index_vector(n)
            table[n] = sum(w * x for w, x in zip(weights, v)) % N
        return tuple(table)

    def __call__(self, n: int) -> RootValue:
        return evaluate(self, n)

    def values(self) -> list[RootValue]:
        return [self(n) for n in range(self.modulus)]

    @cached_property
    def complex_table(self) -> np.ndarray:
        """Complex values over residues ``0..k-1`` (read-only array)."""
        out = np.array([to_complex(self(n)) for n in range(self.modulus)], dtype=complex)
        out.setflags(write=False)
        return out

    def __repr__(self) -> str:
        return f"DirichletCharacter(modulus={self.modulus}, params={self.params})"


def evaluate(chi: DirichletCharacter, n: int) -> RootValue:
    e = chi.exponents[n % chi.modulus]
    if e is None:
        return ZERO
    return RootValue(chi.common_order, e)


def principal(k: int) -> DirichletCharacter:
    S = decompose(k)
    return DirichletCharacter(S, (0,) * len(S))


@lru_cache(maxsize=256)
def enumerate_characters(k: int) -> tuple[DirichletCharacter, ...]:
    """All characters mod k, params in lexicographic order (principal first)."""
    S = decompose(k)
    return tuple(
        DirichletCharacter(S, params)
        for params in itertools.product(*(range(o) for o in S.orders))
    )


def _same_modulus(a: DirichletCharacter, b: DirichletCharacter):
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")


def char_mul(a: DirichletCharacter, b: DirichletCharacter) -> DirichletCharacter:
    _same_modulus(a, b)
    orders = a.structure.orders
    return DirichletCharacter(
        a.structure, tuple((x + y) % o for x, y, o in zip(a.params, b.params, orders))
    )


def char_conj(chi: DirichletCharacter) -> DirichletCharacter:
    orders = chi.structure.orders
    return DirichletCharacter(chi.structure, tuple(-x % o for x, o in zip(chi.params, orders)))


def classify_by_values(chi: DirichletCharacter) -> CharacterClass:
    N = chi.common_order
    exps = [e for e in chi.exponents if e is not None]
    if all(e == 0 for e in exps):
        return CharacterClass.PRINCIPAL
    if all(2 * e % N == 0 for e in exps):
        return CharacterClass.REAL_NON_PRINCIPAL
    return CharacterClass.COMPLEX


def classify_by_roots(chi: DirichletCharacter) -> CharacterClass:
    """Classification by the roots of unity in the defining expression.

    The root attached to factor ``i`` is ``zeta_{o_i} ** params_i``; it is 1
    iff the parameter is 0 and real iff twice the parameter is a multiple of
    the order.
    """
    pairs = list(zip(chi.params, chi.structure.orders))
    if all(a == 0 for a, _ in pairs):
        return CharacterClass.PRINCIPAL
    if all(2 * a % o == 0 for a, o in pairs):
        return CharacterClass.REAL_NON_PRINCIPAL
    return CharacterClass.COMPLEX


def classify(chi: DirichletCharacter) -> CharacterClass:
    by_values = classify_by_values(chi)
    by_roots = classify_by_roots(chi)
    if by_values is not by_roots:
        raise RuntimeError(f"{chi!r}: value class {by_values} disagrees with root class {by_roots}")
    return by_values


@dataclass(frozen=True)
class OrthogonalityCheck:
    total: CycSum
    expected: int
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def _check(total: CycSum, expected: int) -> OrthogonalityCheck:
    return OrthogonalityCheck(total, expected, cycsum_is_integer(total, expected))


def orthogonality_over_group(chi: DirichletCharacter) -> OrthogonalityCheck:
    """Exact sum of chi over the units mod k; phi(k) for the principal character, else 0."""
    total = CycSum.from_exponents(chi.common_order, (e for e in chi.exponents if e is not None))
    return _check(total, euler_phi(chi.modulus) if chi.is_principal else 0)


def _require_unit(g: int, k: int):
    if math.gcd(g, k) != 1:
        raise ValueError(f"{g} is not a unit mod {k}")


def orthogonality_over_characters(k: int, g: int) -> OrthogonalityCheck:
    _require_unit(g, k)
    chars = enumerate_characters(k)
    N = decompose(k).exponent
    total = CycSum.from_exponents(N, (chi.exponents[g % k] for chi in chars))
    return _check(total, euler_phi(k) if g % k == 1 % k else 0)


def weighted_orthogonality(k: int, g: int, h: int) -> OrthogonalityCheck:
    """Exact ``sum_chi chi(g) * conj(chi(h))``; phi(k) when g = h (mod k), else 0."""
    _require_unit(g, k)
    _require_unit(h, k)
    chars = enumerate_characters(k)
    N = decompose(k).exponent
    total = CycSum.from_exponents(
        N, (chi.exponents[g % k] - chi.exponents[h % k] for chi in chars)
    )
    return _check(total, euler_phi(k) if (g - h) % k == 0 else 0)


def dirichlet_label(chi: DirichletCharacter) -> tuple[int, ...]:
    return chi.params


def character_from_label(k: int, label) -> DirichletCharacter:
    if isinstance(label, int):
        label = (label,)
    return DirichletCharacter(decompose(k), tuple(label))
