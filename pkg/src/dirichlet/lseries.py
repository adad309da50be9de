"""Numerical Dirichlet L-series on the real axis.

Every returned value carries a ``truncation_bound``: a rigorous majorant of
what the finite computation dropped (series tails, omitted primes, omitted
prime powers) plus a conservative floating-point allowance. ``log L`` is
always the prime-power sum ``sum_q sum_nu chi(q)**nu / (nu q**(nu s))``;
no complex logarithm is ever taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .arith import euler_phi, factorize, prime_array
from .characters import DirichletCharacter, enumerate_characters, principal
from .cyclotomic import to_complex, RootValue

__all__ = [
    "LValue",
    "EvalOptions",
    "SeriesReport",
    "WeightedLogReport",
    "NonvanishingVerdict",
    "zeta",
    "l_direct",
    "euler_product",
    "log_l_prime_sum",
    "residue_class_prime_sum",
    "character_weighted_logl",
    "principal_pole_check",
    "nonvanishing_report",
    "prime_census",
    "prime_tail_majorant",
    "series_report",
]

EPS = np.finfo(float).eps

# upper bound pi(x) < 1.25506 x / log x, valid for all x > 1 (Rosser-Schoenfeld)
_PI_UPPER = 1.25506


@dataclass(frozen=True)
class LValue:
    value: complex
    truncation_bound: float

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "truncation_bound", float(self.truncation_bound))
        if not self.truncation_bound >= 0:
            raise ValueError("truncation bound must be nonnegative")

    def __complex__(self) -> complex:
        return complex(self.value)

    def __abs__(self) -> float:
        return abs(self.value)


@dataclass(frozen=True)
class EvalOptions:
    term_limit: int | None = None  # None: max(10**5, 10**3 * k)
    prime_bound: int = 10**5
    power_depth: int = 30
    tolerance: float = 1e-6

    def __post_init__(self):
        if self.term_limit is not None and self.term_limit <= 0:
            raise ValueError("term_limit must be positive")
        if self.prime_bound <= 0 or self.tolerance <= 0:
            raise ValueError("prime_bound and tolerance must be positive")
        if self.power_depth < 2:
            raise ValueError("power_depth must be at least 2")


DEFAULTS = EvalOptions()


def _require_s_above_one(s: float):
    if not s > 1:
        raise ValueError(f"s must exceed 1, got {s}")


# -- zeta -------------------------------------------------------------------

_ZETA_TERMS = 1000
# B_2, B_4, B_6, B_8, B_10
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66)


def _em_tail(s: float, m: int) -> tuple[float, float]:
    """Euler-Maclaurin value of sum_{n >= m} n**-s and a bound on its error.

    For x**-s all derivatives alternate in sign monotonically, so the
    remainder is bounded by the first omitted correction term.
    """
    total = m ** (1 - s) / (s - 1) + 0.5 * m**-s
    rising = s  # s (s+1) ... (s + 2j - 2)
    fact = 2.0  # (2j)!
    terms = []
    for j, b in enumerate(_BERNOULLI, start=1):
        terms.append(b / fact * rising * m ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    total += sum(terms[:-1])
    return total, abs(terms[-1])


def zeta(s: float) -> LValue:
    """Riemann zeta on the real half-line s > 1."""
    _require_s_above_one(s)
    m = _ZETA_TERMS
    n = np.arange(1, m, dtype=float)
    head = float(np.sum(n**-s))
    tail, err = _em_tail(s, m)
    value = head + tail
    return LValue(value, err + 4 * m * EPS * value)


# -- direct summation -------------------------------------------------------

_CHUNK = 1 << 20


@lru_cache(maxsize=64)
def _residue_power_sums(k: int, s: float, terms: int) -> tuple[np.ndarray, float]:
    """``S[r] = sum_{n <= terms, n = r mod k} n**-s`` and a rounding allowance.

    ``terms`` must be a multiple of ``k``.
    """
    sums = np.zeros(k)
    chunk = k * max(1, _CHUNK // k)
    start = 1
    while start <= terms:
        stop = min(start + chunk, terms + 1)
        n = np.arange(start, stop, dtype=float)
        sums += (n**-s).reshape(-1, k).sum(axis=0)
        start = stop
    # column j of each block holds n = j + 1 (mod k)
    sums = np.roll(sums, 1)
    sums.setflags(write=False)
    rounding = 4 * (terms / k + 2) * EPS * float(sums.sum())
    return sums, rounding


def _term_limit(k: int, opts: EvalOptions) -> int:
    m = opts.term_limit or max(10**5, 10**3 * k)
    return -(-m // k) * k


def l_direct(s: float, chi: DirichletCharacter, opts: EvalOptions = DEFAULTS) -> LValue:
    """L(s, chi) by direct summation.

    The principal character goes through ``zeta(s) * prod_{p | k} (1 - p**-s)``.
    Otherwise the series is summed over whole periods of length k; since each
    period of character values sums to zero, the dropped tail after M terms
    is at most ``k (1 + s) / M**s``.
    """
    k = chi.modulus
    if chi.is_principal:
        _require_s_above_one(s)
        z = zeta(s)
        euler = math.prod(1 - p**-s for p in factorize(k).primes)
        return LValue(complex(z.value * euler), z.truncation_bound * euler)
    if not s > 0:
        raise ValueError(f"s must be positive for a non-principal character, got {s}")
    terms = _term_limit(k, opts)
    sums, rounding = _residue_power_sums(k, float(s), terms)
    value = complex(np.dot(chi.complex_table, sums))
    return LValue(value, k * (1 + s) / terms**s + rounding)


# -- prime sums -------------------------------------------------------------

def prime_tail_majorant(s: float, bound: int) -> float:
    """Upper bound for ``sum_{q prime > bound} q**-s`` (s > 1)."""
    _require_s_above_one(s)
    b = max(bound, 2)
    integer_tail = b ** (1 - s) / (s - 1)
    prime_tail = _PI_UPPER * s * b ** (1 - s) / ((s - 1) * math.log(b))
    return min(integer_tail, prime_tail)


def _primes_off_modulus(k: int, bound: int) -> np.ndarray:
    q = prime_array(bound)
    return q[k % q != 0] if k > 1 else q


def euler_product(s: float, chi: DirichletCharacter, prime_bound: int = DEFAULTS.prime_bound) -> LValue:
    """``prod_{q <= prime_bound, q ∤ k} (1 - chi(q) q**-s)**-1``."""
    _require_s_above_one(s)
    q = _primes_off_modulus(chi.modulus, prime_bound)
    vals = chi.complex_table[q % chi.modulus]
    value = complex(np.prod(1.0 / (1.0 - vals * q.astype(float) ** -s)))
    b = max(prime_bound, 2)
    log_tail = prime_tail_majorant(s, prime_bound) / (1 - b**-s)
    bound = abs(value) * (math.expm1(log_tail) + 4 * len(q) * EPS)
    return LValue(value, bound)


def _power_depth_tail(s: float, prime_bound: int, depth: int) -> float:
    """Majorant for the prime-power terms a truncated log sum drops."""
    b = max(prime_bound, 2)
    # primes above the bound, powers nu >= 2
    big = b ** (1 - 2 * s) / (2 * (2 * s - 1) * (1 - b**-s))
    # primes below the bound, powers nu > depth
    a = (depth + 1) * s
    small = (2.0**-a + 2.0 ** (1 - a) / (a - 1)) / ((depth + 1) * (1 - 2.0**-s))
    return big + small


def log_l_prime_sum(
    s: float,
    chi: DirichletCharacter,
    prime_bound: int = DEFAULTS.prime_bound,
    power_depth: int = DEFAULTS.power_depth,
) -> LValue:
    """``sum_{q <= prime_bound, q ∤ k} sum_{nu=1}^{power_depth} chi(q)**nu / (nu q**(nu s))``.

    This is log L(s, chi) expanded through the Taylor series of
    ``-log(1 - x)`` on every Euler factor.
    """
    _require_s_above_one(s)
    if power_depth < 1:
        raise ValueError("power_depth must be positive")
    k = chi.modulus
    N = chi.common_order
    q = _primes_off_modulus(k, prime_bound)
    e = np.array([chi.exponents[r] for r in (q % k).tolist()], dtype=np.int64)
    roots = np.array([to_complex(RootValue(N, j)) for j in range(N)])
    x = q.astype(float) ** -s
    xp = np.ones_like(x)
    total = 0j
    for nu in range(1, power_depth + 1):
        xp *= x
        total += complex(np.dot(roots[(nu * e) % N], xp)) / nu
    bound = prime_tail_majorant(s, prime_bound) + _power_depth_tail(s, prime_bound, power_depth)
    bound += 8 * len(q) * EPS
    return LValue(total, bound)


def residue_class_prime_sum(s: float, k: int, m: int, prime_bound: int = DEFAULTS.prime_bound) -> float:
    """``sum_{q <= prime_bound, q = m (mod k)} q**-s``."""
    if not s > 0:
        raise ValueError(f"s must be positive, got {s}")
    if not 1 <= m <= k:
        raise ValueError(f"residue must lie in 1..{k}, got {m}")
    q = prime_array(prime_bound)
    sel = q[q % k == m % k]
    return float(np.sum(sel.astype(float) ** -s))


@dataclass(frozen=True)
class WeightedLogReport:
    s: float
    modulus: int
    residue: int
    value: complex
    truncation_bound: float
    prime_side: float  # phi(k) * residue_class_prime_sum

    @property
    def discrepancy(self) -> float:
        return self.value.real - self.prime_side

    @property
    def imaginary(self) -> float:
        return abs(self.value.imag)

    @property
    def envelope(self) -> float:
        """phi(k) (majorant of the prime-power block) plus truncation."""
        return euler_phi(self.modulus) + self.truncation_bound


def character_weighted_logl(s: float, k: int, m: int, opts: EvalOptions = DEFAULTS) -> WeightedLogReport:
    """``sum_chi conj(chi(m)) log L(s, chi)`` against ``phi(k) sum_{q = m} q**-s``."""
    _require_s_above_one(s)
    if math.gcd(m, k) != 1:
        raise ValueError(f"{m} is not a unit mod {k}")
    total = 0j
    bound = 0.0
    for chi in enumerate_characters(k):
        weight = to_complex(chi(m).conjugate())
        lv = log_l_prime_sum(s, chi, opts.prime_bound, opts.power_depth)
        total += weight * lv.value
        bound += lv.truncation_bound
    r = m % k or k
    prime_side = euler_phi(k) * residue_class_prime_sum(s, k, r, opts.prime_bound)
    return WeightedLogReport(float(s), k, m, total, bound, prime_side)


def principal_pole_check(k: int, eps_grid: Iterable[float]) -> list[tuple[float, float]]:
    """``(eps, eps * L(1 + eps, chi_0))`` pairs; the limit is phi(k)/k."""
    chi0 = principal(k)
    out = []
    for eps in eps_grid:
        if not 0 < eps <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {eps}")
        out.append((eps, eps * l_direct(1 + eps, chi0).value.real))
    return out


@dataclass(frozen=True)
class NonvanishingVerdict:
    label: tuple[int, ...]
    value: complex
    truncation_bound: float
    threshold: float

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def passes(self) -> bool:
        # certified: the true value is at least |L| - bound away from zero
        return self.magnitude - self.truncation_bound > self.threshold


def nonvanishing_report(k: int, delta: float = 0.1, target_bound: float = 1e-5) -> list[NonvanishingVerdict]:
    """|L(1, chi)| for every non-principal chi mod k, summed far enough that
    the certified tail is below ``target_bound``."""
    if k < 3:
        raise ValueError("non-principal characters need k >= 3")
    if delta <= 0:
        raise ValueError("delta must be positive")
    opts = EvalOptions(term_limit=max(math.ceil(2 * k / target_bound), 10**5))
    out = []
    for chi in enumerate_characters(k):
        if chi.is_principal:
            continue
        lv = l_direct(1.0, chi, opts)
        out.append(NonvanishingVerdict(chi.label, lv.value, lv.truncation_bound, delta))
    return out


def prime_census(Q: int, k: int) -> dict[int, int]:
    """Number of primes <= Q in each residue class mod k."""
    if Q < 2 or k < 1:
        raise ValueError("need Q >= 2 and k >= 1")
    counts = np.bincount(prime_array(Q) % k, minlength=k)
    return {m: int(c) for m, c in enumerate(counts)}


@dataclass(frozen=True)
class SeriesReport:
    s: float
    label: tuple[int, ...]
    real: float
    imag: float
    truncation_bound: float
    modulus: int = field(default=1)

    def as_row(self) -> dict:
        return {
            "s": self.s,
            "modulus": self.modulus,
            "label": list(self.label),
            "real": self.real,
            "imag": self.imag,
            "truncation_bound": self.truncation_bound,
        }


def series_report(s: float, chi: DirichletCharacter, opts: EvalOptions = DEFAULTS) -> SeriesReport:
    lv = l_direct(s, chi, opts)
    return SeriesReport(float(s), chi.label, lv.value.real, lv.value.imag, lv.truncation_bound, chi.modulus)
