"""Dirichlet characters, L-series and the arithmetic underneath them."""

from .arith import euler_phi, factorize, find_primitive_root, index_of, pow_mod, sieve_primes
from .characters import (
    CharacterClass,
    DirichletCharacter,
    character_from_label,
    classify,
    dirichlet_label,
    enumerate_characters,
    principal,
)
from .cyclotomic import ZERO, CycSum, RootValue, cycsum_is_integer
from .lseries import EvalOptions, LValue, euler_product, l_direct, log_l_prime_sum, zeta
from .unit_group import UnitGroupStructure, decompose, index_vector, reconstruct

__version__ = "0.1.0"
