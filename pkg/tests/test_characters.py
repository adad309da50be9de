from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirichlet.arith import euler_phi
from dirichlet.characters import (
    CharacterClass,
    DirichletCharacter,
    char_conj,
    char_mul,
    character_from_label,
    classify,
    classify_by_roots,
    classify_by_values,
    dirichlet_label,
    enumerate_characters,
    evaluate,
    orthogonality_over_characters,
    orthogonality_over_group,
    principal,
    weighted_orthogonality,
)
from dirichlet.cyclotomic import ZERO, RootValue, cycsum_is_integer, root_conj, root_mul
from dirichlet.unit_group import decompose, units

from oracles import brute_characters, brute_units

moduli = st.integers(1, 60)


def as_fractions(chi):
    return tuple(
        Fraction(chi(u).exponent, chi(u).order) % 1 for u in brute_units(chi.modulus)
    )


class TestEvaluate:
    def test_principal_is_one_on_units(self):
        for k in (1, 5, 12, 30):
            chi0 = principal(k)
            for n in range(-k, 3 * k):
                want = ZERO if chi0.modulus > 1 and any(n % p == 0 for p in (2, 3, 5) if k % p == 0) else RootValue(1, 0)
                assert chi0(n) == want

    def test_zero_off_units(self):
        for chi in enumerate_characters(4):
            assert evaluate(chi, 2) == ZERO
            assert evaluate(chi, 0) == ZERO

    def test_mod_11_index_example(self):
        chi = character_from_label(11, (1,))
        v = evaluate(chi, 10)
        assert (v.order, v.exponent) == (10, 5)
        assert complex(v) == -1

    def test_mod_1_identically_one(self):
        (chi,) = enumerate_characters(1)
        assert all(chi(n) == RootValue(1, 0) for n in range(-5, 20))

    def test_params_validated(self):
        with pytest.raises(ValueError):
            DirichletCharacter(decompose(8), (2, 0))
        with pytest.raises(ValueError):
            DirichletCharacter(decompose(8), (0,))


class TestEnumerate:
    def test_mod_4(self):
        chars = enumerate_characters(4)
        assert len(chars) == 2
        assert chars[0].is_principal
        assert complex(chars[1](3)) == -1
        assert len(brute_characters(4)) == 2

    def test_mod_12_all_real(self):
        chars = enumerate_characters(12)
        assert len(chars) == 4
        assert all(classify(c) is not CharacterClass.COMPLEX for c in chars)
        assert all(f in (0, Fraction(1, 2)) for chi in brute_characters(12) for f in chi)

    def test_lexicographic_and_principal_first(self):
        for k in (8, 24, 60, 63):
            params = [c.params for c in enumerate_characters(k)]
            assert params == sorted(params)
            assert not any(params[0])

    def test_count_is_phi(self):
        for k in range(1, 201):
            assert len(enumerate_characters(k)) == euler_phi(k)

    def test_matches_brute_force(self):
        for k in range(1, 37):
            assert {as_fractions(c) for c in enumerate_characters(k)} == brute_characters(k), k

    def test_extensionally_distinct(self):
        for k in range(1, 61):
            tables = {tuple(c.exponents) for c in enumerate_characters(k)}
            assert len(tables) == euler_phi(k)


class TestGroupStructure:
    def test_identity(self):
        for chi in enumerate_characters(24):
            assert char_mul(chi, principal(24)) == chi

    def test_inverse_mod_24(self):
        chars = enumerate_characters(24)
        assert len(chars) == 8
        for chi in chars:
            assert char_mul(chi, char_conj(chi)) == principal(24)

    def test_mod_5_label_table(self):
        for i in range(4):
            for j in range(4):
                prod = char_mul(character_from_label(5, i), character_from_label(5, j))
                assert prod == character_from_label(5, (i + j) % 4)

    @given(moduli, st.data())
    def test_pointwise_law(self, k, data):
        chars = enumerate_characters(k)
        a = data.draw(st.sampled_from(chars))
        b = data.draw(st.sampled_from(chars))
        ab = char_mul(a, b)
        ca = char_conj(a)
        for n in range(k + 1):
            assert ab(n) == root_mul(a(n), b(n))
            assert ca(n) == root_conj(a(n))

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            char_mul(principal(3), principal(4))


class TestClassify:
    def test_examples(self):
        for k in (1, 3, 8, 30):
            assert classify(principal(k)) is CharacterClass.PRINCIPAL
        assert classify(enumerate_characters(4)[1]) is CharacterClass.REAL_NON_PRINCIPAL
        chi = next(c for c in enumerate_characters(5) if complex(c(2)) == 1j)
        assert classify(chi) is CharacterClass.COMPLEX

    def test_roots_and_values_agree(self):
        for k in range(1, 61):
            for chi in enumerate_characters(k):
                assert classify_by_roots(chi) is classify_by_values(chi)

    def test_value_orders(self):
        for k in range(1, 61):
            for chi in enumerate_characters(k):
                N = chi.common_order
                for n in units(k):
                    assert chi(n) ** N == RootValue(1, 0)


class TestOrthogonality:
    def test_principal_mod_5(self):
        r = orthogonality_over_group(principal(5))
        assert r.expected == 4 and r.holds
        assert r.total.evaluate() == pytest.approx(4)

    def test_nonprincipal_mod_5(self):
        for chi in enumerate_characters(5)[1:]:
            r = orthogonality_over_group(chi)
            assert r.expected == 0 and r.holds

    def test_mod_8(self):
        assert all(orthogonality_over_group(c) for c in enumerate_characters(8))

    def test_over_characters(self):
        for k in (1, 7, 12, 15):
            assert orthogonality_over_characters(k, 1).expected == euler_phi(k)
            for g in units(k):
                assert orthogonality_over_characters(k, g).holds

    def test_weighted_mod_12(self):
        r = weighted_orthogonality(12, 5, 5)
        assert r.expected == 4 and r.holds
        r = weighted_orthogonality(12, 5, 7)
        assert r.expected == 0 and r.holds

    def test_wrong_expectation_is_detected(self):
        # the exact test must not accept a non-vanishing sum as zero
        chi = principal(7)
        assert not cycsum_is_integer(orthogonality_over_group(chi).total, 0)

    def test_non_units_rejected(self):
        with pytest.raises(ValueError):
            orthogonality_over_characters(12, 4)
        with pytest.raises(ValueError):
            weighted_orthogonality(12, 5, 9)


class TestLabels:
    def test_principal_label(self):
        assert dirichlet_label(principal(24)) == (0, 0, 0)

    def test_prime_labels(self):
        for p in (3, 5, 11, 13):
            assert [dirichlet_label(c) for c in enumerate_characters(p)] == [(m,) for m in range(p - 1)]

    def test_mod_11_label_is_omega_power(self):
        # label m means omega = Omega**m with Omega = zeta_10; chi(2) = omega since ind(2) = 1
        for m in range(10):
            assert character_from_label(11, m)(2) == RootValue.root(10, m)

    def test_round_trip_mod_24(self):
        chars = enumerate_characters(24)
        assert len({dirichlet_label(c) for c in chars}) == 8
        for c in chars:
            assert character_from_label(24, dirichlet_label(c)) == c

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            character_from_label(11, 10)
        with pytest.raises(ValueError):
            character_from_label(8, (0, 0, 0))
