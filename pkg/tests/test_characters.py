from math import factorial

import pytest

from oracles import (
    class_size_oracle,
    ind_sgn_coset_oracle,
    perm_character_tabloid_oracle,
)
from younglab.characters import (
    class_size,
    class_types,
    conjugate_twist_check,
    eq1_check,
    ind_sgn_character,
    inner,
    irreducible_characters,
    lemma1_check,
    multiplicity_table,
    perm_character,
    restrict,
    sign_character,
    sign_twist,
    theorem1_check,
    theorem1_components,
    trivial_character,
    youngs_rule_check,
)
from younglab.errors import DegreeMismatchError
from younglab.partitions import (
    conjugate,
    enumerate_partitions,
    standard_count,
)
from younglab.tableaux import eq2_check, kostka


def prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


class TestClassSize:
    def test_identity_class(self):
        for n in range(1, 8):
            assert class_size((1,) * n) == 1

    def test_long_cycles(self):
        for n in range(1, 8):
            assert class_size((n,)) == factorial(n - 1)

    def test_transpositions_in_degree_4(self):
        assert class_size((2, 1, 1)) == 6
        assert class_size((2, 1, 1)) == class_size_oracle((2, 1, 1))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_enumeration(self, n):
        for rho in class_types(n):
            assert class_size(rho) == class_size_oracle(rho)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_sizes_sum_to_group_order(self, n):
        assert sum(class_size(rho) for rho in class_types(n)) == factorial(n)


class TestPermCharacter:
    def test_degree_is_multinomial(self):
        for n in range(1, 8):
            for lam in enumerate_partitions(n):
                expected = factorial(n) // prod(factorial(p) for p in lam)
                assert perm_character(lam).degree == expected

    def test_single_row_is_trivial(self):
        for n in range(1, 8):
            assert perm_character((n,)) == trivial_character(n)

    def test_hand_value(self):
        assert perm_character((3, 1))((2, 1, 1)) == 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_tabloid_oracle(self, n):
        for lam in enumerate_partitions(n):
            assert perm_character(lam) == perm_character_tabloid_oracle(lam)


class TestSignTwist:
    def test_involution(self):
        f = perm_character((3, 2))
        assert sign_twist(sign_twist(f)) == f

    def test_column_gives_sign(self):
        for n in range(1, 7):
            assert ind_sgn_character((1,) * n) == sign_character(n)

    def test_degrees_after_twist(self):
        # degree of the column-induced module is n!/prod(conjugate parts!)
        assert ind_sgn_character((3, 1)).degree == 12
        assert ind_sgn_character((2, 1, 1)).degree == 4

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_coset_oracle(self, n):
        for lam in enumerate_partitions(n):
            assert ind_sgn_character(lam) == ind_sgn_coset_oracle(lam)


class TestInner:
    def test_trivial_norm(self):
        for n in range(1, 8):
            psi = perm_character((n,))
            assert inner(psi, psi) == 1

    def test_trivial_occurs_once_in_every_permutation_module(self):
        for n in range(1, 8):
            for lam in enumerate_partitions(n):
                assert inner(perm_character(lam), trivial_character(n)) == 1

    def test_degree_3_pairing(self):
        psi = perm_character((2, 1))
        assert inner(psi, sign_twist(psi)) == 1

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            inner(trivial_character(3), trivial_character(4))


class TestTheorem1:
    def test_single_row(self):
        for n in range(1, 8):
            assert theorem1_check((n,)) == 1

    def test_2_1_1(self):
        assert theorem1_check((2, 1, 1)) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_sweep_with_unique_common_component(self, n):
        for lam in enumerate_partitions(n):
            assert theorem1_check(lam) == 1
            assert theorem1_components(lam) == [(lam, 1, 1)]


class TestIrreducibles:
    def test_degree_3_by_hand(self):
        chis = irreducible_characters(3)
        std = chis[(2, 1)]
        assert std((1, 1, 1)) == 2
        assert std((2, 1)) == 0
        assert std((3,)) == -1

    def test_extremes(self):
        for n in range(1, 8):
            chis = irreducible_characters(n)
            assert chis[(n,)] == trivial_character(n)
            assert chis[(1,) * n] == sign_character(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_orthonormal_family(self, n):
        chis = irreducible_characters(n)
        for mu, f in chis.items():
            for nu, g in chis.items():
                assert inner(f, g) == (1 if mu == nu else 0)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dimensions(self, n):
        chis = irreducible_characters(n)
        assert all(f.degree == standard_count(mu) for mu, f in chis.items())
        assert sum(f.degree ** 2 for f in chis.values()) == factorial(n)


class TestMultiplicities:
    def test_example_row_2_1_1(self):
        table = multiplicity_table(4)
        lam = (2, 1, 1)
        assert table((4,), lam) == 1
        assert table((3, 1), lam) == 2
        assert table((2, 2), lam) == 1
        assert table((2, 1, 1), lam) == 1
        assert table((1, 1, 1, 1), lam) == 0
        dims = sum(
            table(mu, lam) * standard_count(mu) for mu in enumerate_partitions(4)
        )
        assert dims == 12

    @pytest.mark.parametrize("n", range(1, 7))
    def test_unitriangular_along_dominance(self, n):
        from younglab.partitions import dominates

        table = multiplicity_table(n)
        for mu in enumerate_partitions(n):
            for lam in enumerate_partitions(n):
                if mu == lam:
                    assert table(mu, lam) == 1
                elif not dominates(mu, lam):
                    assert table(mu, lam) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_youngs_rule(self, n):
        assert youngs_rule_check(n)


class TestRestriction:
    def test_single_row_both_sides_trivial(self):
        for n in range(2, 8):
            assert lemma1_check((n,))

    def test_2_2_1_coefficients(self):
        lhs = restrict(perm_character((2, 2, 1)))
        rhs = perm_character((2, 1, 1)).scaled(2) + perm_character((2, 2))
        assert lhs == rhs

    @pytest.mark.parametrize("n", range(2, 7))
    def test_sweep(self, n):
        for lam in enumerate_partitions(n):
            assert lemma1_check(lam)


class TestEq1:
    def test_example(self):
        assert eq1_check((3, 2, 1), (4, 1)) == (5, 5)

    def test_single_row(self):
        for n in range(2, 7):
            for rho in enumerate_partitions(n - 1):
                left, right = eq1_check((n,), rho)
                assert left == right
                assert left == (1 if rho == (n - 1,) else 0)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_sweep_and_agreement_with_tableau_side(self, n):
        for lam in enumerate_partitions(n):
            for rho in enumerate_partitions(n - 1):
                left, right = eq1_check(lam, rho)
                assert left == right
                assert (left, right) == eq2_check(lam, rho)


class TestConjugateTwist:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_sweep(self, n):
        assert conjugate_twist_check(n)

    def test_pairing_against_conjugate_kostka(self):
        for n in range(1, 6):
            chis = irreducible_characters(n)
            for lam in enumerate_partitions(n):
                phi = ind_sgn_character(lam)
                for mu in enumerate_partitions(n):
                    assert inner(phi, chis[mu]) == kostka(
                        conjugate(mu), conjugate(lam)
                    )
