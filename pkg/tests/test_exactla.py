import random
from fractions import Fraction

import pytest

from younglab.errors import DimensionMismatchError, NotInvariantError
from younglab.exactla import (
    RationalMatrix,
    Subspace,
    intersect,
    kernel,
    member,
    rank,
    rank_bareiss,
    restricted_trace,
    rref,
    solve,
)


def random_int_matrix(rng, rows, cols, lo=-5, hi=5):
    return RationalMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


class TestRref:
    def test_identity_fixed(self):
        eye = RationalMatrix.identity(4)
        red, rk, pivots = rref(eye)
        assert red == eye and rk == 4 and pivots == [0, 1, 2, 3]

    def test_zero_fixed(self):
        z = RationalMatrix.zero(3, 2)
        red, rk, pivots = rref(z)
        assert red == z and rk == 0 and pivots == []

    def test_dependent_rows(self):
        a = RationalMatrix([[1, 2], [2, 4]])
        _, rk, _ = rref(a)
        assert rk == 1

    def test_idempotent_on_random(self):
        rng = random.Random(7)
        for _ in range(25):
            a = random_int_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            red, _, _ = rref(a)
            again, _, _ = rref(red)
            assert again == red

    def test_rank_nullity(self):
        rng = random.Random(11)
        for _ in range(25):
            a = random_int_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            assert rank(a) + kernel(a).dim == a.cols

    def test_bareiss_agrees_with_gauss_jordan(self):
        rng = random.Random(13)
        for _ in range(40):
            a = random_int_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
            assert rank_bareiss(a) == rank(a)
        frac = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
        assert rank_bareiss(frac) == rank(frac)


class TestKernelSolve:
    def test_kernel_of_identity_is_trivial(self):
        assert kernel(RationalMatrix.identity(5)).dim == 0

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(3)
        for _ in range(25):
            a = random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
            ker = kernel(a)
            for v in ker.basis.entries:
                assert all(x == 0 for x in a.matvec(v))

    def test_solve_round_trip(self):
        rng = random.Random(5)
        for _ in range(25):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            a = random_int_matrix(rng, rows, cols)
            x0 = [rng.randint(-4, 4) for _ in range(cols)]
            b = a.matvec(x0)
            x = solve(a, b)
            assert x is not None
            assert a.matvec(x) == b

    def test_solve_inconsistent(self):
        a = RationalMatrix([[1, 1], [1, 1]])
        assert solve(a, [0, 1]) is None

    def test_member_matches_kernel_equation(self):
        rng = random.Random(9)
        for _ in range(25):
            a = random_int_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
            ker = kernel(a)
            v = [rng.randint(-3, 3) for _ in range(a.cols)]
            assert member(ker, v) == all(x == 0 for x in a.matvec(v))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            solve(RationalMatrix([[1, 2]]), [1, 2])


class TestSubspace:
    def test_canonical_equality(self):
        s1 = Subspace(3, [[1, 1, 0], [0, 0, 1]])
        s2 = Subspace(3, [[2, 2, 2], [0, 0, 5], [1, 1, 1]])
        assert s1 == s2 and s1.dim == 2

    def test_intersection(self):
        xy = Subspace(3, [[1, 0, 0], [0, 1, 0]])
        yz = Subspace(3, [[0, 1, 0], [0, 0, 1]])
        meet = intersect(xy, yz)
        assert meet.dim == 1
        assert member(meet, [0, 1, 0])

    def test_intersection_contains_only_common_vectors(self):
        rng = random.Random(21)
        for _ in range(15):
            d = rng.randint(2, 5)
            s1 = Subspace(d, [[rng.randint(-3, 3) for _ in range(d)] for _ in range(2)])
            s2 = Subspace(d, [[rng.randint(-3, 3) for _ in range(d)] for _ in range(2)])
            meet = intersect(s1, s2)
            for v in meet.basis.entries:
                assert member(s1, v) and member(s2, v)

    def test_trivial_intersection(self):
        s1 = Subspace(2, [[1, 0]])
        s2 = Subspace(2, [[0, 1]])
        assert intersect(s1, s2).dim == 0


class TestRestrictedTrace:
    def test_full_basis_gives_trace(self):
        a = RationalMatrix([[2, 1, 0], [0, 3, 0], [1, 0, 5]])
        full = Subspace(3, RationalMatrix.identity(3).entries)
        assert restricted_trace(a, full) == 10

    def test_identity_gives_dimension(self):
        sub = Subspace(4, [[1, 1, 0, 0], [0, 0, 1, -1]])
        assert restricted_trace(RationalMatrix.identity(4), sub) == 2

    def test_permutation_on_fixed_line(self):
        # cyclic shift of Q^3 restricted to the all-ones line
        shift = RationalMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        line = Subspace(3, [[1, 1, 1]])
        assert restricted_trace(shift, line) == 1

    def test_not_invariant_raises(self):
        shift = RationalMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        bad = Subspace(3, [[1, 0, 0]])
        with pytest.raises(NotInvariantError):
            restricted_trace(shift, bad)
