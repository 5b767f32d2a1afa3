from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tradeforge import (
    IntMatrix,
    determinant,
    permanent,
    permanent_expansion,
    smith_normal_form,
    solve_rational,
)
from tradeforge.errors import NotSquare, Singular, TooLarge

INTERCALATE_REDUCED = IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def det_oracle(m: IntMatrix) -> int:
    """Permutation expansion with signs; only sane for tiny matrices."""
    n = m.rows
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = 1
        for i in range(n):
            term *= m[i, perm[i]]
        total += -term if inversions % 2 else term
    return total


def per_oracle(m: IntMatrix) -> int:
    n = m.rows
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i in range(n):
            term *= m[i, perm[i]]
        total += term
    return total


small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
).map(IntMatrix)


class TestDeterminant:
    def test_identity(self):
        assert determinant(IntMatrix.identity(3)) == 1

    def test_two_by_two(self):
        assert determinant(IntMatrix([[2, 4], [6, 8]])) == -8

    def test_intercalate_reduced(self):
        assert abs(determinant(INTERCALATE_REDUCED)) == 2

    def test_not_square(self):
        with pytest.raises(NotSquare):
            determinant(IntMatrix([[1, 2, 3]]))

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_matches_permutation_expansion(self, m):
        assert determinant(m) == det_oracle(m)


class TestPermanent:
    def test_identity(self):
        for n in (1, 2, 5):
            assert permanent(IntMatrix.identity(n)) == 1

    def test_intercalate_reduced(self):
        assert permanent(INTERCALATE_REDUCED) == 2

    def test_derangements_of_three(self):
        m = IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        assert permanent(m) == 2 == per_oracle(m)

    def test_cap(self):
        big = IntMatrix([[1] * 31 for _ in range(31)])
        with pytest.raises(TooLarge):
            permanent(big)
        with pytest.raises(TooLarge):
            permanent(IntMatrix.identity(13), cap=12)
        assert permanent(IntMatrix.identity(13), cap=13) == 1

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("TRADEFORGE_PERMANENT_CAP", "2")
        with pytest.raises(TooLarge):
            permanent(IntMatrix.identity(3))
        monkeypatch.setenv("TRADEFORGE_PERMANENT_CAP", "35")
        assert permanent(IntMatrix.identity(3)) == 1

    def test_not_square(self):
        with pytest.raises(NotSquare):
            permanent(IntMatrix([[1], [2]]))

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_matches_permutation_expansion(self, m):
        expected = per_oracle(m)
        assert permanent(m) == expected
        assert permanent_expansion(m) == expected

    def test_expansion_handles_orders_past_the_cap(self):
        m = IntMatrix(
            [[1 if j in (i, (i + 1) % 40) else 0 for j in range(40)] for i in range(40)]
        )
        # circulant with two 1s per row: exactly 2 permutation covers
        assert permanent_expansion(m) == 2


class TestSmithNormalForm:
    def test_diagonal_input(self):
        result = smith_normal_form(IntMatrix([[2, 0], [0, 4]]))
        assert result.diagonal == (2, 4)
        assert result.invariant_factors == (2, 4)

    def test_worked_two_by_two(self):
        # gcd of the entries is 2 and 2 * d2 = |det| = 8
        result = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
        assert result.invariant_factors == (2, 4)

    def test_intercalate_reduced(self):
        result = smith_normal_form(INTERCALATE_REDUCED)
        assert result.diagonal == (1, 1, 2)
        assert result.invariant_factors == (2,)

    def test_rectangular(self):
        m = IntMatrix([[2, 0, 0], [0, 3, 0]])
        result = smith_normal_form(m)
        assert result.s.rows == 2 and result.s.cols == 3
        assert result.diagonal == (1, 6)

    def test_zero_matrix(self):
        result = smith_normal_form(IntMatrix([[0, 0], [0, 0]]))
        assert result.diagonal == (0, 0)
        assert result.invariant_factors == ()

    @settings(max_examples=120, deadline=None)
    @given(
        st.integers(min_value=1, max_value=4),
        st.integers(min_value=1, max_value=4),
        st.data(),
    )
    def test_invariants_on_random_matrices(self, nr, nc, data):
        entries = data.draw(
            st.lists(
                st.lists(st.integers(min_value=-9, max_value=9), min_size=nc, max_size=nc),
                min_size=nr,
                max_size=nr,
            )
        )
        m = IntMatrix(entries)
        result = smith_normal_form(m)
        assert result.u1 @ m @ result.u2 == result.s
        assert abs(determinant(result.u1)) == 1
        assert abs(determinant(result.u2)) == 1
        diag = result.diagonal
        assert all(d >= 0 for d in diag)
        for x, y in zip(diag, diag[1:]):
            if y:
                assert x and y % x == 0
        # off-diagonal must vanish
        for i in range(result.s.rows):
            for j in range(result.s.cols):
                if i != j:
                    assert result.s[i, j] == 0
        if nr == nc:
            import math

            assert math.prod(diag) == abs(determinant(m))


class TestSolveRational:
    def test_identity(self):
        x = solve_rational(IntMatrix.identity(3), [1, 0, 0])
        assert x.numerators == (1, 0, 0)
        assert x.denominator == 1

    def test_intercalate_system(self):
        x = solve_rational(INTERCALATE_REDUCED, [1, 0, 0])
        assert x.numerators == (-1, 1, 1)
        assert x.denominator == 2

    def test_singular(self):
        with pytest.raises(Singular):
            solve_rational(IntMatrix([[1, 1], [1, 1]]), [1, 0])

    def test_reduced_to_lowest_terms(self):
        x = solve_rational(IntMatrix([[2, 0], [0, 2]]), [2, 4])
        assert x.numerators == (1, 2)
        assert x.denominator == 1

    @settings(max_examples=80, deadline=None)
    @given(small_matrices, st.data())
    def test_solution_satisfies_system(self, m, data):
        from fractions import Fraction

        if determinant(m) == 0:
            return
        rhs = data.draw(
            st.lists(
                st.integers(min_value=-5, max_value=5),
                min_size=m.rows,
                max_size=m.rows,
            )
        )
        x = solve_rational(m, rhs)
        for i in range(m.rows):
            total = sum(
                Fraction(m[i, j] * x.numerators[j], x.denominator)
                for j in range(m.cols)
            )
            assert total == rhs[i]
