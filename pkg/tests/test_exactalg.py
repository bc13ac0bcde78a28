import random
from fractions import Fraction
from itertools import product
from math import gcd

import pytest
import sympy

from sdualkit.exactalg import (
    IntegerMatrix,
    LinearForm,
    Polynomial,
    RankMismatchError,
    eval_product,
    integer_kernel,
    integer_rank,
)


def rational_solve(basis, target):
    """Solve sum c_i basis_i = target over Q; returns coefficients or None."""
    if not basis:
        return [] if not any(target) else None
    ncols = len(target)
    rows = [[Fraction(v[j]) for v in basis] + [Fraction(target[j])] for j in range(ncols)]
    nvars = len(basis)
    pivot_rows = []
    r = 0
    for c in range(nvars):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivot_rows.append(c)
        r += 1
    solution = [Fraction(0)] * nvars
    for row_index, c in enumerate(pivot_rows):
        solution[c] = rows[row_index][-1]
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            return None
    # verify
    for j in range(ncols):
        if sum(solution[i] * basis[i][j] for i in range(nvars)) != target[j]:
            return None
    return solution


class TestIntegerKernel:
    def test_injective_map_has_trivial_kernel(self):
        assert integer_kernel(IntegerMatrix.from_rows([[1]])) == []

    def test_diagonal_kernel(self):
        assert integer_kernel(IntegerMatrix.from_rows([[1, -1]])) == [(1, 1)]

    def test_two_by_three(self):
        m = IntegerMatrix.from_rows([[1, 0, -1], [0, 1, -1]])
        assert integer_kernel(m) == [(1, 1, 1)]

    def test_zero_matrix_gives_standard_basis(self):
        m = IntegerMatrix.from_rows([[0, 0, 0]], cols=3)
        assert integer_kernel(m) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_no_rows(self):
        m = IntegerMatrix.from_rows([], cols=2)
        assert integer_kernel(m) == [(1, 0), (0, 1)]

    def test_scaled_row_still_primitive(self):
        # kernel of [2, -4] is generated by the primitive (2, 1)
        assert integer_kernel(IntegerMatrix.from_rows([[2, -4]])) == [(2, 1)]

    def test_kernel_properties_random(self):
        rng = random.Random(20240)
        for _ in range(150):
            rows = rng.randint(0, 3)
            cols = rng.randint(1, 4)
            m = IntegerMatrix.from_rows(
                [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols=cols
            )
            basis = integer_kernel(m)
            for v in basis:
                assert m.apply(v) == (0,) * rows
            assert len(basis) + integer_rank(m) == cols
            sym = sympy.Matrix(m.rows, m.cols, lambda i, j: m.entries[i][j])
            assert integer_rank(m) == sym.rank()
            # every lattice point of the kernel in a small box is an integer
            # combination of the returned basis
            for candidate in product(range(-2, 3), repeat=cols):
                if m.apply(candidate) != (0,) * rows:
                    continue
                coeffs = rational_solve(basis, candidate)
                assert coeffs is not None
                assert all(c.denominator == 1 for c in coeffs)

    def test_basis_vectors_are_primitive(self):
        rng = random.Random(77)
        for _ in range(100):
            rows, cols = rng.randint(1, 3), rng.randint(2, 4)
            m = IntegerMatrix.from_rows(
                [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)], cols=cols
            )
            for v in integer_kernel(m):
                g = 0
                for x in v:
                    g = gcd(g, x)
                assert g == 1

    def test_deterministic(self):
        m = IntegerMatrix.from_rows([[3, -6, 2], [1, 1, 1]])
        assert integer_kernel(m) == integer_kernel(m)

    def test_spans_saturated_nullspace(self):
        # every primitive integer vector in the rational nullspace must be an
        # integer combination of the returned basis
        rng = random.Random(4242)
        for _ in range(80):
            rows, cols = rng.randint(1, 3), rng.randint(2, 5)
            m = IntegerMatrix.from_rows(
                [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)], cols=cols
            )
            basis = integer_kernel(m)
            sym = sympy.Matrix(m.rows, m.cols, lambda i, j: m.entries[i][j])
            for vec in sym.nullspace():
                denominators = [sympy.fraction(x)[1] for x in vec]
                scale = sympy.lcm(denominators)
                ints = [int(x * scale) for x in vec]
                g = 0
                for x in ints:
                    g = gcd(g, x)
                primitive = tuple(x // g for x in ints)
                coeffs = rational_solve(basis, primitive)
                assert coeffs is not None
                assert all(c.denominator == 1 for c in coeffs)


class TestPolynomial:
    def test_no_zero_coefficients_stored(self):
        p = Polynomial(1, {(0,): 1}) - Polynomial(1, {(0,): 1})
        assert p.terms == {}
        assert p.is_zero()

    def test_ring_axioms_random(self):
        rng = random.Random(99)

        def random_poly():
            rank = 2
            terms = {}
            for _ in range(rng.randint(0, 4)):
                terms[(rng.randint(0, 3), rng.randint(0, 3))] = rng.randint(-5, 5)
            return Polynomial(rank, terms)

        for _ in range(300):
            a, b, c = random_poly(), random_poly(), random_poly()
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_pow_matches_repeated_multiplication(self):
        p = Polynomial(1, {(1,): 2, (0,): -1})
        explicit = Polynomial.one(1)
        for k in range(6):
            assert p**k == explicit
            explicit = explicit * p

    def test_rank_mismatch_rejected(self):
        with pytest.raises(RankMismatchError):
            Polynomial.one(1) + Polynomial.one(2)

    def test_homogeneous_degree(self):
        assert Polynomial(2, {(1, 1): 3, (2, 0): -1}).homogeneous_degree() == 2
        assert Polynomial(2, {(1, 0): 1, (0, 2): 1}).homogeneous_degree() is None
        assert Polynomial.constant(1, 5).homogeneous_degree() == 0

    def test_unit_monomial(self):
        assert Polynomial(1, {(3,): -7}).as_unit_monomial() == (-7, (3,))
        assert Polynomial(1, {(3,): 1, (0,): 1}).as_unit_monomial() is None

    def test_rendering(self):
        assert str(Polynomial.zero(1)) == "0"
        assert str(Polynomial.one(1)) == "1"
        assert str(Polynomial(1, {(2,): 4})) == "4*w^2"
        assert str(Polynomial(1, {(1,): 1, (0,): -3})) == "w - 3"
        assert str(Polynomial(2, {(1, 2): 1})) == "w1*w2^2"
        assert str(Polynomial(1, {(1,): -1})) == "-w"


class TestEvalProduct:
    def test_single_weight(self):
        assert eval_product([(LinearForm([1]), 1)]) == Polynomial(1, {(1,): 1})

    def test_weight_power(self):
        assert eval_product([(LinearForm([1]), 3)]) == Polynomial(1, {(3,): 1})

    def test_scaled_weight(self):
        assert eval_product([(LinearForm([2]), 2)]) == Polynomial(1, {(2,): 4})

    def test_empty_product_needs_rank(self):
        assert eval_product([], rank=2) == Polynomial.one(2)
        with pytest.raises(ValueError):
            eval_product([])

    def test_multiplicative(self):
        rng = random.Random(5)
        for _ in range(50):
            rank = rng.randint(1, 3)
            forms = [
                (LinearForm([rng.randint(-3, 3) for _ in range(rank)]), rng.randint(0, 3))
                for _ in range(rng.randint(0, 4))
            ]
            split = rng.randint(0, len(forms))
            left, right = forms[:split], forms[split:]
            assert eval_product(forms, rank=rank) == eval_product(left, rank=rank) * eval_product(
                right, rank=rank
            )

    def test_mismatched_ranks_rejected(self):
        with pytest.raises(RankMismatchError):
            eval_product([(LinearForm([1]), 1), (LinearForm([1, 0]), 1)])
