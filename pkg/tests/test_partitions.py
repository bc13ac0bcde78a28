import random

import pytest

from sdualkit.exactalg import IntegerMatrix, integer_kernel
from sdualkit.partitions import (
    OrbitDescriptor,
    Partition,
    centralizer_dim,
    chain_to_orbit,
    dominates,
    hook,
    numeric_jordan_oracle,
    orbit_dim,
    partitions_of,
    rank_profile,
    transpose,
)


def jordan_blocks(lam):
    n = lam.n
    entries = [[0] * n for _ in range(n)]
    offset = 0
    for block in lam.parts:
        for i in range(block - 1):
            entries[offset + i][offset + i + 1] = 1
        offset += block
    return entries


def commutant_dim(lam):
    """dim of {x : xJ = Jx} computed as an honest linear-system kernel."""
    n = lam.n
    if n == 0:
        return 0
    J = jordan_blocks(lam)
    rows = []
    for i in range(n):
        for j in range(n):
            # coefficient of x[k][l] in (xJ - Jx)[i][j]
            row = [0] * (n * n)
            for l in range(n):
                row[i * n + l] += J[l][j]
            for k in range(n):
                row[k * n + j] -= J[i][k]
            rows.append(row)
    return len(integer_kernel(IntegerMatrix.from_rows(rows, cols=n * n)))


class TestPartitionBasics:
    def test_canonicalized_on_construction(self):
        assert Partition([1, 3, 0, 2]).parts == (3, 2, 1)
        assert Partition([]).parts == ()
        with pytest.raises(ValueError):
            Partition([2, -1])

    def test_parse_and_render(self):
        assert Partition.parse("[3,1,1]") == Partition([3, 1, 1])
        assert str(Partition([3, 1, 1])) == "[3,1,1]"
        assert Partition.parse("[]") == Partition([])
        with pytest.raises(ValueError):
            Partition.parse("3,1")


class TestTranspose:
    def test_row_to_column(self):
        assert transpose(Partition([3])) == Partition([1, 1, 1])
        assert transpose(Partition([3, 1])) == Partition([2, 1, 1])
        assert transpose(Partition([4, 2, 1])) == Partition([3, 2, 1, 1])

    def test_involution_and_dominance_reversal(self):
        for n in range(9):
            parts = list(partitions_of(n))
            for lam in parts:
                assert transpose(transpose(lam)) == lam
            for lam in parts:
                for mu in parts:
                    assert dominates(lam, mu) == dominates(transpose(mu), transpose(lam))


class TestDimensions:
    def test_centralizer_examples(self):
        assert centralizer_dim(Partition([1, 1, 1])) == 9
        assert centralizer_dim(Partition([3])) == 3
        assert centralizer_dim(Partition([2, 1])) == 5

    def test_centralizer_against_commutant_oracle(self):
        for n in range(6):
            for lam in partitions_of(n):
                assert centralizer_dim(lam) == commutant_dim(lam)

    def test_orbit_dim_examples(self):
        assert orbit_dim(Partition([3])) == 6
        assert orbit_dim(Partition([1, 1, 1, 1])) == 0
        assert orbit_dim(Partition([2, 2])) == 8

    def test_orbit_plus_centralizer(self):
        for n in range(11):
            for lam in partitions_of(n):
                assert orbit_dim(lam) + centralizer_dim(lam) == n * n

    def test_hook_centralizer_formula(self):
        for a in range(1, 7):
            for b in range(0, 7):
                assert centralizer_dim(hook(a, b)) == (b + 1) ** 2 + (a - 1)


class TestRankProfile:
    def test_examples(self):
        assert rank_profile(Partition([3]), 1) == 2
        assert rank_profile(Partition([2, 1]), 1) == 1
        assert rank_profile(Partition([4, 2, 1]), 2) == 2

    def test_matches_numeric_oracle(self):
        for n in range(11):
            for lam in partitions_of(n):
                table = numeric_jordan_oracle(lam)
                for k, rank in table.items():
                    assert rank_profile(lam, k) == rank

    def test_oracle_examples(self):
        assert numeric_jordan_oracle(Partition([2])) == {0: 2, 1: 1, 2: 0}
        assert numeric_jordan_oracle(Partition([3, 1])) == {0: 4, 1: 2, 2: 1, 3: 0}
        assert numeric_jordan_oracle(Partition([2, 2])) == {0: 4, 1: 2, 2: 0}


class TestHook:
    def test_examples(self):
        assert hook(3, 0) == Partition([3])
        assert hook(2, 2) == Partition([2, 1, 1])
        assert hook(1, 3) == Partition([1, 1, 1, 1])
        with pytest.raises(ValueError):
            hook(0, 1)


class TestChainToOrbit:
    def test_staircase_gives_full_cone(self):
        for n in range(1, 9):
            orbit = chain_to_orbit(range(n + 1))
            assert orbit.jordan_type == Partition([n])
            assert orbit.is_nilpotent_cone

    def test_single_step_is_zero_orbit(self):
        assert chain_to_orbit((0, 3)).jordan_type == Partition([1, 1, 1])

    def test_two_step(self):
        assert chain_to_orbit((0, 1, 3)).jordan_type == Partition([2, 1])

    def test_requires_zero_start(self):
        with pytest.raises(ValueError):
            chain_to_orbit((1, 2))

    def test_fast_path_matches_brute_force(self):
        rng = random.Random(31)
        for _ in range(120):
            steps = rng.randint(1, 5)
            dims = [0]
            for _ in range(steps):
                dims.append(dims[-1] + rng.randint(0, 3))
            if dims[-1] > 8 or dims[-1] == 0:
                continue
            result = chain_to_orbit(dims)
            feasible = [
                p
                for p in partitions_of(dims[-1])
                if all(rank_profile(p, k) <= dims[steps - k] for k in range(1, steps + 1))
            ]
            assert result.jordan_type in feasible
            assert all(dominates(result.jordan_type, q) for q in feasible)

    def test_non_monotone_differences_use_brute_force(self):
        # reversed differences (0, 2) are not weakly decreasing
        assert chain_to_orbit((0, 2, 2)).jordan_type == Partition([2])

    def test_composed_dimension_identity(self):
        # sum of 2 dim Hom(C^i, C^{i+1}) minus twice the middle group dims
        for n in range(1, 11):
            total = sum(2 * i * (i + 1) for i in range(n)) - 2 * sum(i * i for i in range(1, n))
            assert total == n * n - n == orbit_dim(Partition([n]))


class TestOrbitDescriptor:
    def test_nilpotent_cone_is_regular_closure(self):
        cone = OrbitDescriptor.nilpotent_cone(4)
        assert cone.kind == "orbit_closure"
        assert cone.jordan_type == Partition([4])
        assert OrbitDescriptor(4, Partition([4]), "nilpotent_cone") == cone

    def test_dims_by_kind(self):
        lam = Partition([2, 1])
        assert OrbitDescriptor(3, lam, "orbit_closure").dim == 4
        assert OrbitDescriptor(3, lam, "slice").dim == 5
        assert OrbitDescriptor(3, lam, "group_times_slice").dim == 14

    def test_jordan_type_must_match_size(self):
        with pytest.raises(ValueError):
            OrbitDescriptor(3, Partition([2, 2]))
