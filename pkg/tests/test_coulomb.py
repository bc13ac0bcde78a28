import itertools
import json
import random

import pytest

from sdualkit.abelian_coulomb import (
    RankTooHighError,
    TorusTheory,
    VarietyTag,
    classify_relation,
    multiply,
    present_rank1,
    reduce_multiplicative,
    sdual_torus,
    structure_constant_table,
    structure_exponents,
)
from sdualkit.exactalg import Polynomial


def box(rank, cutoff):
    return list(itertools.product(range(-cutoff, cutoff + 1), repeat=rank))


class TestStructureExponents:
    def test_opposite_cocharacters(self):
        t = TorusTheory(1, [[1]])
        assert structure_exponents(t, (1,), (-1,)) == (1,)

    def test_same_chamber_no_correction(self):
        t = TorusTheory(1, [[1]])
        assert structure_exponents(t, (1,), (1,)) == (0,)

    def test_weight_two(self):
        t = TorusTheory(1, [[2]])
        assert structure_exponents(t, (1,), (-1,)) == (2,)

    def test_always_nonnegative_integers(self):
        rng = random.Random(7)
        for _ in range(200):
            rank = rng.randint(1, 3)
            t = TorusTheory(
                rank,
                [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rng.randint(0, 4))],
            )
            lam = tuple(rng.randint(-3, 3) for _ in range(rank))
            mu = tuple(rng.randint(-3, 3) for _ in range(rank))
            for d in structure_exponents(t, lam, mu):
                assert isinstance(d, int) and d >= 0


class TestMultiply:
    def test_pure_torus_translation(self):
        t = TorusTheory(1, [])
        assert multiply(t, t.monomial((1,)), t.monomial((-1,))) == t.one()

    def test_three_flavors(self):
        t = TorusTheory(1, [[1], [1], [1]])
        expected = t.monomial((0,), Polynomial(1, {(3,): 1}))
        assert multiply(t, t.monomial((1,)), t.monomial((-1,))) == expected

    def test_weight_two_keeps_scalar(self):
        t = TorusTheory(1, [[2]])
        expected = t.monomial((0,), Polynomial(1, {(2,): 4}))
        assert multiply(t, t.monomial((1,)), t.monomial((-1,))) == expected

    def test_operator_sugar(self):
        t = TorusTheory(1, [[1]])
        assert t.monomial((1,)) * t.monomial((-1,)) == t.monomial((0,), Polynomial(1, {(1,): 1}))

    def test_commutative_and_associative(self):
        rng = random.Random(13)
        for _ in range(40):
            rank = rng.randint(1, 3)
            t = TorusTheory(
                rank,
                [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rng.randint(0, 4))],
            )
            cochars = box(rank, 3)
            triples = (
                [(l, m, n) for l in box(1, 3) for m in box(1, 3) for n in box(1, 3)]
                if rank == 1
                else [tuple(rng.choice(cochars) for _ in range(3)) for _ in range(40)]
            )
            for lam, mu, nu in triples:
                a, b, c = t.monomial(lam), t.monomial(mu), t.monomial(nu)
                assert multiply(t, a, b) == multiply(t, b, a)
                assert multiply(t, multiply(t, a, b), c) == multiply(t, a, multiply(t, b, c))

    def test_pi1_grading_additive(self):
        t = TorusTheory(2, [[1, 0], [0, 1]])
        prod = multiply(t, t.monomial((1, 2)), t.monomial((-1, 1)))
        assert set(prod.support) == {(0, 3)}

    def test_monopole_grading(self):
        rng = random.Random(3)
        for _ in range(60):
            rank = rng.randint(1, 3)
            t = TorusTheory(
                rank,
                [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rng.randint(0, 4))],
            )
            lam = tuple(rng.randint(-2, 2) for _ in range(rank))
            mu = tuple(rng.randint(-2, 2) for _ in range(rank))
            x, y = t.monomial(lam), t.monomial(mu)
            prod = multiply(t, x, y)
            assert prod.is_homogeneous()
            if not prod.is_zero():
                (degree,) = prod.doubled_degrees()
                assert degree == t.monopole_degree_doubled(lam) + t.monopole_degree_doubled(mu)

    def test_multi_term_homogeneous_product(self):
        # w*r[0] and r[2] both have doubled degree 2 in the weight-[1] theory
        t = TorusTheory(1, [[1]])
        x = t.monomial((0,), Polynomial(1, {(1,): 1})) + t.monomial((2,))
        assert x.is_homogeneous() and x.doubled_degrees() == {2}
        square = x * x
        assert square.is_homogeneous() and square.doubled_degrees() == {4}
        expected = (
            t.monomial((0,), Polynomial(1, {(2,): 1}))
            + t.monomial((2,), Polynomial(1, {(1,): 2}))
            + t.monomial((4,))
        )
        assert square == expected

    def test_structure_table_matches_multiply(self):
        t = TorusTheory(2, [[1, 0], [1, -1]])
        for lam, mu, poly in structure_constant_table(t, cutoff=1):
            prod = multiply(t, t.monomial(lam), t.monomial(mu))
            key = tuple(a + b for a, b in zip(lam, mu))
            if poly.is_zero():
                assert prod.is_zero()
            else:
                assert prod == t.monomial(key, poly)


class TestMultiplicativeReduction:
    def test_full_multiplicative_kills_everything(self):
        t = TorusTheory(1, [], [[1]])
        reduced, basis = reduce_multiplicative(t)
        assert reduced.rank == 0
        assert basis == ()
        assert t.monomial((1,)).is_zero()
        assert not t.monomial((0,)).is_zero()

    def test_no_multiplicative_weights_identity(self):
        t = TorusTheory(2, [[1, 0]])
        reduced, basis = reduce_multiplicative(t)
        assert reduced == t
        assert basis == ((1, 0), (0, 1))

    def test_rank_two_reduction(self):
        t = TorusTheory(2, [[1, 0]], [[1, -1]])
        reduced, basis = reduce_multiplicative(t)
        assert basis == ((1, 1),)
        assert reduced == TorusTheory(1, [[1]])
        assert str(present_rank1(t)) == "C[w, x, y] / (x*y = w)  [C^2]"

    def test_nonkernel_classes_vanish_in_products(self):
        t = TorusTheory(2, [], [[1, -1]])
        assert t.monomial((1, 0)).is_zero()
        x = t.monomial((1, 1))
        y = t.monomial((-1, -1))
        assert multiply(t, x, y) == t.one()


class TestPresentation:
    def test_no_matter(self):
        p = present_rank1(TorusTheory(1, []))
        assert str(p) == "C[w, x, y] / (x*y = 1)  [T^*(C^x)]"
        assert p.tag == VarietyTag("torus_cotangent")

    def test_one_flavor(self):
        p = present_rank1(TorusTheory(1, [[1]]))
        assert str(p) == "C[w, x, y] / (x*y = w)  [C^2]"

    def test_three_flavors(self):
        p = present_rank1(TorusTheory(1, [[1], [1], [1]]))
        assert str(p) == "C[w, x, y] / (x*y = w^3)  [A_2 singularity]"
        assert p.tag == VarietyTag("type_A_singularity", 2)

    def test_point(self):
        assert str(present_rank1(TorusTheory(1, [], [[1]]))) == "point"

    def test_rank_too_high(self):
        with pytest.raises(RankTooHighError):
            present_rank1(TorusTheory(2, [[1, 0]]))

    def test_relation_matches_product(self):
        rng = random.Random(21)
        for _ in range(80):
            weights = [[rng.randint(-3, 3)] for _ in range(rng.randint(0, 6))]
            t = TorusTheory(1, weights)
            p = present_rank1(t)
            prod = multiply(t, t.monomial((1,)), t.monomial((-1,)))
            assert prod == t.monomial((0,), p.relation)

    def test_relation_homogeneous(self):
        for weights in ([[1]], [[2]], [[1], [1], [-1]], [[3], [2]]):
            t = TorusTheory(1, weights)
            p = present_rank1(t)
            x_degree = dict(p.variables)["x"]
            assert 2 * p.relation.homogeneous_degree() == 2 * x_degree

    def test_negative_weights_classify_up_to_unit(self):
        p = present_rank1(TorusTheory(1, [[1], [-1]]))
        assert p.relation == Polynomial(1, {(2,): -1})
        assert p.tag == VarietyTag("type_A_singularity", 1)


class TestClassify:
    def test_tags(self):
        assert classify_relation(Polynomial.one(1)) == VarietyTag("torus_cotangent")
        assert classify_relation(Polynomial.constant(1, -4)) == VarietyTag("torus_cotangent")
        assert classify_relation(Polynomial(1, {(1,): 5})) == VarietyTag("affine_plane")
        assert classify_relation(Polynomial(1, {(4,): 1})) == VarietyTag("type_A_singularity", 3)
        assert classify_relation(Polynomial(1, {(1,): 1, (0,): 1})) == VarietyTag("unclassified")


class TestSerialization:
    def test_round_trip(self):
        t = TorusTheory(2, [[1, 0], [0, -2]], [[1, 1]])
        doc = json.loads(json.dumps(t.to_json()))
        assert TorusTheory.from_json(doc) == t

    def test_missing_weight_lists_default_empty(self):
        t = TorusTheory.from_json({"rank": 1})
        assert t == TorusTheory(1)

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValueError):
            TorusTheory.from_json({"rank": 1, "weights": []})

    def test_rank_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TorusTheory(1, [[1, 0]])


class TestSdualTorus:
    def test_one_flavor_gives_affine_plane(self):
        d = sdual_torus(TorusTheory(1, [[1]]))
        assert d.kind == "cotangent_of_rep"
        assert d.dim == 2
        assert str(d.left_group) == "T(1)"

    def test_multiplicative_gives_point(self):
        d = sdual_torus(TorusTheory(1, [], [[1]]))
        assert d.kind == "point"
        assert d.dim == 0

    def test_pure_rank_two_torus(self):
        d = sdual_torus(TorusTheory(2, []))
        assert d.kind == "torus_cotangent"
        assert d.dim == 4

    def test_flavors_give_type_a(self):
        for flavors in range(2, 7):
            d = sdual_torus(TorusTheory(1, [[1]] * flavors))
            assert d.kind == "type_A_singularity"
            assert d.index == flavors - 1
            assert d.dim == 2

    def test_dimension_is_twice_effective_rank(self):
        rng = random.Random(11)
        for _ in range(40):
            rank = rng.randint(1, 3)
            t = TorusTheory(
                rank,
                [[rng.randint(-2, 2) for _ in range(rank)] for _ in range(rng.randint(0, 3))],
                [[rng.randint(-2, 2) for _ in range(rank)] for _ in range(rng.randint(0, 2))],
            )
            reduced, _ = reduce_multiplicative(t)
            assert sdual_torus(t).dim == 2 * reduced.rank


class TestElementAlgebra:
    def test_zero_coefficients_dropped(self):
        t = TorusTheory(1, [[1]])
        x = t.monomial((1,), 1) + t.monomial((1,), -1)
        assert x.is_zero()

    def test_mixed_theory_rejected(self):
        t1, t2 = TorusTheory(1, [[1]]), TorusTheory(1, [[2]])
        with pytest.raises(ValueError):
            multiply(t1, t1.one(), t2.one())

    def test_scalar_multiplication(self):
        t = TorusTheory(1, [])
        assert 3 * t.one() == t.monomial((0,), 3)

    def test_rendering(self):
        t = TorusTheory(1, [[1]])
        assert str(t.zero()) == "0"
        assert str(t.one()) == "r[0]"
        assert str(t.monomial((1,), Polynomial(1, {(2,): 4}))) == "4*w^2*r[1]"
