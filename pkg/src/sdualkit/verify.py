"""Self-contained verification suite run by ``sdualkit verify``.

Each check is named after what it verifies and returns (passed, detail).
Randomized checks draw from a seeded generator; set SDUALKIT_SEED to change
the seed.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from collections import namedtuple

import numpy as np

from . import brane, spaces
from .abelian_coulomb import (
    TorusTheory,
    multiply,
    present_rank1,
    structure_exponents,
)
from .exactalg import eval_product
from .partitions import (
    Partition,
    chain_to_orbit,
    dominates,
    numeric_jordan_oracle,
    partitions_of,
    rank_profile,
    transpose,
)

DEFAULT_SEED = 1729

CheckResult = namedtuple("CheckResult", "name passed detail")


def resolve_seed(seed: int | None = None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("SDUALKIT_SEED")
    return int(env) if env else DEFAULT_SEED


# ---------------------------------------------------------------------------
# rank-one presentations, byte-exact
# ---------------------------------------------------------------------------

PRESENTATION_CASES = [
    ({"rank": 1, "linear_weights": []}, "C[w, x, y] / (x*y = 1)  [T^*(C^x)]"),
    ({"rank": 1, "linear_weights": [[1]]}, "C[w, x, y] / (x*y = w)  [C^2]"),
    ({"rank": 1, "linear_weights": [[1], [1]]}, "C[w, x, y] / (x*y = w^2)  [A_1 singularity]"),
    ({"rank": 1, "linear_weights": [[1]] * 3}, "C[w, x, y] / (x*y = w^3)  [A_2 singularity]"),
    ({"rank": 1, "linear_weights": [[1]] * 4}, "C[w, x, y] / (x*y = w^4)  [A_3 singularity]"),
    ({"rank": 1, "linear_weights": [[1]] * 5}, "C[w, x, y] / (x*y = w^5)  [A_4 singularity]"),
    ({"rank": 1, "linear_weights": [[1]] * 6}, "C[w, x, y] / (x*y = w^6)  [A_5 singularity]"),
    ({"rank": 1, "linear_weights": [[2]]}, "C[w, x, y] / (x*y = 4*w^2)  [A_1 singularity]"),
    ({"rank": 1, "linear_weights": [[3]]}, "C[w, x, y] / (x*y = 27*w^3)  [A_2 singularity]"),
    ({"rank": 1, "linear_weights": [[4]]}, "C[w, x, y] / (x*y = 256*w^4)  [A_3 singularity]"),
    (
        {"rank": 1, "linear_weights": [], "multiplicative_weights": [[1]]},
        "point",
    ),
]


def check_coulomb_presentations(rng: random.Random) -> tuple[bool, str]:
    for doc, expected in PRESENTATION_CASES:
        got = str(present_rank1(TorusTheory.from_json(doc)))
        if got != expected:
            return False, f"{json.dumps(doc)}: got {got!r}, want {expected!r}"
    return True, f"{len(PRESENTATION_CASES)} presentations byte-exact"


# ---------------------------------------------------------------------------
# product laws and grading
# ---------------------------------------------------------------------------

def _random_theories(rng: random.Random, count: int = 200) -> list[TorusTheory]:
    out = []
    for _ in range(count):
        r = rng.randint(1, 3)
        n_weights = rng.randint(0, 4)
        weights = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(n_weights)]
        out.append(TorusTheory(r, weights))
    return out


def _box(rank: int, cutoff: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(-cutoff, cutoff + 1), repeat=rank))


def check_coulomb_product_laws(rng: random.Random) -> tuple[bool, str]:
    theories = _random_theories(rng)
    triples_checked = 0
    for t in theories:
        cochars = _box(t.rank, 2)
        # Exhaustive associativity over all triples, one weight at a time:
        # the product of basis classes depends on a cocharacter only through
        # its pairings, so distinct pairing values cover every triple.
        for a in t.linear_weights:
            vals = np.unique(
                np.fromiter((a.pairing(c) for c in cochars), dtype=np.int64, count=len(cochars))
            )
            x = vals[:, None, None]
            y = vals[None, :, None]
            z = vals[None, None, :]

            def halfsum(u, v):
                return np.abs(u) + np.abs(v) - np.abs(u + v)

            lhs = halfsum(x, y) + halfsum(x + y, z)
            rhs = halfsum(y, z) + halfsum(x, y + z)
            if not (lhs == rhs).all():
                return False, f"value-level associativity failed for {t!r}"
            if (halfsum(x[:, :, 0], y[:, :, 0]) % 2).any():
                return False, f"odd correction exponent for {t!r}"
            triples_checked += vals.size**3
        # Element-level checks through the actual product implementation.
        if t.rank == 1:
            sample = [(l, m, n) for l in cochars for m in cochars for n in cochars]
        else:
            sample = [
                (rng.choice(cochars), rng.choice(cochars), rng.choice(cochars))
                for _ in range(60)
            ]
        for lam, mu, nu in sample:
            a_el, b_el, c_el = t.monomial(lam), t.monomial(mu), t.monomial(nu)
            left = multiply(t, multiply(t, a_el, b_el), c_el)
            right = multiply(t, a_el, multiply(t, b_el, c_el))
            if left != right:
                return False, f"associativity failed at {lam},{mu},{nu} for {t!r}"
        for _ in range(2):
            x_el = t.zero()
            y_el = t.zero()
            for _ in range(3):
                x_el = x_el + t.monomial(rng.choice(cochars), rng.randint(-2, 2))
                y_el = y_el + t.monomial(rng.choice(cochars), rng.randint(-2, 2))
            if multiply(t, x_el, y_el) != multiply(t, y_el, x_el):
                return False, f"commutativity failed for {t!r}"
    return True, f"{len(theories)} theories, {triples_checked} value triples"


def check_coulomb_grading(rng: random.Random) -> tuple[bool, str]:
    theories = _random_theories(rng)
    pairs_checked = 0
    for t in theories:
        cochars = _box(t.rank, 2)
        if t.rank == 1:
            pairs = [(l, m) for l in cochars for m in cochars]
        else:
            pairs = [(rng.choice(cochars), rng.choice(cochars)) for _ in range(100)]
        for lam, mu in pairs:
            exps = structure_exponents(t, lam, mu)
            if any(e < 0 for e in exps):
                return False, f"negative exponent at {lam},{mu} for {t!r}"
            factor = eval_product(list(zip(t.linear_weights, exps)), rank=t.rank)
            degree = factor.homogeneous_degree()
            expected = (
                t.monopole_degree_doubled(lam)
                + t.monopole_degree_doubled(mu)
                - t.monopole_degree_doubled(tuple(a + b for a, b in zip(lam, mu)))
            )
            if degree is None or 2 * degree != expected:
                return False, f"inhomogeneous structure constant at {lam},{mu} for {t!r}"
            pairs_checked += 1
        # Products of homogeneous elements stay homogeneous.
        lam, mu = rng.choice(cochars), rng.choice(cochars)
        prod = multiply(t, t.monomial(lam), t.monomial(mu))
        if not prod.is_homogeneous():
            return False, f"inhomogeneous product at {lam},{mu} for {t!r}"
    return True, f"{pairs_checked} structure constants homogeneous"


# ---------------------------------------------------------------------------
# orbit chains and rank oracle
# ---------------------------------------------------------------------------

def check_orbit_chain_family(rng: random.Random) -> tuple[bool, str]:
    for n in range(1, 9):
        orbit = chain_to_orbit(tuple(range(n + 1)))
        if orbit.jordan_type != Partition((n,)):
            return False, f"staircase chain of length {n} gave {orbit.jordan_type}"
        acc = spaces.SpaceDescriptor.m_circle(0, 1)
        for i in range(1, n):
            acc = spaces.compose(
                acc, spaces.SpaceDescriptor.m_circle(i, i + 1), spaces.GroupDescriptor.gl(i)
            )
        if acc.dim != n * n - n:
            return False, f"composed dimension {acc.dim} != {n * n - n} at n={n}"
        if orbit.dim != n * n - n:
            return False, f"orbit dimension {orbit.dim} != {n * n - n} at n={n}"
    return True, "staircase chains reach the full cone with matching dimensions, n <= 8"


def check_orbit_rank_oracle(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for n in range(0, 11):
        for lam in partitions_of(n):
            table = numeric_jordan_oracle(lam)
            for k, rank in table.items():
                if rank_profile(lam, k) != rank:
                    return False, f"rank mismatch at {lam}, power {k}"
                count += 1
    return True, f"{count} matrix ranks match the combinatorial profile, n <= 10"


# ---------------------------------------------------------------------------
# dual-pair table and partition laws
# ---------------------------------------------------------------------------

def check_sdual_slice_orbit_table(rng: random.Random) -> tuple[bool, str]:
    cases = 0
    for n in range(1, 8):
        g = spaces.GroupDescriptor.gl(n)
        for lam in partitions_of(n):
            m = spaces.SpaceDescriptor.group_times_slice(g, lam)
            dual = spaces.sdual_pair(m)
            expected = spaces.SpaceDescriptor.orbit_closure(n, transpose(lam))
            if dual != expected:
                return False, f"dual of GL({n}) x Slice{lam} is {dual}, want {expected}"
            back = spaces.sdual_pair(dual)
            if not back.same_shape(m):
                return False, f"double dual of Slice{lam} changed shape: {back} vs {m}"
            cases += 1
    return True, f"{cases} slice/orbit pairs verified with double duals, n <= 7"


def check_partition_transpose_laws(rng: random.Random) -> tuple[bool, str]:
    for n in range(0, 9):
        parts = list(partitions_of(n))
        for lam in parts:
            if transpose(transpose(lam)) != lam:
                return False, f"transpose not involutive at {lam}"
        for lam in parts:
            for mu in parts:
                if dominates(lam, mu) != dominates(transpose(mu), transpose(lam)):
                    return False, f"dominance reversal failed at {lam}, {mu}"
    return True, "transpose involution and dominance reversal exhaustive, n <= 8"


# ---------------------------------------------------------------------------
# Kostant reduction identity
# ---------------------------------------------------------------------------

def check_kostant_reduction(rng: random.Random) -> tuple[bool, str]:
    cases = 0
    for n in range(1, 7):
        g = spaces.GroupDescriptor.gl(n)
        for m in (spaces.SpaceDescriptor.point(g), spaces.SpaceDescriptor.cotangent_of_group(g)):
            result = spaces.kostant_reduction_check(m, g)
            if not result.passed:
                return False, f"failed for {m} under {g}: {result}"
            cases += 1
    for r in range(1, 5):
        g = spaces.GroupDescriptor.torus(r)
        for m in (spaces.SpaceDescriptor.point(g), spaces.SpaceDescriptor.cotangent_of_group(g)):
            result = spaces.kostant_reduction_check(m, g)
            if not result.passed:
                return False, f"failed for {m} under {g}: {result}"
            cases += 1
    g1 = spaces.GroupDescriptor.torus(1)
    for size in range(0, 7):
        for weights in itertools.combinations_with_replacement(range(-3, 4), size):
            theory = TorusTheory(1, [[wt] for wt in weights])
            m = spaces.SpaceDescriptor.cotangent_of_rep(theory=theory)
            result = spaces.kostant_reduction_check(m, g1)
            if not result.passed:
                return False, f"failed for weights {list(weights)}: {result}"
            cases += 1
    for mult in range(1, 4):
        theory = TorusTheory(1, [], [[mult]])
        m = spaces.SpaceDescriptor.cotangent_of_rep(theory=theory)
        result = spaces.kostant_reduction_check(m, g1)
        if not result.passed:
            return False, f"failed for multiplicative weight {mult}: {result}"
        cases += 1
    return True, f"{cases} reduction identities hold"


# ---------------------------------------------------------------------------
# brane moves
# ---------------------------------------------------------------------------

def random_diagram(
    rng: random.Random, max_branes: int = 12, max_dim: int = 9, require_move: bool = True
) -> brane.BraneDiagram:
    while True:
        n = rng.randint(1, max_branes)
        branes = [rng.choice((brane.NS5, brane.D5)) for _ in range(n)]
        dims = [0] + [rng.randint(0, max_dim) for _ in range(n - 1)] + [0]
        d = brane.BraneDiagram(branes, dims)
        if not require_move or brane.admissible_moves(d):
            return d


def check_brane_hw_properties(rng: random.Random) -> tuple[bool, str]:
    corpus = [random_diagram(rng) for _ in range(500)]
    for d in corpus:
        moves = brane.admissible_moves(d)
        i = rng.choice(moves)
        moved = brane.hw_move(d, i)
        if brane.hw_move(moved, i) != d:
            return False, f"transition not involutive at {i} on {d}"
        if brane.linking_numbers(moved) != brane.linking_numbers(d):
            return False, f"linking numbers changed at {i} on {d}"
        if brane.sdual(brane.hw_move(d, i)) != brane.hw_move(brane.sdual(d), i):
            return False, f"duality and transition do not commute at {i} on {d}"
        if brane.sdual(brane.sdual(d)) != d:
            return False, f"duality not involutive on {d}"
    for d1, d2 in zip(corpus[::2], corpus[1::2]):
        joined = brane.concat(d1, d2)
        if brane.sdual(joined) != brane.concat(brane.sdual(d1), brane.sdual(d2)):
            return False, f"duality does not distribute over {d1} + {d2}"
    return True, f"{len(corpus)} diagrams: involution, linking invariance, duality compatibility"


def dual_quiver_pattern(gauge, framing) -> brane.BraneDiagram:
    """Direct construction of the dual pattern: x opens each node, o repeats."""
    branes: list[str] = []
    dims: list[int] = [0]
    for v, w in zip(gauge, framing):
        branes.append(brane.D5)
        dims.append(v)
        branes.extend([brane.NS5] * w)
        dims.extend([v] * w)
    branes.append(brane.D5)
    dims.append(0)
    return brane.BraneDiagram(branes, dims)


def check_quiver_sdual_pipeline(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for length in range(1, 5):
        for gauge in itertools.product(range(5), repeat=length):
            for framing in itertools.product(range(5), repeat=length):
                built = brane.sdual(brane.quiver_to_diagram(brane.QuiverData(gauge, framing)))
                direct = dual_quiver_pattern(gauge, framing)
                if built != direct:
                    return False, f"pipeline mismatch for gauge {gauge}, framing {framing}"
                count += 1
    return True, f"{count} quivers: dualized diagram equals the direct pattern"


# ---------------------------------------------------------------------------
# hyperspherical heuristic
# ---------------------------------------------------------------------------

DEFICIT_CASES = [
    ("weight-one hypermultiplet under T(1)", 0),
    ("T*GL(n) under GL(n), n=1..4", [0, 2, 6, 12]),
    ("trivial matter", {"T(1)": -2, "GL(1)": -2, "GL(2)": -6, "GL(3)": -12, "GL(4)": -20}),
]


def check_hyperspherical_deficit(rng: random.Random) -> tuple[bool, str]:
    t1 = spaces.GroupDescriptor.torus(1)
    m = spaces.SpaceDescriptor.cotangent_of_rep(theory=TorusTheory(1, [[1]]))
    if spaces.hyperspherical_deficit(m, t1) != 0:
        return False, "weight-one hypermultiplet deficit is not 0"
    for n in range(1, 5):
        g = spaces.GroupDescriptor.gl(n)
        got = spaces.hyperspherical_deficit(spaces.SpaceDescriptor.cotangent_of_group(g), g)
        if got != n * n - n:
            return False, f"T*GL({n}) deficit {got} != {n * n - n}"
    expected_pt = {"T(1)": -2, "GL(1)": -2, "GL(2)": -6, "GL(3)": -12, "GL(4)": -20}
    groups = [spaces.GroupDescriptor.torus(1)] + [spaces.GroupDescriptor.gl(n) for n in range(1, 5)]
    for g in groups:
        got = spaces.hyperspherical_deficit(spaces.SpaceDescriptor.point(g), g)
        if got != expected_pt[str(g)] or got != -(g.dim + g.rank):
            return False, f"trivial-matter deficit under {g} is {got}"
    return True, "deficits match the recorded values"


# ---------------------------------------------------------------------------
# cross-module: abelian engine against the diagram pipeline
# ---------------------------------------------------------------------------

def check_coulomb_brane_crosscheck(rng: random.Random) -> tuple[bool, str]:
    for flavors in range(1, 7):
        theory = TorusTheory(1, [[1]] * flavors)
        tag = present_rank1(theory).tag
        if flavors == 1:
            ok = tag.kind == "affine_plane"
        else:
            ok = tag.kind == "type_A_singularity" and tag.index == flavors - 1
        if not ok:
            return False, f"{flavors} flavors classified as {tag}"
        diagram = brane.quiver_to_diagram(brane.QuiverData([1], [flavors]))
        if brane.sdual(diagram) != dual_quiver_pattern([1], [flavors]):
            return False, f"diagram dual mismatch at {flavors} flavors"
    return True, "abelian classification and diagram duality agree for 1..6 flavors"


# ---------------------------------------------------------------------------
# duality commutes with composition, in dimensions
# ---------------------------------------------------------------------------

def check_sdual_compose_dims(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for _ in range(60):
        n_steps = rng.randint(1, 5)
        deltas = sorted((rng.randint(0, 3) for _ in range(n_steps)), reverse=True)
        dims = [0]
        for delta in reversed(deltas):
            dims.append(dims[-1] + delta)
        if dims[-1] == 0 or dims[-1] > 8:
            continue
        chain = brane.BraneDiagram([brane.NS5] * n_steps, dims)
        lhs = spaces.sdual_pair(brane.expected_space(chain))
        acc = spaces.SpaceDescriptor.m_cross(dims[0], dims[1])
        for i in range(1, n_steps):
            acc = spaces.compose(
                acc,
                spaces.SpaceDescriptor.m_cross(dims[i], dims[i + 1]),
                spaces.GroupDescriptor.gl(dims[i]),
            )
        if lhs.dim != acc.dim:
            return False, f"dimension mismatch for chain {dims}: {lhs.dim} vs {acc.dim}"
        count += 1
    return True, f"{count} chains: dual of the composite matches the composite of duals"


CHECKS = [
    ("coulomb-presentations", check_coulomb_presentations),
    ("coulomb-product-laws", check_coulomb_product_laws),
    ("coulomb-grading", check_coulomb_grading),
    ("orbit-chain-family", check_orbit_chain_family),
    ("orbit-rank-oracle", check_orbit_rank_oracle),
    ("sdual-slice-orbit-table", check_sdual_slice_orbit_table),
    ("partition-transpose-laws", check_partition_transpose_laws),
    ("kostant-reduction", check_kostant_reduction),
    ("brane-hw-properties", check_brane_hw_properties),
    ("quiver-sdual-pipeline", check_quiver_sdual_pipeline),
    ("hyperspherical-deficit", check_hyperspherical_deficit),
    ("coulomb-brane-crosscheck", check_coulomb_brane_crosscheck),
    ("sdual-compose-dims", check_sdual_compose_dims),
]


def run_checks(name_filter: str | None = None, seed: int | None = None) -> list[CheckResult]:
    seed = resolve_seed(seed)
    results = []
    for name, func in CHECKS:
        if name_filter and name_filter not in name:
            continue
        rng = random.Random(f"{seed}:{name}")
        try:
            passed, detail = func(rng)
        except Exception as exc:  # a crashing check is a failing check
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, passed, detail))
    return results
