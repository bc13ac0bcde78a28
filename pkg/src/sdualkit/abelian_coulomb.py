"""Coulomb-branch rings of torus gauge theories, computed exactly.

A theory is a torus of rank r together with integer weight vectors for the
linear matter directions and for torus-valued (multiplicative) matter
directions. The ring is spanned over C[w_1..w_r] by classes r[lam] indexed
by cocharacters lam in Z^r, one for each connected component of the
underlying moduli space, and the component label is exactly the grading by
the fundamental group of the torus.

Products obey

    r[lam] * r[mu] = prod_j a_j(w)^{d_j} * r[lam + mu],
    d_j = (|<a_j, lam>| + |<a_j, mu>| - |<a_j, lam + mu>|) / 2,

the unique rule bilinear in the weight valuations that reproduces every
rank-one case; a class r[lam] is homogeneous of monopole degree
sum_j |<a_j, lam>| / 2 (half-integers are stored doubled), with each w of
degree one. Multiplicative matter kills every class whose cocharacter fails
to annihilate its weights, so those theories reduce to the kernel
sublattice.
"""

from __future__ import annotations

from typing import Sequence

from . import spaces
from .exactalg import (
    IntegerMatrix,
    LinearForm,
    Polynomial,
    RankMismatchError,
    eval_product,
    integer_kernel,
)


class RankTooHighError(ValueError):
    """A rank-one presentation was requested for an effective rank above one."""


Cochar = tuple[int, ...]


def _as_form(weight, rank: int) -> LinearForm:
    form = weight if isinstance(weight, LinearForm) else LinearForm(weight)
    if form.rank != rank:
        raise RankMismatchError(f"weight {list(form.coeffs)} has rank {form.rank}, expected {rank}")
    return form


class TorusTheory:
    """A torus gauge group with linear and multiplicative matter weights."""

    __slots__ = ("rank", "linear_weights", "multiplicative_weights")

    def __init__(self, rank: int, linear_weights=(), multiplicative_weights=()):
        self.rank = int(rank)
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        self.linear_weights = tuple(_as_form(a, self.rank) for a in linear_weights)
        self.multiplicative_weights = tuple(_as_form(b, self.rank) for b in multiplicative_weights)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "linear_weights": [list(a.coeffs) for a in self.linear_weights],
            "multiplicative_weights": [list(b.coeffs) for b in self.multiplicative_weights],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TorusTheory":
        if not isinstance(data, dict):
            raise ValueError("theory document must be a JSON object")
        allowed = {"rank", "linear_weights", "multiplicative_weights"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown keys {sorted(unknown)} in theory document")
        if "rank" not in data:
            raise ValueError("theory document requires a rank")
        return cls(
            data["rank"],
            data.get("linear_weights", ()),
            data.get("multiplicative_weights", ()),
        )

    def describe(self) -> str:
        out = f"rank {self.rank}"
        if self.linear_weights:
            out += ", linear " + ",".join(str(list(a.coeffs)) for a in self.linear_weights)
        if self.multiplicative_weights:
            out += ", mult " + ",".join(str(list(b.coeffs)) for b in self.multiplicative_weights)
        return out

    # -- basic structure ---------------------------------------------------

    def _check_cochar(self, lam: Sequence[int]) -> Cochar:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise RankMismatchError(f"cocharacter {lam} has length {len(lam)}, expected {self.rank}")
        return lam

    def annihilates_multiplicative(self, lam: Sequence[int]) -> bool:
        lam = self._check_cochar(lam)
        return all(b.pairing(lam) == 0 for b in self.multiplicative_weights)

    def monopole_degree_doubled(self, lam: Sequence[int]) -> int:
        """Twice the monopole degree of r[lam]."""
        lam = self._check_cochar(lam)
        return sum(abs(a.pairing(lam)) for a in self.linear_weights)

    def monomial(self, lam: Sequence[int], coeff=1) -> "CoulombElement":
        """The element coeff * r[lam]; zero if lam meets a multiplicative weight."""
        lam = self._check_cochar(lam)
        if isinstance(coeff, int):
            coeff = Polynomial.constant(self.rank, coeff)
        return CoulombElement(self, {lam: coeff})

    def one(self) -> "CoulombElement":
        return self.monomial((0,) * self.rank)

    def zero(self) -> "CoulombElement":
        return CoulombElement(self, {})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TorusTheory)
            and (self.rank, self.linear_weights, self.multiplicative_weights)
            == (other.rank, other.linear_weights, other.multiplicative_weights)
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.linear_weights, self.multiplicative_weights))

    def __repr__(self) -> str:
        return f"TorusTheory({self.describe()})"


class CoulombElement:
    """Finitely supported map from cocharacters to polynomial coefficients.

    The cocharacter key is the grading by the fundamental group of the
    torus; classes that fail to annihilate the multiplicative weights are
    identically zero and are dropped on construction.
    """

    __slots__ = ("theory", "support")

    def __init__(self, theory: TorusTheory, support):
        self.theory = theory
        clean: dict[Cochar, Polynomial] = {}
        for lam, coeff in (support or {}).items():
            lam = theory._check_cochar(lam)
            if isinstance(coeff, int):
                coeff = Polynomial.constant(theory.rank, coeff)
            if coeff.rank != theory.rank:
                raise RankMismatchError("coefficient rank does not match the theory")
            if coeff.is_zero() or not theory.annihilates_multiplicative(lam):
                continue
            clean[lam] = coeff
        self.support = clean

    def is_zero(self) -> bool:
        return not self.support

    def _check_same(self, other: "CoulombElement") -> None:
        if self.theory != other.theory:
            raise ValueError("elements belong to different theories")

    def __add__(self, other: "CoulombElement") -> "CoulombElement":
        self._check_same(other)
        acc = dict(self.support)
        for lam, coeff in other.support.items():
            acc[lam] = acc.get(lam, Polynomial.zero(self.theory.rank)) + coeff
        return CoulombElement(self.theory, acc)

    def __neg__(self) -> "CoulombElement":
        return CoulombElement(self.theory, {lam: -c for lam, c in self.support.items()})

    def __sub__(self, other: "CoulombElement") -> "CoulombElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CoulombElement):
            return multiply(self.theory, self, other)
        if isinstance(other, (int, Polynomial)):
            return CoulombElement(self.theory, {lam: c * other for lam, c in self.support.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CoulombElement)
            and self.theory == other.theory
            and self.support == other.support
        )

    def __hash__(self) -> int:
        return hash((self.theory, frozenset(self.support.items())))

    def doubled_degrees(self) -> set[int]:
        """Doubled total degrees of all terms (monopole part plus 2 per w)."""
        out = set()
        for lam, coeff in self.support.items():
            base = self.theory.monopole_degree_doubled(lam)
            for exps in coeff.terms:
                out.add(base + 2 * sum(exps))
        return out

    def is_homogeneous(self) -> bool:
        return len(self.doubled_degrees()) <= 1

    def __str__(self) -> str:
        if not self.support:
            return "0"
        parts = []
        for lam in sorted(self.support):
            coeff = self.support[lam]
            label = "r[" + ",".join(str(x) for x in lam) + "]"
            if coeff == Polynomial.one(self.theory.rank):
                parts.append(label)
            elif len(coeff.terms) == 1:
                parts.append(f"{coeff}*{label}")
            else:
                parts.append(f"({coeff})*{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<CoulombElement {self}>"


def structure_exponents(theory: TorusTheory, lam: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    """Exponents d_j of the structure constant for r[lam] * r[mu].

    Each d_j = (|<a_j,lam>| + |<a_j,mu>| - |<a_j,lam+mu>|) / 2 is a
    nonnegative integer by the triangle inequality.
    """
    lam = theory._check_cochar(lam)
    mu = theory._check_cochar(mu)
    out = []
    for a in theory.linear_weights:
        p, q = a.pairing(lam), a.pairing(mu)
        out.append((abs(p) + abs(q) - abs(p + q)) // 2)
    return tuple(out)


def multiply(theory: TorusTheory, x: CoulombElement, y: CoulombElement) -> CoulombElement:
    """Convolution product, extended bilinearly from the basis classes."""
    if x.theory != theory or y.theory != theory:
        raise ValueError("elements do not belong to the given theory")
    acc: dict[Cochar, Polynomial] = {}
    for lam, p in x.support.items():
        for mu, q in y.support.items():
            exponents = structure_exponents(theory, lam, mu)
            factor = eval_product(
                list(zip(theory.linear_weights, exponents)), rank=theory.rank
            )
            key = tuple(a + b for a, b in zip(lam, mu))
            term = p * q * factor
            acc[key] = acc.get(key, Polynomial.zero(theory.rank)) + term
    return CoulombElement(theory, acc)


def reduce_multiplicative(theory: TorusTheory) -> tuple[TorusTheory, tuple[Cochar, ...]]:
    """Restrict to the cocharacter sublattice killed by multiplicative weights.

    Returns the reduced theory (no multiplicative weights, linear weights
    restricted along the embedding) together with the canonical basis of the
    kernel sublattice inside the original lattice. Classes supported outside
    the sublattice are zero, so nothing is lost.
    """
    if not theory.multiplicative_weights:
        identity = tuple(
            tuple(1 if i == j else 0 for j in range(theory.rank)) for i in range(theory.rank)
        )
        return theory, identity
    matrix = IntegerMatrix.from_rows(
        [b.coeffs for b in theory.multiplicative_weights], cols=theory.rank
    )
    basis = tuple(integer_kernel(matrix))
    restricted = [
        LinearForm(tuple(a.pairing(v) for v in basis)) for a in theory.linear_weights
    ]
    return TorusTheory(len(basis), restricted, ()), basis


class VarietyTag:
    """Classification of a rank-one Coulomb branch up to isomorphism."""

    __slots__ = ("kind", "index")

    KINDS = ("point", "torus_cotangent", "affine_plane", "type_A_singularity", "unclassified")

    def __init__(self, kind: str, index: int | None = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown variety tag {kind!r}")
        if (kind == "type_A_singularity") != (index is not None):
            raise ValueError("exactly type A tags carry an index")
        self.kind = kind
        self.index = index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarietyTag) and (self.kind, self.index) == (other.kind, other.index)

    def __hash__(self) -> int:
        return hash((self.kind, self.index))

    def __str__(self) -> str:
        if self.kind == "point":
            return "point"
        if self.kind == "torus_cotangent":
            return "T^*(C^x)"
        if self.kind == "affine_plane":
            return "C^2"
        if self.kind == "type_A_singularity":
            return f"A_{self.index} singularity"
        return "unclassified"

    def __repr__(self) -> str:
        return f"VarietyTag({self.kind!r}, {self.index!r})"


def classify_relation(rhs: Polynomial) -> VarietyTag:
    """Classify x*y = rhs up to unit scalars on a rank-one variable."""
    decomposition = rhs.as_unit_monomial()
    if decomposition is None:
        return VarietyTag("unclassified")
    _, exps = decomposition
    degree = sum(exps)
    if degree == 0:
        return VarietyTag("torus_cotangent")
    if len([e for e in exps if e]) > 1:
        return VarietyTag("unclassified")
    if degree == 1:
        return VarietyTag("affine_plane")
    return VarietyTag("type_A_singularity", degree - 1)


class RingPresentation:
    """Generators, a single defining relation, and a variety classification."""

    __slots__ = ("variables", "relation", "tag")

    def __init__(self, variables, relation: Polynomial | None, tag: VarietyTag):
        self.variables = tuple((str(name), int(deg)) for name, deg in variables)
        self.relation = relation
        self.tag = tag

    @classmethod
    def point_presentation(cls) -> "RingPresentation":
        return cls((), None, VarietyTag("point"))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingPresentation)
            and (self.variables, self.relation, self.tag)
            == (other.variables, other.relation, other.tag)
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.relation, self.tag))

    def __str__(self) -> str:
        if self.tag.kind == "point":
            return "point"
        names = ", ".join(name for name, _ in self.variables)
        return f"C[{names}] / (x*y = {self.relation})  [{self.tag}]"

    def __repr__(self) -> str:
        return f"<RingPresentation {self}>"

    def to_json(self) -> dict:
        if self.tag.kind == "point":
            return {"variety": "point", "variables": [], "relation": None}
        return {
            "variables": [{"name": n, "degree_doubled": d} for n, d in self.variables],
            "relation": {
                "lhs": "x*y",
                "rhs": str(self.relation),
                "rhs_terms": [
                    {"exponents": list(e), "coeff": c} for e, c in self.relation.sorted_terms()
                ],
            },
            "variety": str(self.tag),
        }


def present_rank1(theory: TorusTheory) -> RingPresentation:
    """Presentation C[w, x, y] / (x*y = prod_j a_j(w)^{|a_j|}) in effective rank one.

    Multiplicative directions are reduced away first; effective rank zero
    yields the point, and effective rank two or more is unsupported (use the
    structure-constant table instead).
    """
    reduced, _ = reduce_multiplicative(theory)
    if reduced.rank == 0:
        return RingPresentation.point_presentation()
    if reduced.rank > 1:
        raise RankTooHighError(
            f"effective rank {reduced.rank}: only rank-one presentations are supported"
        )
    rhs = eval_product(
        [(a, abs(a.coeffs[0])) for a in reduced.linear_weights], rank=1
    )
    degree_doubled = sum(abs(a.coeffs[0]) for a in reduced.linear_weights)
    variables = (("w", 2), ("x", degree_doubled), ("y", degree_doubled))
    return RingPresentation(variables, rhs, classify_relation(rhs))


def structure_constant_table(
    theory: TorusTheory, cutoff: int = 5
) -> list[tuple[Cochar, Cochar, Polynomial]]:
    """All products r[lam] * r[mu] with |lam|_inf, |mu|_inf <= cutoff.

    Only cocharacters annihilating the multiplicative weights appear; the
    listing is sorted for deterministic output.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    box: list[Cochar] = []

    def fill(prefix: tuple[int, ...]) -> None:
        if len(prefix) == theory.rank:
            if theory.annihilates_multiplicative(prefix):
                box.append(prefix)
            return
        for value in range(-cutoff, cutoff + 1):
            fill(prefix + (value,))

    fill(())
    box.sort()
    table = []
    for lam in box:
        for mu in box:
            exponents = structure_exponents(theory, lam, mu)
            factor = eval_product(list(zip(theory.linear_weights, exponents)), rank=theory.rank)
            table.append((lam, mu, factor))
    return table


def sdual_torus(theory: TorusTheory) -> spaces.SpaceDescriptor:
    """Dual Hamiltonian space of a torus theory: its own Coulomb branch.

    The dual-group action is the grading by the character lattice of the
    original torus, recorded as the torus acting on the left.
    """
    reduced, _ = reduce_multiplicative(theory)
    acting = spaces.GroupDescriptor.torus(theory.rank)
    if reduced.rank == 0:
        return spaces.SpaceDescriptor.point(acting)
    if not reduced.linear_weights or all(
        all(c == 0 for c in a.coeffs) for a in reduced.linear_weights
    ):
        return spaces.SpaceDescriptor.torus_cotangent(reduced.rank, left_group=acting)
    if reduced.rank == 1:
        tag = present_rank1(reduced).tag
        if tag.kind == "torus_cotangent":
            return spaces.SpaceDescriptor.torus_cotangent(1, left_group=acting)
        if tag.kind == "affine_plane":
            return spaces.SpaceDescriptor.cotangent_of_rep(
                dims=(1, 1), left_group=acting, right_group=spaces.GroupDescriptor.trivial()
            )
        if tag.kind == "type_A_singularity":
            return spaces.SpaceDescriptor.type_a_singularity(tag.index, left_group=acting)
    return spaces.SpaceDescriptor.coulomb_branch(reduced, left_group=acting)
