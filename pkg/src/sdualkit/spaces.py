"""Descriptor algebra for Hamiltonian spaces.

Spaces are tracked as tagged records (kind, acting groups, complex dimension,
partition data), never as actual varieties. The module provides symplectic-
reduction bookkeeping, the built-in table of S-dual pairs, the Kostant
reduction dimension identity, and the hyperspherical dimension heuristic.
"""

from __future__ import annotations

from collections import namedtuple

from .partitions import Partition, centralizer_dim, hook, orbit_dim, transpose


class GroupMismatchError(ValueError):
    """Composition attempted over mismatched middle groups."""


class NoKnownDualError(ValueError):
    """The descriptor kind has no entry in the dual-pair table."""


class UnknownCoulombDimensionError(ValueError):
    """No rule gives the Coulomb-branch dimension of this matter space."""


class GroupDescriptor:
    """A reductive group at bookkeeping level: torus(r), gl(n), or a product.

    The dual group of a torus is identified with the torus and gl(n) with
    gl(n); isogeny distinctions are deliberately collapsed.
    """

    __slots__ = ("kind", "size", "factors")

    def __init__(self, kind: str, size: int = 0, factors: tuple = ()):
        self.kind = kind
        self.size = int(size)
        self.factors = tuple(factors)

    @classmethod
    def torus(cls, r: int) -> "GroupDescriptor":
        if r < 0:
            raise ValueError("torus rank must be nonnegative")
        return cls("torus", r)

    @classmethod
    def gl(cls, n: int) -> "GroupDescriptor":
        if n < 0:
            raise ValueError("gl size must be nonnegative")
        return cls("gl", n)

    @classmethod
    def trivial(cls) -> "GroupDescriptor":
        return cls.torus(0)

    @classmethod
    def product(cls, factors) -> "GroupDescriptor":
        flat = []
        for f in factors:
            if f.kind == "product":
                flat.extend(f.factors)
            elif not f.is_trivial:
                flat.append(f)
        if not flat:
            return cls.trivial()
        if len(flat) == 1:
            return flat[0]
        return cls("product", 0, tuple(flat))

    @property
    def dim(self) -> int:
        if self.kind == "torus":
            return self.size
        if self.kind == "gl":
            return self.size * self.size
        return sum(f.dim for f in self.factors)

    @property
    def rank(self) -> int:
        if self.kind == "product":
            return sum(f.rank for f in self.factors)
        return self.size

    @property
    def is_trivial(self) -> bool:
        return self.dim == 0

    def dual(self) -> "GroupDescriptor":
        return self

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupDescriptor)
            and (self.kind, self.size, self.factors) == (other.kind, other.size, other.factors)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.size, self.factors))

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        if self.kind == "torus":
            return f"T({self.size})"
        if self.kind == "gl":
            return f"GL({self.size})"
        return " x ".join(str(f) for f in self.factors)

    def __repr__(self) -> str:
        return f"GroupDescriptor({self.kind!r}, {self.size}, {self.factors!r})"

    def to_json(self) -> dict:
        if self.kind == "product":
            return {"kind": "product", "factors": [f.to_json() for f in self.factors]}
        if self.kind == "torus":
            return {"kind": "torus", "rank": self.size}
        return {"kind": "gl", "n": self.size}

    @classmethod
    def from_json(cls, data: dict) -> "GroupDescriptor":
        kind = data.get("kind")
        if kind == "torus":
            return cls.torus(data["rank"])
        if kind == "gl":
            return cls.gl(data["n"])
        if kind == "product":
            return cls.product(cls.from_json(f) for f in data["factors"])
        raise ValueError(f"unknown group kind {kind!r}")


_TRIVIAL = GroupDescriptor.trivial()


class SpaceDescriptor:
    """Tagged record of a Hamiltonian space supporting composition and duals.

    ``left_group`` / ``right_group`` record the two-sided action (either may
    be trivial); ``group`` is the carrier group of kinds that contain a group
    factor. ``dim`` is the complex dimension, expected dimension only when
    ``possibly_singular`` is set.
    """

    KINDS = (
        "point",
        "cotangent_of_rep",
        "cotangent_of_group",
        "group_times_slice",
        "orbit_closure",
        "type_A_singularity",
        "torus_cotangent",
        "product",
        "coulomb_branch",
        "reduced",
    )

    __slots__ = (
        "kind",
        "dim",
        "left_group",
        "right_group",
        "group",
        "partition",
        "size",
        "index",
        "rep_dims",
        "theory",
        "factors",
        "conjecture",
        "possibly_singular",
        "right_twisted",
    )

    def __init__(
        self,
        kind: str,
        dim: int,
        left_group: GroupDescriptor = _TRIVIAL,
        right_group: GroupDescriptor = _TRIVIAL,
        group: GroupDescriptor | None = None,
        partition: Partition | None = None,
        size: int | None = None,
        index: int | None = None,
        rep_dims: tuple[int, ...] | None = None,
        theory=None,
        factors: tuple = (),
        conjecture: bool = False,
        possibly_singular: bool = False,
        right_twisted: bool = False,
    ):
        if kind not in self.KINDS:
            raise ValueError(f"unknown space kind {kind!r}")
        self.kind = kind
        self.dim = int(dim)
        self.left_group = left_group
        self.right_group = right_group
        self.group = group
        self.partition = partition
        self.size = size
        self.index = index
        self.rep_dims = rep_dims
        self.theory = theory
        self.factors = tuple(factors)
        self.conjecture = bool(conjecture)
        self.possibly_singular = bool(possibly_singular)
        self.right_twisted = bool(right_twisted)

    # ---- constructors -------------------------------------------------

    @classmethod
    def point(
        cls,
        group: GroupDescriptor = _TRIVIAL,
        right_group: GroupDescriptor = _TRIVIAL,
        conjecture: bool = False,
    ) -> "SpaceDescriptor":
        return cls("point", 0, left_group=group, right_group=right_group, conjecture=conjecture)

    @classmethod
    def torus_cotangent(
        cls, r: int, left_group: GroupDescriptor | None = None, conjecture: bool = False
    ) -> "SpaceDescriptor":
        if r == 0:
            return cls.point(left_group if left_group is not None else _TRIVIAL)
        left = left_group if left_group is not None else GroupDescriptor.torus(r)
        return cls("torus_cotangent", 2 * r, left_group=left, size=r, conjecture=conjecture)

    @classmethod
    def cotangent_of_group(
        cls,
        g: GroupDescriptor,
        left_group: GroupDescriptor | None = None,
        right_group: GroupDescriptor = _TRIVIAL,
        conjecture: bool = False,
    ) -> "SpaceDescriptor":
        if g.kind == "torus":
            return cls.torus_cotangent(g.size, left_group=left_group, conjecture=conjecture)
        if g.kind != "gl":
            raise ValueError("cotangent_of_group supports torus and gl groups")
        left = left_group if left_group is not None else g
        return cls(
            "cotangent_of_group",
            2 * g.dim,
            left_group=left,
            right_group=right_group,
            group=g,
            conjecture=conjecture,
        )

    @classmethod
    def group_times_slice(
        cls,
        g: GroupDescriptor,
        lam,
        left_group: GroupDescriptor | None = None,
        right_group: GroupDescriptor = _TRIVIAL,
        conjecture: bool = False,
    ) -> "SpaceDescriptor":
        if g.kind == "torus":
            # The principal slice of a torus is its whole Lie algebra.
            return cls.torus_cotangent(g.size, left_group=left_group, conjecture=conjecture)
        if g.kind != "gl":
            raise ValueError("group_times_slice supports torus and gl groups")
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        if lam.n != g.size:
            raise ValueError(f"slice type {lam} is not a partition of {g.size}")
        if right_group.is_trivial and lam == Partition((1,) * g.size):
            # The slice through the zero nilpotent is all of gl_n.
            return cls.cotangent_of_group(g, left_group=left_group, conjecture=conjecture)
        left = left_group if left_group is not None else g
        return cls(
            "group_times_slice",
            g.dim + centralizer_dim(lam),
            left_group=left,
            right_group=right_group,
            group=g,
            partition=lam,
            conjecture=conjecture,
        )

    @classmethod
    def orbit_closure(
        cls,
        n: int,
        lam,
        left_group: GroupDescriptor | None = None,
        conjecture: bool = False,
    ) -> "SpaceDescriptor":
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        if lam.n != n:
            raise ValueError(f"{lam} is not a partition of {n}")
        left = left_group if left_group is not None else GroupDescriptor.gl(n)
        if lam == Partition((1,) * n):
            return cls.point(left, conjecture=conjecture)
        return cls(
            "orbit_closure",
            orbit_dim(lam),
            left_group=left,
            group=GroupDescriptor.gl(n),
            partition=lam,
            size=n,
            conjecture=conjecture,
        )

    @classmethod
    def nilpotent_cone(cls, n: int, conjecture: bool = False) -> "SpaceDescriptor":
        return cls.orbit_closure(n, Partition((n,) if n else ()), conjecture=conjecture)

    @classmethod
    def type_a_singularity(
        cls, index: int, left_group: GroupDescriptor | None = None, conjecture: bool = False
    ) -> "SpaceDescriptor":
        if index < 1:
            raise ValueError("type A index must be at least 1")
        left = left_group if left_group is not None else _TRIVIAL
        return cls("type_A_singularity", 2, left_group=left, index=index, conjecture=conjecture)

    @classmethod
    def cotangent_of_rep(
        cls,
        dims: tuple[int, int] | None = None,
        theory=None,
        left_group: GroupDescriptor | None = None,
        right_group: GroupDescriptor | None = None,
        conjecture: bool = False,
    ) -> "SpaceDescriptor":
        if (dims is None) == (theory is None):
            raise ValueError("exactly one of dims / theory is required")
        if theory is not None:
            left = left_group if left_group is not None else GroupDescriptor.torus(theory.rank)
            matter = len(theory.linear_weights) + len(theory.multiplicative_weights)
            return cls(
                "cotangent_of_rep",
                2 * matter,
                left_group=left,
                right_group=right_group if right_group is not None else _TRIVIAL,
                theory=theory,
                conjecture=conjecture,
            )
        vi, vj = (int(d) for d in dims)
        if vi < 0 or vj < 0:
            raise ValueError("rep dimensions must be nonnegative")
        left = left_group if left_group is not None else GroupDescriptor.gl(vi)
        right = right_group if right_group is not None else GroupDescriptor.gl(vj)
        if vi * vj == 0:
            return cls.point(left, right_group=right, conjecture=conjecture)
        return cls(
            "cotangent_of_rep",
            2 * vi * vj,
            left_group=left,
            right_group=right,
            rep_dims=(vi, vj),
            conjecture=conjecture,
        )

    @classmethod
    def coulomb_branch(
        cls, theory, left_group: GroupDescriptor | None = None, conjecture: bool = False
    ) -> "SpaceDescriptor":
        left = left_group if left_group is not None else GroupDescriptor.torus(theory.rank)
        return cls(
            "coulomb_branch",
            2 * theory.rank,
            left_group=left,
            theory=theory,
            conjecture=conjecture,
        )

    @classmethod
    def product_space(
        cls,
        factors,
        left_group: GroupDescriptor = _TRIVIAL,
        right_group: GroupDescriptor = _TRIVIAL,
        conjecture: bool = False,
    ) -> "SpaceDescriptor":
        factors = tuple(factors)
        return cls(
            "product",
            sum(f.dim for f in factors),
            left_group=left_group,
            right_group=right_group,
            factors=factors,
            conjecture=conjecture,
        )

    @classmethod
    def reduced(
        cls,
        dim: int,
        left_group: GroupDescriptor = _TRIVIAL,
        right_group: GroupDescriptor = _TRIVIAL,
        possibly_singular: bool = False,
        right_twisted: bool = False,
    ) -> "SpaceDescriptor":
        return cls(
            "reduced",
            dim,
            left_group=left_group,
            right_group=right_group,
            possibly_singular=possibly_singular,
            right_twisted=right_twisted,
        )

    @classmethod
    def m_circle(cls, vi: int, vj: int, conjecture: bool = False) -> "SpaceDescriptor":
        """The two-sided space T*Hom(C^vi, C^vj)."""
        return cls.cotangent_of_rep(dims=(vi, vj), conjecture=conjecture)

    @classmethod
    def m_cross(cls, vi: int, vj: int, conjecture: bool = False) -> "SpaceDescriptor":
        """The two-sided slice-type building block attached to (vi, vj).

        For vi != vj it is GL(max) times the slice of hook type
        (|vi-vj|, 1^min); for vi = vj = v it is T*(GL(v) x C^v).
        """
        left, right = GroupDescriptor.gl(vi), GroupDescriptor.gl(vj)
        if vi == vj:
            if vi == 0:
                return cls.point(left, right_group=right, conjecture=conjecture)
            return cls.product_space(
                (cls.cotangent_of_group(GroupDescriptor.gl(vi)), cls.cotangent_of_rep(dims=(1, vi))),
                left_group=left,
                right_group=right,
                conjecture=conjecture,
            )
        carrier = GroupDescriptor.gl(max(vi, vj))
        lam = hook(abs(vi - vj), min(vi, vj))
        return cls.group_times_slice(
            carrier, lam, left_group=left, right_group=right, conjecture=conjecture
        )

    # ---- value semantics ----------------------------------------------

    def _key(self):
        return (
            self.kind,
            self.dim,
            self.left_group,
            self.right_group,
            self.group,
            self.partition,
            self.size,
            self.index,
            self.rep_dims,
            self.theory,
            self.factors,
            self.conjecture,
            self.possibly_singular,
            self.right_twisted,
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpaceDescriptor) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def same_shape(self, other: "SpaceDescriptor") -> bool:
        """Kind-and-dimension agreement, the comparison used for double duals."""
        return self.kind == other.kind and self.dim == other.dim

    # ---- rendering -----------------------------------------------------

    def _base_text(self) -> str:
        if self.kind == "point":
            return "point"
        if self.kind == "torus_cotangent":
            return "T*(C^x)" if self.size == 1 else f"T*(C^x)^{self.size}"
        if self.kind == "cotangent_of_group":
            return f"T*{self.group}"
        if self.kind == "group_times_slice":
            return f"{self.group} x Slice{self.partition}"
        if self.kind == "orbit_closure":
            return f"OrbitClosure{self.partition} in gl({self.size})"
        if self.kind == "type_A_singularity":
            return f"A_{self.index} singularity"
        if self.kind == "cotangent_of_rep":
            if self.rep_dims is not None:
                vi, vj = self.rep_dims
                return f"T*Hom(C^{vi},C^{vj})"
            return f"T*N({self.theory.describe()})"
        if self.kind == "coulomb_branch":
            return f"CoulombBranch({self.theory.describe()})"
        if self.kind == "product":
            return " x ".join(f._base_text() for f in self.factors)
        return f"Reduced({self.left_group} | {self.right_group})"

    def __str__(self) -> str:
        out = f"{self._base_text()}  (dim {self.dim})"
        if self.conjecture:
            out += " [conjectural]"
        if self.possibly_singular:
            out += " [possibly singular]"
        return out

    def __repr__(self) -> str:
        return f"<SpaceDescriptor {self}>"

    # ---- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        data: dict = {
            "kind": self.kind,
            "dim": self.dim,
            "left_group": self.left_group.to_json(),
            "right_group": self.right_group.to_json(),
        }
        if self.group is not None:
            data["group"] = self.group.to_json()
        if self.partition is not None:
            data["partition"] = list(self.partition.parts)
        if self.size is not None:
            data["n" if self.kind == "orbit_closure" else "rank"] = self.size
        if self.index is not None:
            data["index"] = self.index
        if self.rep_dims is not None:
            data["dims"] = list(self.rep_dims)
        if self.theory is not None:
            data["theory"] = self.theory.to_json()
        if self.factors:
            data["factors"] = [f.to_json() for f in self.factors]
        for flag in ("conjecture", "possibly_singular", "right_twisted"):
            if getattr(self, flag):
                data[flag] = True
        return data

    @classmethod
    def from_json(cls, data: dict) -> "SpaceDescriptor":
        kind = data.get("kind")
        left = GroupDescriptor.from_json(data["left_group"]) if "left_group" in data else _TRIVIAL
        right = GroupDescriptor.from_json(data["right_group"]) if "right_group" in data else _TRIVIAL
        conjecture = bool(data.get("conjecture", False))
        if kind == "point":
            return cls.point(left, right_group=right, conjecture=conjecture)
        if kind == "torus_cotangent":
            return cls.torus_cotangent(data["rank"], left_group=left if "left_group" in data else None)
        if kind == "cotangent_of_group":
            g = GroupDescriptor.from_json(data["group"])
            return cls.cotangent_of_group(
                g,
                left_group=left if "left_group" in data else None,
                right_group=right,
                conjecture=conjecture,
            )
        if kind == "group_times_slice":
            g = GroupDescriptor.from_json(data["group"])
            return cls.group_times_slice(
                g,
                Partition(data["partition"]),
                left_group=left if "left_group" in data else None,
                right_group=right,
                conjecture=conjecture,
            )
        if kind == "orbit_closure":
            return cls.orbit_closure(
                data["n"],
                Partition(data["partition"]),
                left_group=left if "left_group" in data else None,
                conjecture=conjecture,
            )
        if kind == "type_A_singularity":
            return cls.type_a_singularity(
                data["index"], left_group=left if "left_group" in data else None
            )
        if kind == "cotangent_of_rep":
            if "theory" in data:
                from .abelian_coulomb import TorusTheory

                return cls.cotangent_of_rep(
                    theory=TorusTheory.from_json(data["theory"]),
                    left_group=left if "left_group" in data else None,
                    right_group=right if "right_group" in data else None,
                )
            return cls.cotangent_of_rep(
                dims=tuple(data["dims"]),
                left_group=left if "left_group" in data else None,
                right_group=right if "right_group" in data else None,
                conjecture=conjecture,
            )
        if kind == "coulomb_branch":
            from .abelian_coulomb import TorusTheory

            return cls.coulomb_branch(
                TorusTheory.from_json(data["theory"]),
                left_group=left if "left_group" in data else None,
            )
        if kind == "product":
            return cls.product_space(
                (cls.from_json(f) for f in data["factors"]),
                left_group=left,
                right_group=right,
                conjecture=conjecture,
            )
        if kind == "reduced":
            return cls.reduced(
                data["dim"],
                left_group=left,
                right_group=right,
                possibly_singular=bool(data.get("possibly_singular", False)),
                right_twisted=bool(data.get("right_twisted", False)),
            )
        raise ValueError(f"unknown space kind {kind!r}")


def compose(
    m12: SpaceDescriptor,
    m23: SpaceDescriptor,
    g2: GroupDescriptor,
    free: bool = False,
) -> SpaceDescriptor:
    """Symplectic-reduction bookkeeping for m12 o m23 over the middle group.

    The output dimension is dim m12 + dim m23 - 2 dim g2; when ``free`` is
    unset the result is only an expected dimension and is flagged possibly
    singular. The middle action on m12 is understood through the involution
    swapping inverse conjugacy classes; that twist affects identifications
    only, never dimensions, so it is carried as the ``right_twisted`` flag
    of the surviving right action.
    """
    def matches(g: GroupDescriptor) -> bool:
        # all trivial groups are the same group
        return g == g2 or (g.is_trivial and g2.is_trivial)

    if not (matches(m12.right_group) and matches(m23.left_group)):
        raise GroupMismatchError(
            f"middle group {g2} does not match {m12.right_group} / {m23.left_group}"
        )
    if g2.is_trivial and m23.kind == "point" and m23.right_group.is_trivial:
        return m12
    if g2.is_trivial and m12.kind == "point" and m12.left_group.is_trivial:
        return m23
    dim = m12.dim + m23.dim - 2 * g2.dim
    if (
        free
        and m12.kind == "cotangent_of_group"
        and m23.kind == "cotangent_of_group"
        and m12.group == m23.group == g2
    ):
        # Group multiplication collapses T*G o T*G back to T*G.
        return SpaceDescriptor.cotangent_of_group(
            g2, left_group=m12.left_group, right_group=m23.right_group
        )
    return SpaceDescriptor.reduced(
        dim,
        left_group=m12.left_group,
        right_group=m23.right_group,
        possibly_singular=not free,
        right_twisted=m23.right_twisted,
    )


def _is_m_cross(m: SpaceDescriptor) -> tuple[int, int] | None:
    """Recognize the two-sided slice block; returns (vi, vj) or None."""
    left, right = m.left_group, m.right_group
    if left.kind != "gl" or right.kind != "gl":
        return None
    vi, vj = left.size, right.size
    if m.kind == "group_times_slice":
        if vi == vj:
            return None
        if m.group != GroupDescriptor.gl(max(vi, vj)):
            return None
        if m.partition != hook(abs(vi - vj), min(vi, vj)):
            return None
        return vi, vj
    if m.kind == "product" and vi == vj and len(m.factors) == 2:
        expected = SpaceDescriptor.m_cross(vi, vj)
        if m.factors == expected.factors:
            return vi, vj
    return None


def sdual_pair(m: SpaceDescriptor) -> SpaceDescriptor:
    """Table-driven S-dual of a descriptor.

    Entries derived from the slice/cotangent exchange conjecture carry
    ``conjecture=True``; kinds outside the table raise NoKnownDualError.
    """
    if m.kind == "cotangent_of_rep" and m.theory is not None:
        from .abelian_coulomb import sdual_torus

        return sdual_torus(m.theory)

    if m.kind == "point":
        carrier = m.left_group if not m.left_group.is_trivial else m.right_group
        if carrier.is_trivial:
            return SpaceDescriptor.point(m.left_group, right_group=m.right_group)
        if carrier.kind == "torus":
            return SpaceDescriptor.torus_cotangent(carrier.size, left_group=carrier)
        if carrier.kind == "gl":
            return SpaceDescriptor.group_times_slice(
                carrier,
                Partition((carrier.size,)),
                left_group=m.left_group,
                right_group=m.right_group,
            )
        raise NoKnownDualError(f"no dual rule for a point under {carrier}")

    if m.kind == "torus_cotangent":
        return SpaceDescriptor.point(GroupDescriptor.torus(m.size))

    if m.kind == "cotangent_of_group":
        if not m.right_group.is_trivial:
            raise NoKnownDualError("two-sided cotangent of a group is not in the table")
        return SpaceDescriptor.nilpotent_cone(m.group.size)

    if m.kind == "group_times_slice":
        if m.right_group.is_trivial:
            return SpaceDescriptor.orbit_closure(m.group.size, transpose(m.partition))
        pair = _is_m_cross(m)
        if pair is not None:
            return SpaceDescriptor.m_circle(*pair, conjecture=True)
        raise NoKnownDualError("two-sided slice block not of hook shape")

    if m.kind == "orbit_closure":
        return SpaceDescriptor.group_times_slice(
            GroupDescriptor.gl(m.size), transpose(m.partition)
        )

    if m.kind == "cotangent_of_rep" and m.rep_dims is not None:
        if m.left_group == GroupDescriptor.gl(m.rep_dims[0]) and m.right_group == GroupDescriptor.gl(
            m.rep_dims[1]
        ):
            return SpaceDescriptor.m_cross(*m.rep_dims, conjecture=True)
        raise NoKnownDualError("cotangent of a two-sided rep needs gl actions on both sides")

    if m.kind == "product":
        pair = _is_m_cross(m)
        if pair is not None:
            return SpaceDescriptor.m_circle(*pair, conjecture=True)
        raise NoKnownDualError("product descriptor is not a recognized building block")

    raise NoKnownDualError(f"kind {m.kind!r} has no dual-pair entry")


KostantCheck = namedtuple("KostantCheck", "lhs_dim rhs_dim passed")


def coulomb_dim(m: SpaceDescriptor, g: GroupDescriptor) -> int:
    """Coulomb-branch dimension of the gauge theory (g, m), where known.

    Known cases: trivial matter (2 * rank), the cotangent of the group
    itself (0), and torus theories (twice the effective rank).
    """
    if m.kind == "point":
        return 2 * g.rank
    if m.kind == "cotangent_of_group" and m.group == g:
        return 0
    if m.kind == "torus_cotangent" and g == GroupDescriptor.torus(m.size):
        return 0
    if m.kind == "cotangent_of_rep" and m.theory is not None:
        if g != GroupDescriptor.torus(m.theory.rank):
            raise UnknownCoulombDimensionError(f"theory rank does not match {g}")
        from .abelian_coulomb import reduce_multiplicative

        reduced, _ = reduce_multiplicative(m.theory)
        return 2 * reduced.rank
    raise UnknownCoulombDimensionError(f"no Coulomb dimension rule for kind {m.kind!r}")


def kostant_reduction_check(m: SpaceDescriptor, g: GroupDescriptor) -> KostantCheck:
    """Dimension identity relating a Coulomb branch to its dual matter space.

    Reducing the dual against the principal slice costs 2 dim g and adds
    dim g + rank g, so the Coulomb dimension must equal
    dim(dual) - dim g + rank g.
    """
    lhs = coulomb_dim(m, g)
    dual = sdual_pair(m)
    rhs = dual.dim + (g.dim + g.rank) - 2 * g.dim
    return KostantCheck(lhs, rhs, lhs == rhs)


def hyperspherical_deficit(m: SpaceDescriptor, g: GroupDescriptor) -> int:
    """Expected dimension of (m x NilpotentCone(g)) reduced by g.

    A nonpositive value is necessary (not sufficient) for the finiteness
    heuristic; this never decides finiteness by itself.
    """
    return m.dim + (g.dim - g.rank) - 2 * g.dim
