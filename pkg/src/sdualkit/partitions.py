"""Partition combinatorics for nilpotent orbits and slices in gl_n."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .exactalg import IntegerMatrix, integer_rank


class InconsistentChainError(ValueError):
    """No Jordan type is compatible with the requested dimension chain."""


class Partition:
    """Weakly decreasing tuple of positive integers; canonical on construction."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = sorted((int(p) for p in parts), reverse=True)
        if cleaned and cleaned[-1] < 0:
            raise ValueError("partition parts must be nonnegative")
        self.parts = tuple(p for p in cleaned if p > 0)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the bracketed comma form, e.g. ``[3,1,1]``."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"expected a bracketed partition, got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return cls(())
        return cls(int(piece) for piece in inner.split(","))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def transpose(self) -> "Partition":
        return transpose(self)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def transpose(lam) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    lam = _as_partition(lam)
    if not lam.parts:
        return Partition(())
    return Partition(sum(1 for p in lam.parts if p >= k) for k in range(1, lam.parts[0] + 1))


def centralizer_dim(lam) -> int:
    """Dimension of the gl_n centralizer of a nilpotent of Jordan type lam.

    Equals the dimension of the affine slice through that nilpotent, and is
    the classical sum of squared column lengths.
    """
    return sum(c * c for c in transpose(lam).parts)


def orbit_dim(lam) -> int:
    """Dimension of the nilpotent orbit of Jordan type lam inside gl_n."""
    lam = _as_partition(lam)
    return lam.n * lam.n - centralizer_dim(lam)


def rank_profile(lam, k: int) -> int:
    """Rank of x^k for x nilpotent of Jordan type lam."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    return sum(max(p - k, 0) for p in _as_partition(lam).parts)


def hook(a: int, b: int) -> Partition:
    """The hook partition (a, 1^b) of a + b."""
    if a < 1:
        raise ValueError("hook arm must be at least 1")
    if b < 0:
        raise ValueError("hook leg must be nonnegative")
    return Partition((a,) + (1,) * b)


def dominates(lam, mu) -> bool:
    """Dominance order on partitions of the same total."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if lam.n != mu.n:
        raise ValueError("dominance compares partitions of the same integer")
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam.parts[i] if i < len(lam) else 0
        total_m += mu.parts[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first."""
    if n < 0:
        return
    if n == 0:
        yield Partition(())
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


class OrbitDescriptor:
    """A nilpotent-orbit datum in gl_n: matrix size, Jordan type, and kind."""

    __slots__ = ("n", "jordan_type", "kind")

    KINDS = ("orbit_closure", "slice", "group_times_slice")

    def __init__(self, n: int, jordan_type, kind: str = "orbit_closure"):
        self.n = int(n)
        self.jordan_type = _as_partition(jordan_type)
        if self.jordan_type.n != self.n:
            raise ValueError(f"Jordan type {self.jordan_type} is not a partition of {self.n}")
        if kind == "nilpotent_cone":
            # The nilpotent cone is the closure of the regular orbit.
            if self.jordan_type != Partition((self.n,)) and self.n > 0:
                raise ValueError("nilpotent cone must have Jordan type (n)")
            kind = "orbit_closure"
        if kind not in self.KINDS:
            raise ValueError(f"unknown orbit kind {kind!r}")
        self.kind = kind

    @classmethod
    def nilpotent_cone(cls, n: int) -> "OrbitDescriptor":
        return cls(n, Partition((n,) if n else ()), "orbit_closure")

    @property
    def is_nilpotent_cone(self) -> bool:
        return self.kind == "orbit_closure" and self.jordan_type == Partition((self.n,) if self.n else ())

    @property
    def dim(self) -> int:
        if self.kind == "orbit_closure":
            return orbit_dim(self.jordan_type)
        if self.kind == "slice":
            return centralizer_dim(self.jordan_type)
        return self.n * self.n + centralizer_dim(self.jordan_type)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OrbitDescriptor)
            and (self.n, self.jordan_type, self.kind) == (other.n, other.jordan_type, other.kind)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.jordan_type, self.kind))

    def __str__(self) -> str:
        if self.kind == "orbit_closure":
            return f"OrbitClosure{self.jordan_type} in gl({self.n})  (dim {self.dim})"
        if self.kind == "slice":
            return f"Slice{self.jordan_type} in gl({self.n})  (dim {self.dim})"
        return f"GL({self.n}) x Slice{self.jordan_type}  (dim {self.dim})"

    def __repr__(self) -> str:
        return f"OrbitDescriptor({self.n}, {self.jordan_type!r}, {self.kind!r})"


def chain_to_orbit(dims: Sequence[int]) -> OrbitDescriptor:
    """Jordan type of the generic composite along a dimension chain.

    For a chain v_0 = 0 <= ... <= v_n, the composite endomorphism x of C^{v_n}
    satisfies rank(x^k) <= v_{n-k}. The generic composite attains the
    dominance-maximal Jordan type compatible with these bounds; when the
    reversed consecutive differences already form a partition, its transpose
    is that type and is used as a fast path.
    """
    dims = tuple(int(v) for v in dims)
    if not dims:
        raise ValueError("empty dimension chain")
    if dims[0] != 0:
        raise ValueError("dimension chain must start at 0")
    if any(v < 0 for v in dims):
        raise ValueError("dimensions must be nonnegative")
    steps = len(dims) - 1
    target = dims[-1]
    deltas = tuple(dims[i + 1] - dims[i] for i in reversed(range(steps)))
    if (
        steps
        and all(d >= 0 for d in deltas)
        and all(deltas[i] >= deltas[i + 1] for i in range(len(deltas) - 1))
    ):
        return OrbitDescriptor(target, transpose(Partition(d for d in deltas if d)))
    feasible = [
        p
        for p in partitions_of(target)
        if all(rank_profile(p, k) <= dims[steps - k] for k in range(1, steps + 1))
    ]
    if not feasible:
        raise InconsistentChainError(f"no Jordan type fits the chain {list(dims)}")
    maximal = [p for p in feasible if all(q == p or dominates(p, q) for q in feasible)]
    if len(maximal) != 1:
        raise InconsistentChainError(f"chain {list(dims)} has no dominance-maximal Jordan type")
    return OrbitDescriptor(target, maximal[0])


def _jordan_matrix(lam: Partition) -> IntegerMatrix:
    n = lam.n
    entries = [[0] * n for _ in range(n)]
    offset = 0
    for block in lam.parts:
        for i in range(block - 1):
            entries[offset + i][offset + i + 1] = 1
        offset += block
    return IntegerMatrix(n, n, entries)


def numeric_jordan_oracle(lam) -> dict[int, int]:
    """Exact ranks of powers of the Jordan matrix of type lam.

    Builds the block-diagonal nilpotent matrix over the integers and computes
    rank(J^k) for k = 0 .. largest part, independently of rank_profile.
    """
    lam = _as_partition(lam)
    n = lam.n
    if n > 64:
        raise ValueError("oracle capped at matrices of size 64")
    jordan = _jordan_matrix(lam)
    power = IntegerMatrix(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])
    table: dict[int, int] = {}
    top = lam.parts[0] if lam.parts else 0
    for k in range(top + 1):
        table[k] = integer_rank(power)
        if k < top:
            product = [
                [sum(power.entries[i][l] * jordan.entries[l][j] for l in range(n)) for j in range(n)]
                for i in range(n)
            ]
            power = IntegerMatrix(n, n, product)
    return table
