"""Linear brane-diagram calculus for bow varieties.

A diagram is an ordered word in two fivebrane symbols, ``o`` and ``x``, with
an integer dimension label on every segment between (and outside) branes.
Supported moves: the duality swap exchanging the two symbols, and the local
transition swapping an adjacent opposite-type pair while updating the middle
segment so that linking numbers are conserved.

Conventions (fixed once, the mirror convention is diagram reversal): an
``o`` brane counts ``x`` branes strictly to its left, an ``x`` brane counts
``o`` branes strictly to its right.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import spaces
from .partitions import chain_to_orbit


class NonAdmissibleMoveError(ValueError):
    """The requested transition would create a negative segment dimension."""


class UnsupportedDiagramError(ValueError):
    """The diagram is outside the families with a known space reading."""


NS5 = "o"
D5 = "x"


class BraneDiagram:
    """Alternating word of fivebranes with one dimension label per segment."""

    __slots__ = ("branes", "dims")

    def __init__(self, branes: Iterable[str], dims: Iterable[int]):
        self.branes = tuple(branes)
        self.dims = tuple(int(d) for d in dims)
        if any(b not in (NS5, D5) for b in self.branes):
            raise ValueError(f"brane symbols must be '{NS5}' or '{D5}'")
        if len(self.dims) != len(self.branes) + 1:
            raise ValueError("need exactly one more dimension label than branes")
        if any(d < 0 for d in self.dims):
            raise ValueError("segment dimensions must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "BraneDiagram":
        """Parse the interleaved form, e.g. ``0 o 1 x 1 x 1 o 0``."""
        tokens = text.split()
        if len(tokens) % 2 == 0:
            raise ValueError("diagram text must interleave dims and branes")
        dims = []
        branes = []
        for i, tok in enumerate(tokens):
            if i % 2 == 0:
                dims.append(int(tok))
            else:
                branes.append(tok)
        return cls(branes, dims)

    def render(self) -> str:
        pieces = [str(self.dims[0])]
        for brane, dim in zip(self.branes, self.dims[1:]):
            pieces.append(brane)
            pieces.append(str(dim))
        return " ".join(pieces)

    def to_json(self) -> dict:
        return {"branes": list(self.branes), "dims": list(self.dims)}

    @classmethod
    def from_json(cls, data: dict) -> "BraneDiagram":
        if set(data) - {"branes", "dims"}:
            raise ValueError("diagram document allows only 'branes' and 'dims'")
        return cls(data["branes"], data["dims"])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BraneDiagram)
            and (self.branes, self.dims) == (other.branes, other.dims)
        )

    def __hash__(self) -> int:
        return hash((self.branes, self.dims))

    def __len__(self) -> int:
        return len(self.branes)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BraneDiagram({self.render()!r})"


class QuiverData:
    """A linear quiver: gauge ranks v_1..v_l and framing ranks w_1..w_l."""

    __slots__ = ("gauge", "framing")

    def __init__(self, gauge: Sequence[int], framing: Sequence[int]):
        self.gauge = tuple(int(v) for v in gauge)
        self.framing = tuple(int(w) for w in framing)
        if len(self.gauge) != len(self.framing):
            raise ValueError("gauge and framing vectors must have the same length")
        if any(v < 0 for v in self.gauge) or any(w < 0 for w in self.framing):
            raise ValueError("quiver dimensions must be nonnegative")

    @property
    def length(self) -> int:
        return len(self.gauge)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuiverData)
            and (self.gauge, self.framing) == (other.gauge, other.framing)
        )

    def __hash__(self) -> int:
        return hash((self.gauge, self.framing))

    def __repr__(self) -> str:
        return f"QuiverData(gauge={list(self.gauge)}, framing={list(self.framing)})"


class LinkingData:
    """Multisets of linking numbers, one per fivebrane type."""

    __slots__ = ("ns5", "d5")

    def __init__(self, ns5: Iterable[int], d5: Iterable[int]):
        self.ns5 = tuple(sorted(int(x) for x in ns5))
        self.d5 = tuple(sorted(int(x) for x in d5))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinkingData) and (self.ns5, self.d5) == (other.ns5, other.d5)

    def __hash__(self) -> int:
        return hash((self.ns5, self.d5))

    def __str__(self) -> str:
        return f"ns5 {list(self.ns5)}  d5 {list(self.d5)}"

    def __repr__(self) -> str:
        return f"LinkingData(ns5={list(self.ns5)}, d5={list(self.d5)})"

    def to_json(self) -> dict:
        return {"ns5": list(self.ns5), "d5": list(self.d5)}


def quiver_to_diagram(q: QuiverData) -> BraneDiagram:
    """Unfold a linear quiver into its brane word.

    One ``o`` opens each node, followed by w_i copies of ``x`` at constant
    segment dimension v_i, and a final ``o`` closes the diagram back to 0.
    """
    branes: list[str] = []
    dims: list[int] = [0]
    for v, w in zip(q.gauge, q.framing):
        branes.append(NS5)
        dims.append(v)
        branes.extend([D5] * w)
        dims.extend([v] * w)
    branes.append(NS5)
    dims.append(0)
    return BraneDiagram(branes, dims)


def sdual(d: BraneDiagram) -> BraneDiagram:
    """Exchange the two fivebrane types, keeping all segment dimensions."""
    flipped = tuple(D5 if b == NS5 else NS5 for b in d.branes)
    return BraneDiagram(flipped, d.dims)


def hw_move(d: BraneDiagram, i: int) -> BraneDiagram:
    """Swap the adjacent opposite-type pair at positions (i, i+1).

    The middle segment dimension is replaced by d1 + d3 + 1 - d2, the unique
    affine update making the move an involution that preserves linking
    numbers.
    """
    if not 0 <= i < len(d.branes) - 1:
        raise IndexError(f"no adjacent pair at index {i}")
    if d.branes[i] == d.branes[i + 1]:
        raise ValueError(f"branes at {i}, {i + 1} have the same type; move undefined")
    d1, d2, d3 = d.dims[i], d.dims[i + 1], d.dims[i + 2]
    new_mid = d1 + d3 + 1 - d2
    if new_mid < 0:
        raise NonAdmissibleMoveError(
            f"transition at {i} would give segment dimension {new_mid}"
        )
    branes = list(d.branes)
    branes[i], branes[i + 1] = branes[i + 1], branes[i]
    dims = list(d.dims)
    dims[i + 1] = new_mid
    return BraneDiagram(branes, dims)


def admissible_moves(d: BraneDiagram) -> list[int]:
    """Indices of opposite-type pairs whose transition stays nonnegative."""
    out = []
    for i in range(len(d.branes) - 1):
        if d.branes[i] != d.branes[i + 1]:
            if d.dims[i] + d.dims[i + 2] + 1 - d.dims[i + 1] >= 0:
                out.append(i)
    return out


def linking_numbers(d: BraneDiagram) -> LinkingData:
    """Conserved charges: dimension jump plus a count of opposite branes."""
    ns5 = []
    d5 = []
    for p, brane in enumerate(d.branes):
        if brane == NS5:
            ns5.append(
                d.dims[p + 1] - d.dims[p] + sum(1 for b in d.branes[:p] if b == D5)
            )
        else:
            d5.append(
                d.dims[p] - d.dims[p + 1] + sum(1 for b in d.branes[p + 1 :] if b == NS5)
            )
    return LinkingData(ns5, d5)


def concat(d1: BraneDiagram, d2: BraneDiagram) -> BraneDiagram:
    """Concatenate two diagrams along a matching boundary segment."""
    if d1.dims[-1] != d2.dims[0]:
        raise ValueError(
            f"boundary dimensions differ: {d1.dims[-1]} vs {d2.dims[0]}"
        )
    return BraneDiagram(d1.branes + d2.branes, d1.dims + d2.dims[1:])


def expected_space(d: BraneDiagram) -> spaces.SpaceDescriptor:
    """Space reading of the two recognized diagram families.

    A single brane is one building block: ``o`` gives the cotangent of the
    Hom space, ``x`` the slice-type block. A multi-brane all-``o`` chain
    starting at dimension 0 composes to a nilpotent orbit closure.
    """
    if len(d.branes) == 1:
        vi, vj = d.dims
        if d.branes[0] == NS5:
            return spaces.SpaceDescriptor.m_circle(vi, vj)
        return spaces.SpaceDescriptor.m_cross(vi, vj)
    if d.branes and all(b == NS5 for b in d.branes):
        if d.dims[0] != 0:
            raise UnsupportedDiagramError("all-o chains must start at dimension 0")
        orbit = chain_to_orbit(d.dims)
        return spaces.SpaceDescriptor.orbit_closure(orbit.n, orbit.jordan_type)
    raise UnsupportedDiagramError(
        "only single building blocks and all-o chains have a space reading"
    )
