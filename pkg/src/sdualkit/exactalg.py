"""Exact integer linear algebra and sparse multivariate polynomials.

Everything here runs on Python's arbitrary-precision integers; no floating
point is used anywhere, so results are bit-stable and safe to freeze into
golden tests.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class RankMismatchError(ValueError):
    """Operands built over different variable ranks were mixed."""


def _extgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _unit_exponent(rank: int, index: int) -> tuple[int, ...]:
    return tuple(1 if j == index else 0 for j in range(rank))


class LinearForm:
    """Integer linear form on Z^r; pairs with cocharacters by the dot product."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = tuple(int(c) for c in coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def pairing(self, cochar: Sequence[int]) -> int:
        if len(cochar) != len(self.coeffs):
            raise RankMismatchError(
                f"form of rank {len(self.coeffs)} paired with vector of length {len(cochar)}"
            )
        return sum(c * x for c, x in zip(self.coeffs, cochar))

    def as_polynomial(self) -> "Polynomial":
        r = len(self.coeffs)
        return Polynomial(r, {_unit_exponent(r, i): c for i, c in enumerate(self.coeffs) if c})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("LinearForm", self.coeffs))

    def __repr__(self) -> str:
        return f"LinearForm({list(self.coeffs)!r})"


class Polynomial:
    """Sparse polynomial in ``rank`` variables with integer coefficients.

    Terms map dense exponent tuples (length = rank, entries >= 0) to nonzero
    integer coefficients; zero coefficients are never stored.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = int(rank)
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(int(x) for x in exps)
                if len(e) != self.rank:
                    raise RankMismatchError(f"exponent vector {e} has wrong length for rank {self.rank}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e}")
                c = int(coeff)
                if c:
                    clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, rank: int, value: int) -> "Polynomial":
        return cls(rank, {(0,) * rank: int(value)})

    @classmethod
    def zero(cls, rank: int) -> "Polynomial":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "Polynomial":
        return cls.constant(rank, 1)

    @classmethod
    def variable(cls, rank: int, index: int) -> "Polynomial":
        if not 0 <= index < rank:
            raise ValueError(f"variable index {index} out of range for rank {rank}")
        return cls(rank, {_unit_exponent(rank, index): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.rank != self.rank:
                raise RankMismatchError(f"rank {other.rank} vs {self.rank}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.rank, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.rank, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.rank, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.rank)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == Polynomial.constant(self.rank, other)
        return (
            isinstance(other, Polynomial)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.terms.items())))

    def total_degree(self):
        """Maximal total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self):
        """Common total degree of all terms, or None if inhomogeneous or zero."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def as_unit_monomial(self):
        """Decompose as c * w^e with c a nonzero integer, or None.

        This is the only factorization the toolkit ever needs: it feeds the
        classification of rank-one relations up to a scalar.
        """
        if len(self.terms) != 1:
            return None
        ((exps, coeff),) = self.terms.items()
        return coeff, exps

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted by descending total degree, then descending exponents."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def format(self, varnames: Sequence[str] | None = None) -> str:
        if varnames is None:
            varnames = ["w"] if self.rank == 1 else [f"w{i + 1}" for i in range(self.rank)]
        if len(varnames) != self.rank:
            raise RankMismatchError("wrong number of variable names")
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(varnames, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial(rank={self.rank}, {self.format()!r})"


def eval_product(factors: Sequence[tuple[LinearForm, int]], rank: int | None = None) -> Polynomial:
    """Expand prod_j a_j(w)^{e_j} exactly.

    ``rank`` is only needed to disambiguate the empty product.
    """
    factors = list(factors)
    if rank is None:
        if not factors:
            raise ValueError("rank is required for an empty product")
        rank = factors[0][0].rank
    result = Polynomial.one(rank)
    for form, exponent in factors:
        if form.rank != rank:
            raise RankMismatchError(f"form rank {form.rank} != {rank}")
        if exponent < 0:
            raise ValueError("exponents must be nonnegative")
        if exponent:
            result = result * (form.as_polynomial() ** exponent)
    return result


class IntegerMatrix:
    """Rectangular integer matrix; shape is explicit so empty matrices keep it."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        self.rows = int(rows)
        self.cols = int(cols)
        ent = tuple(tuple(int(x) for x in row) for row in entries)
        if len(ent) != self.rows or any(len(row) != self.cols for row in ent):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        self.entries = ent

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            cols = len(rows[0]) if cols is None else cols
        elif cols is None:
            raise ValueError("column count required for a matrix with no rows")
        return cls(len(rows), cols, rows)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise RankMismatchError(f"vector length {len(vector)} != cols {self.cols}")
        return tuple(sum(r[j] * vector[j] for j in range(self.cols)) for r in self.entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntegerMatrix)
            and (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, {[list(r) for r in self.entries]!r})"


def _column_echelon(m: IntegerMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """Unimodular column reduction; returns (rank, raw kernel basis)."""
    rows, cols = m.rows, m.cols
    acols = [[m.entries[i][j] for i in range(rows)] for j in range(cols)]
    ucols = [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    fixed = 0
    for i in range(rows):
        pivot = None
        for j in range(fixed, cols):
            if not acols[j][i]:
                continue
            if pivot is None:
                pivot = j
                continue
            a, b = acols[pivot][i], acols[j][i]
            g, s, t = _extgcd(a, b)
            pa, pb = a // g, b // g
            new_pa = [s * acols[pivot][k] + t * acols[j][k] for k in range(rows)]
            new_ja = [-pb * acols[pivot][k] + pa * acols[j][k] for k in range(rows)]
            new_pu = [s * ucols[pivot][k] + t * ucols[j][k] for k in range(cols)]
            new_ju = [-pb * ucols[pivot][k] + pa * ucols[j][k] for k in range(cols)]
            acols[pivot], acols[j] = new_pa, new_ja
            ucols[pivot], ucols[j] = new_pu, new_ju
        if pivot is not None:
            acols[fixed], acols[pivot] = acols[pivot], acols[fixed]
            ucols[fixed], ucols[pivot] = ucols[pivot], ucols[fixed]
            fixed += 1
    kernel = [tuple(ucols[j]) for j in range(fixed, cols)]
    return fixed, kernel


def _hermite_rows(vectors: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Canonical (Hermite) basis of the row lattice spanned by ``vectors``.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot), which makes the output unique for a given lattice.
    """
    work = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    for col in range(ncols):
        sel = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not sel:
            work = rest
            continue
        pivot = sel[0]
        for r in sel[1:]:
            a, b = pivot[col], r[col]
            g, s, t = _extgcd(a, b)
            pa, pb = a // g, b // g
            combined = [s * pivot[k] + t * r[k] for k in range(ncols)]
            cleared = [-pb * pivot[k] + pa * r[k] for k in range(ncols)]
            pivot = combined
            if any(cleared):
                rest.append(cleared)
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        for prev in basis:
            q = prev[col] // pivot[col]
            if q:
                for k in range(ncols):
                    prev[k] -= q * pivot[k]
        basis.append(pivot)
        work = rest
    return [tuple(r) for r in basis]


def integer_kernel(m: IntegerMatrix) -> list[tuple[int, ...]]:
    """Canonical basis of the full integer kernel lattice {v : m v = 0}.

    The kernel of an integer matrix is saturated, so the Hermite basis rows
    are automatically primitive and generate the whole lattice, not a
    finite-index sublattice.
    """
    _, raw = _column_echelon(m)
    return _hermite_rows(raw, m.cols)


def integer_rank(m: IntegerMatrix) -> int:
    """Rank of an integer matrix, computed exactly."""
    rank, _ = _column_echelon(m)
    return rank
