"""Hypermatrix storage, the multilinear map, frame changes and 2-D slice data.

A hypermatrix is stored sparsely: index tuples (0-based internally) mapping
to nonzero rationals.  Public constructors accept the 1-based convention
used in the file format; the parser is the only boundary where the shift
happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence



class DimensionError(ValueError):
    """Input has a dimension/order the operation does not accept."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"entries must be rational, got {type(value).__name__}")


class Hypermatrix:
    """Order-m, dimension-n array of exact rationals (sparse)."""

    __slots__ = ("order", "dim", "entries")

    def __init__(self, order: int, dim: int, entries: Mapping[tuple, object] | None = None):
        if order < 2:
            raise DimensionError(f"order must be >= 2, got {order}")
        if dim < 1:
            raise DimensionError(f"dimension must be >= 1, got {dim}")
        self.order = order
        self.dim = dim
        clean: dict[tuple[int, ...], Fraction] = {}
        for idx, value in (entries or {}).items():
            idx = tuple(idx)
            if len(idx) != order or any(not 0 <= i < dim for i in idx):
                raise DimensionError(f"bad index tuple {idx} for order {order}, dim {dim}")
            v = _frac(value)
            if v != 0:
                clean[idx] = v
        self.entries = clean

    @classmethod
    def from_one_based(cls, order: int, dim: int, entries: Mapping[tuple, object]) -> "Hypermatrix":
        shifted = {tuple(i - 1 for i in idx): v for idx, v in entries.items()}
        return cls(order, dim, shifted)

    @classmethod
    def zero(cls, order: int, dim: int) -> "Hypermatrix":
        return cls(order, dim)

    @classmethod
    def diagonal(cls, order: int, dim: int, values: Sequence | None = None) -> "Hypermatrix":
        vals = values if values is not None else [1] * dim
        return cls(order, dim, {(j,) * order: v for j, v in enumerate(vals)})

    def __getitem__(self, idx: tuple) -> Fraction:
        return self.entries.get(tuple(idx), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return (self.order, self.dim, self.entries) == (other.order, other.dim, other.entries)

    def scale(self, factor) -> "Hypermatrix":
        factor = _frac(factor)
        return Hypermatrix(
            self.order, self.dim, {idx: v * factor for idx, v in self.entries.items()}
        )

    def __repr__(self):
        return f"Hypermatrix(order={self.order}, dim={self.dim}, nnz={len(self.entries)})"


def eval_map(A: Hypermatrix, x: Sequence) -> list:
    """The vector Ax^(m-1): component i sums a[i,i2,..,im] * x[i2] * ... * x[im].

    Works for any exact scalar type closed under + and * (Fraction,
    ComplexRational); the result components have the promoted type.
    """
    if len(x) != A.dim:
        raise DimensionError(f"vector length {len(x)} != dimension {A.dim}")
    out = [Fraction(0)] * A.dim
    for idx, value in A.entries.items():
        term = value
        for k in idx[1:]:
            term = term * x[k]
        out[idx[0]] = out[idx[0]] + term
    return out


class OrthogonalMatrix:
    """Exactly orthogonal rational matrix: C C^T = I with no tolerance."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(_frac(e) for e in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionError("orthogonal matrix must be square")
        for i in range(n):
            for j in range(i, n):
                dot = sum(rows[i][k] * rows[j][k] for k in range(n))
                if dot != (1 if i == j else 0):
                    raise ValueError("matrix is not exactly orthogonal")
        self.dim = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "OrthogonalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal_signs(cls, signs: Sequence[int]) -> "OrthogonalMatrix":
        return cls([[s if i == j else 0 for j, s in enumerate(signs)] for i in range(len(signs))])

    @classmethod
    def rotation_3_4_5(cls) -> "OrthogonalMatrix":
        """The exact 2-D rotation with cosine 3/5 and sine 4/5."""
        return cls([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])

    def compose(self, other: "OrthogonalMatrix") -> "OrthogonalMatrix":
        if self.dim != other.dim:
            raise DimensionError("size mismatch in composition")
        n = self.dim
        return OrthogonalMatrix(
            [
                [sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        )

    def apply(self, x: Sequence) -> list:
        if len(x) != self.dim:
            raise DimensionError("vector length mismatch")
        return [sum(row[j] * x[j] for j in range(self.dim)) for row in self.rows]

    def __repr__(self):
        return f"OrthogonalMatrix(dim={self.dim})"


def rotate(A: Hypermatrix, C: OrthogonalMatrix) -> Hypermatrix:
    """Frame change: the new entry at (i1..im) contracts C against every mode.

    Computed one mode at a time, so the cost is m * n^(m+1) multiplications
    instead of n^(2m).
    """
    if C.dim != A.dim:
        raise DimensionError(f"matrix dimension {C.dim} != tensor dimension {A.dim}")
    n = A.dim
    current = dict(A.entries)
    for axis in range(A.order):
        updated: dict[tuple[int, ...], Fraction] = {}
        for idx, value in current.items():
            j = idx[axis]
            for i in range(n):
                coeff = C.rows[i][j]
                if coeff == 0:
                    continue
                new_idx = idx[:axis] + (i,) + idx[axis + 1 :]
                updated[new_idx] = updated.get(new_idx, Fraction(0)) + coeff * value
        current = {idx: v for idx, v in updated.items() if v != 0}
    return Hypermatrix(A.order, A.dim, current)


@dataclass(frozen=True)
class SliceCoeffs:
    """Grouped entry sums of a dimension-2 tensor.

    b[j] (paper-style 1-based b_{j+1} here 0-based) sums first-slice entries
    whose trailing indices contain exactly j twos; c does the same for the
    second slice.  d and e are the derived difference and convolution
    sequences used by the determinant formulas.
    """

    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    d: tuple[Fraction, ...]
    e: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.b)


def binary_slices(A: Hypermatrix) -> SliceCoeffs:
    """Compute (b, c, d, e) for a dimension-2 tensor of any order."""
    if A.dim != 2:
        raise DimensionError("slice coefficients are defined for dimension 2 only")
    m = A.order
    b = [Fraction(0)] * m
    c = [Fraction(0)] * m
    for idx, value in A.entries.items():
        twos = sum(idx[1:])
        if idx[0] == 0:
            b[twos] += value
        else:
            c[twos] += value
    d = [b[j] - c[j + 1] for j in range(m - 1)] + [b[m - 1]]
    e = [Fraction(0)] * (2 * m - 1)
    for i in range(m):
        if b[i] == 0:
            continue
        for j in range(m):
            e[i + j] += b[i] * c[j]
    return SliceCoeffs(tuple(b), tuple(c), tuple(d), tuple(e))


#: Sign cycles of the two alternating series; index by (term - 1) % 4.
_P_SIGNS = (1, -1, -1, 1)
_Q_SIGNS = (1, 1, -1, -1)


def pq_sums(slices: SliceCoeffs) -> tuple[Fraction, Fraction]:
    """First-m partial sums of the two sign-cycled series over b and c.

    The first series alternates odd b's and even c's with sign cycle
    +,-,-,+; the second odd c's and even b's with cycle +,+,-,-.  Their sum
    of squares controls the top coefficient of the characteristic
    polynomial.
    """
    m = slices.order
    p = Fraction(0)
    q = Fraction(0)
    for k in range(1, m + 1):
        sp = _P_SIGNS[(k - 1) % 4]
        sq = _Q_SIGNS[(k - 1) % 4]
        if k % 2 == 1:
            p += sp * slices.b[k - 1]
            q += sq * slices.c[k - 1]
        else:
            p += sp * slices.c[k - 1]
            q += sq * slices.b[k - 1]
    return p, q


def direction_form_coeffs(slices: SliceCoeffs) -> tuple[Fraction, ...]:
    """Coefficients (ascending second-variable power) of x2*(Ax^{m-1})_1 - x1*(Ax^{m-1})_2.

    This degree-m binary form vanishes exactly on eigenvector directions.
    """
    m = slices.order
    return (-slices.c[0],) + tuple(slices.d[: m - 1]) + (slices.b[m - 1],)


def all_indices(order: int, dim: int):
    """All index tuples, for dense iteration in tests and fuzzing."""
    return product(range(dim), repeat=order)
