"""Exact determinants of matrices with rational or polynomial entries.

Two independent paths exist for polynomial matrices: evaluate/interpolate
(the default) and fraction-free elimination over the polynomial ring; the
test suite asserts they agree.  Scalar determinants clear denominators and
run integer Bareiss elimination, using gmpy2 big integers when available.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .poly import Poly, interpolation_nodes, lagrange_interpolate

try:  # pragma: no cover - exercised implicitly when gmpy2 is installed
    from gmpy2 import mpz

    def _to_int(x):
        return mpz(x)

except ImportError:  # pragma: no cover
    def _to_int(x):
        return int(x)


class PolyMatrix:
    """Square matrix of Poly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Poly]]):
        rows = tuple(tuple(_coerce_poly(e) for e in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("polynomial matrix must be square")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def evaluate(self, point: Fraction) -> list[list[Fraction]]:
        return [[e(point) for e in row] for row in self.rows]

    def det(self) -> Poly:
        return det_interpolated(self)

    def __repr__(self):
        return f"PolyMatrix(size={self.size})"


def _coerce_poly(entry) -> Poly:
    if isinstance(entry, Poly):
        return entry
    if isinstance(entry, (int, Fraction)):
        return Poly.constant(entry)
    raise TypeError(f"matrix entries must be Poly or rational, got {type(entry).__name__}")


def det_interpolated(matrix: PolyMatrix) -> Poly:
    """det via evaluation at small integer nodes and exact interpolation.

    The degree bound is the sum over rows of each row's maximal entry
    degree, which dominates the degree of any term in the Leibniz expansion.
    """
    n = matrix.size
    if n == 0:
        return Poly.one()
    bound = 0
    for row in matrix.rows:
        degs = [e.degree for e in row if not e.is_zero()]
        if not degs:
            return Poly.zero()
        bound += max(max(degs), 0)
    nodes = interpolation_nodes(bound + 1)
    points = [(t, det_rational(matrix.evaluate(t))) for t in nodes]
    return lagrange_interpolate(points)


def det_fraction_free(matrix: PolyMatrix) -> Poly:
    """Bareiss elimination directly over Q[x]; divisions are exact."""
    n = matrix.size
    if n == 0:
        return Poly.one()
    m = [list(row) for row in matrix.rows]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = Poly.zero()
        prev = m[k][k]
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]


def det_rational(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix.

    Rows are scaled to integers, eliminated fraction-free over the integers
    (Bareiss), and the row scalings divided back out.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    scale = 1
    m = []
    for row in rows:
        row = [Fraction(e) for e in row]
        denom = lcm(*(e.denominator for e in row)) if row else 1
        scale *= denom
        m.append([_to_int(e.numerator * (denom // e.denominator)) for e in row])
    det = _det_int_bareiss(m)
    return Fraction(int(det), scale)


def _det_int_bareiss(m: list[list]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    sign = 1
    prev = _to_int(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            if head == 0:
                # still need the pivot rescaling of untouched entries
                for j in range(k + 1, n):
                    row_i[j] = pivot * row_i[j] // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
