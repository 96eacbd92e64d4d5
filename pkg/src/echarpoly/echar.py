"""E-characteristic polynomial construction, by every supported route.

Routes
------
sylvester-direct
    Even order: the resultant of the two eigen-equations themselves,
    (Ax^{m-1})_i - lambda (x^T x)^{(m-2)/2} x_i.  Odd order: the resultant
    of the product form G1 = (Ax^{m-1})_1 (Ax^{m-1})_2 - lambda^2
    (x^T x)^{m-2} x1 x2 against the cross form, divided exactly by b_m*c_1.
M1-det / M2-det
    The compact (2m-2)- and (3m-4)-square determinant formulas.  The even
    one is only proven for regular tensors and is gated on regularity; the
    odd one is obtained from the big Sylvester matrix by exact
    determinant-preserving eliminations and holds unconditionally.
macaulay
    The resultant of the homogenized system {Ax^{m-1} - lambda x0^{m-2} x,
    x^T x - x0^2} by evaluate/interpolate over lambda.  For odd order this
    *is* the definition; for even order the homogenized resultant is a
    perfect square up to sign and the square root is extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .eigen import is_regular
from .poly import Poly, interpolation_nodes, lagrange_interpolate, poly_sqrt
from .polymat import PolyMatrix, det_interpolated
from .resultant import (
    BinaryForm,
    HomogeneousSystem,
    UnsupportedSizeError,
    macaulay_resultant,
    sylvester_matrix,
    sylvester_resultant,
)
from .tensor import (
    DimensionError,
    Hypermatrix,
    SliceCoeffs,
    binary_slices,
    direction_form_coeffs,
    pq_sums,
)

ROUTE_SYLVESTER = "sylvester-direct"
ROUTE_M1 = "M1-det"
ROUTE_M2 = "M2-det"
ROUTE_MACAULAY = "macaulay"


class IrregularTensorError(ValueError):
    """The determinant shortcut was requested for an irregular tensor."""


def h_bound(m: int, n: int) -> int:
    """Generic top power ((m-1)^n - 1) / (m-2); an exact integer for m >= 3."""
    if m < 3:
        raise ValueError(f"the degree bound needs order >= 3, got {m}")
    num = (m - 1) ** n - 1
    if num % (m - 2):
        raise ArithmeticError("degree bound is not an integer")  # impossible: geometric sum
    return num // (m - 2)


def _generic_top(m: int, n: int) -> int:
    # order 2 is the classical matrix case: degree n in lambda
    return n if m == 2 else h_bound(m, n)


@dataclass
class EcharResult:
    """A characteristic polynomial plus the closed-form predictions.

    ``leading_power`` is the power of lambda carrying the generically
    nonzero top coefficient: h for even order, 2h for odd.
    """

    psi: Poly
    route: str
    h_bound: int
    a0_predicted: Fraction
    leading_predicted: Optional[Fraction]
    leading_power: int

    @property
    def identically_zero(self) -> bool:
        return self.psi.is_zero()

    def a0_actual(self) -> Fraction:
        return self.psi.coefficient(0)

    def leading_actual(self) -> Fraction:
        return self.psi.coefficient(self.leading_power)


def _result(A: Hypermatrix, psi: Poly, route: str) -> EcharResult:
    m, n = A.order, A.dim
    top = _generic_top(m, n)
    power = top if m % 2 == 0 else 2 * top
    if not psi.is_zero() and psi.degree > power:
        raise ArithmeticError(
            f"degree {psi.degree} exceeds the bound {power} (route {route})"
        )
    return EcharResult(
        psi=psi,
        route=route,
        h_bound=top,
        a0_predicted=a0_predicted(A),
        leading_predicted=leading_predicted(A) if n == 2 else None,
        leading_power=power,
    )


# -- slice-form builders ---------------------------------------------------------


def _even_eigen_forms(slices: SliceCoeffs) -> tuple[BinaryForm, BinaryForm]:
    """The two degree-(m-1) forms (Ax^{m-1})_i - lambda (x1^2+x2^2)^{(m-2)/2} x_i."""
    m = slices.order
    k = (m - 2) // 2
    lam = Poly.x()
    f1 = []
    f2 = []
    for j in range(m):
        c1 = Poly.constant(slices.b[j])
        c2 = Poly.constant(slices.c[j])
        if j % 2 == 0:
            c1 = c1 - lam.scale(comb(k, j // 2))
        else:
            c2 = c2 - lam.scale(comb(k, (j - 1) // 2))
        f1.append(c1)
        f2.append(c2)
    return BinaryForm(m - 1, f1), BinaryForm(m - 1, f2)


def _cross_form(slices: SliceCoeffs) -> BinaryForm:
    return BinaryForm.from_scalars(direction_form_coeffs(slices))


def _odd_product_form(slices: SliceCoeffs) -> BinaryForm:
    """(Ax^{m-1})_1 (Ax^{m-1})_2 - lambda^2 (x1^2+x2^2)^{m-2} x1 x2, degree 2m-2."""
    m = slices.order
    lam2 = Poly.monomial(2)
    coeffs = []
    for t in range(2 * m - 1):
        c = Poly.constant(slices.e[t])
        if t % 2 == 1:
            c = c - lam2.scale(comb(m - 2, (t - 1) // 2))
        coeffs.append(c)
    return BinaryForm(2 * m - 2, coeffs)


# -- direct Sylvester routes -------------------------------------------------------


def echar_even_n2(A: Hypermatrix) -> EcharResult:
    """Resultant of the eigen-equations; valid for every even-order tensor."""
    _require(A, parity=0)
    f1, f2 = _even_eigen_forms(binary_slices(A))
    psi = sylvester_resultant(f1, f2)
    return _result(A, psi, ROUTE_SYLVESTER)


def echar_odd_n2(A: Hypermatrix) -> EcharResult:
    """Resultant of the product/cross pair divided by b_m*c_1, else Macaulay.

    The big resultant equals b_m*c_1 times the characteristic polynomial,
    so the division is exact whenever that scalar is nonzero; degenerate
    tensors fall back to the homogenized Macaulay definition.
    """
    _require(A, parity=1)
    slices = binary_slices(A)
    m = A.order
    pivot = slices.b[m - 1] * slices.c[0]
    if pivot == 0:
        return echar_macaulay(A)
    big = sylvester_resultant(_odd_product_form(slices), _cross_form(slices))
    psi = big.scale(Fraction(1) / pivot)
    return _result(A, psi, ROUTE_SYLVESTER)


# -- compact determinant formulas ----------------------------------------------------


def det_matrix_even(A: Hypermatrix) -> PolyMatrix:
    """The (2m-2)-square determinant formula matrix for even order.

    Rows 1..m-1 shift the first eigen-form's coefficients; row m holds the
    second slice sequence (c1, c2-bar, ...) ending in the last column; the
    remaining rows shift the cross form's coefficients.
    """
    _require(A, parity=0)
    m = A.order
    slices = binary_slices(A)
    f1, f2 = _even_eigen_forms(slices)
    cross = direction_form_coeffs(slices)
    size = 2 * m - 2
    rows = []
    for shift in range(m - 1):
        row = [Poly.zero()] * size
        for j, c in enumerate(f1.coeffs):
            row[shift + j] = c
        rows.append(row)
    row = [Poly.zero()] * size
    for j, c in enumerate(f2.coeffs):
        row[m - 2 + j] = c
    rows.append(row)
    for shift in range(m - 2):
        row = [Poly.zero()] * size
        for j, c in enumerate(cross):
            row[shift + j] = Poly.constant(c)
        rows.append(row)
    return PolyMatrix(rows)


def echar_det_even(A: Hypermatrix) -> EcharResult:
    """Compact even-order determinant; proven only for regular tensors."""
    report = is_regular(A)
    if not report.regular:
        raise IrregularTensorError(
            "the compact even-order determinant formula requires a regular tensor"
        )
    psi = det_interpolated(det_matrix_even(A))
    return _result(A, psi, ROUTE_M1)


def det_matrix_odd(A: Hypermatrix) -> PolyMatrix:
    """The (3m-4)-square determinant formula matrix for odd order.

    Built from the big Sylvester matrix of the product/cross pair by the
    exact eliminations that cancel e_1 = b_1*c_1 and e_{2m-1} = b_m*c_m,
    after which the first/last columns and the pivot rows are removed.
    The determinant equals the characteristic polynomial identically.
    """
    _require(A, parity=1)
    m = A.order
    slices = binary_slices(A)
    big = sylvester_matrix(_odd_product_form(slices), _cross_form(slices))
    rows = [list(r) for r in big.rows]
    n = len(rows)  # 3m - 2
    b1 = Fraction(slices.b[0])
    cm = Fraction(slices.c[m - 1])
    rows[0] = [rows[0][j] + rows[m][j].scale(b1) for j in range(n)]
    rows[m - 1] = [rows[m - 1][j] - rows[n - 1][j].scale(cm) for j in range(n)]
    keep_rows = [i for i in range(n) if i not in (m, n - 1)]
    keep_cols = [j for j in range(n) if j not in (0, n - 1)]
    return PolyMatrix([[rows[i][j] for j in keep_cols] for i in keep_rows])


def echar_det_odd(A: Hypermatrix) -> EcharResult:
    psi = det_interpolated(det_matrix_odd(A))
    return _result(A, psi, ROUTE_M2)


# -- homogenized Macaulay route --------------------------------------------------------


def _homogenized_system(A: Hypermatrix, lam: Fraction) -> HomogeneousSystem:
    """{Ax^{m-1} - lam x0^{m-2} x, x^T x - x0^2} in variables (x1..xn, x0)."""
    n, m = A.dim, A.order
    k = n + 1
    forms = []
    degrees = []
    for i in range(n):
        form: dict = {}
        for idx, value in A.entries.items():
            if idx[0] != i:
                continue
            expo = [0] * k
            for pos in idx[1:]:
                expo[pos] += 1
            key = tuple(expo)
            form[key] = form.get(key, Fraction(0)) + value
        expo = [0] * k
        expo[i] += 1
        expo[n] += m - 2
        key = tuple(expo)
        form[key] = form.get(key, Fraction(0)) - lam
        forms.append(form)
        degrees.append(m - 1)
    quadric = {}
    for j in range(n):
        expo = [0] * k
        expo[j] = 2
        quadric[tuple(expo)] = Fraction(1)
    expo = [0] * k
    expo[n] = 2
    quadric[tuple(expo)] = Fraction(-1)
    forms.append(quadric)
    degrees.append(2)
    return HomogeneousSystem(forms, degrees)


def echar_macaulay(A: Hypermatrix) -> EcharResult:
    """Characteristic polynomial through the homogenized Macaulay resultant.

    The resultant is interpolated over the degree bound 2n(m-1)^(n-1).  For
    even order it equals (up to a universal sign) the square of the direct
    definition; the exact polynomial square root is taken and its sign is
    pinned by the constant-term prediction, then the top-coefficient
    prediction, then (dimension 2 only) the direct route.
    """
    n, m = A.dim, A.order
    if n < 2:
        raise UnsupportedSizeError("the homogenized route needs dimension >= 2")
    bound = 2 * n * (m - 1) ** (n - 1)
    nodes = interpolation_nodes(bound + 1)
    points = [(t, macaulay_resultant(_homogenized_system(A, t))) for t in nodes]
    raw = lagrange_interpolate(points)
    if m % 2 == 1:
        return _result(A, raw, ROUTE_MACAULAY)
    psi = _even_square_root(A, raw)
    return _result(A, psi, ROUTE_MACAULAY)


def _even_square_root(A: Hypermatrix, raw: Poly) -> Poly:
    if raw.is_zero():
        return raw
    root = poly_sqrt(raw)
    if root is None:
        root = poly_sqrt(-raw)
    if root is None:
        raise ArithmeticError("homogenized resultant of an even-order tensor is not a square")
    # poly_sqrt returns the branch with positive top coefficient; pin the sign
    a0 = a0_predicted(A)
    if a0 != 0:
        return root if root.coefficient(0) == a0 else -root
    if A.dim == 2:
        lead = leading_predicted(A)
        if lead != 0:
            top = _generic_top(A.order, 2)
            return root if root.coefficient(top) == lead else -root
        direct = echar_even_n2(A).psi
        if direct.is_zero():
            return direct
        power = min(j for j, c in enumerate(direct.coeffs) if c != 0)
        return root if root.coefficient(power) == direct.coefficient(power) else -root
    raise ArithmeticError("cannot pin the square-root sign for this tensor")


# -- closed-form predictions ------------------------------------------------------------


def a0_predicted(A: Hypermatrix) -> Fraction:
    """Resultant of the bare map Ax^{m-1} (its square for odd order)."""
    n, m = A.dim, A.order
    if n == 2:
        slices = binary_slices(A)
        f1 = BinaryForm.from_scalars(slices.b)
        f2 = BinaryForm.from_scalars(slices.c)
        value = sylvester_resultant(f1, f2).coefficient(0)
    elif 3 <= n <= 4:
        forms = []
        for i in range(n):
            form: dict = {}
            for idx, entry in A.entries.items():
                if idx[0] != i:
                    continue
                expo = [0] * n
                for pos in idx[1:]:
                    expo[pos] += 1
                key = tuple(expo)
                form[key] = form.get(key, Fraction(0)) + entry
            forms.append(form)
        value = macaulay_resultant(HomogeneousSystem(forms, [m - 1] * n))
    else:
        raise UnsupportedSizeError("constant-term prediction supports dimensions 2..4")
    return value if m % 2 == 0 else value * value


def leading_predicted(A: Hypermatrix) -> Fraction:
    """Top generic coefficient from the signed slice sums (dimension 2)."""
    if A.dim != 2:
        raise DimensionError("the top-coefficient formula is for dimension 2")
    p, q = pq_sums(binary_slices(A))
    s = p * p + q * q
    if A.order % 2 == 0:
        return s ** ((A.order - 2) // 2)
    return -(s ** (A.order - 2))


# -- dispatch ------------------------------------------------------------------------


def echar(A: Hypermatrix, route: str = "auto") -> EcharResult:
    """Compute the characteristic polynomial by the requested route."""
    n, m = A.dim, A.order
    if route == "auto":
        if n == 2:
            return echar_even_n2(A) if m % 2 == 0 else echar_odd_n2(A)
        if n == 3:
            return echar_macaulay(A)
        raise UnsupportedSizeError(f"no route for dimension {n}")
    if route == "sylvester":
        _require(A)
        if m % 2 == 0:
            return echar_even_n2(A)
        slices = binary_slices(A)
        if slices.b[m - 1] * slices.c[0] == 0:
            raise UnsupportedSizeError(
                "the direct odd route needs b_m * c_1 != 0; use the macaulay route"
            )
        return echar_odd_n2(A)
    if route == "det":
        _require(A)
        return echar_det_even(A) if m % 2 == 0 else echar_det_odd(A)
    if route == "macaulay":
        if n > 3:
            raise UnsupportedSizeError("macaulay route supports dimensions 2 and 3")
        return echar_macaulay(A)
    raise ValueError(f"unknown route {route!r}")


def _require(A: Hypermatrix, parity: int | None = None):
    if A.dim != 2:
        raise DimensionError("this route requires dimension 2")
    if parity is not None and A.order % 2 != parity:
        kind = "even" if parity == 0 else "odd"
        raise DimensionError(f"this route requires {kind} order, got {A.order}")
