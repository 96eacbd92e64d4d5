"""Eigenpair equivalence classes for dimension 2, and regularity decisions.

Eigenvector directions of a 2-D tensor are the projective roots of the
degree-m cross form x2*(Ax^{m-1})_1 - x1*(Ax^{m-1})_2.  Directions on the
isotropic cone (proportional to (1, i) or (1, -i)) cannot be normalized and
form "deficit" classes; everything else is scaled to x^T x = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import cmath

import numpy as np

from .poly import Poly, squarefree_decomposition
from .rational import ComplexRational, I_UNIT
from .resultant import BinaryForm, HomogeneousSystem, macaulay_resultant, sylvester_resultant
from .tensor import (
    DimensionError,
    Hypermatrix,
    SliceCoeffs,
    binary_slices,
    direction_form_coeffs,
    eval_map,
    pq_sums,
)

NORMALIZED = "normalized"
DEFICIT = "deficit"


@dataclass
class Direction:
    """A projective eigenvector direction with its multiplicity."""

    vector: tuple[complex, complex]
    multiplicity: int
    isotropic: bool  # x1^2 + x2^2 == 0, decided exactly
    exact: Optional[tuple[ComplexRational, ComplexRational]] = None


@dataclass
class DirectionsResult:
    infinite: bool
    directions: list[Direction]


@dataclass
class Eigenpair:
    """One eigenpair equivalence class.

    For odd order a normalized class contains (lambda, x) and (-lambda, -x);
    the representative stored has Re(lambda) > 0 (ties broken by Im >= 0)
    and ``sign_pair`` is set.  Deficit classes are reported at the fixed
    representative x = (1, +-i), whose first component is 1.
    """

    eigenvalue: complex
    vector: tuple[complex, complex]
    kind: str
    multiplicity: int = 1
    sign_pair: bool = False
    exact_direction: Optional[tuple[ComplexRational, ComplexRational]] = None
    exact_eigenvalue: Optional[ComplexRational] = None


@dataclass
class EigenReport:
    infinite: bool
    pairs: list[Eigenpair]


@dataclass
class RegularityReport:
    regular: bool
    witness: Optional[tuple] = None  # ComplexRational entries when exact
    deltas: Optional[tuple[Fraction, ...]] = None


# -- directions -----------------------------------------------------------------


def eigen_directions_n2(A: Hypermatrix) -> DirectionsResult:
    """Projective roots of the cross form, or the infinitely-many signal.

    The form is identically zero exactly when Ax^{m-1} is a scalar multiple
    of x everywhere, which makes every direction an eigenvector.
    """
    if A.dim != 2:
        raise DimensionError("direction enumeration requires dimension 2")
    slices = binary_slices(A)
    coeffs = list(direction_form_coeffs(slices))
    if all(c == 0 for c in coeffs):
        return DirectionsResult(infinite=True, directions=[])
    m = A.order
    directions: list[Direction] = []

    # q(t) = form(1, t); trailing zeros of the coefficient list are roots at
    # (0, 1) of the homogeneous form, leading zeros are roots at (1, 0).
    top = max(j for j, c in enumerate(coeffs) if c != 0)
    low = min(j for j, c in enumerate(coeffs) if c != 0)
    if top < m:
        directions.append(
            Direction(
                vector=(0j, 1 + 0j),
                multiplicity=m - top,
                isotropic=False,
                exact=(ComplexRational(Fraction(0)), ComplexRational(Fraction(1))),
            )
        )
    if low > 0:
        directions.append(
            Direction(
                vector=(1 + 0j, 0j),
                multiplicity=low,
                isotropic=False,
                exact=(ComplexRational(Fraction(1)), ComplexRational(Fraction(0))),
            )
        )
    q = Poly(coeffs[low : top + 1])

    # isotropic directions: exact repeated division by t^2 + 1
    circle = Poly([1, 0, 1])
    iso_mult = 0
    while True:
        quot, rem = q.divmod(circle)
        if rem.is_zero() and not quot.is_zero():
            q = quot
            iso_mult += 1
        else:
            break
    if iso_mult:
        for sign in (1, -1):
            directions.append(
                Direction(
                    vector=(1 + 0j, complex(0, sign)),
                    multiplicity=iso_mult,
                    isotropic=True,
                    exact=(
                        ComplexRational(Fraction(1)),
                        ComplexRational(Fraction(0), Fraction(sign)),
                    ),
                )
            )

    if q.degree >= 1:
        for factor, mult in squarefree_decomposition(q):
            if factor.degree == 1:
                root_exact = -factor.coefficient(0) / factor.coefficient(1)
                directions.append(
                    Direction(
                        vector=(1 + 0j, complex(float(root_exact), 0.0)),
                        multiplicity=mult,
                        isotropic=False,
                        exact=(
                            ComplexRational(Fraction(1)),
                            ComplexRational(root_exact),
                        ),
                    )
                )
                continue
            for root in np.roots([float(c) for c in reversed(factor.coeffs)]):
                directions.append(
                    Direction(
                        vector=(1 + 0j, complex(root)),
                        multiplicity=mult,
                        isotropic=False,
                    )
                )

    total = sum(d.multiplicity for d in directions)
    if total != m:
        raise ArithmeticError(f"direction multiplicities sum to {total}, expected {m}")
    return DirectionsResult(infinite=False, directions=directions)


# -- eigenpairs -----------------------------------------------------------------


def _slice_eval_complex(slices: SliceCoeffs, which: int, x1: complex, x2: complex) -> complex:
    seq = slices.b if which == 0 else slices.c
    m = slices.order
    return sum(float(seq[j]) * x1 ** (m - 1 - j) * x2**j for j in range(m))


def _slice_eval_exact(slices: SliceCoeffs, which: int, x1: ComplexRational, x2: ComplexRational):
    seq = slices.b if which == 0 else slices.c
    m = slices.order
    total = ComplexRational(Fraction(0))
    for j in range(m):
        if seq[j] == 0:
            continue
        total = total + seq[j] * x1 ** (m - 1 - j) * x2**j
    return total


def _canonical_sign(lam: complex) -> bool:
    return lam.real > 0 or (lam.real == 0 and lam.imag >= 0)


def eigenpairs_n2(A: Hypermatrix) -> EigenReport:
    """One entry per eigenvector direction, classified normalized/deficit."""
    result = eigen_directions_n2(A)
    if result.infinite:
        return EigenReport(infinite=True, pairs=[])
    slices = binary_slices(A)
    m = A.order
    pairs: list[Eigenpair] = []
    for direction in result.directions:
        if direction.isotropic:
            x = direction.exact
            lam = _slice_eval_exact(slices, 0, x[0], x[1])  # first component is 1
            pairs.append(
                Eigenpair(
                    eigenvalue=complex(lam),
                    vector=(complex(x[0]), complex(x[1])),
                    kind=DEFICIT,
                    multiplicity=direction.multiplicity,
                    exact_direction=x,
                    exact_eigenvalue=lam,
                )
            )
            continue
        pairs.append(_normalized_pair(slices, m, direction))
    return EigenReport(infinite=False, pairs=pairs)


def _normalized_pair(slices: SliceCoeffs, m: int, direction: Direction) -> Eigenpair:
    exact_lam = None
    if direction.exact is not None:
        x1, x2 = direction.exact
        s = x1 * x1 + x2 * x2
        which = 0 if not x1.is_zero() else 1
        xk = x1 if which == 0 else x2
        value = _slice_eval_exact(slices, which, x1, x2)
        if m % 2 == 0:
            exact_lam = value / (xk * s ** ((m - 2) // 2))
            lam = complex(exact_lam)
            vec = _unit_vector((complex(x1), complex(x2)))
        else:
            lam_sq = (value * value) / (xk * xk * s ** (m - 2))
            lam = cmath.sqrt(complex(lam_sq))
            vec = _unit_vector((complex(x1), complex(x2)))
            lam, vec = _align_odd(slices, m, lam, vec)
    else:
        x = direction.vector
        vec = _unit_vector(x)
        which = 0 if abs(vec[0]) >= abs(vec[1]) else 1
        lam = _slice_eval_complex(slices, which, vec[0], vec[1]) / vec[which]
        if m % 2 == 1:
            lam, vec = _align_odd(slices, m, lam, vec)
    return Eigenpair(
        eigenvalue=lam,
        vector=vec,
        kind=NORMALIZED,
        multiplicity=direction.multiplicity,
        sign_pair=m % 2 == 1,
        exact_direction=direction.exact,
        exact_eigenvalue=exact_lam,
    )


def _unit_vector(x: tuple[complex, complex]) -> tuple[complex, complex]:
    s = x[0] * x[0] + x[1] * x[1]
    root = cmath.sqrt(s)
    return (x[0] / root, x[1] / root)


def _align_odd(slices, m, lam, vec):
    """Pick the class representative with canonical eigenvalue sign."""
    which = 0 if abs(vec[0]) >= abs(vec[1]) else 1
    measured = _slice_eval_complex(slices, which, vec[0], vec[1]) / vec[which]
    # make (lam, vec) consistent, then canonicalize the sign
    if abs(measured - lam) > abs(measured + lam):
        lam = -lam
    if not _canonical_sign(lam):
        lam = -lam
        vec = (-vec[0], -vec[1])
    return lam, vec


def z_eigenpairs(A: Hypermatrix, tol: float = 1e-10) -> list[Eigenpair]:
    """Real normalized eigenpairs of a real tensor (positive representative)."""
    report = eigenpairs_n2(A)
    if report.infinite:
        return []
    out = []
    for pair in report.pairs:
        if pair.kind != NORMALIZED:
            continue
        if abs(pair.eigenvalue.imag) > tol:
            continue
        if abs(pair.vector[0].imag) > tol or abs(pair.vector[1].imag) > tol:
            continue
        out.append(pair)
    return out


# -- regularity ------------------------------------------------------------------


def is_regular(A: Hypermatrix) -> RegularityReport:
    """Decide whether Ax^{m-1} = 0, x^T x = 0 has a nonzero solution.

    Dimension 2 is exact: the isotropic cone is the pair of points (1, +-i).
    Dimension 3 first computes the three elimination resultants (all must
    vanish for irregularity), then searches the isotropic conic through an
    exact rational parametrization.
    """
    if A.dim == 2:
        return _is_regular_n2(A)
    if A.dim == 3:
        return _is_regular_n3(A)
    raise DimensionError("regularity test supports dimensions 2 and 3")


def _is_regular_n2(A: Hypermatrix) -> RegularityReport:
    slices = binary_slices(A)
    m = A.order
    circle = BinaryForm.from_scalars([1, 0, 1])
    delta1 = sylvester_resultant(BinaryForm.from_scalars(slices.c), circle).coefficient(0)
    delta2 = sylvester_resultant(BinaryForm.from_scalars(slices.b), circle).coefficient(0)
    deltas = (delta1, delta2)
    for sign in (1, -1):
        point = (ComplexRational(Fraction(1)), ComplexRational(Fraction(0), Fraction(sign)))
        f1 = _slice_eval_exact(slices, 0, *point)
        f2 = _slice_eval_exact(slices, 1, *point)
        if f1.is_zero() and f2.is_zero():
            return RegularityReport(regular=False, witness=point, deltas=deltas)
    return RegularityReport(regular=True, witness=None, deltas=deltas)


def _form_dicts_n3(A: Hypermatrix) -> list[dict]:
    forms = []
    for i in range(3):
        form: dict = {}
        for idx, value in A.entries.items():
            if idx[0] != i:
                continue
            expo = [0, 0, 0]
            for k in idx[1:]:
                expo[k] += 1
            key = tuple(expo)
            form[key] = form.get(key, Fraction(0)) + value
        forms.append({k: v for k, v in form.items() if v != 0})
    return forms


def _is_regular_n3(A: Hypermatrix) -> RegularityReport:
    m = A.order
    forms = _form_dicts_n3(A)
    quadric = {(2, 0, 0): Fraction(1), (0, 2, 0): Fraction(1), (0, 0, 2): Fraction(1)}
    deltas = []
    for omit in range(3):
        kept = [forms[j] for j in range(3) if j != omit] + [quadric]
        system = HomogeneousSystem(kept, [m - 1, m - 1, 2])
        deltas.append(macaulay_resultant(system))
    deltas = tuple(deltas)
    if any(d != 0 for d in deltas):
        return RegularityReport(regular=True, witness=None, deltas=deltas)
    witness = _conic_witness(A, forms)
    if witness is not None:
        return RegularityReport(regular=False, witness=witness, deltas=deltas)
    return RegularityReport(regular=True, witness=None, deltas=deltas)


# parametrization of x1^2 + x2^2 + x3^2 = 0: t -> (1 - t^2, i(1 + t^2), 2t),
# with t = infinity giving (-1, i, 0)


def _conic_witness(A: Hypermatrix, forms: list[dict]):
    one = ComplexRational(Fraction(1))
    zero = ComplexRational(Fraction(0))
    inf_point = (-one, I_UNIT, zero)
    if all(v == 0 for v in eval_map(A, list(inf_point))):
        return inf_point
    x1 = [one, zero, -one]
    x2 = [I_UNIT, zero, I_UNIT]
    x3 = [zero, ComplexRational(Fraction(2))]
    polys = [_compose_form(form, [x1, x2, x3]) for form in forms]
    g = None
    for p in polys:
        g = p if g is None else _cgcd(g, p)
    if g is None or len(g) <= 1:
        return None
    if g[0].is_zero():  # exact root at t = 0
        return (one, I_UNIT, zero)
    if len(g) == 2:  # linear gcd: exact root
        t = -g[0] / g[1]
        return _conic_point_exact(t)
    roots = np.roots([complex(c) for c in reversed(g)])
    best = None
    for root in roots:
        point = _conic_point_numeric(complex(root))
        res = _irregularity_residual(A, point)
        if best is None or res < best[0]:
            best = (res, point)
    if best is not None and best[0] <= 1e-10:
        return best[1]
    return None


def _conic_point_exact(t: ComplexRational):
    one = ComplexRational(Fraction(1))
    two = ComplexRational(Fraction(2))
    return (one - t * t, I_UNIT * (one + t * t), two * t)


def _conic_point_numeric(t: complex) -> tuple[complex, complex, complex]:
    point = (1 - t * t, 1j * (1 + t * t), 2 * t)
    scale = max(abs(c) for c in point)
    return tuple(c / scale for c in point)


def _irregularity_residual(A: Hypermatrix, point) -> float:
    xs = [complex(c) for c in point]
    scale = max(abs(c) for c in xs) or 1.0
    xs = [c / scale for c in xs]
    image = eval_map(A, xs)
    res = max(abs(complex(v)) for v in image)
    res = max(res, abs(sum(c * c for c in xs)))
    return res


def irregularity_residual(A: Hypermatrix, witness) -> float:
    """max |(Ax^{m-1})_i| together with |x^T x| at a max-normalized witness."""
    return _irregularity_residual(A, witness)


# -- complex-rational polynomial helpers (dense lists over Q(i)) -------------------


def _ctrim(cs: list[ComplexRational]) -> list[ComplexRational]:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _cadd(a, b):
    n = max(len(a), len(b))
    zero = ComplexRational(Fraction(0))
    out = [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)]
    return _ctrim(out)


def _cmul(a, b):
    if not a or not b:
        return []
    zero = ComplexRational(Fraction(0))
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _ctrim(out)


def _cdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero over Q(i)")
    rem = list(a)
    quot = [ComplexRational(Fraction(0))] * max(len(a) - len(b) + 1, 0)
    inv = ComplexRational(Fraction(1)) / b[-1]
    for i in range(len(quot) - 1, -1, -1):
        q = rem[i + len(b) - 1] * inv
        quot[i] = q
        if not q.is_zero():
            for j, d in enumerate(b):
                rem[i + j] = rem[i + j] - q * d
    return _ctrim(quot), _ctrim(rem[: len(b) - 1])


def _cgcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _cdivmod(a, b)
        a, b = b, r
    if a:
        inv = ComplexRational(Fraction(1)) / a[-1]
        a = [c * inv for c in a]
    return a


def _compose_form(form: dict, var_polys: list[list[ComplexRational]]):
    """Substitute polynomial parametrizations into an exponent-dict form."""
    one = [ComplexRational(Fraction(1))]
    total: list[ComplexRational] = []
    for expo, value in form.items():
        term = [ComplexRational(Fraction(value))]
        for var, power in zip(var_polys, expo):
            for _ in range(power):
                term = _cmul(term, var)
        total = _cadd(total, term)
    return total


# -- deficit indicator ----------------------------------------------------------


def deficit_indicator(A: Hypermatrix) -> tuple[Fraction, bool]:
    """P^2 + Q^2 and whether it vanishes (the deficit-system criterion).

    For a regular tensor the deficit system has a nontrivial solution
    exactly when this value is zero, which is also when the top generic
    coefficient of the characteristic polynomial drops.
    """
    if A.dim != 2:
        raise DimensionError("deficit indicator requires dimension 2")
    p, q = pq_sums(binary_slices(A))
    value = p * p + q * q
    return value, value == 0
