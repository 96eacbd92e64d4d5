import random
from fractions import Fraction

import pytest

from echarpoly.echar import echar
from echarpoly.eigen import (
    DEFICIT,
    NORMALIZED,
    deficit_indicator,
    eigen_directions_n2,
    eigenpairs_n2,
    irregularity_residual,
    is_regular,
    z_eigenpairs,
)
from echarpoly.poly import complex_roots
from echarpoly.rational import ComplexRational, I_UNIT
from echarpoly.tensor import DimensionError, Hypermatrix, OrthogonalMatrix, rotate
from echarpoly.verify import fuzz_tensor

DEFICIT_ENTRIES = {
    (1, 1, 1): 2,
    (1, 1, 2): 2,
    (1, 2, 2): 1,
    (2, 1, 1): 1,
    (2, 1, 2): 1,
    (2, 2, 2): 3,
}


def deficit_tensor():
    return Hypermatrix.from_one_based(3, 2, DEFICIT_ENTRIES)


def direction_set(A):
    res = eigen_directions_n2(A)
    assert not res.infinite
    out = []
    for d in res.directions:
        v = d.vector
        if abs(v[0]) > 1e-12:
            out.append((round((v[1] / v[0]).real, 6), round((v[1] / v[0]).imag, 6), d.multiplicity))
        else:
            out.append(("inf", 0.0, d.multiplicity))
    return sorted(out, key=str)


def test_directions_even_diagonal():
    dirs = direction_set(Hypermatrix.diagonal(4, 2))
    assert sorted(dirs, key=str) == sorted(
        [(0.0, 0.0, 1), ("inf", 0.0, 1), (1.0, 0.0, 1), (-1.0, 0.0, 1)], key=str
    )


def test_directions_deficit_family():
    res = eigen_directions_n2(deficit_tensor())
    iso = [d for d in res.directions if d.isotropic]
    other = [d for d in res.directions if not d.isotropic]
    assert len(iso) == 2 and all(d.multiplicity == 1 for d in iso)
    assert len(other) == 1
    ratio = other[0].vector[1] / other[0].vector[0]
    assert abs(ratio - 1) < 1e-12
    assert other[0].exact is not None


def test_directions_infinitely_many_signal():
    A = Hypermatrix.from_one_based(3, 2, {(1, 1, 1): 1, (2, 1, 2): 1})
    res = eigen_directions_n2(A)
    assert res.infinite
    report = eigenpairs_n2(A)
    assert report.infinite and report.pairs == []
    assert echar(A).psi.is_zero()


def test_eigenpairs_even_diagonal():
    report = eigenpairs_n2(Hypermatrix.diagonal(4, 2))
    assert not report.infinite
    values = sorted(round(p.eigenvalue.real, 9) for p in report.pairs)
    assert values == [0.5, 0.5, 1.0, 1.0]
    assert all(p.kind == NORMALIZED for p in report.pairs)
    for p in report.pairs:
        s = p.vector[0] ** 2 + p.vector[1] ** 2
        assert abs(s - 1) < 1e-10


def test_eigenpairs_deficit_family():
    report = eigenpairs_n2(deficit_tensor())
    normalized = [p for p in report.pairs if p.kind == NORMALIZED]
    deficit = [p for p in report.pairs if p.kind == DEFICIT]
    assert len(normalized) == 1 and len(deficit) == 2
    lam = normalized[0].eigenvalue
    assert abs(lam - 5 / 2**0.5) < 1e-10
    exact = sorted((p.exact_eigenvalue for p in deficit), key=lambda z: float(z.im))
    assert exact[0] == ComplexRational(Fraction(1), Fraction(-2))
    assert exact[1] == ComplexRational(Fraction(1), Fraction(2))
    # the eigen equation holds at the deficit representatives
    from echarpoly.tensor import eval_map

    for p in deficit:
        x = p.exact_direction
        image = eval_map(deficit_tensor(), list(x))
        assert image[0] == p.exact_eigenvalue * x[0]
        assert image[1] == p.exact_eigenvalue * x[1]


def test_eigenpairs_odd_diagonal_match_polynomial_roots():
    A = Hypermatrix.diagonal(3, 2)
    report = eigenpairs_n2(A)
    lams = []
    for p in report.pairs:
        assert p.sign_pair
        lams.extend([p.eigenvalue, -p.eigenvalue] * p.multiplicity)
    roots = []
    for r, mult in complex_roots(echar(A).psi):
        roots.extend([r] * mult)
    lams.sort(key=lambda z: (round(z.real, 8), round(z.imag, 8)))
    roots.sort(key=lambda z: (round(z.real, 8), round(z.imag, 8)))
    assert len(lams) == len(roots)
    for a, b in zip(lams, roots):
        assert abs(a - b) < 1e-8


def test_deficit_lambdas_are_not_roots():
    A = deficit_tensor()
    psi = echar(A).psi
    for p in eigenpairs_n2(A).pairs:
        if p.kind == DEFICIT:
            assert abs(psi.eval_complex(p.eigenvalue)) > 1e-3


def test_z_eigenpairs_even_diagonal():
    values = sorted(round(p.eigenvalue.real, 9) for p in z_eigenpairs(Hypermatrix.diagonal(4, 2)))
    assert values == [0.5, 0.5, 1.0, 1.0]


def test_z_eigenpairs_deficit_family_positive_representative():
    zs = z_eigenpairs(deficit_tensor())
    assert len(zs) == 1
    assert abs(zs[0].eigenvalue - 5 / 2**0.5) < 1e-10


def test_largest_z_eigenvalue_even_diagonal():
    zs = z_eigenpairs(Hypermatrix.diagonal(4, 2))
    best = max(zs, key=lambda p: p.eigenvalue.real)
    assert abs(best.eigenvalue - 1) < 1e-12
    axis_pairs = [p for p in zs if abs(p.eigenvalue - 1) < 1e-12]
    assert len(axis_pairs) == 2


def test_z_eigenpairs_nonempty_for_even_symmetric():
    rng = random.Random(5)
    for _ in range(10):
        # symmetric order-4 tensor: value depends only on the index multiset
        values = {k: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for k in range(5)}
        entries = {}
        from itertools import product

        for idx in product(range(2), repeat=4):
            entries[idx] = values[sum(idx)]
        A = Hypermatrix(4, 2, entries)
        report = eigenpairs_n2(A)
        if report.infinite:
            continue
        assert len(z_eigenpairs(A)) > 0


def test_class_count_matches_order():
    rng = random.Random(7)
    for m in (3, 4, 5, 6):
        for _ in range(10):
            A = fuzz_tensor(rng, m)
            report = eigenpairs_n2(A)
            assert not report.infinite
            assert sum(p.multiplicity for p in report.pairs) == m


def test_root_correspondence_random_regular():
    rng = random.Random(11)
    for m in (3, 4):
        for _ in range(10):
            A = fuzz_tensor(rng, m)
            if not is_regular(A).regular:
                continue
            report = eigenpairs_n2(A)
            if report.infinite:
                continue
            lams = []
            for p in report.pairs:
                if p.kind != NORMALIZED:
                    continue
                reps = [p.eigenvalue, -p.eigenvalue] if m % 2 == 1 else [p.eigenvalue]
                for rep in reps:
                    lams.extend([rep] * p.multiplicity)
            roots = []
            for r, mult in complex_roots(echar(A).psi):
                roots.extend([r] * mult)
            assert len(lams) == len(roots)
            lams.sort(key=lambda z: (round(z.real, 6), round(z.imag, 6)))
            roots.sort(key=lambda z: (round(z.real, 6), round(z.imag, 6)))
            for a, b in zip(lams, roots):
                assert abs(a - b) < 1e-8


def test_eigenvalue_multiset_invariant_under_rotation():
    rng = random.Random(13)
    C = OrthogonalMatrix.rotation_3_4_5()
    for m in (3, 4):
        A = fuzz_tensor(rng, m)
        lam_a = sorted(
            (round(p.eigenvalue.real, 8), round(abs(p.eigenvalue.imag), 8))
            for p in eigenpairs_n2(A).pairs
            for _ in range(p.multiplicity)
        )
        lam_b = sorted(
            (round(p.eigenvalue.real, 8), round(abs(p.eigenvalue.imag), 8))
            for p in eigenpairs_n2(rotate(A, C)).pairs
            for _ in range(p.multiplicity)
        )
        assert len(lam_a) == len(lam_b)
        for a, b in zip(lam_a, lam_b):
            assert abs(a[0] - b[0]) < 1e-6 and abs(a[1] - b[1]) < 1e-6


def test_is_regular_examples():
    A = Hypermatrix.from_one_based(3, 2, {(1, 1, 1): 1, (1, 2, 2): 1})
    report = is_regular(A)
    assert not report.regular
    assert report.witness == (ComplexRational(Fraction(1)), I_UNIT)
    assert irregularity_residual(A, report.witness) == 0
    assert is_regular(Hypermatrix.diagonal(3, 2)).regular
    assert is_regular(deficit_tensor()).regular


def test_is_regular_dimension3_diagonal():
    report = is_regular(Hypermatrix.diagonal(3, 3))
    assert report.regular
    assert report.deltas is not None and all(d != 0 for d in report.deltas)


def test_is_regular_dimension3_irregular_witness():
    entries = {(i, 1, 1): 1 for i in (1, 2, 3)} | {(i, 2, 2): 1 for i in (1, 2, 3)}
    A = Hypermatrix.from_one_based(3, 3, entries)
    report = is_regular(A)
    assert not report.regular
    assert report.deltas == (0, 0, 0)
    assert irregularity_residual(A, report.witness) <= 1e-10


def test_is_regular_rejects_dimension4():
    with pytest.raises(DimensionError):
        is_regular(Hypermatrix.diagonal(3, 4))


def test_is_regular_zero_tensors():
    for dim in (2, 3):
        report = is_regular(Hypermatrix.zero(3, dim))
        assert not report.regular
        assert irregularity_residual(Hypermatrix.zero(3, dim), report.witness) == 0


def test_deficit_indicator_examples():
    value, flag = deficit_indicator(deficit_tensor())
    assert (value, flag) == (0, True)
    assert deficit_indicator(Hypermatrix.diagonal(4, 2)) == (4, False)
    assert deficit_indicator(Hypermatrix.diagonal(3, 2)) == (2, False)


def test_deficit_family_deficit_classes_and_degree_drop():
    A = deficit_tensor()
    value, flag = deficit_indicator(A)
    assert flag
    report = eigenpairs_n2(A)
    assert sum(1 for p in report.pairs if p.kind == DEFICIT) == 2
    res = echar(A)
    assert res.psi.degree < res.leading_power


def test_repeated_direction_multiplicity_matches_root_multiplicity():
    # cross form x2^2 (x1 - x2): the direction (1, 0) is a double root and
    # its eigenvalues appear as double roots of the polynomial
    A = Hypermatrix.from_one_based(
        3, 2, {(1, 1, 1): 1, (1, 1, 2): 1, (1, 2, 2): -1, (2, 1, 2): 1}
    )
    assert is_regular(A).regular
    report = eigenpairs_n2(A)
    by_mult = {round(p.eigenvalue.real, 9): p.multiplicity for p in report.pairs}
    assert by_mult == {1.0: 2, round(0.5**0.5, 9): 1}
    lams = []
    for p in report.pairs:
        lams.extend([p.eigenvalue, -p.eigenvalue] * p.multiplicity)
    roots = []
    for r, mult in complex_roots(echar(A).psi):
        roots.extend([r] * mult)
    lams.sort(key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    roots.sort(key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    assert len(lams) == len(roots) == 6
    assert all(abs(a - b) < 1e-8 for a, b in zip(lams, roots))


def test_deficit_multiplicity_open_question_probe():
    """Repeated isotropic direction roots: report raw data, assert nothing.

    With both slices proportional to (x1^2 + x2^2) times a linear form the
    cross form picks up (t^2 + 1) to a higher power; the bookkeeping of how
    that splits between degree drop and root multiplicity is only logged.
    """
    A = Hypermatrix.from_one_based(
        5,
        2,
        {
            # F1 = (x1^2+x2^2)^2 x1, F2 = (x1^2+x2^2)^2 x2 would be diagonalish;
            # use F1 = (x1^2+x2^2)^2 x2, F2 = 0 pattern instead
            (1, 1, 1, 1, 2): 1,
            (1, 1, 2, 2, 2): 2,
            (1, 2, 2, 2, 2): 0,
        },
    )
    res = eigen_directions_n2(A)
    if not res.infinite:
        iso = [(d.multiplicity) for d in res.directions if d.isotropic]
        print(f"\nisotropic direction multiplicities: {iso}")
