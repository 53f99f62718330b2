from itertools import combinations

import pytest

from findet.experiments import (GenericSpec, NonGenericError, build_generic_B, det_B_form, extract_F,
                                generic_coefficients, genericity_trial, specialised_system,
                                semicontinuity_scan, system_determinant_in_a, verify_det_squared,
                                verify_last_columns_factorization, y_labels)
from findet.determinacy import extended_codim
from findet.matspace import PolyMatrix, presentation_theta
from findet.polyring import Poly
from findet.scalars import GF, QQ

F101 = GF(101)


def B_of(s, N, field=F101, seed=0):
    return build_generic_B(GenericSpec(s, N, field, seed=seed))


def a7_a6(field):
    return Poly(field, 1, {(7,): 1, (6,): 1})


def test_generic_spec_validation():
    with pytest.raises(ValueError, match="divides"):
        GenericSpec(2, 5, GF(5), seed=1)
    with pytest.raises(ValueError):
        GenericSpec(2, 0, QQ, seed=1)
    with pytest.raises(ValueError, match="4 x 2"):
        GenericSpec(2, 2, QQ, coeffs=((1, 2),) * 3)
    with pytest.raises(ValueError):
        GenericSpec(2, 2, QQ)


def test_shape_and_reproducibility():
    B = B_of(2, 3, GF(5), seed=3)
    assert B.ord() == 3 and B.shape == (2, 2)
    assert B == B_of(2, 3, GF(5), seed=3)
    N, table = generic_coefficients(B)
    assert N == 3 and len(table) == 4 and all(len(r) == 2 for r in table)


def test_all_ones_rejected():
    with pytest.raises(NonGenericError):
        build_generic_B(GenericSpec(2, 2, QQ, coeffs=((1, 1),) * 4))


def test_explicit_coefficients_accepted():
    coeffs = ((1, 2), (3, 5), (7, 11), (13, 19))
    B = build_generic_B(GenericSpec(2, 2, QQ, coeffs=coeffs))
    assert generic_coefficients(B)[1] == [[QQ.convert(v) for v in r] for r in coeffs]


def test_single_variable_is_allowed():
    B = B_of(1, 2, QQ, seed=0)
    assert B.nvars == 1 and B.ord() == 2


@pytest.mark.parametrize("s,N,field", [(2, 2, F101), (3, 3, QQ), (2, 3, QQ), (3, 2, F101)])
def test_det_squared(s, N, field):
    for seed in range(3):
        assert verify_det_squared(B_of(s, N, field, seed))


def test_det_squared_sanity_control():
    B = B_of(2, 2)
    T = presentation_theta(B)
    rows = [list(r) for r in T.rows]
    rows[0][0] = rows[0][0] + Poly.gens(F101, 2)[0] ** 2
    assert not verify_det_squared(B, PolyMatrix(rows))


def test_last_columns_factorization():
    assert verify_last_columns_factorization(B_of(4, 2), (9, 10, 11, 12))
    assert verify_last_columns_factorization(B_of(5, 3, QQ), (9, 10, 11, 13))
    assert verify_last_columns_factorization(B_of(4, 1, QQ), (9, 10, 11, 12))
    with pytest.raises(ValueError):
        verify_last_columns_factorization(B_of(3, 2), (9, 10, 11, 12))


def test_extract_F_is_linear_in_y():
    B = B_of(3, 2)
    F = extract_F(B, 1, 5)
    assert F.nvars == len(y_labels(3)) == 6
    assert F and F.is_homogeneous() and F.degree() == 1
    assert det_B_form(B).degree() == 1


def test_support_check_never_fires_for_valid_B():
    for s, N in ((2, 2), (3, 2), (2, 3)):
        B = B_of(s, N, seed=s * N)
        for i1, i2 in combinations(range(1, 9), 2):
            extract_F(B, i1, i2)


def test_support_check_fires_off_lattice():
    x, y = Poly.gens(QQ, 2)
    B = PolyMatrix([[x**2 + x * y, y**2], [x**2, y**2]])
    with pytest.raises(ValueError):
        extract_F(B, 1, 5)


def test_system_determinant():
    assert system_determinant_in_a(QQ) == a7_a6(QQ)
    assert system_determinant_in_a(F101) == a7_a6(F101)
    got = system_determinant_in_a(GF(2))
    assert got == a7_a6(GF(2)) and got.evaluate([1]) == 0 and got.evaluate([0]) == 0


@pytest.mark.parametrize("p", [101, 7])
def test_system_field_independence(p):
    over_q = system_determinant_in_a(QQ, N=2).map_coefficients(GF(p))
    assert over_q == system_determinant_in_a(GF(p), N=2)


def test_system_shape():
    rows = specialised_system(QQ)
    assert len(rows) == 6 and all(len(r) == 6 for r in rows)


def test_scan_trivial_cases():
    B = B_of(2, 2)
    zero = PolyMatrix.zeros(2, 2, F101, 2)
    res = semicontinuity_scan(B, zero, [1, 2, 3])
    assert res.satisfied == res.t_values
    assert all(r.codim == res.d_e_at_zero.codim for r in res.d_e_values)
    x, y = Poly.gens(F101, 2)
    res = semicontinuity_scan(B, PolyMatrix.diag([x, y]), [0])
    assert res.d_e_values[0] == extended_codim(B)


def test_scan_rejects_mismatch():
    with pytest.raises(ValueError):
        semicontinuity_scan(B_of(2, 2), B_of(2, 2, QQ), [1])


def test_genericity_trial():
    assert genericity_trial(2, 3, F101, 20, seed=1) >= 0.9
    frac = genericity_trial(2, 3, GF(5), 20, seed=1)
    assert 0.0 <= frac <= 1.0
    with pytest.warns(UserWarning):
        assert genericity_trial(2, 3, F101, 0, seed=1) == 1.0
