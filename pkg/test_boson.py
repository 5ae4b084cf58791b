#!/usr/bin/env python3
"""Tests for the Schur-basis ring B and the boson–fermion correspondence."""

import pytest

from fockcalc.algebra.boson import (
    ChargedSchur,
    boson_series,
    e_mult,
    e_series,
    elementary,
    fermion_series,
    h_monomial_to_schur,
    h_mult,
    h_series,
    jacobi_trudi,
    schur_product,
    sigma_minus_B,
    to_boson,
    to_boson_single,
    to_fermion,
)
from fockcalc.algebra.exterior import SchubertKind
from fockcalc.algebra.fock import FockVector, schubert_fock, sigma_fock
from fockcalc.algebra.partitions import enumerate_bounded, make_partition
from fockcalc.errors import ChargeMixed


def s(*shape, charge=0):
    return ChargedSchur.schur(shape, charge)


def test_pieri_rules():
    assert h_mult(1, s(1)) == s(2) + s(1, 1)
    assert h_mult(2, s()) == s(2)
    assert h_mult(0, s(2, 1)) == s(2, 1)
    assert h_mult(2, s(1)) == s(3) + s(2, 1)
    assert e_mult(2, s(1)) == s(2, 1) + s(1, 1, 1)
    with pytest.raises(ValueError):
        h_mult(-1, s())


def test_h_monomials():
    assert h_monomial_to_schur([2, 1]) == s(3) + s(2, 1)
    assert h_monomial_to_schur([]) == s()
    assert h_monomial_to_schur([1, 1]) == s(2) + s(1, 1)
    assert h_monomial_to_schur([1, 1], charge=2).charge == 2


def test_elementary():
    assert elementary(2) == s(1, 1)
    assert elementary(0) == s()
    assert elementary(1) == s(1)


def test_jacobi_trudi():
    assert dict(jacobi_trudi(make_partition((1, 1)))) == {(1, 1): 1, (2,): -1}
    # det [[h_2, h_3], [h_0, h_1]]
    assert dict(jacobi_trudi(make_partition((2, 1)))) == {(2, 1): 1, (3,): -1}
    assert h_monomial_to_schur([2, 1]) - h_monomial_to_schur([3]) == s(2, 1)
    assert dict(jacobi_trudi(make_partition((2,)))) == {(2,): 1}


def test_e_h_convolution():
    for n in range(1, 7):
        total = ChargedSchur()
        for k in range(n + 1):
            total = total + (-1) ** k * schur_product(elementary(k), s(n - k))
        assert not total, n


def test_schur_product():
    assert schur_product(s(1), s(1)) == s(2) + s(1, 1)
    assert schur_product(s(1, charge=2), s(charge=-1)) == s(1, charge=1)
    assert schur_product(s(1), s(1)).charge == 0
    # s_(1,1)·s_(1) = s_(2,1) + s_(1,1,1)
    assert schur_product(s(1, 1), s(1)) == s(2, 1) + s(1, 1, 1)


def test_fock_action_matches_pieri():
    for m in range(-2, 3):
        for lam in enumerate_bounded(4, 4):
            f = FockVector.basis_vector(m, lam)
            for i in range(4):
                assert to_boson_single(sigma_fock(i, f), m) == h_mult(i, s(*lam, charge=m)), (m, lam, i)
                bar = to_boson_single(sigma_fock(i, f, bar=True), m)
                assert bar == (-1) ** i * e_mult(i, s(*lam, charge=m)), (m, lam, i)


def test_h_and_e_series():
    assert h_series(s(), (0, 2)).coeffs == {0: s(), 1: s(1), 2: s(2)}
    assert e_series(s(), (0, 2)).coeffs == {0: s(), 1: -s(1), 2: s(1, 1)}


def test_sigma_minus_on_b():
    bar = sigma_minus_B(SchubertKind.BAR_MINUS, s(2), (-1, 0))
    assert bar.coeffs == {0: s(2), -1: -s(1)}
    plain = sigma_minus_B(SchubertKind.MINUS, s(1), (-2, 0))
    assert plain.coeffs == {0: s(1), -1: s()}
    assert plain.coeff(-2) == 0
    assert sigma_minus_B(SchubertKind.BAR_MINUS, s(), (-3, 0)).coeffs == {0: s()}
    with pytest.raises(ValueError):
        sigma_minus_B(SchubertKind.PLUS, s(1), (0, 1))


def test_determinants_commute_with_lowering():
    for kind in (SchubertKind.MINUS, SchubertKind.BAR_MINUS):
        for lam in enumerate_bounded(4, 4):
            window = (-lam.weight - 1, 0)
            bosonic = sigma_minus_B(kind, ChargedSchur({lam: 1}), window)
            fermionic = boson_series(schubert_fock(kind, FockVector.basis_vector(0, lam), window), 0)
            assert bosonic == fermionic, (kind, lam)


def test_lowering_is_multiplicative():
    kind = SchubertKind.BAR_MINUS
    a, b = s(2), s(1, 1)
    window = (-4, 0)
    left = sigma_minus_B(kind, schur_product(a, b), window)
    da, db = sigma_minus_B(kind, a, window), sigma_minus_B(kind, b, window)
    for e in range(-4, 1):
        expected = ChargedSchur()
        for k in range(e, 1):
            expected = expected + schur_product(da.coeff(k), db.coeff(e - k))
        assert left.coeff(e) == expected, e


def test_correspondence():
    f = FockVector.basis_vector(0, (2, 1))
    assert to_boson(f) == [s(2, 1)]
    assert to_fermion(s(charge=3)) == FockVector.vacuum(3)
    g = 3 * FockVector.basis_vector(-1, (4,)) - FockVector.vacuum(-1)
    assert to_fermion(to_boson_single(g)) == g
    mixed = FockVector.vacuum(0) + FockVector.vacuum(1)
    assert [p.charge for p in to_boson(mixed)] == [0, 1]
    with pytest.raises(ChargeMixed):
        to_boson_single(mixed)
    assert to_boson_single(FockVector(), 4).charge == 4


def test_series_correspondence():
    series = schubert_fock(SchubertKind.PLUS, FockVector.basis_vector(0, (1,)), (0, 2))
    bosonic = boson_series(series, 0)
    assert bosonic.coeff(1) == s(2) + s(1, 1)
    assert fermion_series(bosonic) == series


def test_json():
    v = s(2, 1) - 2 * s()
    data = v.to_json()
    assert data["charge"] == 0
    assert {"shape": [2, 1], "coeff": "1"} in data["terms"]
    assert ChargedSchur.from_json(data) == v
