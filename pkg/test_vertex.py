#!/usr/bin/env python3
"""Tests for the vertex operators and the gl_∞ action on F."""

import pytest

from fockcalc.algebra.fock import FockVector
from fockcalc.algebra.vertex import (
    GAMMA_METHODS,
    GAMMA_STAR_METHODS,
    GLElement,
    commutation_bar,
    commutation_plus_minus,
    delta_gl,
    djkm,
    djkm_modified,
    djkm_modified_series,
    djkm_series,
    gamma,
    gamma_star,
    gl_bracket,
)


def vac(m):
    return FockVector.vacuum(m)


def bv(m, *shape):
    return FockVector.basis_vector(m, shape)


def B(i, j, c=1):
    return GLElement.elementary(i, j, c)


def test_gamma_on_vacuum():
    assert gamma(vac(0), (1, 1)).coeff(1) == vac(1)
    assert gamma(vac(0), (0, 0)).coeff(0) == 0
    s = gamma(vac(0), (0, 3))
    assert s.coeff(3) == bv(1, 2)
    assert s.coeff(-5) == 0


def test_gamma_star_on_vacuum():
    assert gamma_star(vac(0), (-1, -1)).coeff(-1) == vac(-1)
    # β_{-3} ⌟ [b]_0 = -b_0∧b_{-1}∧b_{-2}∧[b]_{-4}
    assert gamma_star(vac(0), (2, 2)).coeff(2) == -bv(-1, 1, 1, 1)
    assert gamma_star(vac(0), (-3, 3)).coeff(-2) == 0


def test_gamma_methods_agree():
    window = (-3, 3)
    for f in (vac(0), bv(0, 1), bv(1, 2, 1), bv(-1, 1) + 2 * bv(2, 3)):
        direct = gamma(f, window)
        for method in GAMMA_METHODS:
            assert gamma(f, window, method) == direct, (f, method)
        direct_star = gamma_star(f, window)
        for method in GAMMA_STAR_METHODS:
            assert gamma_star(f, window, method) == direct_star, (f, method)


def test_unknown_method():
    with pytest.raises(ValueError):
        gamma(vac(0), (0, 1), "fast")
    with pytest.raises(ValueError):
        djkm(0, 0, vac(0), "fast")


def test_djkm_small_cases():
    for method in ("direct", "generating"):
        assert djkm(0, 0, vac(0), method) == vac(0)
        assert djkm(1, 1, vac(0), method) == 0
        assert djkm(1, 0, vac(0), method) == bv(0, 1)
    assert djkm(2, 2, bv(0, 2)) == bv(0, 2)


def test_generating_function_matches_direct_action():
    radius = 2
    window = (-radius, radius)
    for f in (vac(0), bv(0, 1), bv(1, 1, 1)):
        series = djkm_series(f, window, window)
        assert series.var == "z"
        for i in range(-radius, radius + 1):
            for j in range(-radius, radius + 1):
                assert series.coeff(i).coeff(-j) == djkm(i, j, f), (f, i, j)


def test_normal_ordering():
    assert djkm_modified(0, 0, vac(0)) == 0
    assert djkm_modified(0, 0, vac(0), "generating") == 0
    assert djkm_modified(-1, -1, vac(0)) == 0
    assert djkm_modified(1, 1, vac(0)) == 0
    f = bv(0, 1)
    assert djkm_modified(1, 0, f) == djkm(1, 0, f)
    assert djkm_modified(0, 0, f) == djkm(0, 0, f) - f
    window = (-2, 2)
    modified = djkm_modified_series(f, window, window)
    for i in range(-2, 3):
        for j in range(-2, 3):
            assert modified.coeff(i).coeff(-j) == djkm_modified(i, j, f), (i, j)


def test_delta_gl():
    assert delta_gl(B(0, 0) + B(-1, -1), vac(0)) == 2 * vac(0)
    assert delta_gl(B(2, 0), vac(0)) == bv(0, 2)
    assert delta_gl(GLElement(), vac(0)) == 0


def test_gl_bracket():
    assert gl_bracket(B(1, 2), B(2, 3)) == B(1, 3)
    assert gl_bracket(B(1, 2), B(2, 1)) == B(1, 1) - B(2, 2)
    a = B(0, 1) + 2 * B(3, -1)
    assert gl_bracket(a, a) == 0


def test_lie_homomorphism():
    a = B(1, 0) + 2 * B(0, -1)
    b = B(-1, 1) - B(2, 0)
    for f in (vac(0), bv(0, 2, 1), bv(1, 1)):
        left = delta_gl(gl_bracket(a, b), f)
        right = delta_gl(a, delta_gl(b, f)) - delta_gl(b, delta_gl(a, f))
        assert left == right


def test_commutation_rules():
    window = (-2, 2)
    for f in (vac(0), bv(0, 1), bv(-1, 2)):
        lhs, rhs = commutation_plus_minus(f, window, window)
        assert lhs == rhs
        lhs, rhs = commutation_bar(f, window, window)
        assert lhs == rhs


def test_gl_element_json():
    a = B(1, 0) - 3 * B(-2, 4)
    assert GLElement.from_json(a.to_json()) == a
    assert {"row": 1, "col": 0, "coeff": "1"} in a.to_json()
