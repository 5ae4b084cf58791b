#!/usr/bin/env python3
"""Tests for wedge products, contraction and the Schubert derivations on ⋀M."""

import random

import pytest

from fockcalc.algebra.exterior import (
    DualVector,
    ExtVector,
    SchubertKind,
    contract,
    graded_part,
    kind_support,
    normalize_wedge,
    schubert_ext,
    sigma_ext,
    wedge,
)
from fockcalc.algebra.series import compose

PLUS, MINUS = SchubertKind.PLUS, SchubertKind.MINUS
BAR_PLUS, BAR_MINUS = SchubertKind.BAR_PLUS, SchubertKind.BAR_MINUS

SAMPLES = [
    ExtVector.b(0),
    ExtVector.b(-2),
    ExtVector.wedge_of(2, 1),
    ExtVector.wedge_of(3, 0, -1),
    ExtVector.wedge_of(1, 0) + 2 * ExtVector.b(4),
]

INVERSE_PAIRS = [(PLUS, BAR_PLUS), (BAR_PLUS, PLUS), (MINUS, BAR_MINUS), (BAR_MINUS, MINUS)]


def b(*indices):
    return ExtVector.wedge_of(*indices)


def window_for(kind, radius):
    return (0, radius) if kind.raises else (-radius, 0)


def test_graded_part():
    u = b(2, 1) - 3 * ExtVector.b(4) + b(5, 0, -1)
    assert graded_part(u, 1) == -3 * ExtVector.b(4)
    assert graded_part(u, 2) == b(2, 1)
    assert graded_part(u, 4) == 0


def test_normalize_wedge():
    assert normalize_wedge([0, 2]) == (-1, (2, 0))
    assert normalize_wedge([1, 1]) is None
    assert normalize_wedge([3, 1, 2]) == (-1, (3, 2, 1))
    assert normalize_wedge([]) == (1, ())


def test_wedge_is_alternating():
    assert wedge(b(1), b(2, 0)) == -b(2, 1, 0)
    assert wedge(b(1), b(1)) == 0
    assert wedge(b(2), b(1)) == -wedge(b(1), b(2))
    assert wedge(ExtVector.one(), b(3)) == b(3)


def test_contraction():
    assert contract(DualVector.beta(1), b(2, 1)) == -b(2)
    assert contract(DualVector.beta(5), b(2, 1)) == 0
    assert contract(DualVector.beta(2), b(2)) == ExtVector.one()


def test_contraction_is_an_odd_derivation():
    beta = DualVector.beta(1) + DualVector.beta(3)
    u, v = b(3, 1), b(2, 0)
    left = contract(beta, wedge(u, v))
    right = wedge(contract(beta, u), v) + wedge(u, contract(beta, v))
    assert left == right


def test_bar_plus_on_a_single_vector():
    s = schubert_ext(BAR_PLUS, b(4), (0, 1))
    assert s.coeffs == {0: b(4), 1: -b(5)}
    assert s.coeff(5) == 0


def test_plus_on_a_wedge():
    s = schubert_ext(PLUS, b(2, 1), (0, 3))
    assert s.coeff(1) == b(3, 1)
    assert s.coeff(0) == b(2, 1)
    # b_2∧b_3 cancels against b_3∧b_2
    assert s.coeff(2) == b(4, 1)


def test_minus_on_b0():
    s = schubert_ext(MINUS, b(0), (-2, 0))
    assert s.coeffs == {0: b(0), -1: b(-1), -2: b(-2)}


def test_kind_support():
    assert kind_support(PLUS, 2) == (0, None)
    assert kind_support(BAR_PLUS, 2) == (0, 2)
    assert kind_support(BAR_MINUS, 3) == (-3, 0)
    assert kind_support(MINUS, 0) == (0, 0)


def test_derivations_fix_constants():
    for kind in SchubertKind:
        s = schubert_ext(kind, ExtVector.one(), window_for(kind, 3))
        assert s.coeffs == {0: ExtVector.one()}


def random_ext(rng, max_degree=3):
    terms = {}
    for _ in range(rng.randint(1, 2)):
        degree = rng.randint(0, max_degree)
        indices = tuple(sorted(rng.sample(range(-4, 5), degree), reverse=True))
        terms[indices] = rng.choice([-2, -1, 1, 2])
    return ExtVector(terms)


def test_hasse_schmidt_product_rule():
    radius = 5
    rng = random.Random(7)
    pairs = [(b(2), b(0)), (b(1, -1), b(3)), (b(4, 2), b(1, 0))]
    pairs += [(random_ext(rng), random_ext(rng)) for _ in range(8)]
    for kind in SchubertKind:
        window = window_for(kind, radius)
        for u, v in pairs:
            su = schubert_ext(kind, u, window)
            sv = schubert_ext(kind, v, window)
            left = schubert_ext(kind, wedge(u, v), window)
            for e in range(window[0], window[1] + 1):
                expected = ExtVector()
                for a in range(window[0], window[1] + 1):
                    if window[0] <= e - a <= window[1]:
                        expected = expected + wedge(su.coeff(a), sv.coeff(e - a))
                assert left.coeff(e) == expected, (kind, u, v, e)


def test_inverse_pairs():
    radius = 5
    rng = random.Random(11)
    samples = SAMPLES + [random_ext(rng) for _ in range(10)]
    for first, second in INVERSE_PAIRS:
        window = window_for(first, radius)
        support = kind_support(second)

        def op(v, win, kind=second):
            return schubert_ext(kind, v, win)

        for u in samples:
            inner = schubert_ext(first, u, window)
            assert compose(op, inner, window, support).coeffs == {0: u}, (first, u)


def test_integration_by_parts():
    radius = 4
    window = (0, radius)
    u, v = b(3, 1), b(2, 0)

    def plus(x, win):
        return schubert_ext(PLUS, x, win)

    inner = schubert_ext(BAR_PLUS, v, window).map_coeffs(lambda x: wedge(u, x), ExtVector())
    right = compose(plus, inner, window, (0, None))
    left = schubert_ext(PLUS, u, window).map_coeffs(lambda x: wedge(x, v), ExtVector())
    assert left == right


def test_coefficient_operators_commute():
    u = b(2, 0, -1)
    for i in range(-2, 3):
        for j in range(-2, 3):
            assert sigma_ext(i, sigma_ext(j, u)) == sigma_ext(j, sigma_ext(i, u))
            assert sigma_ext(i, sigma_ext(j, u, bar=True), bar=True) == \
                sigma_ext(j, sigma_ext(i, u, bar=True), bar=True)


def coefficient(kind, u, e):
    return schubert_ext(kind, u, (e, e)).coeff(e)


@pytest.mark.parametrize("first", list(SchubertKind))
@pytest.mark.parametrize("second", list(SchubertKind))
def test_derivations_in_two_variables_commute(first, second):
    radius = 3
    for u in (b(0), b(2, -1), b(3, 0, -2)):
        lo1, hi1 = window_for(first, radius)
        lo2, hi2 = window_for(second, radius)
        for i in range(lo1, hi1 + 1):
            for j in range(lo2, hi2 + 1):
                zw = coefficient(first, coefficient(second, u, j), i)
                wz = coefficient(second, coefficient(first, u, i), j)
                assert zw == wz, (u, i, j)


def test_window_past_the_support_side():
    u = b(2, -1)
    raised = schubert_ext(PLUS, u, (-2, 3))
    assert raised.bounded_below
    assert raised.coeff(-2) == 0 and raised.coeff(-1) == 0
    assert raised.coeffs == schubert_ext(PLUS, u, (0, 3)).coeffs
    lowered = schubert_ext(BAR_MINUS, u, (-2, 2))
    assert lowered.bounded_above
    assert lowered.coeff(1) == 0 and lowered.coeff(2) == 0
    assert lowered.coeffs == schubert_ext(BAR_MINUS, u, (-2, 0)).coeffs


def test_kind_parse():
    assert SchubertKind.parse("bar+") is BAR_PLUS
    assert SchubertKind.parse("-") is MINUS
    with pytest.raises(ValueError):
        SchubertKind.parse("up")


def test_to_json():
    u = b(2, 0) - 3 * b(1)
    data = u.to_json()
    assert {"mono": [2, 0], "coeff": "1"} in data
    assert ExtVector.from_json(data) == u
    assert str(b(2, 0)) == "b_2∧b_0"
