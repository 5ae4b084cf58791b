#!/usr/bin/env python3
"""Tests for gl_n acting on the r × (n - r) box basis."""

import random

import pytest

from fockcalc.algebra.exterior import ExtVector
from fockcalc.algebra.fock import FockVector
from fockcalc.algebra.glrep import (
    BoxBasisVector,
    FiniteGL,
    box_to_wedge,
    bracket,
    delta_action,
    to_fock,
    wedge_to_box,
)
from fockcalc.algebra.vertex import delta_gl
from fockcalc.errors import DimensionMismatch, ShapeOutOfBox


def box(parts, r, n):
    return BoxBasisVector.shape(parts, r, n)


def test_box_to_wedge():
    assert box_to_wedge(box((1, 0), 2, 4)) == ExtVector.wedge_of(2, 0)
    assert box_to_wedge(box((), 2, 4)) == ExtVector.wedge_of(1, 0)
    assert box_to_wedge(box((2, 1), 2, 4)) == ExtVector.wedge_of(3, 1)
    with pytest.raises(ShapeOutOfBox):
        box((3, 0), 2, 4)


def test_wedge_to_box_inverts():
    for v in BoxBasisVector.box_basis(3, 5):
        assert wedge_to_box(box_to_wedge(v), 3, 5) == v
    with pytest.raises(ShapeOutOfBox):
        wedge_to_box(ExtVector.wedge_of(4, 0), 2, 4)


def test_delta_action_examples():
    assert delta_action(FiniteGL.elementary(2, 0, 1), box((1,), 1, 2)) == box((), 1, 2)
    assert delta_action(FiniteGL.elementary(4, 1, 1), box((1,), 2, 4)) == 0
    assert delta_action(FiniteGL.elementary(4, 2, 2), box((1,), 2, 4)) == box((1,), 2, 4)


def test_elementary_matrix_moves_one_factor():
    assert delta_action(FiniteGL.elementary(3, 2, 1), box((), 2, 3)) == box((1,), 2, 3)
    with pytest.raises(DimensionMismatch):
        FiniteGL.elementary(3, 3, 1)


def test_bracket():
    b01, b10 = FiniteGL.elementary(2, 0, 1), FiniteGL.elementary(2, 1, 0)
    assert bracket(b01, b10) == FiniteGL.elementary(2, 0, 0) - FiniteGL.elementary(2, 1, 1)
    assert bracket(b01, b01).is_zero()
    assert bracket(FiniteGL.elementary(2, 0, 0), b01) == b01
    with pytest.raises(DimensionMismatch):
        bracket(b01, FiniteGL.zeros(3))


def test_representation_law():
    rng = random.Random(11)
    for n in range(1, 5):
        for r in range(1, min(n, 3) + 1):
            for _ in range(5):
                a, b = FiniteGL.random(n, rng), FiniteGL.random(n, rng)
                ab = bracket(a, b)
                for v in BoxBasisVector.box_basis(r, n):
                    left = delta_action(ab, v)
                    right = delta_action(a, delta_action(b, v)) - delta_action(b, delta_action(a, v))
                    assert left == right, (a, b, v)


def test_matches_the_action_on_fock_space():
    rng = random.Random(5)
    for n, r in ((3, 1), (4, 2), (5, 2)):
        a = FiniteGL.random(n, rng)
        for v in BoxBasisVector.box_basis(r, n):
            assert to_fock(delta_action(a, v)) == delta_gl(a.to_gl_element(), to_fock(v))


def test_to_fock():
    assert to_fock(box((), 2, 4)) == FockVector.vacuum(1)
    assert to_fock(box((1,), 2, 4)) == FockVector.basis_vector(1, (1,))


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        delta_action(FiniteGL.zeros(3), box((), 2, 4))
    with pytest.raises(DimensionMismatch):
        FiniteGL([[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        box((), 2, 4) + box((), 1, 4)


def test_json():
    a = FiniteGL([[1, -2], [0, 3]])
    data = a.to_json()
    assert data["n"] == 2
    assert FiniteGL.from_json(data) == a
    with pytest.raises(DimensionMismatch):
        FiniteGL.from_json({"n": 3, "rows": [[1, 0], [0, 1]]})
