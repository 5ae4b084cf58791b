#!/usr/bin/env python3
"""Tests for partition construction and the index combinatorics."""

import pytest

from fockcalc.algebra.partitions import (
    Partition,
    add_column,
    column,
    enumerate_bounded,
    make_partition,
    partitions_in_box,
    remove_part,
)
from fockcalc.errors import Negative, NonMonotone, PartitionError


def P(*parts):
    return make_partition(parts)


def test_make_partition_validates():
    lam = P(3, 1)
    assert lam.parts == (3, 1)
    assert lam.length == 2
    assert lam.weight == 4
    assert P().length == 0

    with pytest.raises(NonMonotone):
        P(1, 2)
    with pytest.raises(Negative):
        P(2, -1)
    # both are partition errors and value errors
    with pytest.raises(PartitionError):
        P(0, 1)
    with pytest.raises(ValueError):
        P(-3)


def test_trailing_zeros_are_stripped():
    assert P(2, 1, 0, 0) == P(2, 1)
    assert P(0) == P()
    assert P(2, 1).padded(4) == (2, 1, 0, 0)
    assert P(3, 1).part(1) == 3
    assert P(3, 1).part(5) == 0


def test_remove_part():
    assert remove_part(P(3, 2, 1), 2) == P(3, 1)
    assert remove_part(P(5), 1) == P()
    assert remove_part(P(2, 1), 5) == P(2, 1)
    with pytest.raises(ValueError):
        remove_part(P(2, 1), 0)


def test_add_column():
    assert add_column(P(2, 1), 3) == P(3, 2, 1)
    assert add_column(P(4), 0) == P(4)
    assert add_column(P(), 2) == P(1, 1)
    assert column(3) == P(1, 1, 1)


def test_remove_part_commutes_with_columns_below_it():
    for lam in enumerate_bounded(5, 4):
        for j in range(0, 4):
            for k in range(j + 1, 7):
                left = remove_part(add_column(lam, j), k)
                right = add_column(remove_part(lam, k), j)
                assert left == right, (lam, j, k)


def test_enumerate_bounded_order():
    assert enumerate_bounded(2, 2) == [P(), P(1), P(2), P(1, 1)]
    assert enumerate_bounded(0, 5) == [P()]
    assert enumerate_bounded(3, 1) == [P(), P(1), P(2), P(3)]
    assert enumerate_bounded(3, 3)[4:] == [P(3), P(2, 1), P(1, 1, 1)]


def test_enumerate_bounded_counts():
    # partition numbers p(0) + ... + p(6)
    assert len(enumerate_bounded(6, 6)) == 1 + 1 + 2 + 3 + 5 + 7 + 11
    assert all(lam.length <= 2 for lam in enumerate_bounded(6, 2))
    with pytest.raises(ValueError):
        enumerate_bounded(-1, 2)


def test_partitions_in_box():
    box = partitions_in_box(2, 2)
    assert box == [P(), P(1), P(2), P(1, 1), P(2, 1), P(2, 2)]
    assert all(isinstance(lam, Partition) for lam in box)
    assert P(3).fits_box(1, 3)
    assert not P(3).fits_box(2, 2)


def test_json():
    assert P(2, 1).to_json() == [2, 1]
    assert Partition.from_json([2, 1, 0]) == P(2, 1)
    assert str(P(2, 1)) == "(2,1)"
