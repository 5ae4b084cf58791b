#!/usr/bin/env python3
"""Tests for the identity suites and their runner."""

import random
from unittest.mock import patch

import pytest

from fockcalc.algebra.exterior import SchubertKind
from fockcalc.algebra.fock import giambelli
from fockcalc.algebra.glrep import FiniteGL
from fockcalc.algebra.partitions import make_partition
from fockcalc.errors import InsufficientWindow
from fockcalc.models import CaseResult, SuiteReport
from fockcalc.suites import (
    SIZES,
    SUITE_NAMES,
    SuiteCase,
    build_cases,
    check_djkm,
    check_eh_convolution,
    check_elementary_lemma,
    check_gamma,
    check_gl_law,
    check_inverse,
    check_noncommutation,
    check_normal_ordering,
    check_pieri,
    check_sigma_minus_determinant,
    check_sigma_minus_ring,
    check_vacuum_identity,
    run_cases,
    run_suite,
)


def P(*parts):
    return make_partition(parts)


def test_build_cases():
    cases = build_cases("giambelli", "small")
    assert cases
    assert all(c.suite == "giambelli" for c in cases)
    assert [c.order for c in cases] == list(range(len(cases)))
    assert all(c.case_id.startswith("giambelli/") for c in cases)
    every = build_cases("all", "small")
    assert {c.suite for c in every} == set(SUITE_NAMES)


def test_build_cases_rejects_unknown_names():
    with pytest.raises(ValueError):
        build_cases("nope", "small")
    with pytest.raises(ValueError):
        build_cases("giambelli", "huge")


def test_boson_cases_cover_nonzero_charges():
    ids = [c.case_id for c in build_cases("boson", "small")]
    assert any(i.startswith("boson/h_1 [b]_{-1+") for i in ids)
    assert any(i.startswith("boson/e_2 [b]_{1+") for i in ids)
    assert any(i.startswith("boson/ring #") for i in ids)


def test_randomized_cases_follow_the_seed():
    first = [c.case_id for c in build_cases("djkm", "small", seed=1)]
    again = [c.case_id for c in build_cases("djkm", "small", seed=1)]
    assert first == again


def test_individual_checks():
    assert check_noncommutation()[0]
    assert check_inverse(True, 0, P(1), 3)[0]
    assert check_inverse(False, -1, P(2, 1), 3)[0]
    assert check_pieri(P(2, 1), 2, False)[0]
    assert check_pieri(P(2, 1), 2, True)[0]
    assert check_pieri(P(2, 1), 3, False, -2)[0]
    assert check_pieri(P(1, 1), 2, True, 2)[0]
    assert check_eh_convolution(4)[0]
    assert check_elementary_lemma(0, 2)[0]
    assert check_vacuum_identity(2, 2)[0]
    assert check_sigma_minus_determinant(SchubertKind.BAR_MINUS, P(2, 1))[0]
    assert check_sigma_minus_ring(SchubertKind.MINUS, P(1), P(1))[0]
    assert check_gamma(True, 0, P(1), 2)[0]
    assert check_normal_ordering(0, P(), 0, 0)[0]
    assert check_djkm(0, P(1), 2)[0]


def test_ring_cases_reach_weight_four():
    assert SIZES["default"].ring_weight == 4
    assert SIZES["small"].ring_weight == 3
    assert check_sigma_minus_ring(SchubertKind.BAR_MINUS, P(2, 2), P(3, 1))[0]
    assert check_sigma_minus_ring(SchubertKind.MINUS, P(1, 1, 1, 1), P(4))[0]


def test_gl_law_check():
    rng = random.Random(3)
    a, b = FiniteGL.random(3, rng), FiniteGL.random(3, rng)
    ok, detail = check_gl_law(a, b, 2)
    assert ok
    assert detail == {}


def test_giambelli_suite_passes():
    report = run_suite("giambelli", "small")
    assert report.ok
    assert report.total == len(build_cases("giambelli", "small"))
    assert report.summary_line() == f"PASS {report.total}/{report.total}"
    data = report.to_json()
    assert data["status"] == "PASS"
    assert data["counterexample"] is None
    assert data["suites"] == {"giambelli": {"passed": report.total, "total": report.total}}


def test_parallel_run_keeps_case_order():
    cases = build_cases("glrep", "small")
    report = run_cases("glrep", "small", cases, workers=4)
    assert report.ok
    assert [r.case_id for r in report.results] == [c.case_id for c in cases]


def test_corrupted_sign_is_reported():
    def flipped(lam, m):
        return -giambelli(lam, m)

    with patch("fockcalc.suites.giambelli", side_effect=flipped):
        report = run_suite("giambelli", "small")
    assert not report.ok
    assert report.passed == 0
    failure = report.first_failure()
    assert failure.case_id == report.results[0].case_id
    assert "actual" in failure.detail
    assert report.to_json()["status"] == "FAIL"


def test_errors_become_failed_cases():
    def broken():
        raise InsufficientWindow("window too small")

    case = SuiteCase("inverse", 0, "inverse/broken", broken)
    report = run_cases("inverse", "small", [case])
    assert report.total == 1
    assert not report.ok
    result = report.results[0]
    assert result.error == "InsufficientWindow: window too small"
    assert result.to_json() == {"suite": "inverse", "case": "inverse/broken", "passed": False,
                                "error": "InsufficientWindow: window too small"}


def test_report_grouping():
    report = SuiteReport("all", "small", [
        CaseResult("boson", "boson/a", True),
        CaseResult("boson", "boson/b", False, {"n": 1}),
        CaseResult("glrep", "glrep/a", True),
    ])
    assert report.by_suite() == {"boson": (1, 2), "glrep": (1, 1)}
    assert report.first_failure().case_id == "boson/b"
    assert report.summary_line() == "FAIL 2/3"
