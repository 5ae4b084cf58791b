#!/usr/bin/env python3
"""Tests for operator-expression parsing, window planning and evaluation."""

import pytest

from fockcalc.algebra.exterior import SchubertKind
from fockcalc.algebra.fock import FockMonomial, FockVector
from fockcalc.algebra.partitions import make_partition
from fockcalc.algebra.series import LaurentSeries
from fockcalc.errors import ExprParseError
from fockcalc.expr import evaluate, parse_expr, parse_seed, parse_window, parse_windows, plan_windows
from fockcalc.models import OpName

VACUUM = FockMonomial(0)


def seed(m, *shape):
    return FockMonomial(m, make_partition(shape))


def bv(m, *shape):
    return FockVector.basis_vector(m, shape)


def test_parse_composition():
    expr = parse_expr("sigma(bar+) sigma(+)")
    assert [p.name for p in expr.factors] == [OpName.SIGMA, OpName.SIGMA]
    assert expr.factors[0].args == (SchubertKind.BAR_PLUS,)
    assert expr.factors[1].args == (SchubertKind.PLUS,)
    assert expr.has_series


def test_parse_scalars_and_arguments():
    expr = parse_expr("2 djkm(1,0) giambelli(2, 1) gamma_star(explicit) r_op(-) zeta(-3)")
    names = [p.name for p in expr.factors]
    assert names == [OpName.SCALE, OpName.DJKM, OpName.GIAMBELLI, OpName.GAMMA_STAR, OpName.R_OP, OpName.ZETA]
    assert expr.factors[0].args == (2,)
    assert expr.factors[1].args == (1, 0)
    assert expr.factors[2].args == (make_partition((2, 1)),)
    assert expr.factors[3].args == ("explicit",)
    assert expr.factors[4].args == (True,)
    assert expr.factors[5].args == (-3,)
    assert parse_expr("gamma").factors[0].args == ("direct",)
    assert not parse_expr("djkm(0,0)").has_series


@pytest.mark.parametrize("text", [
    "",
    "foo(1)",
    "sigma(up)",
    "sigma",
    "r_op(*)",
    "giambelli(1,2)",
    "djkm(1)",
    "djkm(a,b)",
    "gamma(fast)",
    "scale(2)",
    "sigma(+) )",
])
def test_parse_errors(text):
    with pytest.raises(ExprParseError):
        parse_expr(text)


def test_parse_windows():
    assert parse_window("0:2") == (0, 2)
    assert parse_window(" -3 : -1 ") == (-3, -1)
    assert parse_windows("0:2,-1:1") == [(0, 2), (-1, 1)]
    for bad in ("2:0", "abc", "1:", "0:2:4"):
        with pytest.raises(ExprParseError):
            parse_window(bad)


def test_parse_seed():
    assert parse_seed('{"charge": 0, "shape": [2,1]}') == seed(0, 2, 1)
    assert parse_seed('{"charge": -2}') == FockMonomial(-2)
    for bad in ('{"charge": 0, "shape": [1,2]}', "not json", '{"shape": []}'):
        with pytest.raises(ExprParseError):
            parse_seed(bad)


def test_plan_windows():
    # σ̄₊ on the output window needs σ₊ from weight 0 (z^-1 for a weight-1 seed) up
    assert plan_windows(parse_expr("sigma(bar+) sigma(+)"), seed(0, 1), (0, 3)) == [(0, 3), (-1, 3)]
    assert plan_windows(parse_expr("djkm(1,0)"), VACUUM, (0, 0)) == [None]


def test_sigma_plus_on_vacuum():
    result = evaluate("sigma(+)", VACUUM, (0, 2))
    assert isinstance(result, LaurentSeries)
    assert result.coeffs == {0: bv(0), 1: bv(0, 1), 2: bv(0, 2)}


def test_inverse_pair_is_identity():
    f = seed(0, 1)
    assert evaluate("sigma(bar+) sigma(+)", f, (0, 3)).coeffs == {0: bv(0, 1)}
    assert evaluate("sigma(bar-) sigma(-)", seed(1, 2, 1), (-3, 0)).coeffs == {0: bv(1, 2, 1)}


def test_plain_operators():
    assert evaluate("giambelli(2,1)", VACUUM, (0, 0)) == bv(0, 2, 1)
    assert evaluate("djkm(1,0)", VACUUM, (0, 0)) == bv(0, 1)
    assert evaluate("2 djkm(1,0)", VACUUM, (0, 0)) == 2 * bv(0, 1)
    assert evaluate("djkm_hat(0,0)", VACUUM, (0, 0)) == 0
    assert evaluate("zeta(2) giambelli(1)", VACUUM, (0, 0)) == bv(2, 1)


def test_vertex_operators():
    assert evaluate("gamma", VACUUM, (1, 1)).coeffs == {1: bv(1)}
    assert evaluate("gamma_star(explicit)", VACUUM, (-1, -1)).coeffs == {-1: bv(-1)}
    assert evaluate("r_op(-) r_op(+)", VACUUM, (0, 0)).coeffs == {0: bv(0)}


def test_r_op_on_a_wider_window():
    result = evaluate("r_op(+)", seed(1, 2), (-2, 4))
    assert result.window == (-2, 4)
    assert result.coeffs == {2: bv(2, 2)}
    assert result.bounded_below and result.bounded_above
    assert result.coeff(-6) == 0
    missed = evaluate("r_op(-)", seed(1, 2), (0, 3))
    assert missed.window == (0, 3)
    assert missed.coeffs == {}


def test_plain_operator_after_series():
    # b_{-1} is a factor of every [b]_{0+(i)}, so δ(ℬ_{-1,-1}) fixes them
    result = evaluate("djkm(-1,-1) sigma(+)", VACUUM, (0, 2))
    assert result.coeffs == {0: bv(0), 1: bv(0, 1), 2: bv(0, 2)}


def test_unsummable_composition_is_rejected():
    with pytest.raises(ExprParseError):
        evaluate("sigma(-) sigma(+)", VACUUM, (0, 2))
