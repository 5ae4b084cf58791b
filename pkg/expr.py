"""Operator expressions: parsing, window planning and evaluation.

An expression is a whitespace-separated composition of primitives,
applied right to left: in ``sigma(bar+) sigma(+)`` the operator σ₊ acts
on the seed first. Series-valued primitives (sigma, gamma, gamma_star,
r_op) share one variable z, so a composition of them is a product of
operator series in the same variable.

Before evaluating, the needed window of every intermediate series is
computed from the requested output window. The bounds come from the
weight grading: every primitive maps a vector of charge m and weight w
sitting at z^e to vectors whose weight is an affine function of e, and
weights are never negative.
"""

import json
import logging
import re
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .algebra.exterior import SchubertKind
from .algebra.fock import (
    FockMonomial,
    FockVector,
    r_op,
    schubert_op,
    schur_operator,
    zeta_shift,
)
from .algebra.partitions import make_partition
from .algebra.series import LaurentSeries, Support, Window, compose
from .algebra.vertex import GAMMA_METHODS, GAMMA_STAR_METHODS, djkm, djkm_modified, gamma, gamma_star
from .errors import ExprParseError, PartitionError
from .models import OperatorExpr, OpName, Primitive

logger = logging.getLogger(__name__)

Result = Union[FockVector, LaurentSeries]

_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z_]+)\s*(?:\((?P<args>[^()]*)\))?|(?P<int>[+-]?\d+))")
_WINDOW = re.compile(r"^\s*([+-]?\d+)\s*:\s*([+-]?\d+)\s*$")

# (charge, base, upper): the coefficient at z^e has weight base + e;
# upper is the highest exponent that can be nonzero, None when unbounded
Track = Tuple[int, int, Optional[int]]


# -- parsing ----------------------------------------------------------------

def _int_args(args: Sequence[str], text: str) -> List[int]:
    try:
        return [int(a) for a in args]
    except ValueError:
        raise ExprParseError(f"{text}: expected integer arguments") from None


def _primitive(name: str, raw_args: Optional[str], text: str) -> Primitive:
    try:
        op = OpName(name)
    except ValueError:
        raise ExprParseError(f"unknown operator {name!r} in {text!r}") from None
    if op is OpName.SCALE:
        raise ExprParseError(f"write a scale factor as a bare integer, not {text!r}")
    args = [a.strip() for a in raw_args.split(",")] if raw_args and raw_args.strip() else []

    if op is OpName.SIGMA:
        if len(args) != 1:
            raise ExprParseError(f"{text}: sigma takes one of +, -, bar+, bar-")
        try:
            return Primitive(op, (SchubertKind.parse(args[0]),), text)
        except ValueError as exc:
            raise ExprParseError(f"{text}: {exc}") from None
    if op is OpName.GIAMBELLI:
        try:
            return Primitive(op, (make_partition(_int_args(args, text)),), text)
        except PartitionError as exc:
            raise ExprParseError(f"{text}: {exc}") from None
    if op in (OpName.GAMMA, OpName.GAMMA_STAR):
        allowed = GAMMA_METHODS if op is OpName.GAMMA else GAMMA_STAR_METHODS
        if len(args) > 1 or (args and args[0] not in allowed):
            raise ExprParseError(f"{text}: optional method must be one of {', '.join(allowed)}")
        return Primitive(op, (args[0] if args else "direct",), text)
    if op in (OpName.DJKM, OpName.DJKM_HAT):
        if len(args) != 2:
            raise ExprParseError(f"{text}: {name} takes two integers i,j")
        return Primitive(op, tuple(_int_args(args, text)), text)
    if op is OpName.R_OP:
        if args not in (["+"], ["-"]):
            raise ExprParseError(f"{text}: r_op takes + or -")
        return Primitive(op, (args[0] == "-",), text)
    # zeta
    if len(args) != 1:
        raise ExprParseError(f"{text}: zeta takes one integer")
    return Primitive(op, tuple(_int_args(args, text)), text)


def parse_expr(text: str) -> OperatorExpr:
    """Parse a composition such as ``"sigma(bar+) sigma(+)"`` or ``"2 djkm(1,0)"``."""
    factors: List[Primitive] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None or match.end() == pos:
            raise ExprParseError(f"cannot parse {stripped[pos:]!r} at offset {pos} of {text!r}")
        token = match.group(0).strip()
        if match.group("int") is not None:
            factors.append(Primitive(OpName.SCALE, (int(match.group("int")),), token))
        else:
            factors.append(_primitive(match.group("name"), match.group("args"), token))
        pos = match.end()
    if not factors:
        raise ExprParseError("empty expression")
    logger.debug(f"parsed {text!r} into {len(factors)} primitives")
    return OperatorExpr(factors, text.strip())


def parse_window(text: str) -> Window:
    """``"LO:HI"`` into (LO, HI)."""
    match = _WINDOW.match(text)
    if match is None:
        raise ExprParseError(f"window must look like LO:HI, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise ExprParseError(f"empty window {text!r}")
    return lo, hi


def parse_windows(text: str) -> List[Window]:
    """Comma-separated windows, one per variable."""
    return [parse_window(part) for part in text.split(",")]


def parse_seed(text: str) -> FockMonomial:
    """A seed basis vector from ``{"charge": m, "shape": [...]}``."""
    try:
        data = json.loads(text)
        return FockMonomial.from_json(data)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PartitionError):
            raise ExprParseError(f"seed shape: {exc}") from None
        raise ExprParseError(f"seed must be JSON like {{\"charge\": 0, \"shape\": [2,1]}}, got {text!r}") from None


# -- static window planning -------------------------------------------------

def _advance(p: Primitive, track: Track) -> Track:
    m, base, upper = track
    name = p.name
    if name is OpName.SIGMA:
        return (m, base, upper if not p.args[0].raises else None)
    if name is OpName.GAMMA:
        return (m + 1, base - m - 1, None)
    if name is OpName.GAMMA_STAR:
        return (m - 1, base + m + 1, None)
    if name is OpName.R_OP:
        shift = -m if p.args[0] else m + 1
        return (m - 1 if p.args[0] else m + 1, base - shift, None if upper is None else upper + shift)
    if name is OpName.ZETA:
        return (m + p.args[0], base, upper)
    if name in (OpName.DJKM, OpName.DJKM_HAT):
        i, j = p.args
        return (m, base + i - j, upper)
    if name is OpName.GIAMBELLI:
        return (m, base + p.args[0].weight, upper)
    return track


def _support(p: Primitive, track: Track) -> Support:
    if p.name is OpName.SIGMA:
        return (0, None) if p.args[0].raises else (None, 0)
    if p.name is OpName.R_OP:
        shift = -track[0] if p.args[0] else track[0] + 1
        return (shift, shift)
    return (None, None)


def _required(p: Primitive, out: Window, track: Track) -> Window:
    """Input window that determines ``p`` applied to a series on ``out``."""
    _, base, upper = track
    if not p.name.is_series:
        return out
    floor = -base
    c, d = _support(p, track)
    lo = floor if d is None else max(out[0] - d, floor)
    hi = upper if c is None else (out[1] - c if upper is None else min(out[1] - c, upper))
    if hi is None:
        raise ExprParseError(
            f"{p.text} applied to a series unbounded above in z is not a finite sum; "
            f"reorder the expression"
        )
    if lo > hi:
        return (floor, floor)
    return (lo, hi)


def plan_windows(expr: OperatorExpr, seed: FockMonomial, window: Window) -> List[Optional[Window]]:
    """Output window of every factor, None for factors that produce plain vectors."""
    n = len(expr.factors)
    tracks: List[Track] = [(0, 0, None)] * n
    series_before = [False] * n
    track: Track = (seed.charge, seed.shape.weight, 0)
    is_series = False
    for k in range(n - 1, -1, -1):
        tracks[k] = track
        series_before[k] = is_series
        track = _advance(expr.factors[k], track)
        is_series = is_series or expr.factors[k].name.is_series
    windows: List[Optional[Window]] = [None] * n
    if not is_series:
        return windows
    out = window
    for k in range(n):
        windows[k] = out
        if not series_before[k]:
            break
        out = _required(expr.factors[k], out, tracks[k])
    return windows


# -- evaluation -------------------------------------------------------------

def _polynomial_on_window(series: LaurentSeries, window: Window) -> LaurentSeries:
    """A polynomial series on ``window``, flagged complete where it is."""
    return LaurentSeries(window[0], window[1], series.coeffs, series.zero, series.var,
                         series.lo >= window[0], series.hi <= window[1])


def _series_op(p: Primitive) -> Callable[[FockVector, Window], LaurentSeries]:
    if p.name is OpName.SIGMA:
        return schubert_op(p.args[0])
    if p.name is OpName.GAMMA:
        return lambda v, win: gamma(v, win, p.args[0])
    if p.name is OpName.GAMMA_STAR:
        return lambda v, win: gamma_star(v, win, p.args[0])
    return lambda v, win: _polynomial_on_window(r_op(v, p.args[0]), win)


def _plain_op(p: Primitive) -> Callable[[FockVector], FockVector]:
    if p.name is OpName.GIAMBELLI:
        return lambda v: schur_operator(p.args[0], v)
    if p.name is OpName.DJKM:
        return lambda v: djkm(p.args[0], p.args[1], v)
    if p.name is OpName.DJKM_HAT:
        return lambda v: djkm_modified(p.args[0], p.args[1], v)
    if p.name is OpName.ZETA:
        return lambda v: zeta_shift(v, p.args[0])
    return lambda v: p.args[0] * v


def _with_static_bounds(series: LaurentSeries, track: Track) -> LaurentSeries:
    _, base, upper = track
    bb = series.bounded_below or series.lo <= -base
    ba = series.bounded_above or (upper is not None and series.hi >= upper)
    return LaurentSeries(series.lo, series.hi, series.coeffs, series.zero, series.var, bb, ba)


def eval_expr(expr: OperatorExpr, seed: FockMonomial, window: Window) -> Result:
    """Apply the composite operator to the seed basis vector.

    Returns a series on ``window`` when the expression contains a
    series-valued primitive, a FockVector otherwise.
    """
    windows = plan_windows(expr, seed, window)
    state: Result = FockVector({seed: 1})
    track: Track = (seed.charge, seed.shape.weight, 0)
    for k in range(len(expr.factors) - 1, -1, -1):
        p = expr.factors[k]
        before = track
        track = _advance(p, track)
        if p.name.is_series:
            win = windows[k]
            if isinstance(state, LaurentSeries):
                state = compose(_series_op(p), state, win, _support(p, before))
            else:
                state = _series_op(p)(state, win)
            state = _with_static_bounds(state, track)
            logger.debug(f"{p.text} on window {win}")
        elif isinstance(state, LaurentSeries):
            state = state.map_coeffs(_plain_op(p), FockVector())
        else:
            state = _plain_op(p)(state)
    return state


def evaluate(text: str, seed: FockMonomial, window: Window) -> Result:
    """Parse and evaluate in one step."""
    return eval_expr(parse_expr(text), seed, window)

