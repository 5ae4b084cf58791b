"""Exact windowed Laurent series over abelian-group coefficients.

A ``LaurentSeries`` stores the coefficients of a formal series on an
exponent window [lo, hi]. Inside the window every coefficient is exact;
outside it nothing is claimed unless one of the ``bounded_below`` /
``bounded_above`` flags says the series has no terms past that end.
Multivariate series nest: the coefficients of the outer variable are
themselves ``LaurentSeries`` in the inner one.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Generic, Iterator, List, Mapping, Optional, Sequence, Tuple, TypeVar, Union

from ..errors import InsufficientWindow

logger = logging.getLogger(__name__)

C = TypeVar("C")

Window = Tuple[int, int]
# (c, d) exponent support of an operator; None is an unbounded side
Support = Tuple[Optional[int], Optional[int]]

Z_OVER_W = "z_over_w"
W_OVER_Z = "w_over_z"


def _is_zero(value: Any) -> bool:
    return not value


@dataclass(eq=False)
class LaurentSeries(Generic[C]):
    """Coefficients of a formal Laurent series on the window [lo, hi]."""

    lo: int
    hi: int
    coeffs: Dict[int, C] = field(default_factory=dict)
    zero: Any = 0
    var: str = "z"
    bounded_below: bool = False
    bounded_above: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")
        self.coeffs = {
            k: v for k, v in self.coeffs.items()
            if self.lo <= k <= self.hi and not _is_zero(v)
        }

    # -- constructors -------------------------------------------------------

    @classmethod
    def polynomial(cls, terms: Mapping[int, C], zero: Any = 0, var: str = "z",
                   window: Optional[Window] = None) -> "LaurentSeries[C]":
        """A finite series: known to vanish outside its window."""
        keys = [k for k, v in terms.items() if not _is_zero(v)]
        if window is None:
            window = (min(keys), max(keys)) if keys else (0, 0)
        lo, hi = window
        if any(k < lo or k > hi for k in keys):
            raise ValueError(f"terms {sorted(keys)} fall outside window {window}")
        return cls(lo, hi, dict(terms), zero, var, True, True)

    @classmethod
    def truncated(cls, terms: Mapping[int, C], window: Window, zero: Any = 0, var: str = "z",
                  bounded_below: bool = False, bounded_above: bool = False) -> "LaurentSeries[C]":
        return cls(window[0], window[1], dict(terms), zero, var, bounded_below, bounded_above)

    @classmethod
    def zeros(cls, window: Window, zero: Any = 0, var: str = "z") -> "LaurentSeries[C]":
        return cls(window[0], window[1], {}, zero, var, True, True)

    # -- inspection ---------------------------------------------------------

    @property
    def window(self) -> Window:
        return (self.lo, self.hi)

    def known_lo(self) -> Optional[int]:
        """Lowest exponent that may be nonzero, None when unbounded."""
        return self.lo if self.bounded_below else None

    def known_hi(self) -> Optional[int]:
        return self.hi if self.bounded_above else None

    def is_known(self, k: int) -> bool:
        if self.lo <= k <= self.hi:
            return True
        return (k < self.lo and self.bounded_below) or (k > self.hi and self.bounded_above)

    def coeff(self, k: int) -> C:
        if not self.is_known(k):
            raise InsufficientWindow(
                f"coefficient of {self.var}^{k} lies outside the window [{self.lo}, {self.hi}]"
            )
        return self.coeffs.get(k, self.zero)

    def __getitem__(self, k: int) -> C:
        return self.coeff(k)

    def items(self) -> Iterator[Tuple[int, C]]:
        return iter(sorted(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.window == other.window and self.coeffs == other.coeffs

    __hash__ = None

    # -- arithmetic ---------------------------------------------------------

    def _like(self, lo: int, hi: int, coeffs: Dict[int, Any], bb: bool, ba: bool) -> "LaurentSeries[C]":
        return LaurentSeries(lo, hi, coeffs, self.zero, self.var, bb, ba)

    def __add__(self, other: "LaurentSeries[C]") -> "LaurentSeries[C]":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if other.var != self.var:
            raise ValueError(f"cannot add series in {self.var} and {other.var}")
        # the sum is known wherever both summands are known
        bb = self.bounded_below and other.bounded_below
        ba = self.bounded_above and other.bounded_above
        if bb:
            lo = min(self.lo, other.lo)
        else:
            lo = max(s.lo for s in (self, other) if not s.bounded_below)
        if ba:
            hi = max(self.hi, other.hi)
        else:
            hi = min(s.hi for s in (self, other) if not s.bounded_above)
        if lo > hi:
            raise InsufficientWindow(
                f"windows [{self.lo}, {self.hi}] and [{other.lo}, {other.hi}] share no exact exponent"
            )
        coeffs: Dict[int, Any] = {}
        for k in range(lo, hi + 1):
            a = self.coeffs.get(k)
            b = other.coeffs.get(k)
            if a is None and b is None:
                continue
            total = b if a is None else (a if b is None else a + b)
            if not _is_zero(total):
                coeffs[k] = total
        return self._like(lo, hi, coeffs, bb, ba)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries[C]":
        return self._like(self.lo, self.hi, {k: -v for k, v in self.coeffs.items()},
                          self.bounded_below, self.bounded_above)

    def __sub__(self, other: "LaurentSeries[C]") -> "LaurentSeries[C]":
        return self + (-other)

    def __mul__(self, scalar: int) -> "LaurentSeries[C]":
        if not isinstance(scalar, int):
            return NotImplemented
        return self._like(self.lo, self.hi, {k: scalar * v for k, v in self.coeffs.items()},
                          self.bounded_below, self.bounded_above)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentSeries[C]":
        """Multiply by var^k."""
        return self._like(self.lo + k, self.hi + k, {e + k: v for e, v in self.coeffs.items()},
                          self.bounded_below, self.bounded_above)

    def restrict(self, lo: int, hi: int) -> "LaurentSeries[C]":
        """The same series on a narrower (or flag-extended) window."""
        if not (self.is_known(lo) and self.is_known(hi)):
            raise InsufficientWindow(
                f"cannot restrict [{self.lo}, {self.hi}] to [{lo}, {hi}]"
            )
        bb = self.bounded_below and lo <= self.lo
        ba = self.bounded_above and hi >= self.hi
        return self._like(lo, hi, dict(self.coeffs), bb, ba)

    def map_coeffs(self, fn: Callable[[C], Any], zero: Any = None) -> "LaurentSeries[Any]":
        """Apply a linear map to every coefficient (window and flags preserved)."""
        new_zero = fn(self.zero) if zero is None else zero
        return LaurentSeries(self.lo, self.hi, {k: fn(v) for k, v in self.coeffs.items()},
                             new_zero, self.var, self.bounded_below, self.bounded_above)

    def with_var(self, var: str) -> "LaurentSeries[C]":
        return LaurentSeries(self.lo, self.hi, dict(self.coeffs), self.zero, var,
                             self.bounded_below, self.bounded_above)

    def to_json(self, encode: Callable[[Any], Any]) -> Dict[str, Any]:
        return {
            "var": self.var,
            "lo": self.lo,
            "hi": self.hi,
            "coeffs": {str(k): encode(v) for k, v in sorted(self.coeffs.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any], decode: Callable[[Any], Any], zero: Any = 0) -> "LaurentSeries[Any]":
        return cls(int(data["lo"]), int(data["hi"]),
                   {int(k): decode(v) for k, v in data["coeffs"].items()},
                   zero, data.get("var", "z"))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.coeffs.items()))
        return f"LaurentSeries({self.var}, [{self.lo}, {self.hi}], {{{body}}})"


BiLaurent = LaurentSeries  # LaurentSeries whose coefficients are LaurentSeries


# -- window arithmetic ------------------------------------------------------

def _unknown_rays(s: LaurentSeries) -> List[Tuple[Optional[int], Optional[int]]]:
    """Exponent ranges where ``s`` may be nonzero but is not stored."""
    rays = []
    if not s.bounded_below:
        rays.append((None, s.lo - 1))
    if not s.bounded_above:
        rays.append((s.hi + 1, None))
    return rays


def _support(s: LaurentSeries) -> Tuple[Optional[int], Optional[int]]:
    return (s.known_lo(), s.known_hi())


def _meets(lo: Optional[int], hi: Optional[int], slo: Optional[int], shi: Optional[int]) -> bool:
    """Do the (possibly unbounded) intervals [lo, hi] and [slo, shi] intersect?"""
    left = max((x for x in (lo, slo) if x is not None), default=None)
    right = min((x for x in (hi, shi) if x is not None), default=None)
    return left is None or right is None or left <= right


def _product_exact(a: LaurentSeries, b: LaurentSeries, e: int) -> bool:
    # coefficient e of a*b is exact unless some unknown a_k meets a possibly
    # nonzero b_{e-k}, or symmetrically
    for first, second in ((a, b), (b, a)):
        slo, shi = _support(second)
        for rlo, rhi in _unknown_rays(first):
            # k in [rlo, rhi]  ->  e - k in [e - rhi, e - rlo]
            lo = None if rhi is None else e - rhi
            hi = None if rlo is None else e - rlo
            if _meets(lo, hi, slo, shi):
                return False
    return True


def _product_flags(a: LaurentSeries, b: LaurentSeries, out: Window) -> Tuple[bool, bool]:
    bb = a.bounded_below and b.bounded_below and out[0] <= a.lo + b.lo
    ba = a.bounded_above and b.bounded_above and out[1] >= a.hi + b.hi
    return bb, ba


def _zero_like(template: Any, windows: Sequence[Window]) -> Any:
    if not windows or not isinstance(template, LaurentSeries):
        return template
    return LaurentSeries(windows[0][0], windows[0][1], {}, _zero_like(template.zero, windows[1:]),
                         template.var, True, True)


def _coeff_product(x: Any, y: Any, inner: Sequence[Window]) -> Any:
    if isinstance(y, LaurentSeries):
        if not inner:
            raise ValueError("nested product needs a window for every nesting level")
        return series_mul(x, y, inner)
    return y * x


def series_mul(a: LaurentSeries, b: LaurentSeries, out_window: Union[Window, Sequence[Window]]) -> LaurentSeries:
    """Product of ``a`` (any coefficients) by ``b`` (integer, or nested integer series).

    ``out_window`` is one window, or one window per nesting level
    (outermost first). Raises InsufficientWindow when some requested
    coefficient is not determined by the stored data.
    """
    if out_window and isinstance(out_window[0], int):
        windows: Sequence[Window] = [tuple(out_window)]  # type: ignore[list-item]
    else:
        windows = list(out_window)  # type: ignore[arg-type]
    (lo, hi), inner = windows[0], windows[1:]
    if a.var != b.var:
        raise ValueError(f"cannot multiply series in {a.var} and {b.var}")
    for e in range(lo, hi + 1):
        if not _product_exact(a, b, e):
            raise InsufficientWindow(
                f"{a.var}^{e} of the product of [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] "
                f"is not determined; widen the input windows"
            )
    zero = _zero_like(a.zero, inner)
    acc: Dict[int, Any] = {}
    for k, x in a.coeffs.items():
        for l, y in b.coeffs.items():
            e = k + l
            if lo <= e <= hi:
                term = _coeff_product(x, y, inner)
                acc[e] = term if e not in acc else acc[e] + term
    bb, ba = _product_flags(a, b, (lo, hi))
    return LaurentSeries(lo, hi, acc, zero, a.var, bb, ba)


def required_window(out: Window, support: Support) -> Tuple[Optional[int], Optional[int]]:
    """Input exponents that can reach ``out`` through an operator with ``support``."""
    c, d = support
    lo = None if d is None else out[0] - d
    hi = None if c is None else out[1] - c
    return lo, hi


def compose(op: Callable[[Any, Window], LaurentSeries], inner: LaurentSeries, out: Window,
            support: Support) -> LaurentSeries:
    """Σ_k var^k · op(inner_k) on ``out``, for an operator in the same variable.

    ``op(vector, window)`` must return an exact series on ``window``;
    ``support`` bounds the exponents ``op`` can produce. The inner series
    must be exact on every exponent that can contribute.
    """
    need_lo, need_hi = required_window(out, support)
    ilo, ihi = inner.known_lo(), inner.known_hi()
    lo = need_lo if ilo is None else (ilo if need_lo is None else max(need_lo, ilo))
    hi = need_hi if ihi is None else (ihi if need_hi is None else min(need_hi, ihi))
    empty = lo is not None and hi is not None and lo > hi
    if not empty and (lo is None or hi is None or lo < inner.lo or hi > inner.hi):
        raise InsufficientWindow(
            f"operator needs inner exponents [{lo}, {hi}] but the inner series is exact "
            f"only on [{inner.lo}, {inner.hi}]"
        )
    c, d = support
    acc: Dict[int, Any] = {}
    for k, vec in ([] if empty else inner.coeffs.items()):
        if k < lo or k > hi:
            continue
        wlo = out[0] - k if c is None else max(out[0] - k, c)
        whi = out[1] - k if d is None else min(out[1] - k, d)
        if wlo > whi:
            continue
        image = op(vec, (wlo, whi))
        for e, v in image.coeffs.items():
            t = e + k
            acc[t] = v if t not in acc else acc[t] + v
    bb = inner.bounded_below and c is not None and out[0] <= inner.lo + c
    ba = inner.bounded_above and d is not None and out[1] >= inner.hi + d
    logger.debug(f"composed over inner [{lo}, {hi}] into {out}")
    return LaurentSeries(out[0], out[1], acc, inner.zero, inner.var, bb, ba)


def expand_geometric(direction: str, numerator: str, window: Window, outer: str = "z") -> LaurentSeries:
    """Directed expansion of a geometric prefactor, terms k in ``window``.

    ``(w_over_z, "z")``: i_{z,w} z/(z-w) = Σ_{k>=0} (w/z)^k
    ``(z_over_w, "w")``: i_{w,z} w/(w-z) = Σ_{k>=0} (z/w)^k
    The result is nested with ``outer`` as the outer variable. Each outer
    coefficient is a single monomial, so the inner series are exact
    polynomials; the outer series is truncated on the k > max side.
    """
    klo, khi = window
    if klo > khi:
        raise ValueError(f"empty term window {window}")
    klo = max(klo, 0)
    if khi < klo:
        raise ValueError(f"term window {window} holds no k >= 0")
    if direction == W_OVER_Z and numerator == "z":
        z_sign, w_sign = -1, 1
    elif direction == Z_OVER_W and numerator == "w":
        z_sign, w_sign = 1, -1
    else:
        raise ValueError(f"unsupported expansion ({direction}, {numerator})")
    if outer == "z":
        inner_var, o_sign, i_sign = "w", z_sign, w_sign
    elif outer == "w":
        inner_var, o_sign, i_sign = "z", w_sign, z_sign
    else:
        raise ValueError(f"outer variable must be z or w, got {outer!r}")
    olo, ohi = sorted((o_sign * klo, o_sign * khi))
    ilo, ihi = sorted((i_sign * klo, i_sign * khi))
    terms = {
        o_sign * k: LaurentSeries.polynomial({i_sign * k: 1}, 0, inner_var, window=(ilo, ihi))
        for k in range(klo, khi + 1)
    }
    # the k = 0 end is complete only when the term window starts there
    complete_start = window[0] <= 0
    bb = complete_start if o_sign == 1 else False
    ba = complete_start if o_sign == -1 else False
    return LaurentSeries(olo, ohi, terms, LaurentSeries.zeros((ilo, ihi), 0, inner_var), outer, bb, ba)


def transpose(s: LaurentSeries) -> LaurentSeries:
    """Swap the two variables of a nested series.

    Every inner coefficient must share one window; the flags of the new
    inner series are those of the old outer one, and vice versa.
    """
    inner_zero = s.zero
    if not isinstance(inner_zero, LaurentSeries):
        raise ValueError("transpose needs a nested series")
    ilo, ihi = inner_zero.window
    ibb, iba = inner_zero.bounded_below, inner_zero.bounded_above
    for inner in s.coeffs.values():
        if inner.window != (ilo, ihi):
            raise ValueError(f"inner windows differ: {inner.window} vs {(ilo, ihi)}")
        ibb = ibb and inner.bounded_below
        iba = iba and inner.bounded_above
    base_zero = inner_zero.zero
    swapped: Dict[int, Dict[int, Any]] = {}
    for k, inner in s.coeffs.items():
        for l, v in inner.coeffs.items():
            swapped.setdefault(l, {})[k] = v
    new_zero = LaurentSeries(s.lo, s.hi, {}, base_zero, s.var, s.bounded_below, s.bounded_above)
    coeffs = {
        l: LaurentSeries(s.lo, s.hi, row, base_zero, s.var, s.bounded_below, s.bounded_above)
        for l, row in swapped.items()
    }
    return LaurentSeries(ilo, ihi, coeffs, new_zero, inner_zero.var, ibb, iba)


def nested_zero(windows: Sequence[Window], vars_: Sequence[str], base_zero: Any) -> Any:
    """Zero of a nested series type with the given inner windows."""
    zero = base_zero
    for window, var in reversed(list(zip(windows, vars_))):
        zero = LaurentSeries(window[0], window[1], {}, zero, var, True, True)
    return zero


def bi_coeff(s: LaurentSeries, i: int, j: int) -> Any:
    """Coefficient of outer^i inner^j of a nested series."""
    return s.coeff(i).coeff(j)
