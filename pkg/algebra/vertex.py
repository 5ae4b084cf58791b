"""Vertex operators Γ(z), Γ*(z) and the gl_∞ action on F.

Every windowed computation here sizes its intermediate windows from the
supports of the operators involved, so the final series is exact on the
requested window or the series layer raises InsufficientWindow.
"""

import logging
from typing import Any, Dict, Iterable, Optional, Tuple

from .boson import (
    ChargedSchur,
    e_series,
    h_series,
    sigma_minus_B,
    to_boson_single,
    to_fermion,
)
from .exterior import DualVector, ExtVector, SchubertKind
from .fock import (
    FockVector,
    charge_part,
    contract_fock,
    schubert_fock,
    schubert_op,
    single_charge,
    wedge_onto,
    zeta_shift,
)
from .linear import FreeVector, accumulate
from .partitions import add_column, remove_part
from .series import (
    W_OVER_Z,
    Z_OVER_W,
    LaurentSeries,
    Window,
    compose,
    expand_geometric,
    nested_zero,
    series_mul,
    transpose,
)

logger = logging.getLogger(__name__)

GAMMA_METHODS = ("direct", "operator", "bosonic")
GAMMA_STAR_METHODS = ("direct", "operator", "explicit", "bosonic")
DJKM_METHODS = ("direct", "generating")


class GLElement(FreeVector):
    """Σ a_ij ℬ_ij in gl_∞(ℤ), keyed by (i, j)."""

    __slots__ = ()

    @classmethod
    def elementary(cls, i: int, j: int, coeff: int = 1) -> "GLElement":
        return cls({(i, j): coeff})

    def to_json(self):
        return [{"row": i, "col": j, "coeff": str(c)} for (i, j), c in self.sorted_items()]

    @classmethod
    def from_json(cls, data) -> "GLElement":
        return cls(((int(t["row"]), int(t["col"])), int(t["coeff"])) for t in data)


def gl_bracket(a: GLElement, b: GLElement) -> GLElement:
    """[ℬ_ij, ℬ_kl] = δ_jk ℬ_il - δ_li ℬ_kj, extended bilinearly."""
    acc: Dict[Tuple[int, int], int] = {}
    for (i, j), ca in a.items():
        for (k, l), cb in b.items():
            if j == k:
                accumulate(acc, (i, l), ca * cb)
            if l == i:
                accumulate(acc, (k, j), -ca * cb)
    return GLElement(acc)


def _check_method(method: str, allowed: Tuple[str, ...]) -> None:
    if method not in allowed:
        raise ValueError(f"unknown method {method!r}, expected one of {', '.join(allowed)}")


def _sum_series(parts: Iterable[LaurentSeries], window: Window, zero: Any) -> LaurentSeries:
    total: Optional[LaurentSeries] = None
    for part in parts:
        total = part if total is None else total + part
    if total is None:
        return LaurentSeries.zeros(window, zero)
    return total


def _by_charge(f: FockVector) -> Iterable[Tuple[int, FockVector]]:
    for m in f.charges():
        yield m, charge_part(f, m)


# -- Γ(z) -------------------------------------------------------------------

def _gamma_direct(f: FockVector, window: Window) -> LaurentSeries:
    lo, hi = window
    # b_i ∧ [b]_{m+λ} = 0 once i <= m - ℓ(λ): b_i already sits in the tail
    floor = min((mono.charge - mono.shape.length + 1 for mono in f.keys()), default=lo)
    coeffs = {i: wedge_onto(ExtVector.b(i), f) for i in range(max(lo, floor), hi + 1)}
    return LaurentSeries(lo, hi, coeffs, FockVector(), "z", lo <= floor or not f, not f)


def _gamma_operator(f_m: FockVector, m: int, window: Window) -> LaurentSeries:
    weight = f_m.max_weight()
    lowered = schubert_fock(SchubertKind.BAR_MINUS, f_m, (-weight, 0))
    out = (window[0] - m - 1, window[1] - m - 1)
    raised = compose(schubert_op(SchubertKind.PLUS), lowered, out, (0, None))
    # R(z): z^{m+1} and charge m + 1
    return raised.map_coeffs(lambda v: zeta_shift(v, 1)).shift(m + 1)


def _gamma_bosonic(f_m: FockVector, m: int, window: Window) -> LaurentSeries:
    s = to_boson_single(f_m, m)
    weight = f_m.max_weight()
    lowered = sigma_minus_B(SchubertKind.BAR_MINUS, s, (-weight, 0))
    out = (window[0] - m - 1, window[1] - m - 1)
    # 1/E(z) = H(z)
    raised = compose(h_series, lowered, out, (0, None))
    return raised.map_coeffs(lambda v: to_fermion(v.with_charge(m + 1)), FockVector()).shift(m + 1)


def gamma(f: FockVector, window: Window, method: str = "direct") -> LaurentSeries:
    """Γ(z)f = b(z) ∧ f with b(z) = Σ_i b_i z^i.

    ``direct`` wedges with each b_i; ``operator`` evaluates
    R(z)σ₊(z)σ̄₋(z)f; ``bosonic`` evaluates R(z)·(1/E(z))·σ̄₋(z) on the
    Schur side. All three are exact on ``window``.
    """
    _check_method(method, GAMMA_METHODS)
    if method == "direct":
        return _gamma_direct(f, window)
    step = _gamma_operator if method == "operator" else _gamma_bosonic
    return _sum_series((step(f_m, m, window) for m, f_m in _by_charge(f)), window, FockVector())


# -- Γ*(z) ------------------------------------------------------------------

def _gamma_star_direct(f: FockVector, window: Window) -> LaurentSeries:
    lo, hi = window
    # β(z) = Σ_j β_j z^{-j-1}; β_j kills [b]_{m+λ} once j > m + λ_1
    floor = min((-(mono.charge + mono.shape.part(1)) - 1 for mono in f.keys()), default=lo)
    coeffs = {e: contract_fock(DualVector.beta(-e - 1), f) for e in range(max(lo, floor), hi + 1)}
    return LaurentSeries(lo, hi, coeffs, FockVector(), "z", lo <= floor or not f, not f)


def _gamma_star_operator(f_m: FockVector, m: int, window: Window) -> LaurentSeries:
    weight = f_m.max_weight()
    lowered = schubert_fock(SchubertKind.MINUS, f_m, (-weight, 0))
    out = (window[0] + m + 1, window[1] + m + 1)
    # E(z) acts on F as σ̄₊(z)
    raised = compose(schubert_op(SchubertKind.BAR_PLUS), lowered, out, (0, None))
    # z^{-1} R(z)^{-1}: z^{-m-1} and charge m - 1
    return raised.map_coeffs(lambda v: zeta_shift(v, -1)).shift(-m - 1)


def _gamma_star_bosonic(f_m: FockVector, m: int, window: Window) -> LaurentSeries:
    s = to_boson_single(f_m, m)
    weight = f_m.max_weight()
    lowered = sigma_minus_B(SchubertKind.MINUS, s, (-weight, 0))
    out = (window[0] + m + 1, window[1] + m + 1)
    raised = compose(e_series, lowered, out, (0, None))
    return raised.map_coeffs(lambda v: to_fermion(v.with_charge(m - 1)), FockVector()).shift(-m - 1)


def _gamma_star_explicit(f_m: FockVector, m: int, window: Window) -> LaurentSeries:
    """z^{-m-1} Δ_λ(z^{-λ}, H) plus the column tail, applied to [b]_{m-1}.

    The determinant is expanded along its row of z-powers: row k carries
    z^{-(λ_k - k + 1)} with sign (-1)^{k-1} and minor Δ_{λ^{(k)} + (1^{k-1})}(H).
    The tail is Σ_{t>=0} (-1)^{r+t} Δ_{λ + (1^{r+t})}(H) z^{r+t}.
    """
    lo, hi = window
    acc: Dict[int, Dict[Any, int]] = {}
    floor = None
    for mono, c in f_m.items():
        lam = mono.shape
        r = lam.length
        for k in range(1, r + 1):
            e = -m - 1 - (lam.part(k) - k + 1)
            floor = e if floor is None else min(floor, e)
            if lo <= e <= hi:
                shape = add_column(remove_part(lam, k), k - 1)
                accumulate(acc.setdefault(e, {}), shape, (-1) ** (k - 1) * c)
        start = -m - 1 + r
        floor = start if floor is None else min(floor, start)
        for t in range(max(0, lo - start), hi - start + 1):
            accumulate(acc.setdefault(start + t, {}), add_column(lam, r + t), (-1) ** (r + t) * c)
    coeffs = {e: to_fermion(ChargedSchur(terms, m - 1)) for e, terms in acc.items() if terms}
    bb = floor is None or lo <= floor
    return LaurentSeries(lo, hi, coeffs, FockVector(), "z", bb, not f_m)


def gamma_star(f: FockVector, window: Window, method: str = "direct") -> LaurentSeries:
    """Γ*(z)f = β(z) ⌟ f with β(z) = Σ_j β_j z^{-j-1}.

    ``operator`` evaluates z^{-1}R(z)^{-1}E(z)σ₋(z)f with E(z) = σ̄₊(z) on F,
    ``bosonic`` the same on the Schur side, ``explicit`` the determinantal
    formula; ``direct`` contracts with each β_j.
    """
    _check_method(method, GAMMA_STAR_METHODS)
    if method == "direct":
        return _gamma_star_direct(f, window)
    step = {
        "operator": _gamma_star_operator,
        "bosonic": _gamma_star_bosonic,
        "explicit": _gamma_star_explicit,
    }[method]
    return _sum_series((step(f_m, m, window) for m, f_m in _by_charge(f)), window, FockVector())


# -- gl_∞ -------------------------------------------------------------------

def _djkm_direct(i: int, j: int, f: FockVector) -> FockVector:
    return wedge_onto(ExtVector.b(i), contract_fock(DualVector.beta(j), f))


class _GeneratingOps:
    """The four factors of the DJKM generating function on one side of the correspondence."""

    def __init__(self, minus_w, bar_minus_z, plus_z, bar_plus_w, zero):
        self.minus_w = minus_w
        self.bar_minus_z = bar_minus_z
        self.plus_z = plus_z
        self.bar_plus_w = bar_plus_w
        self.zero = zero


def _fock_ops() -> _GeneratingOps:
    return _GeneratingOps(
        lambda v, win: schubert_fock(SchubertKind.MINUS, v, win),
        lambda v, win: schubert_fock(SchubertKind.BAR_MINUS, v, win),
        schubert_op(SchubertKind.PLUS),
        schubert_op(SchubertKind.BAR_PLUS),
        FockVector(),
    )


def _boson_ops(charge: int) -> _GeneratingOps:
    return _GeneratingOps(
        lambda v, win: sigma_minus_B(SchubertKind.MINUS, v, win),
        lambda v, win: sigma_minus_B(SchubertKind.BAR_MINUS, v, win),
        h_series,
        e_series,
        ChargedSchur({}, charge),
    )


def _generating_function(ops: _GeneratingOps, v: Any, m: int, weight: int,
                         z_window: Window, w_window: Window) -> LaurentSeries:
    """(z/w)^m · i_{z,w} z/(z-w) · E(w)/E(z) · σ̄₋(z)σ₋(w) v, w outer, z inner.

    With P = E(w)/E(z)σ̄₋(z)σ₋(w)v the coefficient of z^a w^b of the
    prefactor-free product is Σ_{k>=0} P[a+k, b-k]; P vanishes below w^{-weight},
    so k runs up to b + weight and P is needed on a finite rectangle.
    """
    zlo, zhi = z_window
    wlo, whi = w_window
    a_lo, a_hi = zlo - m, zhi - m
    b_lo, b_hi = wlo + m, whi + m
    if b_hi < -weight:
        return nested_zero([w_window, z_window], ["w", "z"], ops.zero)
    reach = b_hi + weight
    full = (-weight, 0)
    lowered_w = ops.minus_w(v, full).with_var("w")
    lowered = lowered_w.map_coeffs(lambda x: ops.bar_minus_z(x, full))
    raised_z = lowered.map_coeffs(lambda s: compose(ops.plus_z, s, (a_lo, a_hi + reach), (0, None)))
    by_z = transpose(raised_z)
    raised = by_z.map_coeffs(lambda s: compose(ops.bar_plus_w, s, (-weight, b_hi), (0, None)))
    product = transpose(raised)
    prefactor = expand_geometric(W_OVER_Z, "z", (0, reach), outer="w")
    q = series_mul(product, prefactor, [(b_lo, b_hi), (a_lo, a_hi)])
    logger.debug(f"generating function at charge {m}: P on w[{-weight}, {b_hi}] z[{a_lo}, {a_hi + reach}]")
    return q.map_coeffs(lambda s: s.shift(m)).shift(-m)


def djkm_series(f: FockVector, z_window: Window, w_window: Window) -> LaurentSeries:
    """δ_m(z, w) f = Σ δ_m(ℬ_ij) f z^i w^{-j} on a rectangle, nested z outer, w inner."""
    m = single_charge(f)
    if m is None:
        return nested_zero([z_window, w_window], ["z", "w"], FockVector())
    w_outer = _generating_function(_fock_ops(), f, m, f.max_weight(), z_window, w_window)
    return transpose(w_outer)


def djkm_bosonic(s: ChargedSchur, z_window: Window, w_window: Window) -> LaurentSeries:
    """ℬ^{(m)}(z, w) s = (z/w)^m i_{z,w} z/(z-w) Γ(z, w) s on ChargedSchur."""
    weight = max((lam.weight for lam in s.keys()), default=0)
    w_outer = _generating_function(_boson_ops(s.charge), s, s.charge, weight, z_window, w_window)
    return transpose(w_outer)


def djkm(i: int, j: int, f: FockVector, method: str = "direct") -> FockVector:
    """δ(ℬ_ij) f = b_i ∧ (β_j ⌟ f).

    ``generating`` reads the coefficient of z^i w^{-j} off the generating
    function instead; f must then have a single charge.
    """
    _check_method(method, DJKM_METHODS)
    if method == "direct":
        return _djkm_direct(i, j, f)
    if not f:
        return FockVector()
    series = djkm_series(f, (i, i), (-j, -j))
    return series.coeff(i).coeff(-j)


def _diagonal_series(f: FockVector, z_window: Window, w_window: Window) -> LaurentSeries:
    # i_{z,w} z/(z-w) f = Σ_{k>=0} z^{-k} w^{k} f
    inner_zero = LaurentSeries.zeros(w_window, FockVector(), "w")
    coeffs = {}
    for k in range(max(0, -z_window[1], w_window[0]), min(-z_window[0], w_window[1]) + 1):
        coeffs[-k] = LaurentSeries.polynomial({k: f}, FockVector(), "w", window=w_window)
    return LaurentSeries(z_window[0], z_window[1], coeffs, inner_zero, "z", True, True)


def djkm_modified_series(f: FockVector, z_window: Window, w_window: Window) -> LaurentSeries:
    """δ̂_m(z, w) f: the generating function minus i_{z,w} z/(z-w) f."""
    series = djkm_series(f, z_window, w_window)
    return series - _diagonal_series(f, z_window, w_window)


def djkm_modified(i: int, j: int, f: FockVector, method: str = "direct") -> FockVector:
    """Normally ordered action: δ̂(ℬ_ii) = δ(ℬ_ii) - 1 for i <= 0, δ̂ = δ elsewhere."""
    _check_method(method, DJKM_METHODS)
    if method == "generating":
        if not f:
            return FockVector()
        return djkm_modified_series(f, (i, i), (-j, -j)).coeff(i).coeff(-j)
    result = _djkm_direct(i, j, f)
    if i == j and i <= 0:
        result = result - f
    return result


def delta_gl(a: GLElement, f: FockVector) -> FockVector:
    """δ(A) f = Σ a_ij b_i ∧ (β_j ⌟ f)."""
    total = FockVector()
    for (i, j), c in a.items():
        total = total + c * _djkm_direct(i, j, f)
    return total


# -- commutation rules ------------------------------------------------------

def commutation_plus_minus(f: FockVector, z_window: Window, w_window: Window) -> Tuple[LaurentSeries, LaurentSeries]:
    """Both sides of σ₋(w)σ₊(z)f = i_{w,z} w/(w-z) σ₊(z)σ₋(w)f, nested z outer."""
    zlo, zhi = z_window
    wlo, whi = w_window
    raised = schubert_fock(SchubertKind.PLUS, f, z_window)
    lhs = raised.map_coeffs(lambda v: schubert_fock(SchubertKind.MINUS, v, w_window).with_var("w"))
    weight = f.max_weight()
    reach = max(zhi, -wlo, 0)
    lowered_w = schubert_fock(SchubertKind.MINUS, f, (-weight, 0)).with_var("w")
    right = lowered_w.map_coeffs(lambda v: schubert_fock(SchubertKind.PLUS, v, (zlo - reach, zhi)))
    prefactor = expand_geometric(Z_OVER_W, "w", (0, reach), outer="w")
    rhs = transpose(series_mul(right, prefactor, [w_window, z_window]))
    return lhs, rhs


def commutation_bar(f: FockVector, z_window: Window, w_window: Window) -> Tuple[LaurentSeries, LaurentSeries]:
    """Both sides of σ̄₋(z)σ̄₊(w)f = i_{z,w} z/(z-w) σ̄₊(w)σ̄₋(z)f, nested z outer."""
    zlo, zhi = z_window
    wlo, whi = w_window
    raised_w = schubert_fock(SchubertKind.BAR_PLUS, f, w_window).with_var("w")
    lhs = transpose(raised_w.map_coeffs(lambda v: schubert_fock(SchubertKind.BAR_MINUS, v, z_window)))
    weight = f.max_weight()
    reach = max(-zlo, whi, 0)
    lowered = schubert_fock(SchubertKind.BAR_MINUS, f, (-weight, 0))
    right = lowered.map_coeffs(
        lambda v: schubert_fock(SchubertKind.BAR_PLUS, v, (wlo - reach, whi)).with_var("w")
    )
    prefactor = expand_geometric(W_OVER_Z, "z", (0, reach), outer="z")
    rhs = series_mul(right, prefactor, [z_window, w_window])
    return lhs, rhs
