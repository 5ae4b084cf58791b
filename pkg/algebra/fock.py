"""The fermionic Fock space F = ⊕_m F_m.

A basis vector [b]_{m+λ} = b_{m+λ_1} ∧ b_{m-1+λ_2} ∧ … is stored as the
pair (charge m, partition λ). Operations that need actual indices split
it as a finite prefix b^r_{m+λ} wedged with the vacuum tail [b]_{m-r}.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..errors import ChargeMixed
from .exterior import (
    DualVector,
    ExtVector,
    SchubertKind,
    contract_monomial,
    normalize_wedge,
    schubert_ext,
    sigma_ext,
)
from .linear import FreeVector, accumulate
from .partitions import EMPTY, Partition, make_partition
from .series import LaurentSeries, Support, Window

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class FockMonomial:
    """[b]_{charge+shape}."""

    charge: int
    shape: Partition = EMPTY

    def __post_init__(self):
        if not isinstance(self.shape, Partition):
            object.__setattr__(self, "shape", make_partition(self.shape))

    def to_json(self) -> Dict[str, Any]:
        return {"charge": self.charge, "shape": self.shape.to_json()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FockMonomial":
        return cls(int(data["charge"]), make_partition(data.get("shape", ())))

    def __str__(self) -> str:
        if not self.shape.parts:
            return f"[b]_{{{self.charge}}}"
        return f"[b]_{{{self.charge}+{self.shape}}}"


class FockVector(FreeVector):
    """Finite integer combination of Fock basis vectors, charges may be mixed."""

    __slots__ = ()

    @classmethod
    def vacuum(cls, m: int) -> "FockVector":
        return cls({FockMonomial(m): 1})

    @classmethod
    def basis_vector(cls, m: int, shape: Iterable[int] = ()) -> "FockVector":
        return cls({FockMonomial(m, make_partition(shape)): 1})

    def charges(self) -> List[int]:
        return sorted({mono.charge for mono in self.keys()})

    def max_weight(self) -> int:
        return max((mono.shape.weight for mono in self.keys()), default=0)

    def max_length(self) -> int:
        return max((mono.shape.length for mono in self.keys()), default=0)

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"mono": mono.to_json(), "coeff": str(c)} for mono, c in self.sorted_items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping[str, Any]]) -> "FockVector":
        return cls((FockMonomial.from_json(t["mono"]), int(t["coeff"])) for t in data)

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for mono, c in self.sorted_items():
            label = str(mono)
            parts.append(label if c == 1 else (f"-{label}" if c == -1 else f"{c}{label}"))
        return " + ".join(parts).replace("+ -", "- ")


def single_charge(f: FockVector) -> Optional[int]:
    """The common charge of f (None for the zero vector)."""
    charges = f.charges()
    if len(charges) > 1:
        raise ChargeMixed(f"expected a vector of one charge, got charges {charges}")
    return charges[0] if charges else None


def charge_part(f: FockVector, m: int) -> FockVector:
    """Projection of f onto F_m."""
    return FockVector({mono: c for mono, c in f.items() if mono.charge == m})


def prefix_indices(mono: FockMonomial, r: int) -> Tuple[int, ...]:
    """Indices i_k = m - k + 1 + λ_k, k = 1..r, of the depth-r prefix (r >= ℓ(λ))."""
    m = mono.charge
    return tuple(m - k + 1 + lam_k for k, lam_k in enumerate(mono.shape.padded(r), start=1))


def canonicalize_fock(prefix: Sequence[int], tail_charge: int) -> Optional[Tuple[int, FockMonomial]]:
    """Read b_{i_1} ∧ … ∧ b_{i_r} ∧ [b]_m as ±[b]_{(m+r)+λ}.

    Returns None when an index repeats or some i_k <= m (it meets the tail).
    """
    normal = normalize_wedge(prefix)
    if normal is None:
        return None
    sign, mono = normal
    if mono and mono[-1] <= tail_charge:
        return None
    r = len(mono)
    charge = tail_charge + r
    shape = Partition(tuple(i - charge + k for k, i in enumerate(mono)))
    return sign, FockMonomial(charge, shape)


def attach_tail(u: ExtVector, tail_charge: int) -> FockVector:
    """u ∧ [b]_{tail_charge}."""
    acc: Dict[FockMonomial, int] = {}
    for mono, c in u.items():
        hit = canonicalize_fock(mono, tail_charge)
        if hit is not None:
            accumulate(acc, hit[1], hit[0] * c)
    return FockVector(acc)


def wedge_onto(u: ExtVector, f: FockVector, depth_extra: int = 0) -> FockVector:
    """u ∧ f, choosing for each monomial a prefix deep enough to absorb u."""
    acc: Dict[FockMonomial, int] = {}
    for umono, cu in u.items():
        for fmono, cf in f.items():
            r = fmono.shape.length
            if umono:
                r = max(r, fmono.charge - min(umono) + 1)
            r += depth_extra
            hit = canonicalize_fock(umono + prefix_indices(fmono, r), fmono.charge - r)
            if hit is not None:
                accumulate(acc, hit[1], hit[0] * cu * cf)
    return FockVector(acc)


def contract_fock(beta: DualVector, f: FockVector, depth_extra: int = 0) -> FockVector:
    """β ⌟ f; the charge drops by one."""
    acc: Dict[FockMonomial, int] = {}
    for j, cb in beta.items():
        for mono, cf in f.items():
            # m - r < j keeps b_j out of the tail
            r = max(mono.shape.length, mono.charge - j + 1, 0) + depth_extra
            hit = contract_monomial(j, prefix_indices(mono, r))
            if hit is None:
                continue
            sign, rest = hit
            canon = canonicalize_fock(rest, mono.charge - r)
            if canon is not None:
                accumulate(acc, canon[1], sign * canon[0] * cb * cf)
    return FockVector(acc)


def fock_support(kind: SchubertKind, f: FockVector) -> Support:
    """Exponents the derivation can produce on f.

    The lowering kinds decrease |λ| by the exponent's absolute value, so
    they stop at -(max weight).
    """
    if not f:
        return (0, 0)
    if kind.raises:
        return (0, None)
    return (-f.max_weight(), 0)


def _window_radius(window: Window) -> int:
    return max(abs(window[0]), abs(window[1]))


def _monomial_action(kind: SchubertKind, mono: FockMonomial, window: Window, r: int) -> Dict[int, Dict[FockMonomial, int]]:
    m = mono.charge
    lo, hi = window
    prefix = prefix_indices(mono, r)
    out: Dict[int, Dict[FockMonomial, int]] = {}
    if kind is SchubertKind.PLUS:
        # σ₊ reaches the tail through its top element b_{m-r} only
        series = schubert_ext(kind, ExtVector({prefix + (m - r,): 1}), window)
        for e, u in series.coeffs.items():
            image = attach_tail(u, m - r - 1)
            if image:
                out[e] = dict(image.items())
        return out
    if kind is SchubertKind.BAR_PLUS:
        if hi < 0:
            return out
        series = schubert_ext(kind, ExtVector({prefix: 1}), (0, hi))
        for a, u in series.coeffs.items():
            for j in range(0, hi - a + 1):
                if a + j < lo:
                    continue
                # σ̄₊(z)[b]_{m-r} has z^j coefficient (-1)^j [b]_{(m-r)+(1^j)}
                column = tuple(range(m - r + 1, m - r - j + 1, -1))
                sign = -1 if j & 1 else 1
                for umono, c in u.items():
                    hit = canonicalize_fock(umono + column, m - r - j)
                    if hit is not None:
                        accumulate(out.setdefault(a + j, {}), hit[1], sign * hit[0] * c)
        return {e: t for e, t in out.items() if t}
    # lowering kinds fix the tail
    series = schubert_ext(kind, ExtVector({prefix: 1}), window)
    for e, u in series.coeffs.items():
        image = attach_tail(u, m - r)
        if image:
            out[e] = dict(image.items())
    return out


def schubert_fock(kind: SchubertKind, f: FockVector, window: Window, depth_extra: int = 0) -> LaurentSeries:
    """The Schubert derivation ``kind`` on F, exact on ``window``.

    Each monomial is split at depth r = max(ℓ(λ), N + 1) with N the window
    radius (plus ``depth_extra``); the prefix goes through ``schubert_ext``
    and the tail follows the vacuum rule of the kind.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    radius = _window_radius(window)
    acc: Dict[int, Dict[FockMonomial, int]] = {}
    for mono, coeff in f.items():
        r = max(mono.shape.length, radius + 1) + depth_extra
        for e, terms in _monomial_action(kind, mono, window, r).items():
            bucket = acc.setdefault(e, {})
            for key, c in terms.items():
                accumulate(bucket, key, coeff * c)
    c_lo, c_hi = fock_support(kind, f)
    bb = c_lo is not None and lo <= c_lo
    ba = c_hi is not None and hi >= c_hi
    return LaurentSeries(lo, hi, {e: FockVector(t) for e, t in acc.items()}, FockVector(), "z", bb, ba)


def schubert_op(kind: SchubertKind):
    """``schubert_fock`` as an ``op(vector, window)`` callable for ``series.compose``."""
    def op(f: FockVector, window: Window) -> LaurentSeries:
        return schubert_fock(kind, f, window)
    op.__name__ = f"schubert_{kind.name.lower()}"
    return op


def sigma_fock(i: int, f: FockVector, bar: bool = False) -> FockVector:
    """σ_i on F (σ̄_i when ``bar``): z^i of σ₊ for i >= 0, of σ₋ for i < 0."""
    if bar:
        kind = SchubertKind.BAR_PLUS if i >= 0 else SchubertKind.BAR_MINUS
    else:
        kind = SchubertKind.PLUS if i >= 0 else SchubertKind.MINUS
    return schubert_fock(kind, f, (i, i)).coeff(i)


@lru_cache(maxsize=4096)
def _sigma_word_on_prefix(indices: Tuple[int, ...], m: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    # σ_{i_1}…σ_{i_r} applied to b_m ∧ b_{m-1} ∧ … ∧ b_{m-r+1}; the σ_i commute
    u = ExtVector({tuple(range(m, m - len(indices), -1)): 1})
    for i in sorted(indices):
        u = sigma_ext(i, u)
        if not u:
            break
    return tuple(u.items())


def giambelli(lam: Partition, m: int) -> FockVector:
    """Δ_λ(σ₊)[b]_m with Δ_λ(σ₊) = det(σ_{λ_i + j - i}).

    Every permutation term σ_{i_1}…σ_{i_r} acts on the prefix b^r_m and
    leaves the tail [b]_{m-r} alone; the result must equal [b]_{m+λ}.
    """
    r = lam.length
    total: Dict[FockMonomial, int] = {}
    for perm in itertools.permutations(range(r)):
        indices = tuple(lam.parts[i] + perm[i] - i for i in range(r))
        if any(i < 0 for i in indices):
            continue
        sign = Permutation(list(perm)).signature() if r > 1 else 1
        for mono, c in _sigma_word_on_prefix(indices, m):
            hit = canonicalize_fock(mono, m - r)
            if hit is not None:
                accumulate(total, hit[1], sign * hit[0] * c)
    logger.debug(f"giambelli {lam} at charge {m}: {len(total)} terms")
    return FockVector(total)


def schur_operator(lam: Partition, f: FockVector) -> FockVector:
    """Δ_λ(σ₊) applied to an arbitrary f.

    On a combination of vacua this is ``giambelli``; otherwise each
    determinant term is applied as a word of σ_i on F.
    """
    if all(not mono.shape.parts for mono in f.keys()):
        total = FockVector()
        for mono, c in f.items():
            total = total + c * giambelli(lam, mono.charge)
        return total
    r = lam.length
    total = FockVector()
    for perm in itertools.permutations(range(r)):
        indices = [lam.parts[i] + perm[i] - i for i in range(r)]
        if any(i < 0 for i in indices):
            continue
        v = f
        for i in sorted(indices):
            v = sigma_fock(i, v)
        sign = Permutation(list(perm)).signature() if r > 1 else 1
        total = total + sign * v
    return total


def zeta_shift(f: FockVector, k: int) -> FockVector:
    """ζ^k: shift every charge by k."""
    return FockVector({FockMonomial(mono.charge + k, mono.shape): c for mono, c in f.items()})


def r_op(f: FockVector, inverse: bool = False) -> LaurentSeries:
    """R(z)[b]_{m+λ} = z^{m+1}[b]_{m+1+λ};  R(z)^{-1}[b]_{m+λ} = z^{-m}[b]_{m-1+λ}."""
    acc: Dict[int, Dict[FockMonomial, int]] = {}
    for mono, c in f.items():
        if inverse:
            e, key = -mono.charge, FockMonomial(mono.charge - 1, mono.shape)
        else:
            e, key = mono.charge + 1, FockMonomial(mono.charge + 1, mono.shape)
        accumulate(acc.setdefault(e, {}), key, c)
    terms = {e: FockVector(t) for e, t in acc.items() if t}
    window = (min(acc), max(acc)) if acc else (0, 0)
    return LaurentSeries.polynomial(terms, FockVector(), "z", window)
