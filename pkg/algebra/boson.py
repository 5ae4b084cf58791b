"""The bosonic side: B[ζ, ζ^{-1}] in the Schur basis Δ_λ(H).

Products are done with the Pieri rules: a Schur function is expanded into
h-monomials by Jacobi–Trudi and multiplied in one h_i at a time.
"""

import itertools
import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..errors import ChargeMixed
from .exterior import SchubertKind
from .fock import FockMonomial, FockVector
from .linear import FreeVector, accumulate
from .partitions import EMPTY, Partition, column, make_partition
from .series import LaurentSeries, Window

logger = logging.getLogger(__name__)

HMonomial = Tuple[int, ...]  # h_{i_1}…h_{i_k}, positive indices in decreasing order


class ChargedSchur(FreeVector):
    """ζ^charge · Σ c_λ Δ_λ(H)."""

    __slots__ = ("charge",)

    def __init__(self, terms=None, charge: int = 0):
        super().__init__(terms)
        self.charge = charge

    def _like(self, terms):
        out = super()._like(terms)
        out.charge = self.charge
        return out

    def _check_compatible(self, other: FreeVector) -> None:
        super()._check_compatible(other)
        if self and other and other.charge != self.charge:  # type: ignore[attr-defined]
            raise ValueError(f"cannot add charge {self.charge} to charge {other.charge}")  # type: ignore[attr-defined]

    def _same_extras(self, other: FreeVector) -> bool:
        return not self or self.charge == other.charge  # type: ignore[attr-defined]

    @classmethod
    def schur(cls, shape: Iterable[int] = (), charge: int = 0) -> "ChargedSchur":
        return cls({make_partition(shape): 1}, charge)

    def with_charge(self, charge: int) -> "ChargedSchur":
        return ChargedSchur(dict(self.items()), charge)

    def to_json(self) -> Dict[str, Any]:
        return {
            "charge": self.charge,
            "terms": [{"shape": lam.to_json(), "coeff": str(c)} for lam, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "ChargedSchur":
        return cls(((make_partition(t["shape"]), int(t["coeff"])) for t in data["terms"]), int(data["charge"]))

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for lam, c in self.sorted_items():
            label = f"ζ^{self.charge}Δ_{lam}"
            parts.append(label if c == 1 else (f"-{label}" if c == -1 else f"{c}{label}"))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ChargedSchur(charge={self.charge}, {super().__repr__()})"


# -- Pieri rules ------------------------------------------------------------

def _horizontal_strips(lam: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    # μ_1 >= λ_1 free, λ_k <= μ_k <= λ_{k-1} below; one new row at most
    rows = lam + (0,)

    def grow(k: int, left: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if k == len(rows):
            if left == 0:
                yield prefix
            return
        cap = left if k == 0 else min(left, rows[k - 1] - rows[k])
        for add in range(cap, -1, -1):
            yield from grow(k + 1, left - add, prefix + (rows[k] + add,))

    yield from grow(0, size, ())


def _vertical_strips(lam: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    rows = lam + (0,) * size

    def grow(k: int, left: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if left == 0:
            yield prefix + rows[k:]
            return
        if k == len(rows):
            return
        for add in (1, 0):
            new = rows[k] + add
            if k > 0 and new > prefix[-1]:
                continue
            if add > left:
                continue
            yield from grow(k + 1, left - add, prefix + (new,))

    yield from grow(0, size, ())


@lru_cache(maxsize=65536)
def _pieri(lam: Partition, i: int, vertical: bool) -> Tuple[Partition, ...]:
    strips = _vertical_strips if vertical else _horizontal_strips
    return tuple(Partition(mu) for mu in strips(lam.parts, i))


def h_mult(i: int, s: ChargedSchur) -> ChargedSchur:
    """h_i · s: add horizontal strips of size i."""
    if i < 0:
        raise ValueError(f"h_{i} is not a generator; h_j = 0 for j < 0")
    if i == 0:
        return s
    acc: Dict[Partition, int] = {}
    for lam, c in s.items():
        for mu in _pieri(lam, i, False):
            accumulate(acc, mu, c)
    return ChargedSchur(acc, s.charge)


def e_mult(k: int, s: ChargedSchur) -> ChargedSchur:
    """e_k · s: add vertical strips of size k."""
    if k < 0:
        raise ValueError(f"e_{k} is not a generator")
    if k == 0:
        return s
    acc: Dict[Partition, int] = {}
    for lam, c in s.items():
        for mu in _pieri(lam, k, True):
            accumulate(acc, mu, c)
    return ChargedSchur(acc, s.charge)


@lru_cache(maxsize=8192)
def _h_monomial_terms(exponents: HMonomial) -> Tuple[Tuple[Partition, int], ...]:
    s = ChargedSchur({EMPTY: 1})
    for i in exponents:
        s = h_mult(i, s)
    return tuple(s.items())


def h_monomial_to_schur(exponents: Iterable[int], charge: int = 0) -> ChargedSchur:
    """Expand h_{i_1}…h_{i_k} in the Schur basis."""
    key = tuple(sorted((i for i in exponents if i != 0), reverse=True))
    if any(i < 0 for i in key):
        return ChargedSchur({}, charge)
    return ChargedSchur(dict(_h_monomial_terms(key)), charge)


def _det_terms(lam: Partition) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """(sign, entry indices) for det(h_{λ_i - i + j}), one per permutation."""
    r = lam.length
    for perm in itertools.permutations(range(r)):
        indices = tuple(lam.parts[i] - i + perm[i] for i in range(r))
        if any(n < 0 for n in indices):
            continue
        sign = Permutation(list(perm)).signature() if r > 1 else 1
        yield sign, indices


@lru_cache(maxsize=4096)
def jacobi_trudi(lam: Partition) -> Tuple[Tuple[HMonomial, int], ...]:
    """Δ_λ(H) = det(h_{λ_i - i + j}) as a combination of h-monomials."""
    acc: Dict[HMonomial, int] = {}
    for sign, indices in _det_terms(lam):
        accumulate(acc, tuple(sorted((n for n in indices if n), reverse=True)), sign)
    return tuple(sorted(acc.items()))


def elementary(k: int, charge: int = 0) -> ChargedSchur:
    """e_k = Δ_{(1^k)}(H)."""
    if k < 0:
        raise ValueError(f"e_{k} is not defined")
    return ChargedSchur({column(k): 1}, charge)


def schur_product(s: ChargedSchur, t: ChargedSchur) -> ChargedSchur:
    """s · t in B[ζ, ζ^{-1}] (charges add)."""
    total = ChargedSchur({}, s.charge + t.charge)
    base = s.with_charge(s.charge + t.charge)
    for lam, c in t.items():
        for mono, sign in jacobi_trudi(lam):
            image = base
            for i in mono:
                image = h_mult(i, image)
                if not image:
                    break
            total = total + (sign * c) * image
    return total


# -- series on B ------------------------------------------------------------

def h_series(s: ChargedSchur, window: Window) -> LaurentSeries:
    """H(z)·s = Σ_{j>=0} h_j s z^j; this is σ₊(z) under the correspondence."""
    lo, hi = window
    coeffs = {j: h_mult(j, s) for j in range(max(lo, 0), hi + 1)}
    zero = ChargedSchur({}, s.charge)
    return LaurentSeries(lo, hi, coeffs, zero, "z", lo <= 0 or not s, not s)


def e_series(s: ChargedSchur, window: Window) -> LaurentSeries:
    """E(z)·s = Σ_{j>=0} (-1)^j e_j s z^j; this is σ̄₊(z) under the correspondence."""
    lo, hi = window
    coeffs = {j: (-1) ** j * e_mult(j, s) for j in range(max(lo, 0), hi + 1)}
    zero = ChargedSchur({}, s.charge)
    return LaurentSeries(lo, hi, coeffs, zero, "z", lo <= 0 or not s, not s)


def _entry_images(kind: SchubertKind, n: int, reach: int) -> List[Tuple[int, int, int]]:
    """(lowering k, new h index, coefficient) for the image of h_n."""
    if kind is SchubertKind.BAR_MINUS:
        moves = [(0, n, 1), (1, n - 1, -1)]
    elif kind is SchubertKind.MINUS:
        moves = [(k, n - k, 1) for k in range(n + 1)]
    else:
        raise ValueError(f"{kind} does not act on B through this map")
    return [(k, idx, c) for k, idx, c in moves if idx >= 0 and k <= reach]


def _image_of_schur(kind: SchubertKind, lam: Partition, lo: int, hi: int) -> Dict[int, Dict[HMonomial, int]]:
    """Δ_λ(D(z)H) expanded entrywise: z-exponent → h-monomial combination."""
    reach = -lo
    out: Dict[int, Dict[HMonomial, int]] = {}
    for sign, indices in _det_terms(lam):
        states: Dict[Tuple[int, HMonomial], int] = {(0, ()): sign}
        for n in indices:
            nxt: Dict[Tuple[int, HMonomial], int] = {}
            for (lowered, mono), c in states.items():
                for k, idx, ck in _entry_images(kind, n, reach - lowered):
                    new_mono = mono + ((idx,) if idx else ())
                    accumulate(nxt, (lowered + k, new_mono), c * ck)
            states = nxt
        for (lowered, mono), c in states.items():
            e = -lowered
            if lo <= e <= hi:
                accumulate(out.setdefault(e, {}), tuple(sorted(mono, reverse=True)), c)
    return out


def sigma_minus_B(kind: SchubertKind, s: ChargedSchur, window: Window) -> LaurentSeries:
    """σ₋(z) or σ̄₋(z) on B as ring homomorphisms, exact on ``window``.

    h_n ↦ Σ_{j>=0} h_{n-j} z^{-j} (σ₋) or h_n - h_{n-1} z^{-1} (σ̄₋),
    applied to every entry of the Jacobi–Trudi determinant.
    """
    if kind.raises:
        raise ValueError(f"{kind} is a B-module multiplication, use h_series or e_series")
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    acc: Dict[int, Dict[Partition, int]] = {}
    if min(hi, 0) >= lo:
        for lam, c in s.items():
            for e, monos in _image_of_schur(kind, lam, lo, min(hi, 0)).items():
                bucket = acc.setdefault(e, {})
                for mono, cm in monos.items():
                    for mu, cs in _h_monomial_terms(mono):
                        accumulate(bucket, mu, c * cm * cs)
    weight = max((lam.weight for lam in s.keys()), default=0)
    coeffs = {e: ChargedSchur(t, s.charge) for e, t in acc.items()}
    zero = ChargedSchur({}, s.charge)
    return LaurentSeries(lo, hi, coeffs, zero, "z", lo <= -weight, hi >= 0)


# -- boson–fermion correspondence -------------------------------------------

def to_boson(f: FockVector) -> List[ChargedSchur]:
    """[b]_{m+λ} ↦ ζ^m Δ_λ(H), one ChargedSchur per charge present (sorted)."""
    by_charge: Dict[int, Dict[Partition, int]] = {}
    for mono, c in f.items():
        accumulate(by_charge.setdefault(mono.charge, {}), mono.shape, c)
    return [ChargedSchur(terms, m) for m, terms in sorted(by_charge.items())]


def to_fermion(s: ChargedSchur) -> FockVector:
    """ζ^m Δ_λ(H) ↦ [b]_{m+λ}."""
    return FockVector({FockMonomial(s.charge, lam): c for lam, c in s.items()})


def to_boson_single(f: FockVector, charge: Optional[int] = None) -> ChargedSchur:
    """to_boson for a vector of a single charge (``charge`` names it when f is zero)."""
    parts = to_boson(f)
    if len(parts) > 1:
        raise ChargeMixed(f"expected one charge, got {[p.charge for p in parts]}")
    if not parts:
        return ChargedSchur({}, 0 if charge is None else charge)
    return parts[0]


def fermion_series(series: LaurentSeries) -> LaurentSeries:
    """Map a series of ChargedSchur coefficients to FockVector coefficients."""
    return series.map_coeffs(to_fermion, FockVector())


def boson_series(series: LaurentSeries, charge: int) -> LaurentSeries:
    """Map a single-charge series of FockVector coefficients to ChargedSchur."""
    return series.map_coeffs(lambda f: to_boson_single(f, charge), ChargedSchur({}, charge))
