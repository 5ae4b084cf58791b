"""Exterior algebra of M = ⊕ ℤ·b_i, contraction, and the Schubert derivations.

Wedge monomials are plain tuples of strictly decreasing integers; the
empty tuple is 1 ∈ ⋀⁰M.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .linear import FreeVector, accumulate
from .series import LaurentSeries, Support, Window

logger = logging.getLogger(__name__)

WedgeMonomial = Tuple[int, ...]


class SchubertKind(Enum):
    """The four Schubert derivations σ₊, σ₋, σ̄₊, σ̄₋."""

    PLUS = "+"
    MINUS = "-"
    BAR_PLUS = "bar+"
    BAR_MINUS = "bar-"

    @property
    def raises(self) -> bool:
        return self in (SchubertKind.PLUS, SchubertKind.BAR_PLUS)

    @property
    def is_bar(self) -> bool:
        return self in (SchubertKind.BAR_PLUS, SchubertKind.BAR_MINUS)

    @classmethod
    def parse(cls, text: str) -> "SchubertKind":
        aliases = {
            "+": cls.PLUS, "plus": cls.PLUS, "σ₊": cls.PLUS,
            "-": cls.MINUS, "minus": cls.MINUS, "σ₋": cls.MINUS,
            "bar+": cls.BAR_PLUS, "barplus": cls.BAR_PLUS, "σ̄₊": cls.BAR_PLUS,
            "bar-": cls.BAR_MINUS, "barminus": cls.BAR_MINUS, "σ̄₋": cls.BAR_MINUS,
        }
        try:
            return aliases[text.strip().lower() if text.isascii() else text.strip()]
        except KeyError:
            raise ValueError(f"unknown Schubert derivation {text!r}") from None


def kind_support(kind: SchubertKind, degree: Optional[int] = None) -> Support:
    """Exponents a derivation can produce on an input of the given degree.

    ``degree=None`` means unknown; the result is then the widest support
    of the kind.
    """
    if degree == 0:
        return (0, 0)
    if kind is SchubertKind.PLUS:
        return (0, None)
    if kind is SchubertKind.MINUS:
        return (None, 0)
    if kind is SchubertKind.BAR_PLUS:
        return (0, degree)
    return (None if degree is None else -degree, 0)


def normalize_wedge(indices: Iterable[int]) -> Optional[Tuple[int, WedgeMonomial]]:
    """Sort a wedge of basis vectors into decreasing order.

    Returns (sign, monomial), or None when an index repeats.
    """
    idx = list(indices)
    n = len(idx)
    if len(set(idx)) != n:
        return None
    inversions = 0
    for a in range(n):
        x = idx[a]
        for b in range(a + 1, n):
            if x < idx[b]:
                inversions += 1
    return (-1 if inversions & 1 else 1, tuple(sorted(idx, reverse=True)))


class ExtVector(FreeVector):
    """An element of ⋀M: integer combination of wedge monomials (mixed degrees allowed)."""

    __slots__ = ()

    @classmethod
    def one(cls) -> "ExtVector":
        return cls({(): 1})

    @classmethod
    def wedge_of(cls, *indices: int) -> "ExtVector":
        """b_{i_1} ∧ … ∧ b_{i_r}, normalized."""
        normal = normalize_wedge(indices)
        if normal is None:
            return cls()
        sign, mono = normal
        return cls({mono: sign})

    @classmethod
    def b(cls, i: int) -> "ExtVector":
        return cls({(i,): 1})

    def degrees(self) -> List[int]:
        return sorted({len(m) for m in self.keys()})

    def max_degree(self) -> int:
        return max((len(m) for m in self.keys()), default=0)

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"mono": list(m), "coeff": str(c)} for m, c in self.sorted_items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping[str, Any]]) -> "ExtVector":
        out: Dict[WedgeMonomial, int] = {}
        for term in data:
            normal = normalize_wedge(term["mono"])
            if normal is not None:
                accumulate(out, normal[1], normal[0] * int(term["coeff"]))
        return cls(out)

    def __str__(self) -> str:
        if not self:
            return "0"
        return _format_terms(
            ("1" if not m else "∧".join(f"b_{i}" for i in m), c) for m, c in self.sorted_items()
        )


class DualVector(FreeVector):
    """Σ c_j β_j in the restricted dual of M."""

    __slots__ = ()

    @classmethod
    def beta(cls, j: int) -> "DualVector":
        return cls({j: 1})


def _format_terms(pairs: Iterable[Tuple[str, int]]) -> str:
    out = []
    for label, c in pairs:
        if c == 1:
            text = label
        elif c == -1:
            text = f"-{label}"
        else:
            text = f"{c}{label}" if label != "1" else str(c)
        out.append(text)
    return " + ".join(out).replace("+ -", "- ")


def graded_part(u: ExtVector, r: int) -> ExtVector:
    """Projection of u onto ⋀^r M."""
    return ExtVector({m: c for m, c in u.items() if len(m) == r})


def wedge(u: ExtVector, v: ExtVector) -> ExtVector:
    acc: Dict[WedgeMonomial, int] = {}
    for mu, cu in u.items():
        for mv, cv in v.items():
            normal = normalize_wedge(mu + mv)
            if normal is not None:
                accumulate(acc, normal[1], normal[0] * cu * cv)
    return ExtVector(acc)


def contract_monomial(j: int, mono: WedgeMonomial) -> Optional[Tuple[int, WedgeMonomial]]:
    """β_j ⌟ mono as (sign, monomial), None when b_j is not a factor."""
    try:
        k = mono.index(j)
    except ValueError:
        return None
    return (-1 if k & 1 else 1, mono[:k] + mono[k + 1:])


def contract(beta: DualVector, u: ExtVector) -> ExtVector:
    """β ⌟ u, with β_j ⌟ (b_{i_1}∧…∧b_{i_r}) = Σ_k (-1)^{k-1} [j = i_k] (b_{i_k} removed)."""
    acc: Dict[WedgeMonomial, int] = {}
    for j, cb in beta.items():
        for mono, cu in u.items():
            hit = contract_monomial(j, mono)
            if hit is not None:
                accumulate(acc, hit[1], hit[0] * cb * cu)
    return ExtVector(acc)


def _factor_moves(kind: SchubertKind, j: int, room: int):
    """(exponent step, new index, coefficient) choices for one factor b_j.

    ``room`` is how far the exponent may still move in the kind's direction.
    """
    if kind is SchubertKind.PLUS:
        return [(k, j + k, 1) for k in range(room + 1)]
    if kind is SchubertKind.MINUS:
        return [(-k, j - k, 1) for k in range(room + 1)]
    if kind is SchubertKind.BAR_PLUS:
        return [(0, j, 1)] + ([(1, j + 1, -1)] if room >= 1 else [])
    return [(0, j, 1)] + ([(-1, j - 1, -1)] if room >= 1 else [])


@lru_cache(maxsize=65536)
def monomial_series(kind: SchubertKind, mono: WedgeMonomial, lo: int, hi: int) -> Tuple[Tuple[int, Tuple[Tuple[WedgeMonomial, int], ...]], ...]:
    """Exact coefficients of D(z) applied to one monomial on [lo, hi].

    The HS property makes D(z) multiplicative across factors, so the
    coefficient of z^e is the sum over all ways to distribute e among
    the factors; partial wedges with a repeated index are dropped early.
    """
    if kind.raises:
        lo, hi = max(lo, 0), hi
        reach = hi
    else:
        lo, hi = lo, min(hi, 0)
        reach = -lo
    if lo > hi:
        return ()
    states: Dict[Tuple[int, Tuple[int, ...]], int] = {(0, ()): 1}
    for j in mono:
        nxt: Dict[Tuple[int, Tuple[int, ...]], int] = {}
        for (exp, partial), coeff in states.items():
            room = reach - abs(exp)
            for step, index, c in _factor_moves(kind, j, room):
                if index in partial:
                    continue
                accumulate(nxt, (exp + step, partial + (index,)), coeff * c)
        states = nxt
    by_exp: Dict[int, Dict[WedgeMonomial, int]] = {}
    for (exp, partial), coeff in states.items():
        if lo <= exp <= hi:
            normal = normalize_wedge(partial)
            sign, normal_mono = normal  # partial has distinct indices
            accumulate(by_exp.setdefault(exp, {}), normal_mono, sign * coeff)
    return tuple((e, tuple(terms.items())) for e, terms in sorted(by_exp.items()) if terms)


def schubert_ext(kind: SchubertKind, u: ExtVector, window: Window) -> LaurentSeries:
    """Apply the Schubert derivation ``kind`` to u, exactly on ``window``.

    σ₊(z)b_j = Σ_{i>=0} b_{j+i} z^i      σ̄₊(z)b_j = b_j - b_{j+1} z
    σ₋(z)b_j = Σ_{i>=0} b_{j-i} z^{-i}   σ̄₋(z)b_j = b_j - b_{j-1} z^{-1}

    The window may reach past the side the kind never touches (negative
    exponents for the raising kinds, positive ones for the lowering
    kinds); those coefficients are exact zeros, as in ``schubert_fock``.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    acc: Dict[int, Dict[WedgeMonomial, int]] = {}
    for mono, coeff in u.items():
        for e, terms in monomial_series(kind, mono, lo, hi):
            bucket = acc.setdefault(e, {})
            for m, c in terms:
                accumulate(bucket, m, coeff * c)
    c_lo, c_hi = kind_support(kind, u.max_degree() if u else 0)
    bb = c_lo is not None and lo <= c_lo
    ba = c_hi is not None and hi >= c_hi
    return LaurentSeries(lo, hi, {e: ExtVector(t) for e, t in acc.items()}, ExtVector(), "z", bb, ba)


def sigma_ext(i: int, u: ExtVector, bar: bool = False) -> ExtVector:
    """The coefficient operator σ_i (σ̄_i when ``bar``): z^i of σ₊ for i >= 0, of σ₋ for i < 0."""
    if bar:
        kind = SchubertKind.BAR_PLUS if i >= 0 else SchubertKind.BAR_MINUS
    else:
        kind = SchubertKind.PLUS if i >= 0 else SchubertKind.MINUS
    return schubert_ext(kind, u, (i, i)).coeff(i)
