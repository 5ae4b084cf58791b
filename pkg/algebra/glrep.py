"""gl_n(ℤ) acting on ⋀^r M_n ≅ B_{r,n} through the even derivation δ(A).

M_n has basis b_0, …, b_{n-1}; indices pushed outside that range are
read as zero. Shapes of the r × (n - r) box index the wedge basis by
λ ↦ b_{r-1+λ_1} ∧ b_{r-2+λ_2} ∧ … ∧ b_{λ_r}.
"""

import logging
import random
from typing import Any, Dict, Iterable, List, Mapping, Optional

import numpy as np

from ..errors import DimensionMismatch, ShapeOutOfBox
from .exterior import ExtVector, normalize_wedge
from .fock import FockVector, wedge_onto
from .linear import FreeVector, accumulate
from .partitions import Partition, make_partition, partitions_in_box
from .vertex import GLElement

logger = logging.getLogger(__name__)


class FiniteGL:
    """A dense n × n integer matrix, entries kept as Python ints."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Any):
        array = np.array(entries, dtype=object)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise DimensionMismatch(f"expected a nonempty square matrix, got shape {array.shape}")
        self.n = array.shape[0]
        self.entries = array

    @classmethod
    def zeros(cls, n: int) -> "FiniteGL":
        return cls(np.zeros((n, n), dtype=object))

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "FiniteGL":
        """ℬ_ij."""
        if not (0 <= i < n and 0 <= j < n):
            raise DimensionMismatch(f"ℬ_{i}{j} does not fit gl_{n}")
        out = cls.zeros(n)
        out.entries[i, j] = 1
        return out

    @classmethod
    def random(cls, n: int, rng: random.Random, bound: int = 3) -> "FiniteGL":
        return cls([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])

    def __getitem__(self, key) -> int:
        return self.entries[key]

    def _check_same(self, other: "FiniteGL") -> None:
        if other.n != self.n:
            raise DimensionMismatch(f"gl_{self.n} and gl_{other.n} do not combine")

    def __add__(self, other: "FiniteGL") -> "FiniteGL":
        self._check_same(other)
        return FiniteGL(self.entries + other.entries)

    def __sub__(self, other: "FiniteGL") -> "FiniteGL":
        self._check_same(other)
        return FiniteGL(self.entries - other.entries)

    def __matmul__(self, other: "FiniteGL") -> "FiniteGL":
        self._check_same(other)
        return FiniteGL(self.entries.dot(other.entries))

    def __mul__(self, scalar: int) -> "FiniteGL":
        return FiniteGL(self.entries * scalar)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGL):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.entries, other.entries))

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.entries.flat)

    def nonzero(self) -> Iterable:
        for (i, j), a in np.ndenumerate(self.entries):
            if a:
                yield i, j, a

    def to_gl_element(self) -> GLElement:
        """The same matrix as a finitely supported element of gl_∞."""
        return GLElement({(int(i), int(j)): a for i, j, a in self.nonzero()})

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "rows": [[str(a) for a in row] for row in self.entries.tolist()]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FiniteGL":
        out = cls([[int(a) for a in row] for row in data["rows"]])
        if out.n != int(data["n"]):
            raise DimensionMismatch(f"declared n={data['n']} but got {out.n} rows")
        return out

    def __repr__(self) -> str:
        return f"FiniteGL({self.entries.tolist()!r})"


def bracket(a: FiniteGL, b: FiniteGL) -> FiniteGL:
    """[A, B] = AB - BA."""
    return a @ b - b @ a


class BoxBasisVector(FreeVector):
    """Integer combination of shapes in the r × (n - r) box."""

    __slots__ = ("r", "n")

    def __init__(self, terms=None, r: int = 0, n: int = 0):
        if not 0 <= r <= n:
            raise DimensionMismatch(f"need 0 <= r <= n, got r={r}, n={n}")
        super().__init__(terms)
        self.r = r
        self.n = n
        for lam in self.keys():
            if not lam.fits_box(r, n - r):
                raise ShapeOutOfBox(f"shape {lam} does not fit the {r} x {n - r} box")

    def _like(self, terms):
        out = super()._like(terms)
        out.r, out.n = self.r, self.n
        return out

    def _check_compatible(self, other: FreeVector) -> None:
        super()._check_compatible(other)
        if (other.r, other.n) != (self.r, self.n):  # type: ignore[attr-defined]
            raise DimensionMismatch(
                f"box ({self.r}, {self.n}) and box ({other.r}, {other.n}) do not combine"  # type: ignore[attr-defined]
            )

    def _same_extras(self, other: FreeVector) -> bool:
        return (self.r, self.n) == (other.r, other.n)  # type: ignore[attr-defined]

    @classmethod
    def shape(cls, parts: Iterable[int], r: int, n: int) -> "BoxBasisVector":
        return cls({make_partition(parts): 1}, r, n)

    @classmethod
    def box_basis(cls, r: int, n: int) -> List["BoxBasisVector"]:
        return [cls({lam: 1}, r, n) for lam in partitions_in_box(r, n - r)]


def shape_to_indices(lam: Partition, r: int, n: int) -> tuple:
    if not lam.fits_box(r, n - r):
        raise ShapeOutOfBox(f"shape {lam} does not fit the {r} x {n - r} box")
    return tuple(r - k + lam_k for k, lam_k in enumerate(lam.padded(r), start=1))


def box_to_wedge(v: BoxBasisVector) -> ExtVector:
    """λ ↦ b_{r-1+λ_1} ∧ … ∧ b_{λ_r}, extended linearly."""
    return ExtVector({shape_to_indices(lam, v.r, v.n): c for lam, c in v.items()})


def wedge_to_box(u: ExtVector, r: int, n: int) -> BoxBasisVector:
    """Inverse of box_to_wedge on degree-r monomials with indices in [0, n-1]."""
    terms: Dict[Partition, int] = {}
    for mono, c in u.items():
        if len(mono) != r or (mono and (mono[0] >= n or mono[-1] < 0)):
            raise ShapeOutOfBox(f"monomial {mono} is not in ⋀^{r} M_{n}")
        accumulate(terms, Partition(tuple(i - r + k for k, i in enumerate(mono, start=1))), c)
    return BoxBasisVector(terms, r, n)


def delta_action(a: FiniteGL, v: BoxBasisVector, r: Optional[int] = None) -> BoxBasisVector:
    """δ(A)v: A acts on one wedge factor at a time, A b_j = Σ_i a_ij b_i."""
    r = v.r if r is None else r
    if a.n != v.n or r != v.r:
        raise DimensionMismatch(f"gl_{a.n} cannot act on the ({v.r}, {v.n}) box as degree {r}")
    acc: Dict[tuple, int] = {}
    for mono, c in box_to_wedge(v).items():
        for pos, j in enumerate(mono):
            column = a.entries[:, j]
            for i in range(a.n):
                aij = column[i]
                if not aij:
                    continue
                normal = normalize_wedge(mono[:pos] + (i,) + mono[pos + 1:])
                if normal is not None:
                    accumulate(acc, normal[1], normal[0] * aij * c)
    return wedge_to_box(ExtVector(acc), v.r, v.n)


def to_fock(v: BoxBasisVector) -> FockVector:
    """The charge embedding λ ↦ [b]_{(r-1)+λ} = box_to_wedge(λ) ∧ [b]_{-1}."""
    return wedge_onto(box_to_wedge(v), FockVector.vacuum(-1))
