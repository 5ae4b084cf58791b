"""Integer partitions and the index combinatorics used throughout."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..errors import Negative, NonMonotone

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 0:
                raise Negative(f"negative part {p} in {parts}")
        for k in range(len(parts) - 1):
            if parts[k] < parts[k + 1]:
                raise NonMonotone(f"parts {parts} increase at position {k + 1}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, k: int) -> int:
        """The k-th part, 1-indexed; zero beyond the length."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def padded(self, r: int) -> Tuple[int, ...]:
        """Parts padded with zeros to length ``r`` (``r`` must be at least the length)."""
        if r < len(self.parts):
            raise ValueError(f"cannot pad {self} to {r} parts")
        return self.parts + (0,) * (r - len(self.parts))

    def fits_box(self, rows: int, cols: int) -> bool:
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def to_json(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Partition":
        return make_partition(data)


EMPTY = Partition(())


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalize a part sequence.

    Raises:
        NonMonotone: some part is smaller than the next one.
        Negative: some part is negative.
    """
    return Partition(tuple(parts))


def column(j: int) -> Partition:
    """The partition (1^j)."""
    return Partition((1,) * j)


def remove_part(lam: Partition, i: int) -> Partition:
    """λ^{(i)}: λ with its i-th part removed (a zero part when i > ℓ(λ))."""
    if i < 1:
        raise ValueError(f"part index must be positive, got {i}")
    if i > lam.length:
        return lam
    return Partition(lam.parts[: i - 1] + lam.parts[i:])


def add_column(lam: Partition, j: int) -> Partition:
    """λ + (1^j): the first j parts incremented, missing parts becoming 1."""
    if j < 0:
        raise ValueError(f"column height must be nonnegative, got {j}")
    padded = lam.padded(max(j, lam.length))
    return Partition(tuple(p + 1 if k < j else p for k, p in enumerate(padded)))


def _descending(weight: int, max_length: int, cap: int) -> Iterator[Tuple[int, ...]]:
    # partitions of `weight`, at most `max_length` parts, each part <= cap,
    # largest first part first
    if weight == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(weight, cap), 0, -1):
        for rest in _descending(weight - first, max_length - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _bounded(max_weight: int, max_length: int) -> Tuple[Partition, ...]:
    out: List[Partition] = []
    for weight in range(max_weight + 1):
        out.extend(Partition(p) for p in _descending(weight, max_length, weight))
    return tuple(out)


def enumerate_bounded(max_weight: int, max_length: int) -> List[Partition]:
    """All partitions with |λ| <= max_weight and ℓ(λ) <= max_length.

    Order is graded reverse-lexicographic: by weight, then by decreasing
    parts, e.g. (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
    """
    if max_weight < 0 or max_length < 0:
        raise ValueError(f"bounds must be nonnegative, got ({max_weight}, {max_length})")
    result = list(_bounded(max_weight, max_length))
    logger.debug(f"enumerated {len(result)} partitions (|λ|<={max_weight}, ℓ<={max_length})")
    return result


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """Shapes fitting an rows x cols box, in graded reverse-lexicographic order."""
    return [p for p in enumerate_bounded(rows * cols, rows) if p.fits_box(rows, cols)]
