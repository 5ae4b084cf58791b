"""Finitely supported integer combinations over a hashable basis.

Every vector type of the package (wedge vectors, Fock vectors, Schur
combinations, gl elements) is a ``FreeVector`` keyed by its basis type.
Zero coefficients are never stored, so equality is plain dict equality.
"""

from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, TypeVar, Union

V = TypeVar("V", bound="FreeVector")

TermSource = Union[Mapping[Any, int], Iterable[Tuple[Any, int]], None]


def accumulate(acc: Dict[Any, int], key: Hashable, coeff: int) -> None:
    """acc[key] += coeff, dropping the entry when it cancels."""
    if not coeff:
        return
    total = acc.get(key, 0) + coeff
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


class FreeVector:
    """A finitely supported ℤ-linear combination of basis keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermSource = None):
        acc: Dict[Any, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                accumulate(acc, key, int(coeff))
        self._terms = acc

    # -- construction hooks -------------------------------------------------

    def _like(self: V, terms: Dict[Any, int]) -> V:
        """Build a vector of the same kind (same extra attributes) from clean terms."""
        out = object.__new__(type(self))
        out._terms = terms
        return out

    def _check_compatible(self, other: "FreeVector") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    @classmethod
    def zero(cls: type) -> "FreeVector":
        return cls()

    @classmethod
    def basis(cls, key: Hashable, coeff: int = 1):
        return cls({key: coeff})

    # -- mapping protocol ---------------------------------------------------

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key: Hashable) -> int:
        return self._terms.get(key, 0)

    def __getitem__(self, key: Hashable) -> int:
        return self._terms.get(key, 0)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self: V, other: V) -> V:
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            accumulate(acc, key, coeff)
        return self._like(acc)

    __radd__ = __add__

    def __neg__(self: V) -> V:
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self: V, other: V) -> V:
        return self + (-other)

    def __mul__(self: V, scalar: int) -> V:
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return self._like({})
        return self._like({k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._same_extras(other) and self._terms == other._terms

    def _same_extras(self, other: "FreeVector") -> bool:
        return True

    __hash__ = None  # mutable-by-contract containers are not hashable

    def linear_map(self, fn: Callable[[Any], "FreeVector"], zero: Optional["FreeVector"] = None) -> "FreeVector":
        """Extend ``fn`` (defined on basis keys) linearly."""
        total = zero
        for key, coeff in self._terms.items():
            image = fn(key)
            if not image:
                if total is None:
                    total = image._like({})
                continue
            term = coeff * image
            total = term if total is None else total + term
        if total is None:
            raise ValueError("linear_map of an empty vector needs an explicit zero")
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = ", ".join(f"{k!r}: {c}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"
