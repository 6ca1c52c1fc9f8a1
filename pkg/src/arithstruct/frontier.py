"""Antichains of integer vectors under the componentwise order."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .exactmat import json_int

Vec = tuple[int, ...]


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def minimal_elements(vs: Iterable[Sequence[int]]) -> list[Vec]:
    """Minimal elements of a finite set, lexicographically sorted."""
    # sorting by coordinate sum means any dominator is seen before what it dominates
    pool = sorted({tuple(v) for v in vs}, key=lambda v: (sum(v), v))
    kept: list[Vec] = []
    for v in pool:
        if not any(leq(u, v) for u in kept):
            kept.append(v)
    return sorted(kept)


class Frontier:
    """Immutable antichain, stored in lexicographic order.

    Args:
        elems: vectors to reduce to their minimal elements.
        dim: vector length; inferred from ``elems`` when omitted.
    """

    __slots__ = ("_elems", "dim")

    def __init__(self, elems: Iterable[Sequence[int]] = (), dim: int | None = None):
        elems = [tuple(int(x) for x in v) for v in elems]
        if dim is None:
            dim = len(elems[0]) if elems else None
        if any(len(v) != dim for v in elems):
            raise DimensionMismatch("all frontier vectors must have the same length")
        self.dim = dim
        self._elems = tuple(minimal_elements(elems))

    @classmethod
    def trusted(cls, elems: Iterable[Vec], dim: int | None = None) -> "Frontier":
        """Wrap vectors already known to form an antichain (no reduction pass)."""
        obj = cls.__new__(cls)
        elems = tuple(sorted(tuple(v) for v in elems))
        obj.dim = dim if dim is not None else (len(elems[0]) if elems else None)
        obj._elems = elems
        return obj

    @property
    def elems(self) -> tuple[Vec, ...]:
        return self._elems

    def __iter__(self):
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __contains__(self, v) -> bool:
        return tuple(v) in set(self._elems)

    def __eq__(self, other) -> bool:
        if isinstance(other, Frontier):
            return self._elems == other._elems
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elems)

    def __repr__(self) -> str:
        return f"Frontier({list(self._elems)})"

    def _check(self, v: Sequence[int]):
        if self.dim is not None and len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} against frontier of dimension {self.dim}")

    def dominates_some(self, v: Sequence[int]) -> bool:
        """True iff some element is componentwise <= ``v``."""
        self._check(v)
        return any(leq(u, v) for u in self._elems)

    def insert_min(self, v: Sequence[int]) -> "Frontier":
        self._check(v)
        v = tuple(int(x) for x in v)
        if any(leq(u, v) for u in self._elems):
            return self
        kept = [u for u in self._elems if not leq(v, u)]
        kept.append(v)
        return Frontier.trusted(kept, len(v))

    def merge(self, other: "Frontier") -> "Frontier":
        if self.dim is not None and other.dim is not None and self.dim != other.dim:
            raise DimensionMismatch("frontiers of different dimension")
        return Frontier(self._elems + other._elems, self.dim if self.dim is not None else other.dim)

    def max_coords(self) -> Vec:
        """Coordinatewise maximum over the elements."""
        if not self._elems:
            return ()
        return tuple(max(col) for col in zip(*self._elems))

    def to_json(self) -> list[list]:
        return [[json_int(x) for x in v] for v in self._elems]

    @classmethod
    def from_json(cls, arr: list) -> "Frontier":
        return cls([tuple(int(x) for x in v) for v in arr])
