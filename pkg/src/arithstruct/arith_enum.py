"""Arithmetical structures of non-negative integer matrices with zero diagonal.

The frontier of ``L`` is computed on the coefficient vector of
``det(Diag(X) - L)``. Differentiating that polynomial in ``x_s`` gives the
polynomial of ``L`` with row and column ``s`` removed, so the recursion over
partial derivatives inside the engine is the recursion over principal
submatrices.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from . import _core
from .classify import check_nonneg_zero_diag
from .errors import BadInput, IndexOutOfRange, NotQuasiNonSingular
from .exactmat import IntMatrix, delete_rc, is_irreducible, json_int, kernel_primitive
from .frontier import Frontier
from .polyring import charpoly_of_matrix

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ArithStructure:
    """A pair ``(d, r)`` with ``(Diag(d) - L) r = 0``, plus the critical-group order."""

    d: tuple[int, ...]
    r: tuple[int, ...]
    k_order: int

    def to_json(self) -> dict:
        return {"d": [json_int(x) for x in self.d], "r": [json_int(x) for x in self.r], "k": str(self.k_order)}

    @classmethod
    def from_json(cls, obj: dict) -> "ArithStructure":
        return cls(tuple(int(x) for x in obj["d"]), tuple(int(x) for x in obj["r"]), int(obj["k"]))


FINITE, INFINITE, EMPTY = "finite", "infinite", "empty"


@dataclass
class EnumReport:
    """Result of :func:`arithmetical_structures`.

    Attributes:
        outcome: ``"finite"``, ``"infinite"`` (reducible, no zero row) or
            ``"empty"`` (some zero row).
        structures: the structures when finite, otherwise empty.
        frontier: minimal elements of D>=0, computed in every case.
        stats: sizes and wall time; not part of equality.
    """

    outcome: str
    structures: list[ArithStructure]
    frontier: Frontier
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def d_set(self) -> list[tuple[int, ...]]:
        return [s.d for s in self.structures]

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "frontier": self.frontier.to_json(),
            "structures": [s.to_json() for s in self.structures],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EnumReport":
        return cls(obj["outcome"], [ArithStructure.from_json(s) for s in obj["structures"]], Frontier.from_json(obj["frontier"]))


def expand_vec(d: Sequence[int], s: int) -> tuple[int, ...]:
    """Insert a 1 at position ``s`` (0-based)."""
    if not 0 <= s <= len(d):
        raise IndexOutOfRange(f"position {s} outside 0..{len(d)}")
    return _core.expand(tuple(d), s)


def restrict_vec(d: Sequence[int], s: int) -> tuple[int, ...]:
    """Drop position ``s``; inverse of :func:`expand_vec`."""
    if not 0 <= s < len(d):
        raise IndexOutOfRange(f"position {s} outside 0..{len(d) - 1}")
    return tuple(d[:s]) + tuple(d[s + 1:])


def min_dgeq0_2x2(a: int, b: int) -> Frontier:
    """Frontier of ``[[0, a], [b, 0]]``: ``d1 * d2 >= a * b`` with both entries positive."""
    ab = a * b
    elems = []
    d = 1
    while True:
        q = max(1, _core.ceil_div(ab, d))
        elems.append((d, q))
        if q == 1:
            return Frontier.trusted(elems, 2)
        # least d' with ceil(ab / d') <= q - 1
        d = _core.ceil_div(ab, q - 1)


def min_completion(M: IntMatrix) -> Frontier:
    """Minimal ``e >= 0`` making ``M + Diag(e)`` have a non-negative determinant.

    Raises:
        NotQuasiNonSingular: some proper principal minor of ``M`` is not positive.
    """
    L = -M.off_diagonal()
    g = _core.shift(charpoly_of_matrix(L).dense(), M.n, M.diagonal())
    # coefficient of x_S in g is the principal minor of M on the complement of S
    if not _core.positive_part(g):
        raise NotQuasiNonSingular("some proper principal minor is not positive")
    return Frontier.trusted(_core.completion(g, M.n), M.n)


def _engine_frontier(L: IntMatrix) -> tuple[tuple[int, ...], ...]:
    if L.n == 2:
        return min_dgeq0_2x2(L[0, 1], L[1, 0]).elems
    return _core.min_dgeq0(charpoly_of_matrix(L).dense(), L.n)


def min_dgeq0_matrix(L: IntMatrix) -> Frontier:
    """Minimal ``d`` for which ``Diag(d) - L`` is an almost non-singular M-matrix.

    Raises:
        BadInput: ``L`` has a negative entry or a nonzero diagonal entry.
    """
    check_nonneg_zero_diag(L)
    return Frontier.trusted(_engine_frontier(L), L.n)


def start_points(L: IntMatrix) -> list[tuple[tuple[int, ...], int]]:
    """Minimal common upper bounds of the sub-frontiers, each with ``det(Diag(d) - L)``.

    These are the points from which completions are launched; a matrix of
    size below 3 has no such intermediate stage and yields an empty list.
    """
    check_nonneg_zero_diag(L)
    if L.n < 3:
        return []
    c = charpoly_of_matrix(L).dense()
    return [(d, _core.shift(c, L.n, d)[0]) for d in _core.start_points(c, L.n)]


def sub_frontier(L: IntMatrix, s: int) -> Frontier:
    """Frontier of ``L`` with row and column ``s`` removed."""
    return min_dgeq0_matrix(delete_rc(L, s))


def has_zero_row(L: IntMatrix) -> bool:
    return any(not any(r) for r in L.rows)


def arithmetical_structures(L: IntMatrix) -> EnumReport:
    """Enumerate the arithmetical structures of ``L``.

    Raises:
        BadInput: ``L`` has a negative entry or a nonzero diagonal entry.
    """
    check_nonneg_zero_diag(L)
    t0 = time.perf_counter()
    n = L.n
    c = charpoly_of_matrix(L).dense()
    front = Frontier.trusted(_engine_frontier(L), n)
    stats = {"n": n, "frontier": len(front)}
    if has_zero_row(L) or n == 1:
        outcome, structs = EMPTY, []
    elif not is_irreducible(L):
        outcome, structs = INFINITE, []
    else:
        outcome, structs = FINITE, []
        for d in front:
            g = _core.shift(c, n, d)
            if g[0] != 0:
                continue
            r = kernel_primitive(IntMatrix.diag(d) - L)
            if r is None:
                raise AssertionError(f"irreducible matrix with non-positive kernel at {d}")
            k = 0
            for s in range(n):
                k = gcd(k, g[1 << s])
            structs.append(ArithStructure(d, r, k))
    stats["structures"] = len(structs)
    stats["memo_entries"] = _core.min_dgeq0.cache_info().currsize
    stats["seconds"] = round(time.perf_counter() - t0, 6)
    log.debug("enumerated %s: %s", outcome, stats)
    return EnumReport(outcome, structs, front, stats)


def canonical_structure(L: IntMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pair ``(L * 1, 1)``."""
    if has_zero_row(L):
        raise BadInput("a matrix with a zero row has no canonical structure")
    return L.row_sums(), (1,) * L.n
