"""Positive integer solutions beyond the frontier: slicing search and box brute force."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Sequence

from . import _core
from .errors import BadInput, BoxTooLarge, DimensionMismatch
from .exactmat import IntMatrix, json_int, nullspace_basis, primitive
from .frontier import Frontier
from .poly_enum import validate
from .polyring import SqFreePoly

DEFAULT_BOX_CAP = 10**8


@dataclass
class SolutionSet:
    """Solutions found by one search.

    Attributes:
        solutions: positive vectors, lexicographically sorted.
        complete: True when the search provably found every positive
            solution in ``region``.
        region: what was searched and, for slicing, which slices were left open.
        pairs: for matrix brute force, the ``(d, r)`` pairs behind ``solutions``.
    """

    solutions: list[tuple[int, ...]]
    complete: bool
    region: dict = field(default_factory=dict)
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "solutions": [[json_int(x) for x in v] for v in self.solutions],
            "complete": self.complete,
            "region": self.region,
        }
        if self.pairs:
            out["pairs"] = [{"d": [json_int(x) for x in d], "r": [json_int(x) for x in r]} for d, r in self.pairs]
        return out


def _linear_root(a: int, k: int) -> tuple[list[tuple[int]], bool]:
    """Positive roots of ``a*x + k``; the flag is False when every ``x`` is a root."""
    if a == 0:
        return [], k != 0
    if k % a == 0 and -k // a > 0:
        return [(-k // a,)], True
    return [], True


def _box_zeros(c: Sequence[int], n: int, bound: int) -> list[tuple[int, ...]]:
    return [v for v in product(range(1, bound + 1), repeat=n) if _core.evaluate(c, n, v) == 0]


class _Search:
    def __init__(self, scan_bound: int | None):
        self.scan_bound = scan_bound
        self.unresolved: list[dict] = []
        self.slices = 0

    def solve(self, c: list[int], n: int, fixed: dict[int, int], free: list[int]) -> set[tuple[int, ...]]:
        """Positive zeros of ``c``, as vectors over ``free`` (positions in the original order)."""
        if n == 1:
            sols, ok = _linear_root(c[1], c[0])
            if not ok:
                self._open(fixed, "every value of the last variable is a root")
            return set(sols)
        full = (1 << n) - 1
        if c[full] == 0:
            self._open(fixed, "residual has no dominant monomial")
            return set(_box_zeros(c, n, self.scan_bound)) if self.scan_bound else set()
        if c[full] < 0:
            c = [-x for x in c]
        front = _core.min_dgeq0(tuple(c), n)
        return self._sliced(c, n, front, fixed, free)

    def _sliced(self, c, n, front, fixed, free) -> set[tuple[int, ...]]:
        found = {d for d in front if _core.shift(c, n, d)[0] == 0}
        top = [max(col) for col in zip(*front)]
        for i in range(n):
            rest = free[:i] + free[i + 1:]
            for t in range(1, top[i]):
                self.slices += 1
                sub = _core.fix_var(c, n, i, t)
                for w in self.solve(sub, n - 1, {**fixed, free[i]: t}, rest):
                    found.add(w[:i] + (t,) + w[i:])
        return found

    def _open(self, fixed: dict[int, int], reason: str):
        self.unresolved.append({"fixed": {str(k): json_int(v) for k, v in sorted(fixed.items())}, "reason": reason})


def slice_solve(f: SqFreePoly, frontier: Frontier | None = None, scan_bound: int | None = None) -> SolutionSet:
    """Positive zeros of ``f`` by slicing below the frontier.

    A zero that dominates a frontier point must equal it, so every other zero
    has some coordinate below that coordinate's maximum over the frontier.
    Each such hyperplane is solved recursively; a residual whose top
    coefficient vanishes cannot be sliced and is reported as unresolved.

    Args:
        f: dominated polynomial with positive leading coefficient.
        frontier: its frontier, if already known.
        scan_bound: optional box bound used to scan unresolved residuals; the
            result stays incomplete either way.
    """
    validate(f)
    n = f.nvars
    c = list(f.dense())
    front = tuple(frontier) if frontier is not None else _core.min_dgeq0(tuple(c), n)
    search = _Search(scan_bound)
    if n == 1:
        found = set(_linear_root(c[1], c[0])[0])
    else:
        found = search._sliced(c, n, front, {}, list(range(n)))
    region = {
        "frontier_max": [json_int(x) for x in (max(col) for col in zip(*front))],
        "slices": search.slices,
        "unresolved": search.unresolved,
    }
    if scan_bound:
        region["scan_bound"] = scan_bound
    return SolutionSet(sorted(found), not search.unresolved, region)


def solve_slice(f: SqFreePoly, var: int, value: int, scan_bound: int | None = None) -> SolutionSet:
    """Positive zeros of ``f`` with ``x_var = value``, as full-length vectors."""
    n = f.nvars
    if not 0 <= var < n:
        raise DimensionMismatch(f"variable index {var} outside 0..{n - 1}")
    if value < 1:
        raise BadInput("slice value must be positive")
    search = _Search(scan_bound)
    sub = _core.fix_var(f.dense(), n, var, value)
    free = [i for i in range(n) if i != var]
    found = search.solve(sub, n - 1, {var: value}, free)
    sols = sorted(w[:var] + (value,) + w[var:] for w in found)
    return SolutionSet(sols, not search.unresolved, {"fixed": {str(var): value}, "unresolved": search.unresolved})


def brute_force_box(target, box: Sequence[int], cap: int = DEFAULT_BOX_CAP) -> SolutionSet:
    """Exhaustive scan of ``[1, box_1] x ... x [1, box_n]``.

    For a matrix ``L`` this lists every ``d`` whose ``Diag(d) - L`` has a
    one-dimensional kernel spanned by a positive vector; ``L`` may have
    negative entries. For a polynomial it lists every zero.

    Raises:
        BoxTooLarge: the box has more than ``cap`` points.
    """
    box = [int(b) for b in box]
    n = target.n if isinstance(target, IntMatrix) else target.nvars
    if len(box) != n:
        raise DimensionMismatch(f"box has {len(box)} bounds for {n} coordinates")
    if any(b < 1 for b in box):
        raise BadInput("box bounds must be at least 1")
    size = prod(box)
    if size > cap:
        raise BoxTooLarge(f"box has {size} points, cap is {cap}")
    region = {"box": box}
    ranges = [range(1, b + 1) for b in box]
    if isinstance(target, IntMatrix):
        pairs = []
        multi = []
        for d in product(*ranges):
            basis = nullspace_basis(IntMatrix.diag(d) - target)
            if len(basis) == 1:
                r = primitive(basis[0])
                if all(x > 0 for x in r):
                    pairs.append((d, r))
            elif len(basis) > 1:
                multi.append(list(d))
        if multi:
            region["kernel_dim_above_one"] = multi
        return SolutionSet([d for d, _ in pairs], True, region, pairs)
    if not isinstance(target, SqFreePoly):
        raise BadInput("target must be an IntMatrix or a SqFreePoly")
    c = target.dense()
    sols = [v for v in product(*ranges) if _core.evaluate(c, n, v) == 0]
    return SolutionSet(sols, True, region)
