"""Exact integer linear algebra on small square matrices.

Everything here works on Python ints, so there is no overflow at any size.
Indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import BadInput, IndexOutOfRange, KernelDimension

_EXACT = 1 << 53


def _to_int(x) -> int:
    if isinstance(x, bool):
        raise BadInput(f"matrix entry must be an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            raise BadInput(f"bad integer literal {x!r}") from None
    raise BadInput(f"matrix entry must be an integer, got {x!r}")


def json_int(x: int):
    """Plain int when a double holds it exactly, decimal string otherwise."""
    return x if -_EXACT <= x <= _EXACT else str(x)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_to_int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0:
            raise BadInput("matrix must have at least one row")
        if any(len(r) != n for r in rows):
            raise BadInput("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "IntMatrix":
        try:
            return cls(tuple(tuple(r) for r in rows))
        except TypeError:
            raise BadInput("matrix rows must be sequences of integers") from None

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, d: Sequence[int]) -> "IntMatrix":
        n = len(d)
        return cls(tuple(tuple(d[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if other.n != self.n:
            raise BadInput("size mismatch")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if other.n != self.n:
            raise BadInput("size mismatch")
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * a for a in r) for r in self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def off_diagonal(self) -> "IntMatrix":
        """Copy with the diagonal zeroed."""
        return IntMatrix(tuple(tuple(0 if i == j else a for j, a in enumerate(r)) for i, r in enumerate(self.rows)))

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.n:
            raise BadInput("vector length does not match matrix size")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def is_nonneg_zero_diag(self) -> bool:
        return all(a >= 0 for r in self.rows for a in r) and not any(self.diagonal())

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[json_int(a) for a in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntMatrix":
        try:
            rows = obj["rows"]
        except (KeyError, TypeError):
            raise BadInput("matrix JSON needs a 'rows' field") from None
        m = cls.from_rows(rows)
        if "n" in obj and int(obj["n"]) != m.n:
            raise BadInput(f"declared n={obj['n']} but got {m.n} rows")
        return m

    def __str__(self) -> str:
        w = max(len(str(a)) for r in self.rows for a in r)
        return "\n".join(" ".join(str(a).rjust(w) for a in r) for r in self.rows)


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (det, rank).

    Works on rectangular input as well; det is only meaningful when square.
    """
    m = len(rows)
    if m == 0:
        return 1, 0
    ncols = len(rows[0])
    sign, prev, r = 1, 1, 0
    for k in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][k] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr = rows[r]
        p = pr[k]
        for i in range(r + 1, m):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, ncols):
                ri[j] = (ri[j] * p - a * pr[j]) // prev
            ri[k] = 0
        prev = p
        r += 1
    if m == ncols and r == m:
        return sign * rows[m - 1][m - 1], r
    return 0, r


def det(M: IntMatrix | Sequence[Sequence[int]]) -> int:
    rows = [list(r) for r in (M.rows if isinstance(M, IntMatrix) else M)]
    return _bareiss(rows)[0]


def rank(M: IntMatrix) -> int:
    return _bareiss([list(r) for r in M.rows])[1]


def _check_index(i: int, n: int) -> int:
    if not isinstance(i, int) or not 0 <= i < n:
        raise IndexOutOfRange(f"index {i!r} outside 0..{n - 1}")
    return i


def submatrix(M: IntMatrix, index: Iterable[int]) -> list[list[int]]:
    idx = sorted({_check_index(i, M.n) for i in index})
    return [[M.rows[i][j] for j in idx] for i in idx]


def principal_minor(M: IntMatrix, index: Iterable[int]) -> int:
    """Determinant of ``M[I;I]`` for a nonempty index set ``I``."""
    sub = submatrix(M, index)
    if not sub:
        raise IndexOutOfRange("index set must be nonempty")
    return det(sub)


def delete_rc(M: IntMatrix, s: int) -> IntMatrix:
    """Drop row and column ``s``."""
    if M.n < 2:
        raise IndexOutOfRange("cannot delete from a 1x1 matrix")
    _check_index(s, M.n)
    return IntMatrix(tuple(tuple(a for j, a in enumerate(r) if j != s) for i, r in enumerate(M.rows) if i != s))


def _reach(adj: list[list[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_irreducible(M: IntMatrix) -> bool:
    """Strong connectivity of the digraph with an arc i->j per nonzero off-diagonal entry."""
    n = M.n
    if n == 1:
        return True
    out = [[j for j in range(n) if j != i and M.rows[i][j]] for i in range(n)]
    inn = [[j for j in range(n) if j != i and M.rows[j][i]] for i in range(n)]
    return len(_reach(out, 0)) == n and len(_reach(inn, 0)) == n


def nullspace_basis(M: IntMatrix) -> list[list[Fraction]]:
    """Rational basis of the right kernel via reduced row echelon form."""
    n = M.n
    A = [[Fraction(a) for a in r] for r in M.rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -A[row][fc]
        basis.append(v)
    return basis


def primitive(v: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Clear denominators, divide by the gcd, make the first nonzero entry positive."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_primitive(M: IntMatrix) -> tuple[int, ...] | None:
    """Primitive generator of a one-dimensional kernel, or None if it is not positive.

    Raises:
        KernelDimension: the kernel is not one-dimensional.
    """
    basis = nullspace_basis(M)
    if len(basis) != 1:
        raise KernelDimension(f"kernel has dimension {len(basis)}, expected 1")
    r = primitive(basis[0])
    if any(x <= 0 for x in r):
        return None
    return r
