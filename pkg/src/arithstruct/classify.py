"""Z-matrix taxonomy, structure predicates and three-variable MP membership."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product
from math import gcd, isqrt
from typing import Sequence

from . import _core
from .errors import BadInput, DimensionMismatch, NotAStructure
from .exactmat import IntMatrix, principal_minor
from .polyring import SqFreePoly, charpoly_of_matrix, mask_vars


@dataclass(frozen=True)
class ZClassification:
    """Flags derived from the principal minors of a square matrix.

    ``proper_*`` flags look only at proper principal minors, so they are
    vacuously true for a 1x1 matrix.
    """

    is_z: bool
    det: int
    all_minors_nonneg: bool
    all_minors_pos: bool
    proper_pos_det_nonneg: bool
    proper_nonneg: bool
    proper_pos: bool

    @property
    def label(self) -> str:
        """Most specific class name."""
        if not self.is_z:
            return "not a Z-matrix"
        if self.all_minors_pos:
            return "non-singular M-matrix"
        if self.proper_pos_det_nonneg:
            return "almost non-singular M-matrix"
        if self.all_minors_nonneg:
            return "M-matrix"
        if self.proper_pos:
            return "quasi non-singular M-matrix"
        if self.proper_nonneg:
            return "quasi M-matrix"
        return "Z-matrix"

    def to_json(self) -> dict:
        out = asdict(self)
        out["det"] = str(self.det)
        out["label"] = self.label
        return out


def classify_z(M: IntMatrix) -> ZClassification:
    """Classify ``M`` by enumerating all of its principal minors."""
    n = M.n
    is_z = all(M[i, j] <= 0 for i in range(n) for j in range(n) if i != j)
    full = (1 << n) - 1
    d = principal_minor(M, range(n))
    if not is_z:
        return ZClassification(False, d, False, False, False, False, False)
    proper = [principal_minor(M, mask_vars(m)) for m in range(1, full)]
    p_nonneg = all(x >= 0 for x in proper)
    p_pos = all(x > 0 for x in proper)
    return ZClassification(
        is_z=True,
        det=d,
        all_minors_nonneg=p_nonneg and d >= 0,
        all_minors_pos=p_pos and d > 0,
        proper_pos_det_nonneg=p_pos and d >= 0,
        proper_nonneg=p_nonneg,
        proper_pos=p_pos,
    )


def check_nonneg_zero_diag(L: IntMatrix):
    if any(L[i, j] < 0 for i in range(L.n) for j in range(L.n)):
        raise BadInput("matrix has negative entries")
    if any(L.diagonal()):
        raise BadInput("matrix has a nonzero diagonal entry")


def _check_positive(d: Sequence[int], n: int, exc=BadInput):
    if len(d) != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {len(d)}")
    if any(x <= 0 for x in d):
        raise exc(f"vector {tuple(d)} is not positive")


def is_arithmetical_d(L: IntMatrix, d: Sequence[int]) -> bool:
    """True iff ``d`` is the diagonal part of an arithmetical structure of ``L``."""
    check_nonneg_zero_diag(L)
    _check_positive(d, L.n)
    g = _core.shift(charpoly_of_matrix(L).dense(), L.n, d)
    return g[0] == 0 and _core.positive_part(g)


def critical_group_order(f: SqFreePoly, d: Sequence[int]) -> int:
    """Gcd of the linear coefficients of ``f`` shifted to ``d``.

    Raises:
        NotAStructure: ``d`` is not positive, ``f(d) != 0``, or some
            non-constant shifted coefficient is not positive.
    """
    _check_positive(d, f.nvars, NotAStructure)
    g = _core.shift(f.dense(), f.nvars, d)
    if g[0] != 0 or not _core.positive_part(g):
        raise NotAStructure(f"{tuple(d)} is not an arithmetical structure of {f}")
    k = 0
    for s in range(f.nvars):
        k = gcd(k, g[1 << s])
    return k


# ------------------------------------------------------------ MP membership


def signed_divisors(a: int) -> list[int]:
    """All positive and negative divisors of a nonzero integer, ascending."""
    a = abs(a)
    small = [k for k in range(1, isqrt(a) + 1) if a % k == 0]
    pos = sorted(set(small + [a // k for k in small]))
    return sorted([-k for k in pos] + pos)


def mp3_poly(a1: int, a2: int, a3: int, b: int) -> SqFreePoly:
    return SqFreePoly(("x1", "x2", "x3"), {0b111: 1, 0b001: a1, 0b010: a2, 0b100: a3, 0: b})


def _witness(a1, a2, a3, n1, n2, n3) -> IntMatrix:
    return IntMatrix.from_rows([
        [0, n3, -a2 // n2],
        [-a3 // n3, 0, n1],
        [n2, -a1 // n1, 0],
    ])


def _zero_witness(a: Sequence[int], b: int, i: int) -> IntMatrix:
    # with a[i] == 0 the entry pair attached to variable i can absorb any constant
    perm = [i] + [k for k in range(3) if k != i]
    _, p2, p3 = (a[k] for k in perm)
    W = [[0, -p3, 1], [1, 0, 0], [-p2, -b, 0]]
    out = [[0] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            out[perm[r]][perm[c]] = W[r][c]
    return IntMatrix.from_rows(out)


def mp3_admissible_constants(a1: int, a2: int, a3: int) -> list[int] | None:
    """Constants ``b`` making ``x1x2x3 + a1x1 + a2x2 + a3x3 + b`` a characteristic polynomial.

    Returns:
        Sorted list of every admissible ``b``, or None when ``a1*a2*a3 == 0``
        (then every integer is admissible).
    """
    p = a1 * a2 * a3
    if p == 0:
        return None
    out = set()
    for n1, n2, n3 in product(signed_divisors(a1), signed_divisors(a2), signed_divisors(a3)):
        n = n1 * n2 * n3
        out.add(p // n - n)
    return sorted(out)


def mp3_membership(a1: int, a2: int, a3: int, b: int) -> IntMatrix | None:
    """Zero-diagonal witness matrix whose characteristic polynomial is the given cubic, if any."""
    a = (a1, a2, a3)
    target = mp3_poly(a1, a2, a3, b)
    if a1 * a2 * a3 == 0:
        W = _zero_witness(a, b, a.index(0))
    else:
        W = None
        p = a1 * a2 * a3
        for n1, n2, n3 in product(signed_divisors(a1), signed_divisors(a2), signed_divisors(a3)):
            n = n1 * n2 * n3
            if p // n - n == b:
                W = _witness(a1, a2, a3, n1, n2, n3)
                break
        if W is None:
            return None
    if charpoly_of_matrix(W) != target:
        raise AssertionError(f"witness for {target} failed to reproduce it")
    return W
