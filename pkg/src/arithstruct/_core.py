"""Frontier engine on dense square-free coefficient vectors.

A polynomial in ``n`` variables is a tuple ``c`` of length ``2**n`` where
``c[m]`` is the coefficient of the monomial whose variables are the set bits
of ``m``. Every routine here is a pure function of such tuples, which keeps the
memo cache trivially thread-safe and lets the public modules stay thin.

The central object is the upward-closed set

    P(c) = {d >= 1 : c shifted by d has positive non-constant part and c(d) >= 0}

and :func:`min_dgeq0` returns its minimal elements.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

Coefs = tuple[int, ...]
Vec = tuple[int, ...]


def ceil_div(p: int, q: int) -> int:
    """Exact ceiling of ``p / q`` for ``q > 0``, any sign of ``p``."""
    return -((-p) // q)


def shift(c: Sequence[int], n: int, d: Sequence[int]) -> list[int]:
    """Coefficients of ``c(X + d)`` (a subset-sum transform, one pass per variable)."""
    c = list(c)
    size = 1 << n
    for i in range(n):
        di = d[i]
        if not di:
            continue
        b = 1 << i
        for m in range(size):
            if not m & b:
                c[m] += di * c[m | b]
    return c


def evaluate(c: Sequence[int], n: int, x: Sequence[int]) -> int:
    total = 0
    for m in range(1 << n):
        v = c[m]
        if v:
            for i in range(n):
                if m >> i & 1:
                    v *= x[i]
            total += v
    return total


def partial(c: Sequence[int], n: int, s: int) -> Coefs:
    """Derivative in variable ``s``, re-indexed over the other ``n - 1`` variables."""
    lo = (1 << s) - 1
    bit = 1 << s
    return tuple(c[(m & lo) | ((m & ~lo) << 1) | bit] for m in range(1 << (n - 1)))


def fix_first(c: Sequence[int], n: int, v: int) -> list[int]:
    """Substitute ``x_0 = v``."""
    return [c[m << 1] + v * c[(m << 1) | 1] for m in range(1 << (n - 1))]


def positive_part(g: Sequence[int]) -> bool:
    """All non-constant coefficients are strictly positive."""
    return all(x > 0 for x in g[1:])


def in_dgeq0(g: Sequence[int]) -> bool:
    return g[0] >= 0 and positive_part(g)


def expand(v: Vec, s: int) -> Vec:
    return v[:s] + (1,) + v[s:]


# ---------------------------------------------------------------- base cases


def one_var(c: Sequence[int]) -> Vec:
    a, k = c[1], c[0]
    return (max(1, ceil_div(-k, a)),)


def two_var(a: int, b1: int, b2: int, k: int) -> list[Vec]:
    """Minimal elements for ``a*x1*x2 + b1*x1 + b2*x2 + k`` with ``a >= 1``.

    The linear coefficients after shifting are ``b1 + a*d2`` and
    ``b2 + a*d1``, which fixes lower bounds on each coordinate; for each
    admissible ``d1`` the value constraint gives the least ``d2``, and only
    strict drops of that least value are minimal. Between drops ``d1`` jumps
    directly, so the cost is linear in the output, not in the coefficients.
    """
    lo1 = max(1, ceil_div(1 - b2, a))
    lo2 = max(1, ceil_div(1 - b1, a))
    out = []
    d1 = lo1
    while True:
        y = max(lo2, ceil_div(-(k + b1 * d1), a * d1 + b2))
        out.append((d1, y))
        if y == lo2:
            return out
        d1 = max(d1 + 1, _next_drop(a, b1, b2, k, y))


def _next_drop(a: int, b: int, c: int, k: int, y: int) -> int:
    """Least ``x`` with ``-(k + b*x) <= (y - 1)*(a*x + c)``, given that ``-b - (y - 1)*a < 0``."""
    A = -b - (y - 1) * a
    B = (y - 1) * c + k
    return ceil_div(-B, -A)


# ---------------------------------------------------------------- completion


def completion(g: Sequence[int], n: int) -> list[Vec]:
    """Minimal ``e >= 0`` with ``g(e) >= 0``, for ``g`` with positive non-constant part.

    Recurses over the value of the first coordinate. The slices
    ``{w : g(e0, w) >= 0}`` grow with ``e0``, so ``(e0, w)`` is minimal exactly
    when ``w`` is minimal for slice ``e0`` and fails slice ``e0 - 1``.
    """
    if g[0] >= 0:
        return [(0,) * n]
    if n == 1:
        return [(ceil_div(-g[0], g[1]),)]
    if n == 2:
        k, b0, b1, a = g
        out = []
        last = ceil_div(-k, b0)
        e0 = 0
        while e0 < last:
            y = ceil_div(-(k + b0 * e0), a * e0 + b1)
            out.append((e0, y))
            e0 = min(last, max(e0 + 1, _next_drop(a, b0, b1, k, y)))
        out.append((last, 0))
        return out
    out = []
    prev = None
    e0 = 0
    while True:
        sub = fix_first(g, n, e0)
        if sub[0] >= 0:
            out.append((e0,) + (0,) * (n - 1))
            return out
        for w in completion(sub, n - 1):
            if prev is None or evaluate(prev, n - 1, w) < 0:
                out.append((e0,) + w)
        prev = sub
        e0 += 1


# ----------------------------------------------------------- minimality test


def drop(g: Sequence[int], i: int) -> list[int]:
    """Coefficients of ``g(X - e_i)``."""
    b = 1 << i
    return [g[m] - g[m | b] if not m & b else g[m] for m in range(len(g))]


def locally_minimal(c: Sequence[int], n: int, v: Sequence[int], member: Callable[[list[int]], bool]) -> bool:
    """Minimality of ``v`` inside an upward-closed set given by a shifted-coefficient test.

    For an upward-closed set, ``v`` is minimal iff no ``v - e_i`` (with
    ``v_i > 1``) belongs to it; the caller has already checked ``v`` itself.
    """
    g = shift(c, n, v)
    for i in range(n):
        if v[i] > 1 and member(drop(g, i)):
            return False
    return True


def _start_member(n: int, ks: tuple[int, ...]) -> Callable[[list[int]], bool]:
    masks = [m for m in range(1, 1 << n) if any(m >> s & 1 for s in ks)]
    higher = [m for m in masks if m & (m - 1)]
    linear = [m for m in masks if not m & (m - 1)]

    def member(g):
        return all(g[m] > 0 for m in higher) and all(g[m] >= 0 for m in linear)

    return member


# ------------------------------------------------------------------- engine


def start_points(c: Coefs, n: int) -> list[Vec]:
    """Minimal ``d >= 1`` at which every partial derivative lies in its own set.

    Built by intersecting, one variable at a time, the up-sets generated by
    the (expanded) frontiers of the partial derivatives.
    """
    starts: list[Vec] | None = None
    ks: list[int] = []
    for s in range(n):
        A = [expand(v, s) for v in min_dgeq0(partial(c, n, s), n - 1)]
        ks.append(s)
        if starts is None:
            starts = A
            continue
        cand = {tuple(max(a, b) for a, b in zip(p, q)) for p in starts for q in A}
        member = _start_member(n, tuple(ks))
        starts = [v for v in cand if locally_minimal(c, n, v, member)]
    return sorted(starts)


def _fixups(g: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Unit increments that make every linear coefficient positive.

    Raising ``d_t`` adds the (positive) quadratic coefficient of ``x_s x_t``
    to the linear coefficient of ``x_s`` for every ``s != t``, but never to
    that of ``x_t`` itself.
    """
    zero = [s for s in range(n) if g[1 << s] == 0]
    if not zero:
        return [()]
    if len(zero) == 1:
        return [(t,) for t in range(n) if t != zero[0]]
    return [(t,) for t in range(n) if t not in zero] + list(combinations(zero, 2))


def check_start(g: Sequence[int], n: int, d: Vec):
    """Runtime guard: start points have positive higher coefficients and non-negative linear ones."""
    for m in range(1, 1 << n):
        bad = g[m] <= 0 if m & (m - 1) else g[m] < 0
        if bad:
            raise AssertionError(f"start point {d} violates the coefficient invariant at mask {m}")


def candidates(c: Coefs, n: int, starts: list[Vec]) -> set[Vec]:
    out: set[Vec] = set()
    for d in starts:
        g = shift(c, n, d)
        check_start(g, n, d)
        for T in _fixups(g, n):
            p = list(d)
            for t in T:
                p[t] += 1
            gp = shift(c, n, p)
            for w in completion(gp, n):
                out.add(tuple(x + y for x, y in zip(p, w)))
    return out


@lru_cache(maxsize=None)
def min_dgeq0(c: Coefs, n: int) -> tuple[Vec, ...]:
    """Minimal elements of P(c); ``c`` must have a positive top coefficient."""
    if n == 1:
        return (one_var(c),)
    if n == 2:
        k, b1, b2, a = c
        return tuple(sorted(two_var(a, b1, b2, k)))
    starts = start_points(c, n)
    cands = candidates(c, n, starts)
    return tuple(sorted(v for v in cands if locally_minimal(c, n, v, in_dgeq0)))


def min_dgeq0_recursive(c: Coefs, n: int) -> tuple[Vec, ...]:
    """Same as :func:`min_dgeq0` but recursing below two variables too (for cross-checks)."""
    if n == 1:
        return (one_var(c),)
    starts: list[Vec] | None = None
    ks: list[int] = []
    for s in range(n):
        A = [expand(v, s) for v in min_dgeq0_recursive(partial(c, n, s), n - 1)]
        ks.append(s)
        if starts is None:
            starts = A
            continue
        cand = {tuple(max(a, b) for a, b in zip(p, q)) for p in starts for q in A}
        member = _start_member(n, tuple(ks))
        starts = [v for v in cand if locally_minimal(c, n, v, member)]
    cands = candidates(c, n, sorted(starts))
    return tuple(sorted(v for v in cands if locally_minimal(c, n, v, in_dgeq0)))


def clear_cache():
    min_dgeq0.cache_clear()


def fix_var(c: Sequence[int], n: int, i: int, v: int) -> list[int]:
    """Substitute ``x_i = v``; the result is indexed over the other ``n - 1`` variables."""
    lo = (1 << i) - 1
    bit = 1 << i
    out = []
    for m in range(1 << (n - 1)):
        full = (m & lo) | ((m & ~lo) << 1)
        out.append(c[full] + v * c[full | bit])
    return out
