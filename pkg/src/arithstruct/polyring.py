"""Square-free multivariate integer polynomials.

A :class:`SqFreePoly` stores one coefficient per variable subset. Subsets are
encoded as bitmasks (bit ``i`` set means variable ``i`` divides the monomial),
which makes shifting, differentiation and substitution cheap subset sums.
"""

from __future__ import annotations

import re
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import _core
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotDominated,
    NotSquareFree,
    ParseError,
    UnknownVariable,
    VariableUnused,
    ZeroPolynomial,
)
from .exactmat import IntMatrix, det, json_int


def _mask(key, n: int) -> int:
    if isinstance(key, int):
        if not 0 <= key < (1 << n):
            raise IndexOutOfRange(f"monomial mask {key} outside {n} variables")
        return key
    m = 0
    for i in key:
        if not 0 <= i < n:
            raise IndexOutOfRange(f"variable index {i} outside 0..{n - 1}")
        if m >> i & 1:
            raise NotSquareFree(f"variable {i} repeated in a monomial")
        m |= 1 << i
    return m


def mask_vars(m: int) -> tuple[int, ...]:
    return tuple(i for i in range(m.bit_length()) if m >> i & 1)


class SqFreePoly:
    """Polynomial whose exponents are all 0 or 1.

    Args:
        names: variable names, in order; their count fixes ``nvars``.
        terms: mapping from a monomial (bitmask or iterable of variable
            indices) to its integer coefficient. Zero coefficients are dropped.
    """

    __slots__ = ("names", "_c")

    def __init__(self, names: Sequence[str], terms: Mapping = ()):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ParseError("duplicate variable names")
        n = len(self.names)
        c: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coef in items:
            m = _mask(key, n)
            c[m] = c.get(m, 0) + int(coef)
        self._c = {m: v for m, v in sorted(c.items()) if v}

    @classmethod
    def from_dense(cls, names: Sequence[str], coefs: Sequence[int]) -> "SqFreePoly":
        return cls(names, {m: v for m, v in enumerate(coefs) if v})

    @classmethod
    def default_names(cls, n: int) -> tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(n))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def terms(self) -> dict[frozenset[int], int]:
        return {frozenset(mask_vars(m)): v for m, v in self._c.items()}

    def items(self):
        """(mask, coefficient) pairs in increasing mask order."""
        return self._c.items()

    def coef(self, monomial=0) -> int:
        return self._c.get(_mask(monomial, self.nvars), 0)

    def dense(self) -> tuple[int, ...]:
        out = [0] * (1 << self.nvars)
        for m, v in self._c.items():
            out[m] = v
        return tuple(out)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def constant(self) -> int:
        return self._c.get(0, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SqFreePoly):
            return NotImplemented
        return self.names == other.names and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.names, tuple(self._c.items())))

    def __neg__(self) -> "SqFreePoly":
        return SqFreePoly(self.names, {m: -v for m, v in self._c.items()})

    def add_constant(self, k: int) -> "SqFreePoly":
        c = dict(self._c)
        c[0] = c.get(0, 0) + k
        return SqFreePoly(self.names, c)

    def __repr__(self) -> str:
        return f"SqFreePoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        # highest degree first, then by variable order
        keys = sorted(self._c, key=lambda m: (-bin(m).count("1"), mask_vars(m)))
        parts = []
        for m in keys:
            v = self._c[m]
            mono = "*".join(self.names[i] for i in mask_vars(m))
            a = abs(v)
            body = mono if (mono and a == 1) else (f"{a}*{mono}" if mono else str(a))
            parts.append(("- " if v < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json(self) -> dict:
        return {
            "vars": list(self.names),
            "terms": [{"m": list(mask_vars(m)), "c": str(v)} for m, v in self._c.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SqFreePoly":
        try:
            names = obj["vars"]
            terms = [(tuple(t["m"]), int(t["c"])) for t in obj["terms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed polynomial JSON: {exc}") from None
        return cls(names, terms)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        num, var, sym = mt.groups()
        if num is not None:
            toks.append(("int", num))
        elif var is not None:
            toks.append(("var", var))
        elif sym in "+-*^":
            toks.append((sym, sym))
        else:
            raise ParseError(f"unexpected character {sym!r} at offset {mt.start(3)}")
        pos = mt.end()
    return toks


def parse_general(text: str, declared_vars: Sequence[str] | None = None):
    """Parse an expression allowing any non-negative exponent.

    Returns:
        ``(names, terms)`` where ``terms`` maps exponent tuples to coefficients.
    """
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    names: list[str] = list(declared_vars) if declared_vars is not None else []
    index = {v: i for i, v in enumerate(names)}
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(kind):
        nonlocal pos
        if peek() != kind:
            got = toks[pos][1] if pos < len(toks) else "end of input"
            raise ParseError(f"expected {kind}, got {got!r}")
        pos += 1
        return toks[pos - 1][1]

    def var_index(name):
        if name not in index:
            if declared_vars is not None:
                raise UnknownVariable(f"variable {name!r} not declared")
            index[name] = len(names)
            names.append(name)
        return index[name]

    def term():
        coef = 1
        exps: dict[int, int] = {}
        while True:
            if peek() == "int":
                coef *= int(take("int"))
            elif peek() == "var":
                i = var_index(take("var"))
                e = 1
                if peek() == "^":
                    take("^")
                    e = int(take("int"))
                exps[i] = exps.get(i, 0) + e
            else:
                got = toks[pos][1] if pos < len(toks) else "end of input"
                raise ParseError(f"expected a number or variable, got {got!r}")
            if peek() != "*":
                return coef, exps
            take("*")

    acc: dict[tuple, int] = {}
    sign = 1
    if peek() in ("-", "+"):
        sign = -1 if take(peek()) == "-" else 1
    while True:
        coef, exps = term()
        key = tuple(sorted(exps.items()))
        acc[key] = acc.get(key, 0) + sign * coef
        if peek() is None:
            break
        if peek() not in ("+", "-"):
            raise ParseError(f"unexpected token {toks[pos][1]!r}")
        sign = -1 if take(peek()) == "-" else 1
    n = len(names)
    terms: dict[tuple[int, ...], int] = {}
    for key, c in acc.items():
        e = [0] * n
        for i, k in key:
            e[i] = k
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
    return tuple(names), {e: c for e, c in terms.items() if c}


def parse(text: str, declared_vars: Sequence[str] | None = None) -> SqFreePoly:
    """Parse ``text`` into a square-free polynomial.

    Variable order is ``declared_vars`` when given, else order of first
    appearance. Any exponent other than 1 (including ``x*x``) raises
    :class:`NotSquareFree`.
    """
    toks = _tokenize(text)
    for k in range(len(toks) - 1):
        if toks[k][0] == "^" and toks[k + 1][0] == "int" and toks[k + 1][1].lstrip("0") != "1":
            raise NotSquareFree(f"exponent {toks[k + 1][1]} is not allowed in a square-free polynomial")
    names, terms = parse_general(text, declared_vars)
    out: dict[int, int] = {}
    for e, c in terms.items():
        if any(k > 1 for k in e):
            bad = names[next(i for i, k in enumerate(e) if k > 1)]
            raise NotSquareFree(f"variable {bad!r} appears squared")
        m = sum(1 << i for i, k in enumerate(e) if k)
        out[m] = out.get(m, 0) + c
    return SqFreePoly(names, out)


# ------------------------------------------------------------- operations


def charpoly_of_matrix(L: IntMatrix, names: Sequence[str] | None = None) -> SqFreePoly:
    """``det(Diag(X) - L)`` as a square-free polynomial.

    The coefficient of ``x_S`` is the principal minor of ``-L`` on the
    complement of ``S``.
    """
    n = L.n
    neg = [[-a for a in r] for r in L.rows]
    full = (1 << n) - 1
    coefs = [0] * (1 << n)
    for m in range(1 << n):
        idx = mask_vars(full & ~m)
        coefs[m] = det([[neg[i][j] for j in idx] for i in idx])
    return SqFreePoly.from_dense(names or SqFreePoly.default_names(n), coefs)


def _check_len(f: SqFreePoly, d: Sequence[int]):
    if len(d) != f.nvars:
        raise DimensionMismatch(f"expected {f.nvars} values, got {len(d)}")


def shift(f: SqFreePoly, d: Sequence[int]) -> SqFreePoly:
    """``f(X + d)``."""
    _check_len(f, d)
    return SqFreePoly.from_dense(f.names, _core.shift(f.dense(), f.nvars, tuple(int(x) for x in d)))


def evaluate(f: SqFreePoly, d: Sequence[int]) -> int:
    _check_len(f, d)
    total = 0
    for m, v in f.items():
        for i in mask_vars(m):
            v *= d[i]
        total += v
    return total


def partial(f: SqFreePoly, s: int) -> SqFreePoly:
    """Derivative in ``x_s``, expressed in the remaining variables."""
    n = f.nvars
    if not 0 <= s < n:
        raise IndexOutOfRange(f"variable index {s} outside 0..{n - 1}")
    names = f.names[:s] + f.names[s + 1:]
    lo = (1 << s) - 1
    out = {}
    for m, v in f.items():
        if m >> s & 1:
            out[(m & lo) | ((m >> (s + 1)) << s)] = v
    return SqFreePoly(names, out)


def substitute(f: SqFreePoly, s: int, value: int) -> SqFreePoly:
    """Fix ``x_s = value``; the result lives in the remaining variables."""
    n = f.nvars
    if not 0 <= s < n:
        raise IndexOutOfRange(f"variable index {s} outside 0..{n - 1}")
    names = f.names[:s] + f.names[s + 1:]
    lo = (1 << s) - 1
    out: dict[int, int] = {}
    for m, v in f.items():
        k = (m & lo) | ((m >> (s + 1)) << s)
        out[k] = out.get(k, 0) + (v * value if m >> s & 1 else v)
    return SqFreePoly(names, out)


def support(f: SqFreePoly) -> int:
    """Mask of variables occurring in some term."""
    u = 0
    for m in f._c:
        u |= m
    return u


def dominant_monomial(f: SqFreePoly) -> int | None:
    """Mask of the monomial divisible by every other monomial, if there is one."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no monomials")
    u = support(f)
    return u if u in f._c else None


def _require_dominated(f: SqFreePoly) -> int:
    p = dominant_monomial(f)
    if p is None:
        raise NotDominated(f"{f} has no dominant monomial")
    return p


def leading_coefficient(f: SqFreePoly) -> int:
    return f._c[_require_dominated(f)]


def leading_positive(f: SqFreePoly) -> bool:
    return leading_coefficient(f) > 0


def _split(coefs: dict[int, int], full: int, part: int) -> tuple[dict, dict] | None:
    """Try ``f = g * h`` with g on the variables of ``part`` and h on ``full - part``."""
    rest = full & ~part
    lead = coefs[full]
    gp = {}
    hp = {}
    for m, v in coefs.items():
        if m & rest == rest:
            gp[m & part] = v
        if m & part == part:
            hp[m & rest] = v
    for m in coefs:
        if m & part not in gp or m & rest not in hp:
            return None
    # rank-one test: coef(A | B) * lead == coef(A | rest) * coef(part | B)
    for a, ga in gp.items():
        for b, hb in hp.items():
            if coefs.get(a | b, 0) * lead != ga * hb:
                return None
    # primitive g with positive lead, then h = f / g exactly
    cont = 0
    for v in gp.values():
        cont = gcd(cont, v)
    if gp[part] < 0:
        cont = -cont
    g = {a: v // cont for a, v in gp.items()}
    glead = g[part]
    h = {}
    for b, v in hp.items():
        if v % glead:
            return None
        h[b] = v // glead
    return g, h


def _sub_poly(f: SqFreePoly, part: int, coefs: dict) -> SqFreePoly:
    idx = mask_vars(part)
    pos = {i: k for k, i in enumerate(idx)}
    names = [f.names[i] for i in idx]
    return SqFreePoly(names, {sum(1 << pos[i] for i in mask_vars(m)): v for m, v in coefs.items()})


def variable_disjoint_factor(f: SqFreePoly) -> list[SqFreePoly]:
    """Finest factorization of ``f`` into factors on disjoint variable sets.

    Each factor keeps the original names of its variables. Integer content is
    carried by the last factor.
    """
    p = _require_dominated(f)
    full = (1 << f.nvars) - 1
    if p != full:
        unused = [f.names[i] for i in range(f.nvars) if not p >> i & 1]
        raise VariableUnused(f"variables {unused} occur in no term")
    return [_sub_poly(f, part, coefs) for part, coefs in _factor_parts(dict(f.items()), full)]


def _factor_parts(coefs: dict[int, int], full: int) -> list[tuple[int, dict]]:
    vars_ = mask_vars(full)
    # smallest part first, so every part found is itself indecomposable
    for size in range(1, len(vars_) // 2 + 1):
        for combo in combinations(vars_, size):
            part = sum(1 << i for i in combo)
            if size * 2 == len(vars_) and not part & (1 << vars_[0]):
                continue
            got = _split(coefs, full, part)
            if got is None:
                continue
            g, h = got
            return [(part, g)] + _factor_parts(h, full & ~part)
    return [(full, dict(coefs))]


def multiply_disjoint(factors: Iterable[SqFreePoly], names: Sequence[str] | None = None) -> SqFreePoly:
    """Product of factors whose variable names are pairwise disjoint."""
    factors = list(factors)
    all_names = [v for g in factors for v in g.names]
    if len(set(all_names)) != len(all_names):
        raise DimensionMismatch("factors share variables")
    names = tuple(names) if names is not None else tuple(all_names)
    if set(names) != set(all_names):
        raise DimensionMismatch("names do not match the factors' variables")
    pos = {v: i for i, v in enumerate(names)}
    acc = {0: 1}
    for g in factors:
        remap = [pos[v] for v in g.names]
        nxt: dict[int, int] = {}
        for m, v in g.items():
            mm = sum(1 << remap[i] for i in mask_vars(m))
            for a, w in acc.items():
                nxt[a | mm] = nxt.get(a | mm, 0) + v * w
        acc = nxt
    return SqFreePoly(names, acc)
