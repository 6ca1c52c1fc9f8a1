"""Frontiers and arithmetical structures of dominated square-free polynomials.

For a polynomial ``f`` the frontier is the set of minimal positive ``d`` such
that ``f(X + d)`` has only positive non-constant coefficients and
``f(d) >= 0``; its zeros are the arithmetical structures of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Sequence

from . import _core
from .errors import NegativeLeading, NotDominated, ParseError, VariableUnused
from .frontier import Frontier, minimal_elements
from .exactmat import json_int
from .polyring import (
    SqFreePoly,
    dominant_monomial,
    parse_general,
    variable_disjoint_factor,
)


@dataclass
class ReducibleBlock:
    """Generating description for a polynomial that splits into variable-disjoint factors.

    Attributes:
        factors: one report per factor, in variable order of first appearance.
        positions: for each factor, the positions of its variables in the
            parent's variable list.
        witnesses: vectors where one factor sits at one of its
            structures and every other factor at one of its frontier points.
        infinite: always True; any factor can be moved freely upward while
            another one vanishes.
    """

    factors: list["PolyEnumReport"]
    positions: list[tuple[int, ...]]
    witnesses: list[tuple[tuple[int, ...], int]]
    infinite: bool = True

    def to_json(self) -> dict:
        return {
            "infinite": self.infinite,
            "factors": [
                {"vars": list(r.names), "positions": list(p), **r.to_json()}
                for r, p in zip(self.factors, self.positions)
            ],
            "rule": "one factor at a structure, every other factor at or above a frontier point",
            "witnesses": [{"d": [json_int(x) for x in d], "k": str(k)} for d, k in self.witnesses],
        }


@dataclass
class PolyEnumReport:
    """Frontier, structures and optional factor breakdown for one polynomial."""

    names: tuple[str, ...]
    frontier: Frontier
    structures: list[tuple[tuple[int, ...], int]]
    reducible: ReducibleBlock | None = None
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def d_set(self) -> list[tuple[int, ...]]:
        return [d for d, _ in self.structures]

    def to_json(self) -> dict:
        out = {
            "vars": list(self.names),
            "frontier": self.frontier.to_json(),
            "structures": [{"d": [json_int(x) for x in d], "k": str(k)} for d, k in self.structures],
        }
        if self.reducible is not None:
            out["reducible"] = self.reducible.to_json()
        return out


def _check_leading(a: int):
    if a <= 0:
        raise NegativeLeading(f"leading coefficient {a} is not positive")


def min_dgeq0_2var(a: int, b1: int, b2: int, c: int) -> Frontier:
    """Closed-form frontier of ``a*x1*x2 + b1*x1 + b2*x2 + c``.

    Raises:
        BadLeadingCoefficient: ``a <= 0``.
    """
    _check_leading(a)
    return Frontier.trusted(_core.two_var(a, b1, b2, c), 2)


def validate(f: SqFreePoly) -> int:
    """Check the preconditions shared by every enumerator; returns the dominant mask."""
    p = dominant_monomial(f)
    if p is None:
        raise NotDominated(f"{f} has no dominant monomial")
    if p != (1 << f.nvars) - 1:
        unused = [f.names[i] for i in range(f.nvars) if not p >> i & 1]
        raise VariableUnused(f"variables {unused} occur in no term")
    _check_leading(f.coef(p))
    return p


def _structures(c: Sequence[int], n: int, front: Sequence[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for d in front:
        g = _core.shift(c, n, d)
        if g[0] == 0:
            k = 0
            for s in range(n):
                k = gcd(k, g[1 << s])
            out.append((d, k))
    return out


def _frontier(f: SqFreePoly) -> tuple[tuple[int, ...], ...]:
    return _core.min_dgeq0(f.dense(), f.nvars)


def _single(f: SqFreePoly) -> PolyEnumReport:
    front = _frontier(f)
    return PolyEnumReport(f.names, Frontier.trusted(front, f.nvars), _structures(f.dense(), f.nvars, front))


def min_dgeq0_poly(f: SqFreePoly) -> PolyEnumReport:
    """Frontier and structures of ``f``.

    When ``f`` splits into variable-disjoint factors, the report also carries
    a :class:`ReducibleBlock` with per-factor reports and witnesses.

    Raises:
        NotDominated: no monomial is divisible by all others.
        VariableUnused: a declared variable occurs in no term.
        NegativeLeading: the dominant coefficient is not positive.
    """
    validate(f)
    report = _single(f)
    factors = variable_disjoint_factor(f)
    if len(factors) > 1:
        # the factorization gives every factor a positive lead
        subs = [_single(g) for g in factors]
        combined = reducible_combine(subs, f.names)
        report.reducible = combined.reducible
    return report


def reducible_combine(factors: list[PolyEnumReport], names: Sequence[str] | None = None) -> PolyEnumReport:
    """Combine per-factor reports of variable-disjoint factors.

    The returned frontier is the product of the factor frontiers and the
    structures are the witnesses: one factor at one of its structures, the
    others at frontier points. A single factor passes through unchanged.
    """
    if len(factors) == 1:
        return factors[0]
    all_names = [v for r in factors for v in r.names]
    names = tuple(names) if names is not None else tuple(all_names)
    pos = {v: i for i, v in enumerate(names)}
    positions = [tuple(pos[v] for v in r.names) for r in factors]
    n = len(names)

    def place(parts):
        out = [0] * n
        for p, v in zip(positions, parts):
            for i, x in zip(p, v):
                out[i] = x
        return tuple(out)

    front = [place(parts) for parts in product(*(r.frontier.elems for r in factors))]
    witnesses: dict[tuple[int, ...], int] = {}
    for i, r in enumerate(factors):
        others = [f.frontier.elems for j, f in enumerate(factors) if j != i]
        for d, k in r.structures:
            for rest in product(*others):
                parts = list(rest)
                parts.insert(i, d)
                witnesses.setdefault(place(parts), k)
    ordered = sorted(witnesses.items())
    block = ReducibleBlock(list(factors), positions, ordered)
    return PolyEnumReport(names, Frontier.trusted(front, n), ordered, block)


def frontier_at_level(f: SqFreePoly, alpha: int) -> Frontier:
    """Minimal ``d`` with positive non-constant shifted coefficients and ``f(d) >= alpha``."""
    validate(f)
    g = f.add_constant(-alpha)
    return Frontier.trusted(_frontier(g), f.nvars)


# ------------------------------------------------------------ general exponents


@dataclass
class LiftedPoly:
    """Square-free surrogate of a polynomial with arbitrary exponents.

    Attributes:
        names: original variable names.
        degrees: number of copies per original variable (its largest exponent).
        surrogate: the square-free polynomial on the copies.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    surrogate: SqFreePoly

    def copies(self, i: int) -> range:
        start = sum(self.degrees[:i])
        return range(start, start + self.degrees[i])


def lift(names: Sequence[str], terms: dict[tuple[int, ...], int]) -> LiftedPoly:
    """Split each variable into as many copies as its largest exponent.

    A power ``x_i^k`` maps to the product of the first ``k`` copies of ``x_i``.

    Raises:
        NotDominated: the componentwise maximum exponent vector is not a term.
    """
    n = len(names)
    if not terms:
        raise NotDominated("the zero polynomial has no dominant monomial")
    top = tuple(max(e[i] for e in terms) for i in range(n))
    if top not in terms:
        raise NotDominated("no monomial is divisible by every other monomial")
    if any(t == 0 for t in top):
        unused = [names[i] for i in range(n) if top[i] == 0]
        raise VariableUnused(f"variables {unused} occur in no term")
    snames = []
    for v, t in zip(names, top):
        snames.extend([v] if t == 1 else [f"{v}_{j + 1}" for j in range(t)])
    lifted = LiftedPoly(tuple(names), top, SqFreePoly(snames, {}))
    out = {}
    for e, c in terms.items():
        m = 0
        for i, k in enumerate(e):
            for j in lifted.copies(i)[:k]:
                m |= 1 << j
        out[m] = c
    lifted.surrogate = SqFreePoly(snames, out)
    return lifted


def lift_non_squarefree(F) -> PolyEnumReport:
    """Frontier and structures of a dominated polynomial with arbitrary exponents.

    Args:
        F: expression text, or a ``(names, terms)`` pair as returned by
            :func:`parse_general`.

    The frontier is obtained from the surrogate's frontier: a vector with
    all copies equal lies in the surrogate's upward-closed set iff each
    original coordinate is at least the maximum of its copies in some
    surrogate frontier point. Structures are the surrogate structures whose
    copies agree.
    """
    if isinstance(F, str):
        names, terms = parse_general(F)
    else:
        names, terms = F
    lifted = lift(names, terms)
    rep = min_dgeq0_poly(lifted.surrogate)
    n = len(names)
    groups = [list(lifted.copies(i)) for i in range(n)]
    front = minimal_elements(tuple(max(u[j] for j in g) for g in groups) for u in rep.frontier)
    structs = []
    for d, k in rep.structures:
        if all(len({d[j] for j in g}) == 1 for g in groups):
            structs.append((tuple(d[g[0]] for g in groups), k))
    return PolyEnumReport(tuple(names), Frontier.trusted(front, n), sorted(structs))


def parse_any(text: str) -> SqFreePoly | tuple:
    """Square-free parse when possible, else the general ``(names, terms)`` form."""
    names, terms = parse_general(text)
    if all(k <= 1 for e in terms for k in e):
        return SqFreePoly(names, {sum(1 << i for i, k in enumerate(e) if k): c for e, c in terms.items()})
    if not terms:
        raise ParseError("empty polynomial")
    return names, terms
