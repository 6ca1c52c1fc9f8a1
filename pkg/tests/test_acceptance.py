"""Acceptance criteria, one check group per criterion.

Run under pytest for the suite (a PASS/FAIL line per criterion is printed in
the terminal summary), or directly with ``python3 tests/test_acceptance.py``
to print the lines without pytest. Checks that disagree with a published
value known to contain an error are real assertions marked as strict
expected failures; the published value is never edited to match.
"""

from __future__ import annotations

import random
import sys
import time
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
import reference_values as ref  # noqa: E402

from arithstruct import (  # noqa: E402
    Frontier,
    GraphSpec,
    IntMatrix,
    arithmetical_structures,
    brute_force_box,
    charpoly_of_matrix,
    classify_z,
    count_structures,
    det,
    min_dgeq0_matrix,
    min_dgeq0_poly,
    mp3_admissible_constants,
    mp3_membership,
    parse,
    slice_solve,
    solve_slice,
    start_points,
    sub_frontier,
)
from arithstruct.exactmat import delete_rc, is_irreducible  # noqa: E402
from arithstruct.polyring import evaluate, partial, shift  # noqa: E402


def _fmt(vs, limit=6):
    vs = sorted(vs)
    head = ", ".join(str(v) for v in vs[:limit])
    return head + (f", ... ({len(vs)} total)" if len(vs) > limit else "")


def _diff(got, want) -> str:
    got, want = set(got), set(want)
    return f"missing {_fmt(want - got)}; unexpected {_fmt(got - want)}"


# ------------------------------------------------------------ criterion 1


@lru_cache(maxsize=None)
def _digraph4():
    t0 = time.perf_counter()
    rep = arithmetical_structures(IntMatrix.from_rows(ref.DIGRAPH4))
    return rep, time.perf_counter() - t0


def c1_sizes():
    rep, secs = _digraph4()
    ok = len(rep.frontier) == 125 and len(rep.structures) == 54 and secs < 60
    return ok, f"{len(rep.frontier)} frontier, {len(rep.structures)} structures, {secs:.2f}s"


def c1_structures():
    rep, _ = _digraph4()
    want = sorted(ref.DIGRAPH4_STRUCTURES)
    return sorted(rep.d_set) == want, _diff(rep.d_set, want)


def c1_frontier_table():
    rep, _ = _digraph4()
    want = sorted(v for v, _ in ref.DIGRAPH4_FRONTIER)
    return list(rep.frontier) == want, _diff(rep.frontier, want)


# ------------------------------------------------------------ criterion 2


def c2_sub_frontier():
    L = IntMatrix.from_rows(ref.DIGRAPH4)
    got = [sub_frontier(L, s) for s in range(4)]
    want = [Frontier(ref.DIGRAPH4_SUB1), Frontier(ref.DIGRAPH4_SUB2), Frontier(ref.DIGRAPH4_SUB34), Frontier(ref.DIGRAPH4_SUB34)]
    return got == want, "L_1: " + _diff(got[0], ref.DIGRAPH4_SUB1)


def c2_start_set():
    got = [d for d, _ in start_points(IntMatrix.from_rows(ref.DIGRAPH4))]
    want = sorted(d for d, _ in ref.DIGRAPH4_STARTS)
    return sorted(got) == want, _diff(got, want)


def c2_start_dets():
    got = dict(start_points(IntMatrix.from_rows(ref.DIGRAPH4)))
    bad = [(d, v, got.get(d)) for d, v in ref.DIGRAPH4_STARTS if got.get(d) != v]
    return not bad, "listed vs computed det: " + ", ".join(f"{d} {v} vs {g}" for d, v, g in bad)


# ------------------------------------------------------------ criterion 3


def _graph(n, edges):
    return GraphSpec(n, tuple((i - 1, j - 1) for i, j in edges))


@lru_cache(maxsize=None)
def _graph_counts():
    t0 = time.perf_counter()
    out = [(name, count_structures(_graph(n, e)).count, want) for name, n, e, want in ref.GRAPH_TABLE]
    return out, time.perf_counter() - t0


def c3_named():
    rows, _ = _graph_counts()
    named = {"P3", "K3", "P4", "star4", "paw", "C4", "diamond", "K4", "P5", "C5", "K5"}
    bad = [(n, g, w) for n, g, w in rows if n in named and g != w]
    return not bad, "; ".join(f"{n}: {g} vs {w}" for n, g, w in bad)


def c3_all_rows():
    rows, secs = _graph_counts()
    bad = [(n, g, w) for n, g, w in rows if g != w]
    detail = "; ".join(f"{n}: computed {g}, listed {w}" for n, g, w in bad)
    return not bad and secs <= 600, f"{detail} ({secs:.0f}s)"


# ------------------------------------------------------------ criterion 4


def c4_k6():
    K6 = GraphSpec(6, tuple(combinations(range(6), 2)))
    got = count_structures(K6).count
    return got == ref.K6_COUNT, f"{got}"


# ------------------------------------------------------------ criterion 5


def c5_two_var_examples():
    f = min_dgeq0_poly(parse(ref.F_TWO))
    g = min_dgeq0_poly(parse(ref.G_TWO))
    ok = (
        list(f.frontier) == sorted(ref.F_TWO_FRONTIER)
        and f.d_set == sorted(ref.F_TWO_STRUCTURES)
        and list(g.frontier) == ref.G_TWO_FRONTIER
        and g.d_set == []
    )
    return ok, f"f: {list(f.frontier)} / {f.d_set}; g: {list(g.frontier)} / {g.d_set}"


# ------------------------------------------------------------ criterion 6


def c6_single():
    f = parse(ref.F_SINGLE)
    rep = min_dgeq0_poly(f)
    g = shift(f, ref.F_SINGLE_STRUCTURE)
    names = {"x1*x2*x3": 7, "x1*x2": 3, "x1*x3": 5, "x2*x3": 6, "x1": 1, "x2": 2, "x3": 4, "1": 0}
    expansion_ok = all(g.coef(names[k]) == v for k, v in ref.F_SINGLE_SHIFTED.items())
    ok = rep.d_set == [ref.F_SINGLE_STRUCTURE] and expansion_ok
    return ok, f"D={rep.d_set}, shifted={g}"


def c6_k_family():
    bad = []
    for a in range(1, 6):
        rep = min_dgeq0_poly(parse(f"x1*x2*x3 - 2*x1 + {6 * a}"))
        if list(rep.frontier) != sorted(ref.K_FRONTIER) or rep.d_set:
            bad.append((a, list(rep.frontier), rep.d_set))
    return not bad, str(bad)


def c6_eight():
    rep = min_dgeq0_poly(parse(ref.F_EIGHT))
    return rep.d_set == sorted(ref.F_EIGHT_STRUCTURES), _diff(rep.d_set, ref.F_EIGHT_STRUCTURES)


# ------------------------------------------------------------ criterion 7


def c7_two_var():
    sol = slice_solve(parse(ref.G_TWO))
    return sol.solutions == ref.G_TWO_ZEROS and sol.complete, f"{sol.solutions} complete={sol.complete}"


def c7_slice_x1():
    sol = solve_slice(parse(ref.F_EIGHT), 0, 1)
    return sol.solutions == ref.F_EIGHT_SLICE_X1, f"{sol.solutions}"


def c7_k_family():
    bad = []
    for a in range(1, 6):
        sol = slice_solve(parse(f"x1*x2*x3 - 2*x1 + {6 * a}"))
        if (6 * a, 1, 1) not in sol.solutions:
            bad.append((a, sol.solutions))
    return not bad, str(bad)


# ------------------------------------------------------------ criterion 8


def c8_mp3():
    a = ref.MP3_A
    adm = mp3_admissible_constants(*a)
    rejected = mp3_membership(*a, -23) is None
    roundtrip = True
    for b in adm:
        W = mp3_membership(*a, b)
        f = charpoly_of_matrix(W)
        want = {7: 1, 1: a[0], 2: a[1], 4: a[2], 0: b}
        roundtrip &= W is not None and all(W[i, i] == 0 for i in range(3))
        roundtrip &= all(f.coef(m) == want.get(m, 0) for m in range(8))
    ok = adm == ref.MP3_CONSTANTS and rejected and roundtrip
    return ok, f"constants={adm} rejects -23={rejected} round-trip={roundtrip}"


# ------------------------------------------------------------ criterion 9


def c9_signed_box():
    t0 = time.perf_counter()
    sol = brute_force_box(IntMatrix.from_rows(ref.SIGNED_L), [20, 20, 20])
    secs = time.perf_counter() - t0
    ok = sorted(sol.pairs) == sorted(ref.SIGNED_PAIRS) and secs < 30
    return ok, f"{sorted(sol.pairs)} in {secs:.1f}s"


# ----------------------------------------------------------- criterion 10


def _random_qns_m_matrix(rng: random.Random, n: int) -> IntMatrix:
    """Z-matrix whose proper principal minors are all positive (rejection sampling)."""
    while True:
        off = [[0 if i == j else -rng.randint(0, 3) for j in range(n)] for i in range(n)]
        diag = [rng.randint(1, 6) for _ in range(n)]
        M = IntMatrix.from_rows([[diag[i] if i == j else off[i][j] for j in range(n)] for i in range(n)])
        if classify_z(M).proper_pos:
            return M


def c10_monotonicity():
    rng = random.Random(2010)
    bad = 0
    for _ in range(500):
        n = rng.randint(1, 4)
        M = _random_qns_m_matrix(rng, n)
        Dp = [rng.randint(1, 5) for _ in range(n)]
        D = [x + rng.randint(1, 5) for x in Dp]
        a, b, c = det(M + IntMatrix.diag(D)), det(M + IntMatrix.diag(Dp)), det(M)
        bad += not (a > b > c)
    return bad == 0, f"{bad} violations"


def c10_derivative_minor():
    rng = random.Random(211)
    bad = 0
    for _ in range(200):
        L = IntMatrix.from_rows([[0 if i == j else rng.randint(-5, 5) for j in range(4)] for i in range(4)])
        f = charpoly_of_matrix(L)
        for s in range(4):
            sub = charpoly_of_matrix(delete_rc(L, s))
            bad += partial(f, s).dense() != sub.dense()
    return bad == 0, f"{bad} violations"


def c10_oracle_frontier():
    rng = random.Random(3)
    bad = []
    for _ in range(100):
        L = IntMatrix.from_rows([[0 if i == j else rng.randint(0, 3) for j in range(3)] for i in range(3)])
        front = min_dgeq0_matrix(L)
        box = [m + 1 for m in front.max_coords()]
        if list(front) != sorted(oracles.matrix_frontier(L.rows, box)):
            bad.append(L.rows)
    return not bad, f"{len(bad)} violations {bad[:2]}"


def c10_transpose():
    rng = random.Random(26)
    bad = done = 0
    while done < 100:
        n = rng.randint(2, 4)
        L = IntMatrix.from_rows([[0 if i == j else rng.randint(0, 2) for j in range(n)] for i in range(n)])
        if not is_irreducible(L):
            continue
        done += 1
        bad += arithmetical_structures(L).d_set != arithmetical_structures(L.T).d_set
    return bad == 0, f"{bad} violations"


_BARRIER_CASES = [
    (ref.F_TWO, (60, 60)),
    (ref.G_TWO, (40, 300)),
    (ref.F_SINGLE, (30, 30, 30)),
    (ref.F_EIGHT, (40, 40, 40)),
] + [(f"x1*x2*x3 - 2*x1 + {6 * a}", (40, 12, 12)) for a in range(1, 6)]


def c10_barrier():
    bad = []
    for text, box in _BARRIER_CASES:
        f = parse(text)
        front = min_dgeq0_poly(f).frontier
        for z in brute_force_box(f, box).solutions:
            for v in front:
                if all(a >= b for a, b in zip(z, v)) and z != v:
                    bad.append((text, z, v))
    return not bad, str(bad[:3])


def c10_pell():
    f = parse(ref.PELL)
    sol = slice_solve(f)
    names = list(f.names)
    zeros_ok = True
    for x, y in ref.PELL_PAIRS:
        point = {"z": 1, "x1": x, "x2": x, "y1": y, "y2": y}
        zeros_ok &= evaluate(f, [point[v] for v in names]) == 0
    return (not sol.complete) and zeros_ok, f"complete={sol.complete} zeros_ok={zeros_ok}"


# ---------------------------------------------------------------- registry

_DIGRAPH4_TABLE = (
    "the listed table keeps non-minimal (10,2,1,6) and (10,2,6,1), dominated by (10,1,1,6) "
    "and (10,1,6,1), and omits the minimal (13,1,2,7) and (13,1,7,2)"
)
_START_DET = "listed det for (2,5,4,1) is -2; the matrix gives -5, as for its mirror (2,5,1,4)"
_GRAPH_ROWS = (
    "nine five-vertex rows disagree; every extra structure was verified independently, "
    "and two drawn rows are isomorphic to other rows"
)

CHECKS = [
    (1, "sizes", c1_sizes, None),
    (1, "structure-table", c1_structures, None),
    (1, "frontier-table", c1_frontier_table, _DIGRAPH4_TABLE),
    (2, "sub-frontiers", c2_sub_frontier, None),
    (2, "start-set", c2_start_set, None),
    (2, "start-dets", c2_start_dets, _START_DET),
    (3, "named-graphs", c3_named, None),
    (3, "all-rows", c3_all_rows, _GRAPH_ROWS),
    (4, "K6", c4_k6, "slow"),
    (5, "two-variable", c5_two_var_examples, None),
    (6, "single-structure", c6_single, None),
    (6, "K-family", c6_k_family, None),
    (6, "eight-structures", c6_eight, None),
    (7, "two-variable", c7_two_var, None),
    (7, "slice-x1", c7_slice_x1, None),
    (7, "K-family", c7_k_family, None),
    (8, "mp3", c8_mp3, None),
    (9, "signed-box", c9_signed_box, None),
    (10, "monotonicity", c10_monotonicity, None),
    (10, "derivative-minor", c10_derivative_minor, None),
    (10, "oracle-frontier", c10_oracle_frontier, None),
    (10, "transpose", c10_transpose, None),
    (10, "barrier", c10_barrier, None),
    (10, "pell", c10_pell, None),
]


def _param(crit, label, fn, note):
    marks = []
    if note == "slow":
        marks.append(pytest.mark.slow)
    elif note:
        marks.append(pytest.mark.xfail(strict=True, reason=note))
    return pytest.param(crit, label, fn, id=f"c{crit}-{label}", marks=marks)


@pytest.mark.parametrize("crit,label,fn", [_param(*c) for c in CHECKS])
def test_criterion(crit, label, fn, acceptance):
    ok, detail = fn()
    acceptance(crit, label, ok, detail)
    assert ok, detail


def main(argv: list[str]) -> int:
    slow = "--slow" in argv
    results: dict[int, list] = {}
    for crit, label, fn, note in CHECKS:
        if note == "slow" and not slow:
            results.setdefault(crit, []).append((label, None, "skipped; pass --slow"))
            continue
        ok, detail = fn()
        results.setdefault(crit, []).append((label, ok, detail))
    failed = 0
    for crit in sorted(results):
        parts = results[crit]
        ran = [p for p in parts if p[1] is not None]
        if not ran:
            print(f"SKIP criterion {crit}: {parts[0][2]}")
            continue
        ok = all(p[1] for p in ran)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {crit}: " + "; ".join(
            f"{label}={'ok' if good else 'FAIL'}" for label, good, _ in ran))
        for label, good, detail in ran:
            if not good:
                print(f"    {label}: {detail}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
