"""Graph generators, isomorphism classes and the path/complete bounds harness.

Vertices are 0-based in :class:`GraphSpec`; the edge-list text format is
1-based.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Sequence

from .arith_enum import arithmetical_structures
from .errors import BadSize, IndexOutOfRange, LoopEdge, ParseError
from .exactmat import IntMatrix


@dataclass(frozen=True)
class GraphSpec:
    """Simple graph, digraph or weighted multidigraph.

    Attributes:
        n: number of vertices.
        edges: vertex pairs; an undirected edge contributes both arcs.
        directed: whether ``(i, j)`` is the single arc ``i -> j``.
        weights: per-edge multiplicity; all ones when omitted.
        name: optional label used in reports.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False
    weights: tuple[int, ...] | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise BadSize("a graph needs at least one vertex")
        edges = tuple((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise IndexOutOfRange(f"edge ({i}, {j}) outside 0..{self.n - 1}")
            if i == j:
                raise LoopEdge(f"loop at vertex {i}")
        object.__setattr__(self, "edges", edges)
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            if len(w) != len(edges):
                raise ParseError("one weight per edge is required")
            if any(x <= 0 for x in w):
                raise ParseError("edge weights must be positive")
            object.__setattr__(self, "weights", w)


def adjacency(spec: GraphSpec) -> IntMatrix:
    """Matrix with entry ``(i, j)`` equal to the total weight of arcs ``i -> j``."""
    A = [[0] * spec.n for _ in range(spec.n)]
    weights = spec.weights or (1,) * len(spec.edges)
    for (i, j), w in zip(spec.edges, weights):
        A[i][j] += w
        if not spec.directed:
            A[j][i] += w
    return IntMatrix.from_rows(A)


def family(name: str, n: int) -> GraphSpec:
    """Path, cycle, complete graph or star on ``n`` vertices.

    Raises:
        BadSize: ``n < 2``, or ``n < 3`` for a cycle, or an unknown name.
    """
    if n < 2:
        raise BadSize("families need at least two vertices")
    if name == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
        label = f"P{n}"
    elif name == "cycle":
        if n < 3:
            raise BadSize("a cycle needs at least three vertices")
        edges = [(i, (i + 1) % n) for i in range(n)]
        label = f"C{n}"
    elif name == "complete":
        edges = list(combinations(range(n), 2))
        label = f"K{n}"
    elif name == "star":
        edges = [(0, i) for i in range(1, n)]
        label = f"K1,{n - 1}"
    else:
        raise BadSize(f"unknown family {name!r}")
    return GraphSpec(n, tuple(edges), name=label)


# ------------------------------------------------------------- isomorphism


def canonical_form(spec: GraphSpec) -> tuple[int, ...]:
    """Isomorphism invariant of a simple undirected graph.

    The minimum upper-triangle adjacency string over all relabelings that
    list vertices by (degree, sorted neighbour degrees). Since that key is
    itself invariant, the minimum is too; restricting to it only prunes
    relabelings.
    """
    n = spec.n
    adj = [[0] * n for _ in range(n)]
    for i, j in spec.edges:
        adj[i][j] = adj[j][i] = 1
    deg = [sum(r) for r in adj]
    key = [(deg[v], tuple(sorted(deg[u] for u in range(n) if adj[v][u]))) for v in range(n)]
    classes: dict = {}
    for v in range(n):
        classes.setdefault(key[v], []).append(v)
    blocks = [classes[k] for k in sorted(classes)]
    best = None
    for parts in product(*(permutations(b) for b in blocks)):
        order = [v for p in parts for v in p]
        code = tuple(adj[order[a]][order[b]] for a in range(n) for b in range(a + 1, n))
        if best is None or code < best:
            best = code
    return best


def _from_code(n: int, code: Sequence[int]) -> GraphSpec:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return GraphSpec(n, tuple(p for p, bit in zip(pairs, code) if bit))


_NAMED_4 = {
    "paw": ((0, 1), (1, 2), (0, 2), (2, 3)),
    "diamond": ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)),
}


def _label(spec: GraphSpec) -> str:
    code = canonical_form(spec)
    n = spec.n
    for fam in ("path", "cycle", "complete", "star"):
        if fam == "cycle" and n < 3:
            continue
        if canonical_form(family(fam, n)) == code:
            return family(fam, n).name
    if n == 4:
        for name, edges in _NAMED_4.items():
            if canonical_form(GraphSpec(4, edges)) == code:
                return name
    return ""


def is_connected(spec: GraphSpec) -> bool:
    seen = {0}
    stack = [0]
    nbrs = [set() for _ in range(spec.n)]
    for i, j in spec.edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    while stack:
        for u in nbrs[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == spec.n


def connected_graphs_upto(n: int) -> list[GraphSpec]:
    """One representative per isomorphism class of connected simple graphs on ``n`` vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    the classes on ``n`` vertices arise from those on ``n - 1`` by attaching
    a new vertex to a nonempty set of old ones.

    Raises:
        BadSize: ``n`` outside ``2..6``.
    """
    if not 2 <= n <= 6:
        raise BadSize("connected graph enumeration supports 2 <= n <= 6")
    layer = {canonical_form(GraphSpec(2, ((0, 1),))): GraphSpec(2, ((0, 1),))}
    for m in range(3, n + 1):
        nxt = {}
        for g in layer.values():
            for k in range(1, m):
                for S in combinations(range(m - 1), k):
                    h = GraphSpec(m, g.edges + tuple((v, m - 1) for v in S))
                    code = canonical_form(h)
                    if code not in nxt:
                        nxt[code] = _from_code(m, code)
        layer = nxt
    out = []
    for code in sorted(layer):
        g = layer[code]
        out.append(GraphSpec(g.n, g.edges, name=_label(g)))
    return out


# ---------------------------------------------------------------- harness


@dataclass
class ConjectureRow:
    graph: GraphSpec
    count: int
    max_entry: int

    def to_json(self) -> dict:
        return {
            "name": self.graph.name,
            "edges": [[i + 1, j + 1] for i, j in self.graph.edges],
            "count": self.count,
            "max_entry": str(self.max_entry),
        }


@dataclass
class ConjectureReport:
    """Structure counts for every connected graph on ``n`` vertices."""

    n: int
    rows: list[ConjectureRow]
    path_count: int
    complete_count: int

    @property
    def path_is_min(self) -> bool:
        return all(self.path_count <= r.count for r in self.rows)

    @property
    def complete_is_max(self) -> bool:
        return all(r.count <= self.complete_count for r in self.rows)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": len(self.rows),
            "path_is_min": self.path_is_min,
            "complete_is_max": self.complete_is_max,
            "rows": [r.to_json() for r in self.rows],
        }


def count_structures(spec: GraphSpec) -> ConjectureRow:
    rep = arithmetical_structures(adjacency(spec))
    top = max((x for s in rep.structures for x in s.d), default=0)
    return ConjectureRow(spec, len(rep.structures), top)


def conjecture_check(n: int, threads: int = 1, slow: bool = False) -> ConjectureReport:
    """Count structures of every connected graph on ``n`` vertices.

    Args:
        n: vertex count, 3 to 5 (6 with ``slow``; expect hours).
        threads: worker threads for the per-graph jobs.
        slow: allow ``n = 6``.

    Raises:
        BadSize: ``n`` out of range.
    """
    if not 3 <= n <= (6 if slow else 5):
        raise BadSize("the harness runs for 3 <= n <= 5 (6 with slow=True)")
    graphs = connected_graphs_upto(n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(count_structures, graphs))
    else:
        rows = [count_structures(g) for g in graphs]
    rows.sort(key=lambda r: (r.count, canonical_form(r.graph)))
    path = count_structures(family("path", n)).count
    comp = count_structures(family("complete", n)).count
    return ConjectureReport(n, rows, path, comp)


# --------------------------------------------------------------- text I/O


def parse_edge_list(text: str) -> GraphSpec:
    """Parse ``n [directed]`` followed by ``i j [w]`` lines (1-based vertices)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    head = lines[0].split()
    try:
        n = int(head[0])
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}") from None
    if len(head) > 2 or (len(head) == 2 and head[1] != "directed"):
        raise ParseError(f"bad header {lines[0]!r}")
    directed = len(head) == 2
    edges, weights = [], []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"bad edge line {ln!r}")
        try:
            i, j = int(parts[0]) - 1, int(parts[1]) - 1
            w = int(parts[2]) if len(parts) == 3 else 1
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}") from None
        edges.append((i, j))
        weights.append(w)
    return GraphSpec(n, tuple(edges), directed, tuple(weights) if any(w != 1 for w in weights) else None)


def format_edge_list(spec: GraphSpec) -> str:
    lines = [f"{spec.n} directed" if spec.directed else str(spec.n)]
    weights = spec.weights or (1,) * len(spec.edges)
    for (i, j), w in zip(spec.edges, weights):
        lines.append(f"{i + 1} {j + 1}" if w == 1 else f"{i + 1} {j + 1} {w}")
    return "\n".join(lines) + "\n"


def relabel(spec: GraphSpec, perm: Sequence[int]) -> GraphSpec:
    """Apply the vertex map ``v -> perm[v]``."""
    return GraphSpec(spec.n, tuple((perm[i], perm[j]) for i, j in spec.edges), spec.directed, spec.weights, spec.name)
