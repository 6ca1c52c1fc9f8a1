"""Command-line front end.

Exit codes: 0 on success, 2 on bad input, 3 when a brute-force cap is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .arith_enum import arithmetical_structures, min_dgeq0_matrix
from .classify import classify_z, mp3_admissible_constants, mp3_membership
from .errors import ArithError, BadInput, BoxTooLarge
from .exactmat import IntMatrix, json_int
from .graphs import (
    adjacency,
    conjecture_check,
    connected_graphs_upto,
    family,
    format_edge_list,
    parse_edge_list,
)
from .poly_enum import frontier_at_level, lift_non_squarefree, min_dgeq0_poly, parse_any
from .polyring import SqFreePoly, parse
from .solutions import DEFAULT_BOX_CAP, brute_force_box, slice_solve

log = logging.getLogger("arithstruct")

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3


@dataclass
class RunConfig:
    command: str
    source: str | None
    out: str = "json"
    threads: int = 1
    box_cap: int = DEFAULT_BOX_CAP
    alpha: int = 0
    slow: bool = False

    def __post_init__(self):
        if self.threads < 1 or self.box_cap < 1:
            raise BadInput("caps and thread counts must be positive")


# ------------------------------------------------------------------ input


def _read_source(args) -> str:
    if args.input is not None and getattr(args, "expr", None) is not None:
        raise BadInput("give exactly one of --input and --expr")
    if getattr(args, "expr", None) is not None:
        return args.expr
    if args.input is None:
        raise BadInput("an input is required (--input or --expr)")
    if args.input == "-":
        return sys.stdin.read()
    try:
        with open(args.input) as fh:
            return fh.read()
    except OSError as exc:
        raise BadInput(f"cannot read {args.input}: {exc.strerror}") from None


def _load_matrix(args) -> IntMatrix:
    text = _read_source(args)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        # fall back to the edge-list format
        return adjacency(parse_edge_list(text))
    if isinstance(obj, list):
        return IntMatrix.from_rows(obj)
    if isinstance(obj, dict):
        return IntMatrix.from_json(obj)
    raise BadInput("matrix input must be a JSON object or array")


def _load_poly_text(args):
    text = _read_source(args).strip()
    if text.startswith("{"):
        try:
            return SqFreePoly.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise BadInput(f"bad JSON: {exc}") from None
    return text


def _load_poly(args) -> SqFreePoly:
    src = _load_poly_text(args)
    return src if isinstance(src, SqFreePoly) else parse(src)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise BadInput(f"expected comma-separated integers, got {text!r}") from None


# ----------------------------------------------------------------- output


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _vec_text(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _emit(cfg: RunConfig, obj: dict, csv_header=None, csv_rows=None, text=None) -> str:
    if cfg.out == "csv" and csv_header is not None:
        return _csv(csv_header, csv_rows)
    if cfg.out == "text" and text is not None:
        return text
    return json.dumps(obj) + "\n"


def _frontier_out(cfg, names, front, extra=None):
    obj = {"frontier": front.to_json()}
    if extra:
        obj.update(extra)
    text = "\n".join(_vec_text(v) for v in front) + "\n"
    return _emit(cfg, obj, list(names), [list(v) for v in front], text)


def _var_names(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


# --------------------------------------------------------------- commands


def cmd_matrix(args, cfg: RunConfig) -> str:
    L = _load_matrix(args)
    if args.action == "classify":
        return _classify_out(cfg, L)
    if args.action == "frontier":
        return _frontier_out(cfg, _var_names(L.n), min_dgeq0_matrix(L))
    rep = arithmetical_structures(L)
    names = _var_names(L.n)
    rows = [list(s.d) + list(s.r) + [s.k_order] for s in rep.structures]
    header = [f"d_{v}" for v in names] + [f"r_{v}" for v in names] + ["k"]
    text = f"outcome: {rep.outcome}\nfrontier: {len(rep.frontier)}\nstructures: {len(rep.structures)}\n"
    text += "".join(f"d={_vec_text(s.d)} r={_vec_text(s.r)} k={s.k_order}\n" for s in rep.structures)
    return _emit(cfg, rep.to_json(), header, rows, text)


def _classify_out(cfg: RunConfig, M: IntMatrix) -> str:
    z = classify_z(M)
    obj = z.to_json()
    text = f"{z.label}\ndet: {z.det}\n"
    flags = [k for k in obj if k not in ("det", "label")]
    return _emit(cfg, obj, flags + ["det"], [[obj[k] for k in flags] + [z.det]], text)


def cmd_classify(args, cfg: RunConfig) -> str:
    return _classify_out(cfg, _load_matrix(args))


def _poly_structures_out(cfg, rep) -> str:
    header = list(rep.names) + ["k"]
    rows = [list(d) + [k] for d, k in rep.structures]
    text = f"frontier: {len(rep.frontier)}\nstructures: {len(rep.structures)}\n"
    text += "".join(f"{_vec_text(d)} k={k}\n" for d, k in rep.structures)
    if rep.reducible is not None:
        text += f"reducible into {len(rep.reducible.factors)} factors; {len(rep.reducible.witnesses)} witnesses\n"
    return _emit(cfg, rep.to_json(), header, rows, text)


def _solutions_out(cfg, names, sol) -> str:
    text = f"complete: {str(sol.complete).lower()}\n" + "".join(_vec_text(v) + "\n" for v in sol.solutions)
    return _emit(cfg, sol.to_json(), list(names), [list(v) for v in sol.solutions], text)


def cmd_poly(args, cfg: RunConfig) -> str:
    action = args.action
    if action == "lift":
        src = _load_poly_text(args)
        rep = lift_non_squarefree(src) if isinstance(src, str) else min_dgeq0_poly(src)
        return _poly_structures_out(cfg, rep)
    f = _load_poly(args)
    if action == "frontier":
        if cfg.alpha:
            return _frontier_out(cfg, f.names, frontier_at_level(f, cfg.alpha), {"alpha": str(cfg.alpha)})
        return _frontier_out(cfg, f.names, min_dgeq0_poly(f).frontier)
    if action == "structures":
        return _poly_structures_out(cfg, min_dgeq0_poly(f))
    if action == "solve":
        return _solve(args, cfg, f)
    return _mp3(cfg, f)


def _mp3(cfg: RunConfig, f: SqFreePoly) -> str:
    if f.nvars != 3 or f.coef(0b111) != 1 or any(f.coef(m) for m in (0b011, 0b101, 0b110)):
        raise BadInput("mp3 expects x1*x2*x3 + a1*x1 + a2*x2 + a3*x3 + b")
    a = [f.coef(1 << i) for i in range(3)]
    b = f.constant
    W = mp3_membership(*a, b)
    adm = mp3_admissible_constants(*a)
    obj = {
        "member": W is not None,
        "witness": W.to_json() if W is not None else None,
        "admissible_constants": None if adm is None else [json_int(x) for x in adm],
    }
    text = ("member\n" + str(W) + "\n") if W is not None else "not a member\n"
    if adm is not None:
        text += "admissible constants: " + ", ".join(str(x) for x in adm) + "\n"
    return _emit(cfg, obj, None, None, text)


def _solve(args, cfg: RunConfig, f: SqFreePoly) -> str:
    if args.method == "box":
        if not args.box:
            raise BadInput("--method box needs --box")
        sol = brute_force_box(f, _int_list(args.box), cfg.box_cap)
    else:
        sol = slice_solve(f, scan_bound=args.scan_bound)
    return _solutions_out(cfg, f.names, sol)


def cmd_solve(args, cfg: RunConfig) -> str:
    return _solve(args, cfg, _load_poly(args))


def cmd_graph(args, cfg: RunConfig) -> str:
    if args.action == "family":
        g = family(args.name, args.n)
        A = adjacency(g)
        obj = {"name": g.name, "edges": [[i + 1, j + 1] for i, j in g.edges], "matrix": A.to_json()}
        return _emit(cfg, obj, None, None, format_edge_list(g))
    graphs = connected_graphs_upto(args.n)
    obj = {"n": args.n, "graphs": [{"name": g.name, "edges": [[i + 1, j + 1] for i, j in g.edges]} for g in graphs]}
    rows = [[g.name, " ".join(f"{i + 1}-{j + 1}" for i, j in g.edges)] for g in graphs]
    text = "".join(f"{g.name or '-'}: " + " ".join(f"{i + 1}{j + 1}" for i, j in g.edges) + "\n" for g in graphs)
    return _emit(cfg, obj, ["name", "edges"], rows, text)


def cmd_conjecture(args, cfg: RunConfig) -> str:
    rep = conjecture_check(args.n, threads=cfg.threads, slow=cfg.slow)
    rows = [[r.graph.name, " ".join(f"{i + 1}-{j + 1}" for i, j in r.graph.edges), r.count, r.max_entry] for r in rep.rows]
    text = "".join(f"{r[0] or '-':8} {r[2]:>8}  {r[1]}\n" for r in rows)
    text += f"path is minimum: {rep.path_is_min}\ncomplete is maximum: {rep.complete_is_max}\n"
    return _emit(cfg, rep.to_json(), ["name", "edges", "count", "max_entry"], rows, text)


def cmd_oracle(args, cfg: RunConfig) -> str:
    box = _int_list(args.box)
    text = _read_source(args).strip()
    target: IntMatrix | SqFreePoly
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        target = parse(text)
    else:
        if isinstance(obj, dict) and "vars" in obj:
            target = SqFreePoly.from_json(obj)
        elif isinstance(obj, dict):
            target = IntMatrix.from_json(obj)
        else:
            target = IntMatrix.from_rows(obj)
    sol = brute_force_box(target, box, cfg.box_cap)
    names = target.names if isinstance(target, SqFreePoly) else _var_names(target.n)
    return _solutions_out(cfg, names, sol)


# ----------------------------------------------------------------- parser


def _common(p: argparse.ArgumentParser, expr=True):
    p.add_argument("--input", help="input file, or - for stdin")
    if expr:
        p.add_argument("--expr", help="inline input")
    p.add_argument("--out", choices=("json", "csv", "text"), default="json")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--box-cap", type=int, default=DEFAULT_BOX_CAP)
    p.add_argument("--alpha", type=int, default=0, help="level for poly frontier")
    p.add_argument("--slow", action="store_true", help="allow long-running sizes")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arithstruct", description="Arithmetical structures of matrices and polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="frontier, structures or classification of a matrix")
    p.add_argument("action", choices=("frontier", "structures", "classify"))
    _common(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("classify", help="Z-matrix classification")
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("poly", help="polynomial frontier, structures, solutions, MP membership, lifting")
    p.add_argument("action", choices=("frontier", "structures", "solve", "mp3", "lift"))
    p.add_argument("--box", help="comma-separated box bounds for --method box")
    p.add_argument("--method", choices=("slice", "box"), default="slice")
    p.add_argument("--scan-bound", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("solve", help="positive zeros of a polynomial")
    p.add_argument("--box")
    p.add_argument("--method", choices=("slice", "box"), default="slice")
    p.add_argument("--scan-bound", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("graph", help="graph families and connected-graph enumeration")
    p.add_argument("action", choices=("family", "enumerate"))
    p.add_argument("--name", choices=("path", "cycle", "complete", "star"), default="path")
    p.add_argument("--n", type=int, required=True)
    _common(p, expr=False)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("conjecture", help="structure counts over all connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    _common(p, expr=False)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("oracle", help="independent brute-force scan")
    p.add_argument("action", choices=("box",))
    p.add_argument("--box", required=True)
    _common(p)
    p.set_defaults(func=cmd_oracle)
    return ap


def _setup_logging():
    level = os.environ.get("ARITH_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr, format="%(name)s: %(message)s")


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Parse ``argv``, run the command and write its output; returns the exit code."""
    stdout = stdout or sys.stdout
    _setup_logging()
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = RunConfig(args.command, args.input, args.out, args.threads, args.box_cap, args.alpha, args.slow)
        out = args.func(args, cfg)
    except BoxTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ArithError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    stdout.write(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
