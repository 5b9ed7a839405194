"""Command-line interface.

Exit status: 0 for success or a positive answer, 2 for a legitimate
negative answer (unsolvable target, no dark-only order, grid not fully
controllable, premise violated), 1 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from lamplight.errors import CapExceeded, PremiseViolation
from lamplight.gf2 import GF2Vector, rank, row_spaces_equal
from lamplight.graph import (PREMISE_CAP, GraphParseError, adjacency, format_graph, grid_graph,
                             hypercube_game, parse_graph)
from lamplight.matchings import (MATCHING_CAP, WIDTH_CAP, enumerate_complete_matchings,
                                 grid_controllable, matching_parity, monomer_dimer_parity)
from lamplight.mikado import lit_lamps, mikado_diamond, render
from lamplight.solver import (INDUCTION_CAP, ORDER_CAP, RANK_CAP, apply, dark_at_press,
                              dark_only_order, light_all_with_stats, lightable, max_lit,
                              undirected_equivalent)

OK, ERROR, NEGATIVE = 0, 1, 2


class SelfCheckFailed(RuntimeError):
    pass


@dataclass
class OutputReport:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    status: int = OK

    def as_dict(self) -> dict[str, Any]:
        return {"command": self.command, "inputs": self.inputs, "result": self.result,
                "witnesses": self.witnesses}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        pairs = [("command", self.command)]
        for section in ("inputs", "result", "witnesses"):
            for key in sorted(getattr(self, section)):
                pairs.append((f"{section}.{key}", getattr(self, section)[key]))
        width = max(len(k) for k, _ in pairs)
        lines = []
        for key, value in pairs:
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines += [f"  {line}" for line in value.rstrip("\n").split("\n")]
            else:
                lines.append(f"{key.ljust(width)}  {_fmt(value)}")
        return "\n".join(lines) + "\n"


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value) if value else "-"
    if value is None:
        return "-"
    return str(value)


def _check(ok: bool, what: str):
    if not ok:
        raise SelfCheckFailed(what)


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def cmd_solve(args) -> OutputReport:
    g = _read_graph(args.graph)
    a = adjacency(g)
    target = GF2Vector.ones(g.n) if args.target == "all" else GF2Vector.from_str(args.target)
    if target.length != g.n:
        raise ValueError(f"target has {target.length} bits, graph has {g.n} vertices")
    rep = OutputReport("solve", {"graph": args.graph, "target": str(target)})
    presses = lightable(a, target)
    if presses is None:
        rep.result["status"] = "unsolvable"
        rep.status = NEGATIVE
        return rep
    _check(apply(a, presses) == target, "press set does not reach the target")
    rep.result["status"] = "solved"
    rep.result["verified"] = True
    rep.witnesses["presses"] = str(presses)
    return rep


def cmd_light_all(args) -> OutputReport:
    g = _read_graph(args.graph)
    a = adjacency(g)
    rep = OutputReport("light-all", {"graph": args.graph, "constructive": args.constructive})
    full = GF2Vector.ones(g.n)
    if args.constructive:
        try:
            presses, stats = light_all_with_stats(g, args.premise_cap, vertex_cap=args.vertex_cap)
        except PremiseViolation as exc:
            rep.result["status"] = "premise_violation"
            rep.result["violating_subset"] = exc.subset
            rep.status = NEGATIVE
            return rep
        for key, value in stats.as_dict().items():
            rep.result[f"recursion.{key}"] = value
    else:
        presses = lightable(a, full)
        if presses is None:
            rep.result["status"] = "unsolvable"
            rep.status = NEGATIVE
            return rep
    _check(apply(a, presses) == full, "press set does not light every lamp")
    rep.result["status"] = "solved"
    rep.result["verification"] = "OK"
    rep.witnesses["presses"] = str(presses)
    return rep


def cmd_grid(args) -> OutputReport:
    m, n = args.m, args.n
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    controllable = grid_controllable(m, n)
    tiling = monomer_dimer_parity(m, n, args.width_cap)
    det = matching_parity(grid_graph(m, n))
    agree = controllable == bool(tiling) == bool(det)
    rep = OutputReport("grid", {"m": m, "n": n})
    rep.result["controllable"] = controllable
    rep.result["tiling_parity"] = "odd" if tiling else "even"
    rep.result["determinant_mod2"] = det
    rep.result["agree"] = agree
    _check(agree, "grid verdicts disagree")
    rep.status = OK if controllable else NEGATIVE
    return rep


def cmd_equiv(args) -> OutputReport:
    g = _read_graph(args.graph)
    eq = undirected_equivalent(g, args.rank_cap)
    _check(row_spaces_equal(adjacency(g).matrix.permute_columns(eq.perm), eq.blocks),
           "row spaces differ")
    _check(eq.blocks.is_symmetric() and eq.blocks.diagonal_weight() == eq.k, "not symmetric with k loops")
    rep = OutputReport("equiv", {"graph": args.graph})
    rep.result["k"] = eq.k
    rep.result["rank"] = eq.rank
    rep.result["perm"] = list(eq.perm)
    rep.result["graph"] = format_graph(eq.graph)
    return rep


def cmd_dark_order(args) -> OutputReport:
    g = _read_graph(args.graph)
    a = adjacency(g)
    rep = OutputReport("dark-order", {"graph": args.graph})
    presses = lightable(a, GF2Vector.ones(g.n))
    if presses is None:
        rep.result["status"] = "unsolvable"
        rep.status = NEGATIVE
        return rep
    rep.witnesses["presses"] = str(presses)
    seq = dark_only_order(g, presses, args.order_cap)
    if seq is None:
        rep.result["status"] = "no dark-only ordering exists"
        rep.status = NEGATIVE
        return rep
    _check(dark_at_press(g, seq), "ordering presses a lit vertex")
    rep.result["status"] = "ordered"
    rep.result["verified"] = True
    rep.witnesses["order"] = seq
    return rep


def cmd_mikado(args) -> OutputReport:
    if args.k < 1:
        raise UsageError("k must be at least 1")
    p = mikado_diamond(args.k)
    lit = lit_lamps(p)
    d = 1 << (args.k - 1)
    _check(lit == {(0, 0), (d, 0), (-d, 0), (0, d), (0, -d)}, "diamond does not light its five lamps")
    rep = OutputReport("mikado", {"k": args.k, "mode": args.mode, "render": args.render})
    rep.result["presses"] = len(p)
    rep.result["lit_lamps"] = len(lit)
    rep.witnesses["lit"] = [f"{x},{y}" for x, y in sorted(lit)]
    if args.render:
        bmp = render(p, args.mode)
        Path(args.render).write_text(bmp.to_pbm())
        rep.result["bitmap"] = f"{bmp.width}x{bmp.height}"
    return rep


def cmd_matchings(args) -> OutputReport:
    g = _read_graph(args.graph)
    count = enumerate_complete_matchings(g, args.cap)
    det = matching_parity(g)
    _check(count % 2 == det, "matching count parity disagrees with the determinant")
    rep = OutputReport("matchings", {"graph": args.graph})
    rep.result["count"] = count
    rep.result["parity"] = "odd" if count % 2 else "even"
    rep.result["fully_controllable"] = bool(det)
    return rep


def cmd_max_lit(args) -> OutputReport:
    g = _read_graph(args.graph)
    a = adjacency(g)
    k, presses = max_lit(a, args.rank_cap)
    _check(apply(a, presses).weight() == k, "witness does not light k lamps")
    rep = OutputReport("max-lit", {"graph": args.graph})
    rep.result["k"] = k
    rep.result["lamps"] = a.lamps
    rep.witnesses["presses"] = str(presses)
    rep.witnesses["lit"] = str(apply(a, presses))
    return rep


def cmd_hypercube(args) -> OutputReport:
    if not 1 <= args.k <= 20:
        raise UsageError("k must be between 1 and 20")
    a = hypercube_game(args.k)
    k, presses = max_lit(a, args.k)
    weights = set()
    for mask in range(1, 1 << args.k):
        weights.add(apply(a, GF2Vector(args.k, mask)).weight())
    rep = OutputReport("hypercube", {"k": args.k})
    rep.result["buttons"] = a.buttons
    rep.result["lamps"] = a.lamps
    rep.result["rank"] = rank(a.matrix)
    rep.result["max_lit"] = k
    rep.result["nonempty_press_weights"] = sorted(weights)
    rep.witnesses["presses"] = str(presses)
    _check(weights == {1 << (args.k - 1)} and k == 1 << (args.k - 1), "unexpected lit counts")
    return rep


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lamplight", description="Lamp lighting games over GF(2).")
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="press set reaching a target configuration")
    p.add_argument("graph", help="graph file, '-' for stdin")
    p.add_argument("--target", default="all", help="'all' or a 0/1 string, vertex 0 first")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("light-all", parents=[common], help="light every lamp")
    p.add_argument("graph")
    p.add_argument("--constructive", action="store_true", help="use the inductive construction")
    p.add_argument("--premise-cap", type=int, default=PREMISE_CAP)
    p.add_argument("--vertex-cap", type=int, default=INDUCTION_CAP)
    p.set_defaults(func=cmd_light_all)

    p = sub.add_parser("grid", parents=[common], help="controllability of the looped m x n grid, three ways")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--width-cap", type=int, default=WIDTH_CAP)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("equiv", parents=[common], help="undirected graph with the same lightable sets")
    p.add_argument("graph")
    p.add_argument("--rank-cap", type=int, default=RANK_CAP)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("dark-order", parents=[common], help="light everything pressing dark rooms only")
    p.add_argument("graph")
    p.add_argument("--order-cap", type=int, default=ORDER_CAP)
    p.set_defaults(func=cmd_dark_order)

    p = sub.add_parser("mikado", parents=[common], help="mikado diamond k on the infinite grid")
    p.add_argument("k", type=int)
    p.add_argument("--render", metavar="FILE", help="write a P1 bitmap")
    p.add_argument("--mode", choices=("presses", "lamps"), default="presses")
    p.set_defaults(func=cmd_mikado)

    p = sub.add_parser("matchings", parents=[common], help="count complete matchings")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=MATCHING_CAP)
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("max-lit", parents=[common], help="largest number of lamps lit at once")
    p.add_argument("graph")
    p.add_argument("--rank-cap", type=int, default=RANK_CAP)
    p.set_defaults(func=cmd_max_lit)

    p = sub.add_parser("hypercube", parents=[common], help="k buttons over 2^k - 1 lamps")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_hypercube)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return ERROR
    except SelfCheckFailed as exc:
        print(f"lamplight: internal self-check failed: {exc}", file=sys.stderr)
        return ERROR
    except (GraphParseError, CapExceeded, PremiseViolation, ValueError, OSError) as exc:
        print(f"lamplight: error: {exc}", file=sys.stderr)
        return ERROR
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
