"""Pressing strategies: solving targets, lighting everything, dark-room orders.

Press sets and lamp configurations are :class:`GF2Vector` values.  A press
set only records parity, because pressing a button twice undoes it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from lamplight.errors import CapExceeded, PremiseViolation
from lamplight.gf2 import (DimensionError, GF2Matrix, GF2Vector, det_mod2, iter_bits, popcount,
                           row_basis, rref, solve)
from lamplight.graph import (PREMISE_CAP, ActionMatrix, Graph, adjacency, bipartition,
                             find_premise_violation, graph_from_matrix, odd_vertex_in)

RANK_CAP = 24
ORDER_CAP = 10
INDUCTION_CAP = 20


def apply(a: ActionMatrix, presses: GF2Vector, start: Optional[GF2Vector] = None) -> GF2Vector:
    """Lamp state after pressing every button in ``presses`` once, from ``start``."""
    if start is None:
        start = GF2Vector.zeros(a.lamps)
    if start.length != a.lamps:
        raise DimensionError(f"start has {start.length} lamps, game has {a.lamps}")
    return start ^ a.matrix.vecmul(presses)


def lightable(a: ActionMatrix, target: GF2Vector) -> Optional[GF2Vector]:
    """A press set reaching ``target`` from dark, or None when it lies outside the row space."""
    return solve(a.matrix, target)


def fully_controllable(a: ActionMatrix) -> bool:
    return bool(det_mod2(a.matrix))


@dataclass
class InductionStats:
    subproblems: int = 0
    shortcuts: int = 0
    even_case: int = 0
    odd_case: int = 0

    def as_dict(self) -> dict:
        return {"subproblems": self.subproblems, "shortcuts": self.shortcuts,
                "even_case": self.even_case, "odd_case": self.odd_case}


class _Induction:
    """Induction on the vertex count, one memo entry per vertex subset reached.

    ``press(S)`` returns a press set inside ``S`` that lights every lamp of
    the subgraph induced on ``S``.  Vertex choices always take the lowest index.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[int, int] = {}
        self.stats = InductionStats()

    def effect(self, presses: int, s: int) -> int:
        lit = 0
        for u in iter_bits(presses):
            lit ^= self.g.closed_out(u)
        return lit & s

    def press(self, s: int) -> int:
        hit = self.memo.get(s)
        if hit is not None:
            return hit
        self.stats.subproblems += 1
        result = self._press(s)
        if self.effect(result, s) != s:
            raise RuntimeError(f"induction produced a non-lighting press set on {list(iter_bits(s))}")
        self.memo[s] = result
        return result

    def _press(self, s: int) -> int:
        g = self.g
        if s == 0:
            return 0
        if s & (s - 1) == 0:
            if g.loops & s:
                return s
            raise PremiseViolation(iter_bits(s), f"vertex {s.bit_length() - 1} has no loop")
        pressings = {}
        for v in iter_bits(s):
            p = self.press(s ^ (1 << v))
            if self.effect(p, s) == s:
                self.stats.shortcuts += 1
                return p
            pressings[v] = p
        # every pressing now lights exactly S minus its own vertex
        if popcount(s) % 2 == 0:
            self.stats.even_case += 1
            total = 0
            for p in pressings.values():
                total ^= p
            return total
        self.stats.odd_case += 1
        u = odd_vertex_in(g, s)
        if u is None:
            raise PremiseViolation(iter_bits(s))
        lit = g.closed_out(u) & s
        if popcount(lit) % 2 == 0:
            raise PremiseViolation(iter_bits(s), f"pressing {u} lit an even set {list(iter_bits(lit))}")
        total = 1 << u
        for w in iter_bits(s & ~lit):
            total ^= pressings[w]
        return total


def light_all_with_stats(g: Graph, premise_cap: int = PREMISE_CAP, check_premise: bool = True,
                         vertex_cap: int = INDUCTION_CAP) -> tuple[GF2Vector, InductionStats]:
    """Constructive all-lamps press set by induction on the vertex count.

    With ``check_premise`` the odd-subset premise is verified up front when
    ``g.n <= premise_cap`` and the smallest violating subset is reported.
    Otherwise violations surface from inside the recursion.  The memo can
    reach one entry per vertex subset, hence ``vertex_cap``.
    """
    if g.n > vertex_cap:
        raise CapExceeded("constructive induction, vertex count", g.n, vertex_cap)
    if check_premise and g.n <= premise_cap:
        bad = find_premise_violation(g, premise_cap)
        if bad is not None:
            raise PremiseViolation(bad)
    ind = _Induction(g)
    presses = ind.press((1 << g.n) - 1)
    return GF2Vector(g.n, presses), ind.stats


def light_all_constructive(g: Graph, premise_cap: int = PREMISE_CAP, check_premise: bool = True,
                           vertex_cap: int = INDUCTION_CAP) -> GF2Vector:
    return light_all_with_stats(g, premise_cap, check_premise, vertex_cap)[0]


def _max_weight(a: ActionMatrix, rank_cap: int) -> tuple[int, int, int]:
    """(weight, lamp set, press set) of the first heaviest row-space element in Gray-code order."""
    basis = row_basis(a.matrix).items()
    r = len(basis)
    if r > rank_cap:
        raise CapExceeded("row-space enumeration, rank", r, rank_cap)
    best, best_v, best_t = 0, 0, 0
    v = t = 0
    for i in range(1, 1 << r):
        j = (i & -i).bit_length() - 1
        v ^= basis[j][0]
        t ^= basis[j][1]
        w = popcount(v)
        if w > best:
            best, best_v, best_t = w, v, t
    return best, best_v, best_t


def max_lit(a: ActionMatrix, rank_cap: int = RANK_CAP) -> tuple[int, GF2Vector]:
    """Largest number of simultaneously lit lamps and a press set achieving it."""
    k, _, presses = _max_weight(a, rank_cap)
    return k, GF2Vector(a.buttons, presses)


def majority_witness(a: ActionMatrix, cap: int = RANK_CAP, trials: int = 100_000,
                     seed: int = 0) -> GF2Vector:
    """Press set lighting more than half the lamps.

    Uses the exact row-space maximum when the rank is within ``cap``, and a
    seeded random search otherwise.
    """
    reach = 0
    for r in a.matrix.data:
        reach |= r
    if reach != (1 << a.lamps) - 1:
        missing = [j for j in range(a.lamps) if not (reach >> j) & 1]
        raise ValueError(f"lamps {missing} are toggled by no button")
    half = a.lamps / 2
    basis = row_basis(a.matrix)
    if len(basis) <= cap:
        k, presses = max_lit(a, cap)
        if k <= half:
            raise RuntimeError(f"maximum {k} does not exceed half of {a.lamps} lamps")
        return presses
    rng = random.Random(seed)
    best_w, best = -1, None
    for _ in range(trials):
        p = GF2Vector(a.buttons, rng.getrandbits(a.buttons))
        w = apply(a, p).weight()
        if w > half:
            return p
        if w > best_w:
            best_w, best = w, p
    raise CapExceeded("random majority search, trials", trials, trials, best=best)


@dataclass(frozen=True)
class Equivalence:
    """Undirected game with the same lightable sets as a directed one.

    ``graph`` uses the relabelled vertex order: its vertex ``i`` is vertex
    ``perm[i]`` of the original graph.
    """

    graph: Graph
    perm: tuple[int, ...]
    k: int
    rank: int
    blocks: GF2Matrix = field(repr=False)

    def original_labels(self) -> Graph:
        """The same undirected graph expressed on the original vertex labels."""
        n = len(self.perm)
        inv = [0] * n
        for new, old in enumerate(self.perm):
            inv[old] = new
        a = self.blocks.permute_columns(inv).permute_rows(inv)
        return graph_from_matrix(a)


def symmetric_equivalent(m: GF2Matrix, rank_cap: int = RANK_CAP) -> tuple[GF2Matrix, list[int], int, int]:
    """Symmetric square matrix with the row space of ``m`` (columns relabelled).

    Returns ``(A', perm, k, r)``: ``m.permute_columns(perm)`` and ``A'`` span
    the same space, ``A'`` has ``k`` ones on its diagonal, ``r`` is the rank.
    """
    if m.rows != m.cols:
        raise DimensionError("need a square adjacency matrix")
    n = m.cols
    k, heavy, _ = _max_weight(ActionMatrix(m), rank_cap)
    first = list(iter_bits(heavy))
    perm = first + [j for j in range(n) if not (heavy >> j) & 1]
    _, r, pivots = rref(m.permute_columns(perm))
    # no nonzero row-space vector avoids the heaviest set, so all pivots sit among its k columns
    if pivots and pivots[-1] >= k:
        raise RuntimeError(f"pivot column {pivots[-1]} outside the first {k} lamps")
    pivot_set = set(pivots)
    order = pivots + [j for j in range(k) if j not in pivot_set] + list(range(k, n))
    perm = [perm[j] for j in order]
    reduced, r2, pivots2 = rref(m.permute_columns(perm))
    if pivots2 != list(range(r)) or r2 != r:
        raise RuntimeError("block form not reached after relabelling")
    # B occupies columns r..n-1 of the first r rows
    bcols = []
    for j in range(n - r):
        col = 0
        for i in range(r):
            if (reduced.data[i] >> (r + j)) & 1:
                col |= 1 << i
        bcols.append(col)
    rows = list(reduced.data[:r])
    for j in range(n - r):
        row = bcols[j]
        for l in range(n - r):
            if popcount(bcols[j] & bcols[l]) & 1:
                row |= 1 << (r + l)
        rows.append(row)
    return GF2Matrix(n, n, tuple(rows)), perm, k, r


def undirected_equivalent(g: Graph, rank_cap: int = RANK_CAP) -> Equivalence:
    blocks, perm, k, r = symmetric_equivalent(adjacency(g).matrix, rank_cap)
    if not blocks.is_symmetric() or blocks.diagonal_weight() != k:
        raise RuntimeError("equivalent matrix is not symmetric with k loops")
    return Equivalence(graph_from_matrix(blocks), tuple(perm), k, r, blocks)


def dark_at_press(g: Graph, sequence: list[int]) -> bool:
    """True iff every button in ``sequence`` is pressed while its own lamp is off."""
    lit = 0
    for v in sequence:
        if (lit >> v) & 1:
            return False
        lit ^= g.closed_out(v)
    return True


def dark_only_order(g: Graph, presses: GF2Vector, order_cap: int = ORDER_CAP) -> Optional[list[int]]:
    """Order the press set so every press happens in a dark room, or None.

    Bipartite undirected graphs with all loops get the X side first, then the
    Y side.  Other graphs get a depth-first search over orderings that
    returns the lexicographically smallest dark-only order.
    """
    full = (1 << g.n) - 1
    if apply(adjacency(g), presses).bits != full:
        raise ValueError("press set does not light every lamp")
    chosen = presses.indices()
    if g.is_undirected() and g.all_loops():
        parts = bipartition(g)
        if parts is not None:
            xs, ys = (set(part) for part in parts)
            seq = [v for v in chosen if v in xs] + [v for v in chosen if v in ys]
            if not dark_at_press(g, seq):
                raise RuntimeError(f"bipartite order {seq} pressed a lit vertex")
            return seq
    if len(chosen) > order_cap:
        raise CapExceeded("dark-only ordering search, press count", len(chosen), order_cap)
    dead: set[int] = set()
    seq: list[int] = []

    def extend(done: int, lit: int) -> bool:
        if len(seq) == len(chosen):
            return True
        if done in dead:
            return False
        for v in chosen:
            if (done >> v) & 1 or (lit >> v) & 1:
                continue
            seq.append(v)
            if extend(done | (1 << v), lit ^ g.closed_out(v)):
                return True
            seq.pop()
        dead.add(done)
        return False

    return list(seq) if extend(0, 0) else None
