"""Complete matchings, their parity, and monomer-dimer tilings of grids.

A loop counts as an edge covering its single vertex, so the complete
matchings of a looped grid are exactly its monomer-dimer tilings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from lamplight.errors import CapExceeded
from lamplight.gf2 import chebyshev2, det_mod2, iter_bits, poly_eval_shift, poly_gcd
from lamplight.graph import Graph, adjacency

MATCHING_CAP = 24
WIDTH_CAP = 12


@dataclass(frozen=True, order=True)
class Loop:
    v: int


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int

    def __post_init__(self):
        if not self.u < self.v:
            raise ValueError("edge endpoints must satisfy u < v")


Matching = frozenset  # of Loop | Edge items


def _require_undirected(g: Graph):
    if not g.is_undirected():
        raise ValueError("complete matchings need an undirected graph")


def iter_complete_matchings(g: Graph) -> Iterator[frozenset[Union[Loop, Edge]]]:
    """Yield every complete matching, covering the lowest uncovered vertex first."""
    _require_undirected(g)
    full = (1 << g.n) - 1
    chosen: list[Union[Loop, Edge]] = []

    def rec(covered: int):
        if covered == full:
            yield frozenset(chosen)
            return
        v = (~covered & full & -(~covered & full)).bit_length() - 1
        bit = 1 << v
        if g.has_loop(v):
            chosen.append(Loop(v))
            yield from rec(covered | bit)
            chosen.pop()
        for u in iter_bits(g.out[v] & ~covered):
            chosen.append(Edge(v, u))
            yield from rec(covered | bit | (1 << u))
            chosen.pop()

    yield from rec(0)


def enumerate_complete_matchings(g: Graph, cap: int = MATCHING_CAP) -> int:
    """Exact number of complete matchings."""
    _require_undirected(g)
    if g.n > cap:
        raise CapExceeded("matching enumeration, vertex count", g.n, cap)
    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def count(covered: int) -> int:
        if covered == full:
            return 1
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        bit = 1 << v
        total = count(covered | bit) if g.has_loop(v) else 0
        for u in iter_bits(g.out[v] & free):
            total += count(covered | bit | (1 << u))
        return total

    return count(0)


def matching_parity(g: Graph) -> int:
    """Parity of the complete-matching count, read off the adjacency determinant."""
    _require_undirected(g)
    return det_mod2(adjacency(g).matrix)


def grid_controllable(m: int, n: int) -> bool:
    """Every lamp pattern on the looped m x n grid is reachable."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    g = poly_gcd(chebyshev2(m), poly_eval_shift(chebyshev2(n)))
    return g.bits == 1


def _tilings(m: int, n: int, width_cap: int, mod2: bool) -> int:
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    rows, width = max(m, n), min(m, n)
    if width > width_cap:
        raise CapExceeded("transfer-matrix width", width, width_cap)
    # state bit j: the cell of column j at the scan position is already covered
    # (a vertical dimer from the row above, or a horizontal one from the left)
    states = {0: 1}
    for r in range(rows):
        for c in range(width):
            bit = 1 << c
            nxt: dict[int, int] = {}

            def add(s: int, w: int):
                if mod2:
                    if s in nxt:
                        del nxt[s]
                    else:
                        nxt[s] = 1
                else:
                    nxt[s] = nxt.get(s, 0) + w

            for s, w in states.items():
                if s & bit:
                    add(s & ~bit, w)
                    continue
                add(s, w)  # monomer
                if r + 1 < rows:
                    add(s | bit, w)  # vertical dimer into the next row
                if c + 1 < width and not s & (bit << 1):
                    add(s | (bit << 1), w)  # horizontal dimer into the next column
            states = nxt
    return states.get(0, 0)


def monomer_dimer_parity(m: int, n: int, width_cap: int = WIDTH_CAP) -> int:
    """Parity of the number of monomer-dimer tilings of the m x n grid.

    Broken-profile scan along the shorter side, keeping only the set of
    frontier states reached an odd number of times.
    """
    return _tilings(m, n, width_cap, mod2=True)


def monomer_dimer_count(m: int, n: int, width_cap: int = WIDTH_CAP) -> int:
    """Exact tiling count with the same scan; practical only for small boards."""
    return _tilings(m, n, width_cap, mod2=False)
