"""Game boards: graphs with loops, undirected edges and directed arcs.

Vertices are ``0..n-1``.  A graph stores, per vertex, the bitset of its
out-neighbours (loops excluded) and separately the bitset of looped
vertices.  An arc ``u -> v`` is *paired* when ``v -> u`` is present too;
an opposite pair is the same thing as an undirected edge.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from lamplight.errors import CapExceeded
from lamplight.gf2 import GF2Matrix, iter_bits, popcount

PREMISE_CAP = 20


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    n: int
    loops: int
    out: tuple[int, ...]

    def __post_init__(self):
        if len(self.out) != self.n:
            raise ValueError("need one out-neighbour set per vertex")
        full = (1 << self.n) - 1
        if self.loops & ~full:
            raise ValueError("loop on a missing vertex")
        for v, nb in enumerate(self.out):
            if nb & ~full or (nb >> v) & 1:
                raise ValueError(f"bad out-neighbours for vertex {v}")

    @classmethod
    def build(cls, n: int, loops: Iterable[int] = (), edges: Iterable[tuple[int, int]] = (),
              arcs: Iterable[tuple[int, int]] = ()) -> Graph:
        """Assemble a graph; ``edges`` are undirected, ``arcs`` directed."""
        out = [0] * n
        lp = 0
        for v in loops:
            lp |= 1 << v
        for u, v in edges:
            if u == v:
                raise ValueError("use loops for self-edges")
            out[u] |= 1 << v
            out[v] |= 1 << u
        for u, v in arcs:
            if u == v:
                raise ValueError("use loops for self-arcs")
            out[u] |= 1 << v
        return cls(n, lp, tuple(out))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_loop(self, v: int) -> bool:
        return bool((self.loops >> v) & 1)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.n) for v in iter_bits(self.out[u]))

    def is_paired(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) and self.has_arc(v, u)

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges (paired arc couples) as ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])
                if v > u and self.has_arc(v, u)]

    def unpaired_arcs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.arcs if not self.has_arc(v, u))

    def is_undirected(self) -> bool:
        return all(self.has_arc(v, u) for u, v in self.arcs)

    def all_loops(self) -> bool:
        return self.loops == (1 << self.n) - 1

    def out_degree(self, v: int, within: Optional[int] = None) -> int:
        """Out-degree of ``v``, counting a loop once; restricted to ``within`` if given."""
        mask = (1 << self.n) - 1 if within is None else within
        return popcount(self.out[v] & mask) + ((self.loops & mask) >> v & 1)

    def closed_out(self, v: int) -> int:
        """Lamps toggled by button ``v``: out-neighbours plus ``v`` itself if looped."""
        return self.out[v] | (self.loops & (1 << v))


@dataclass(frozen=True)
class ActionMatrix:
    """Row ``i`` of ``matrix`` is the set of lamps toggled by button ``i``."""

    matrix: GF2Matrix

    @property
    def buttons(self) -> int:
        return self.matrix.rows

    @property
    def lamps(self) -> int:
        return self.matrix.cols

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> ActionMatrix:
        return cls(GF2Matrix.from_lists(lists))


def adjacency(g: Graph) -> ActionMatrix:
    return ActionMatrix(GF2Matrix(g.n, g.n, tuple(g.closed_out(v) for v in range(g.n))))


def graph_from_matrix(m: GF2Matrix) -> Graph:
    """Inverse of :func:`adjacency` for square matrices."""
    if m.rows != m.cols:
        raise ValueError("adjacency matrices are square")
    loops = 0
    out = []
    for i, r in enumerate(m.data):
        loops |= r & (1 << i)
        out.append(r & ~(1 << i))
    return Graph(m.rows, loops, tuple(out))


def parse_graph(text: str) -> Graph:
    n = None
    loops: set[int] = set()
    arcs: set[tuple[int, int]] = set()

    def vertex(tok: str, lineno: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise GraphParseError(lineno, f"bad vertex {tok!r}") from None
        if not 0 <= v < n:
            raise GraphParseError(lineno, f"vertex {v} out of range 0..{n - 1}")
        return v

    def add_arc(u: int, v: int, lineno: int):
        if u == v:
            raise GraphParseError(lineno, "self-edge; use 'l' for loops")
        if (u, v) in arcs:
            raise GraphParseError(lineno, f"duplicate arc {u}->{v}")
        arcs.add((u, v))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind, args = tok[0], tok[1:]
        if kind == "n":
            if n is not None:
                raise GraphParseError(lineno, "vertex count given twice")
            if len(args) != 1 or not args[0].isdigit():
                raise GraphParseError(lineno, "expected 'n <count>'")
            n = int(args[0])
            continue
        if n is None:
            raise GraphParseError(lineno, "'n <count>' must come first")
        if kind in ("e", "a"):
            if len(args) != 2:
                raise GraphParseError(lineno, f"expected '{kind} <u> <v>'")
            u, v = vertex(args[0], lineno), vertex(args[1], lineno)
            add_arc(u, v, lineno)
            if kind == "e":
                add_arc(v, u, lineno)
        elif kind == "l":
            if len(args) != 1:
                raise GraphParseError(lineno, "expected 'l <u>'")
            v = vertex(args[0], lineno)
            if v in loops:
                raise GraphParseError(lineno, f"duplicate loop at {v}")
            loops.add(v)
        else:
            raise GraphParseError(lineno, f"unknown record {kind!r}")
    if n is None:
        raise GraphParseError(0, "missing 'n <count>'")
    return Graph.build(n, loops=loops, arcs=arcs)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"l {v}" for v in iter_bits(g.loops)]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    lines += [f"a {u} {v}" for u, v in g.unpaired_arcs()]
    return "\n".join(lines) + "\n"


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``subset``; the second value maps new labels to old ones."""
    keep = sorted(set(subset))
    for v in keep:
        if not 0 <= v < g.n:
            raise IndexError(v)
    new_of = {old: new for new, old in enumerate(keep)}
    mask = sum(1 << v for v in keep)
    out = []
    loops = 0
    for new, old in enumerate(keep):
        out.append(sum(1 << new_of[w] for w in iter_bits(g.out[old] & mask)))
        if g.has_loop(old):
            loops |= 1 << new
    return Graph(len(keep), loops, tuple(out)), keep


def odd_vertex_in(g: Graph, mask: int) -> Optional[int]:
    for v in iter_bits(mask):
        if (popcount(g.out[v] & mask) + ((g.loops >> v) & 1)) & 1:
            return v
    return None


def find_premise_violation(g: Graph, cap: int = PREMISE_CAP) -> Optional[list[int]]:
    """Smallest odd subset with no vertex of odd induced out-degree, or None.

    Subsets are scanned by increasing size, then lexicographically.
    """
    if g.n > cap:
        raise CapExceeded("odd-subset premise check, vertex count", g.n, cap)
    for size in range(1, g.n + 1, 2):
        for combo in itertools.combinations(range(g.n), size):
            mask = sum(1 << v for v in combo)
            if odd_vertex_in(g, mask) is None:
                return list(combo)
    return None


def odd_subset_premise(g: Graph, cap: int = PREMISE_CAP) -> bool:
    return find_premise_violation(g, cap) is None


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Two-colouring of the non-loop edges, lowest vertex of each component in X."""
    if not g.is_undirected():
        raise ValueError("bipartition needs an undirected graph (unpaired arcs present)")
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.out[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    xs = [v for v in range(g.n) if colour[v] == 0]
    ys = [v for v in range(g.n) if colour[v] == 1]
    return xs, ys


def grid_graph(m: int, n: int) -> Graph:
    """m rows by n columns, row-major labels, orthogonal edges, a loop everywhere."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Graph.build(m * n, loops=range(m * n), edges=edges)


def hypercube_game(k: int) -> ActionMatrix:
    """k buttons over 2**k - 1 lamps labelled by the nonzero k-bit words.

    Lamp column ``j`` carries label ``j + 1``; button ``i`` toggles the lamps
    whose label has bit ``i`` set.
    """
    if not 1 <= k <= 64:
        raise ValueError("k must be between 1 and 64")
    lamps = (1 << k) - 1
    rows = []
    for i in range(k):
        r = 0
        for label in range(1, lamps + 1):
            if (label >> i) & 1:
                r |= 1 << (label - 1)
        rows.append(r)
    return ActionMatrix(GF2Matrix(k, lamps, tuple(rows)))


def odd_sets_induce_odd_arc_count(g: Graph) -> bool:
    """Every odd vertex subset induces an odd number of arcs (loops counted once)."""
    for mask in range(1, 1 << g.n):
        if popcount(mask) & 1:
            total = popcount(g.loops & mask)
            for v in iter_bits(mask):
                total += popcount(g.out[v] & mask)
            if not total & 1:
                return False
    return True


def unpaired_complete_bipartite(g: Graph) -> bool:
    """The unpaired arcs, read as undirected edges, form K_{a,b} with a + b = n.

    The edgeless graph counts (a = 0).
    """
    und = [0] * g.n
    count = 0
    for u, v in g.unpaired_arcs():
        und[u] |= 1 << v
        und[v] |= 1 << u
        count += 1
    if count == 0:
        return True
    h = Graph(g.n, 0, tuple(und))
    parts = bipartition(h)
    if parts is None:
        return False
    xs, ys = parts
    return count == len(xs) * len(ys)


def corollary_form(g: Graph) -> bool:
    """Loops everywhere and the unpaired arcs form a spanning complete bipartite graph."""
    return g.all_loops() and unpaired_complete_bipartite(g)


# generators used by tests and experiment scripts

def all_undirected(n: int, loops: Optional[int] = None) -> Iterator[Graph]:
    """Every undirected graph on n vertices; every loop subset unless ``loops`` is fixed."""
    pairs = list(itertools.combinations(range(n), 2))
    loop_masks = range(1 << n) if loops is None else (loops,)
    for lp in loop_masks:
        for emask in range(1 << len(pairs)):
            out = [0] * n
            for i in iter_bits(emask):
                u, v = pairs[i]
                out[u] |= 1 << v
                out[v] |= 1 << u
            yield Graph(n, lp, tuple(out))


def all_digraphs(n: int) -> Iterator[Graph]:
    """Every digraph on n vertices with every loop subset: 2**(n*n) graphs."""
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    for lp in range(1 << n):
        for amask in range(1 << len(slots)):
            out = [0] * n
            for i in iter_bits(amask):
                u, v = slots[i]
                out[u] |= 1 << v
            yield Graph(n, lp, tuple(out))


def random_undirected(n: int, rng: random.Random, p: float = 0.5, all_loops: bool = True) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    loops = range(n) if all_loops else [v for v in range(n) if rng.random() < 0.5]
    return Graph.build(n, loops=loops, edges=edges)


def random_digraph(n: int, rng: random.Random, p: float = 0.5, loop_p: float = 0.5) -> Graph:
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    loops = [v for v in range(n) if rng.random() < loop_p]
    return Graph.build(n, loops=loops, arcs=arcs)


def random_bipartite(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Random undirected bipartite graph with a loop on every vertex."""
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if side[u] != side[v] and rng.random() < p]
    return Graph.build(n, loops=range(n), edges=edges)


def random_corollary_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """All loops, random undirected edges, and a randomly oriented K_{a,n-a} of unpaired arcs."""
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = []
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        if side[u] != side[v]:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        elif rng.random() < p:
            edges.append((u, v))
    return Graph.build(n, loops=range(n), edges=edges, arcs=arcs)
