"""Press patterns on the infinite looped grid and the mikado diamonds.

A pattern is a finite set of pressed lattice points ``(x, y)``.  Pressing
``p`` toggles the lamps at ``p`` and its four orthogonal neighbours, so a
lamp is lit iff an odd number of points in its plus-neighbourhood are
pressed.

Diamonds are 1-indexed: diamond 1 is the single press.  Diamond ``k``
lights its centre and the four axis points at distance ``2**(k-1)``, so
the leftmost and rightmost lit lamps are ``2**k`` apart.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from lamplight.errors import CapExceeded

Point = tuple[int, int]
Pattern = frozenset  # of Point

PLUS = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1))
WINDOW_CAP = 25


def pattern(points: Iterable[Point]) -> frozenset[Point]:
    """Build a pattern with press-twice-cancels semantics."""
    out: set[Point] = set()
    for p in points:
        out ^= {p}
    return frozenset(out)


def lit_lamps(p: Iterable[Point]) -> frozenset[Point]:
    hits = Counter((x + dx, y + dy) for x, y in p for dx, dy in PLUS)
    return frozenset(q for q, c in hits.items() if c & 1)


def translate(p: Iterable[Point], dx: int, dy: int) -> frozenset[Point]:
    return frozenset((x + dx, y + dy) for x, y in p)


def superpose(p: Iterable[Point], offsets: Iterable[Point]) -> frozenset[Point]:
    """XOR of the translates of ``p`` by each offset."""
    p = frozenset(p)
    out: frozenset[Point] = frozenset()
    for dx, dy in offsets:
        out = out ^ translate(p, dx, dy)
    return out


def _star(d: int) -> tuple[Point, ...]:
    return ((0, 0), (d, 0), (-d, 0), (0, d), (0, -d))


@lru_cache(maxsize=None)
def mikado_diamond(k: int) -> frozenset[Point]:
    """Diamond ``k``: five copies of diamond ``k-1`` at the centre and at distance ``2**(k-2)``."""
    if k < 1:
        raise ValueError("diamonds are numbered from 1")
    if k == 1:
        return frozenset({(0, 0)})
    return superpose(mikado_diamond(k - 1), _star(1 << (k - 2)))


def superposition_check(k: int) -> tuple[frozenset[Point], frozenset[Point]]:
    """Lamps lit by the five sub-diamonds of diamond ``k + 1``, split by multiplicity.

    Returns ``(odd, even)``: lamps lit an odd number of times survive,
    the others cancel.
    """
    if k < 1:
        raise ValueError("diamonds are numbered from 1")
    sub = lit_lamps(mikado_diamond(k))
    hits = Counter(q for dx, dy in _star(1 << (k - 1)) for q in translate(sub, dx, dy))
    odd = frozenset(q for q, c in hits.items() if c & 1)
    even = frozenset(q for q, c in hits.items() if not c & 1)
    return odd, even


def erase_half(p: Iterable[Point]) -> frozenset[Point]:
    """Keep the points with both coordinates even and halve them."""
    return frozenset((x // 2, y // 2) for x, y in p if x % 2 == 0 and y % 2 == 0)


def double(p: Iterable[Point]) -> frozenset[Point]:
    return frozenset((2 * x, 2 * y) for x, y in p)


DIHEDRAL = (
    lambda x, y: (x, y), lambda x, y: (-y, x), lambda x, y: (-x, -y), lambda x, y: (y, -x),
    lambda x, y: (-x, y), lambda x, y: (x, -y), lambda x, y: (y, x), lambda x, y: (-y, -x),
)


def dihedral_images(p: Iterable[Point]) -> list[frozenset[Point]]:
    p = list(p)
    return [frozenset(f(x, y) for x, y in p) for f in DIHEDRAL]


def bounding_box(p: Iterable[Point]) -> Optional[tuple[int, int, int, int]]:
    """``(xmin, ymin, xmax, ymax)`` or None for an empty set."""
    p = list(p)
    if not p:
        return None
    xs = [x for x, _ in p]
    ys = [y for _, y in p]
    return min(xs), min(ys), max(xs), max(ys)


def as_translated_diamond(p: Iterable[Point]) -> Optional[tuple[int, Point]]:
    """``(k, centre)`` if ``p`` is a translate of diamond ``k``, else None."""
    p = frozenset(p)
    box = bounding_box(p)
    if box is None:
        return None
    x0, y0, x1, y1 = box
    side = x1 - x0 + 1
    if side != y1 - y0 + 1 or side & (side + 1):
        return None
    k = (side + 1).bit_length() - 1
    centre = ((x0 + x1) // 2, (y0 + y1) // 2)
    if translate(p, -centre[0], -centre[1]) == mikado_diamond(k):
        return k, centre
    return None


def diagonal_run(r: int) -> frozenset[Point]:
    """``r - 4`` diagonally consecutive presses, lighting exactly ``r`` lamps."""
    if r < 5:
        raise ValueError("every lamp count except for 1, 2, 3 and 4 is reachable; need r >= 5")
    return frozenset((i, i) for i in range(r - 4))


@dataclass(frozen=True)
class Bitmap:
    width: int
    height: int
    rows: tuple[tuple[int, ...], ...]
    origin: Point = (0, 0)  # lattice point of the top-left pixel

    def to_pbm(self) -> str:
        lines = ["P1", f"{self.width} {self.height}"]
        lines += [" ".join(str(b) for b in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def ones(self) -> int:
        return sum(map(sum, self.rows))


def render(p: Iterable[Point], mode: str = "presses") -> Bitmap:
    """Bitmap of the bounding box of the drawn points, +y up, 1 = black.

    ``mode`` selects the pressed points or the lit lamps.
    """
    if mode == "presses":
        pts = frozenset(p)
    elif mode == "lamps":
        pts = lit_lamps(p)
    else:
        raise ValueError(f"unknown render mode {mode!r}")
    box = bounding_box(pts)
    if box is None:
        return Bitmap(1, 1, ((0,),))
    x0, y0, x1, y1 = box
    w, h = x1 - x0 + 1, y1 - y0 + 1
    grid = [[0] * w for _ in range(h)]
    for x, y in pts:
        grid[y1 - y][x - x0] = 1
    return Bitmap(w, h, tuple(tuple(r) for r in grid), (x0, y1))


@dataclass
class MinLampsResult:
    width: int
    height: int
    histogram: dict[int, int]  # lit count -> number of nonempty patterns
    witnesses: dict[int, list[frozenset[Point]]] = field(default_factory=dict)

    @property
    def smallest(self) -> int:
        return min(self.histogram)


def _lit_counts(idx: np.ndarray, w: int, h: int) -> np.ndarray:
    """Lit-lamp counts for the patterns encoded by ``idx`` (bit ``y*w + x``).

    Each window row becomes a machine word shifted by one for the left
    margin; a lamp row is the XOR of its own press row, that row shifted
    both ways, and the press rows above and below.
    """
    mask = np.uint32((1 << w) - 1)
    rows = [((idx >> np.uint32(y * w)) & mask) << np.uint32(1) for y in range(h)]
    zero = np.zeros_like(idx)
    total = np.zeros(idx.shape, dtype=np.uint16)
    for y in range(-1, h + 1):
        cur = rows[y] if 0 <= y < h else zero
        lit = cur ^ (cur << np.uint32(1)) ^ (cur >> np.uint32(1))
        if y - 1 >= 0:
            lit = lit ^ rows[y - 1]
        if y + 1 < h:
            lit = lit ^ rows[y + 1]
        total += np.bitwise_count(lit).astype(np.uint16)
    return total


def _decode(i: int, w: int, h: int) -> frozenset[Point]:
    return frozenset((b % w, b // w) for b in range(w * h) if (i >> b) & 1)


def min_lamps_search(w: int, h: int, cap: int = WINDOW_CAP, witness_max: int = 5,
                     chunk: int = 1 << 20) -> MinLampsResult:
    """Scan every nonempty pattern inside a ``w`` x ``h`` press window.

    Returns the histogram of lit-lamp counts and every pattern lighting at
    most ``witness_max`` lamps, in window coordinates ``0 <= x < w``.
    """
    if w < 1 or h < 1:
        raise ValueError("window dimensions must be positive")
    if w * h > cap:
        raise CapExceeded("press window area", w * h, cap)
    n = 1 << (w * h)
    hist = np.zeros((w + 2) * (h + 2) + 1, dtype=np.int64)
    witnesses: dict[int, list[frozenset[Point]]] = {}
    for start in range(1, n, chunk):
        idx = np.arange(start, min(start + chunk, n), dtype=np.uint32)
        counts = _lit_counts(idx, w, h)
        hist += np.bincount(counts, minlength=hist.size)
        for j in np.flatnonzero(counts <= witness_max):
            witnesses.setdefault(int(counts[j]), []).append(_decode(int(idx[j]), w, h))
    histogram = {c: int(v) for c, v in enumerate(hist) if v}
    return MinLampsResult(w, h, histogram, witnesses)


def maximal_windows(area: int = WINDOW_CAP) -> list[tuple[int, int]]:
    """Windows of area at most ``area`` not contained in another such window.

    Every window of area <= ``area`` fits inside one of these, so scanning
    them covers all smaller windows up to translation.
    """
    out = []
    for w in range(1, area + 1):
        h = area // w
        if (w + 1) * h > area:
            out.append((w, h))
    return out
