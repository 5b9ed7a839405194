"""Linear algebra and polynomial arithmetic over GF(2).

Vectors, matrix rows and polynomials are Python ints used as bitsets:
bit ``i`` is entry ``i`` (or the coefficient of ``x**i``).  XOR on ints is
word-parallel, so elimination never touches individual bits in its inner loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_str(x: int, length: int) -> str:
    """Render ``x`` as a 0/1 string, index 0 first."""
    return "".join("1" if (x >> i) & 1 else "0" for i in range(length))


def str_to_bits(s: str) -> int:
    x = 0
    for i, ch in enumerate(s):
        if ch == "1":
            x |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a bit string: {s!r}")
    return x


@dataclass(frozen=True)
class GF2Vector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def zeros(cls, length: int) -> GF2Vector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> GF2Vector:
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_str(cls, s: str) -> GF2Vector:
        return cls(len(s), str_to_bits(s))

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> GF2Vector:
        x = 0
        for i in indices:
            if not 0 <= i < length:
                raise IndexError(i)
            x ^= 1 << i
        return cls(length, x)

    def __xor__(self, other: GF2Vector) -> GF2Vector:
        if self.length != other.length:
            raise DimensionError(f"lengths {self.length} and {other.length}")
        return GF2Vector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def weight(self) -> int:
        return popcount(self.bits)

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.length)


@dataclass(frozen=True)
class GF2Matrix:
    """Dense matrix over GF(2); ``data[i]`` is row ``i`` as an int bitset."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond column count")

    @classmethod
    def from_rows(cls, cols: int, rows: Iterable[int]) -> GF2Matrix:
        data = tuple(rows)
        return cls(len(data), cols, data)

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]], cols: Optional[int] = None) -> GF2Matrix:
        if cols is None:
            cols = len(lists[0]) if lists else 0
        data = []
        for row in lists:
            if len(row) != cols:
                raise DimensionError("ragged rows")
            data.append(sum(1 << j for j, b in enumerate(row) if b & 1))
        return cls(len(data), cols, tuple(data))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> GF2Matrix:
        return cls(rows, cols, (0,) * rows)

    def row(self, i: int) -> GF2Vector:
        return GF2Vector(self.cols, self.data[i])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def column(self, j: int) -> int:
        """Column ``j`` as a bitset over rows."""
        x = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                x |= 1 << i
        return x

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.transpose() == self

    def diagonal_weight(self) -> int:
        return sum((self.data[i] >> i) & 1 for i in range(min(self.rows, self.cols)))

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for r in self.data:
            acc = 0
            for k in iter_bits(r):
                acc ^= other.data[k]
            out.append(acc)
        return GF2Matrix(self.rows, other.cols, tuple(out))

    def vecmul(self, x: GF2Vector) -> GF2Vector:
        """Row combination ``x^T M``: XOR of the rows selected by ``x``."""
        if x.length != self.rows:
            raise DimensionError(f"vector of length {x.length} against {self.rows} rows")
        acc = 0
        for i in iter_bits(x.bits):
            acc ^= self.data[i]
        return GF2Vector(self.cols, acc)

    def permute_columns(self, perm: Sequence[int]) -> GF2Matrix:
        """New column ``i`` is old column ``perm[i]``."""
        if sorted(perm) != list(range(self.cols)):
            raise ValueError("not a permutation of the columns")
        out = []
        for r in self.data:
            x = 0
            for i, old in enumerate(perm):
                if (r >> old) & 1:
                    x |= 1 << i
            out.append(x)
        return GF2Matrix(self.rows, self.cols, tuple(out))

    def permute_rows(self, perm: Sequence[int]) -> GF2Matrix:
        return GF2Matrix(self.rows, self.cols, tuple(self.data[p] for p in perm))

    def vstack(self, other: GF2Matrix) -> GF2Matrix:
        if self.cols != other.cols:
            raise DimensionError("column counts differ")
        return GF2Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    def __str__(self) -> str:
        return "\n".join(bits_to_str(r, self.cols) for r in self.data)


def rref(m: GF2Matrix) -> tuple[GF2Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Pivots are taken column by column, left to right, using the first
    remaining row (top to bottom) with a one in that column.
    """
    work = list(m.data)
    pivots: list[int] = []
    top = 0
    for col in range(m.cols):
        if top == len(work):
            break
        bit = 1 << col
        for r in range(top, len(work)):
            if work[r] & bit:
                break
        else:
            continue
        work[top], work[r] = work[r], work[top]
        p = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= p
        pivots.append(col)
        top += 1
    return GF2Matrix(m.rows, m.cols, tuple(work)), top, pivots


def rank(m: GF2Matrix) -> int:
    return rref(m)[1]


class RowBasis:
    """Incrementally built row basis that remembers which inputs formed each row.

    Each stored row is keyed by its lowest set bit and carries a ``tag``
    bitset naming the input rows XORed into it.  Inputs that reduce to zero
    are dependent and never enter a tag.
    """

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        """Clear every pivot bit of ``v``; a zero residue means ``v`` is in the span."""
        for low, (w, t) in self.rows.items():
            if v & low:
                v ^= w
                tag ^= t
        return v, tag

    def add(self, v: int, tag: int) -> bool:
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        low = v & -v
        # stored rows stay fully reduced: no pivot bit appears outside its own row
        for key, (w, t) in list(self.rows.items()):
            if w & low:
                self.rows[key] = (w ^ v, t ^ tag)
        self.rows[low] = (v, tag)
        return True

    def __len__(self) -> int:
        return len(self.rows)

    def items(self) -> list[tuple[int, int]]:
        return [self.rows[k] for k in sorted(self.rows)]


def row_basis(m: GF2Matrix) -> RowBasis:
    basis = RowBasis()
    for i, r in enumerate(m.data):
        basis.add(r, 1 << i)
    return basis


def solve(m: GF2Matrix, b: GF2Vector) -> Optional[GF2Vector]:
    """Find ``x`` with ``x^T m = b``, or None if ``b`` is not in the row space.

    Rows that are dependent on earlier rows get coefficient zero, so the
    answer is unique and deterministic.
    """
    if b.length != m.cols:
        raise DimensionError(f"target length {b.length} but matrix has {m.cols} columns")
    rest, tag = row_basis(m).reduce(b.bits)
    if rest:
        return None
    return GF2Vector(m.rows, tag)


def det_mod2(m: GF2Matrix) -> int:
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    return int(rank(m) == m.rows)


def row_space_contains(m: GF2Matrix, v: GF2Vector) -> bool:
    return solve(m, v) is not None


def row_spaces_equal(a: GF2Matrix, b: GF2Matrix) -> bool:
    if a.cols != b.cols:
        raise DimensionError(f"column counts {a.cols} and {b.cols}")
    ra = rank(a)
    return ra == rank(b) == rank(a.vstack(b))


@dataclass(frozen=True)
class Poly2:
    """Polynomial over GF(2); bit ``i`` of ``bits`` is the coefficient of x**i."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("negative coefficient mask")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> Poly2:
        return cls(sum(1 << i for i, c in enumerate(coeffs) if c & 1))

    @classmethod
    def x(cls) -> Poly2:
        return cls(0b10)

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeffs(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(max(self.bits.bit_length(), 1))]

    def __add__(self, other: Poly2) -> Poly2:
        return Poly2(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: Poly2) -> Poly2:
        a, b, acc = self.bits, other.bits, 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            b >>= 1
        return Poly2(acc)

    def __divmod__(self, other: Poly2) -> tuple[Poly2, Poly2]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r, d = self.bits, other.bits
        dd = d.bit_length()
        q = 0
        while r and r.bit_length() >= dd:
            shift = r.bit_length() - dd
            q ^= 1 << shift
            r ^= d << shift
        return Poly2(q), Poly2(r)

    def __mod__(self, other: Poly2) -> Poly2:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly2) -> Poly2:
        return divmod(self, other)[0]

    def __call__(self, t: Poly2) -> Poly2:
        """Compose: substitute ``t`` for x (Horner)."""
        acc = Poly2(0)
        for i in range(self.bits.bit_length() - 1, -1, -1):
            acc = acc * t + Poly2((self.bits >> i) & 1)
        return acc

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for i in iter_bits(self.bits):
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(reversed(terms))


def poly_gcd(p: Poly2, q: Poly2) -> Poly2:
    """Greatest common divisor by Euclid's algorithm.

    Over GF(2) every nonzero polynomial is monic, so the result needs no
    normalisation.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not q.is_zero():
        p, q = q, p % q
    return p


def poly_eval_shift(p: Poly2) -> Poly2:
    """Return p(1 + x).

    Expands each power (1+x)**i binomially; over GF(2) the coefficient of
    x**j survives iff j is a bit-submask of i (Lucas).
    """
    acc = 0
    for i in iter_bits(p.bits):
        # enumerate submasks j of i: C(i, j) is odd exactly for these
        j = i
        while True:
            acc ^= 1 << j
            if j == 0:
                break
            j = (j - 1) & i
    return Poly2(acc)


def chebyshev2(m: int) -> Poly2:
    """Binary Chebyshev polynomial: p0 = 1, p1 = x, p_m = x p_{m-1} + p_{m-2}."""
    if m < 0:
        raise ValueError("m must be non-negative")
    prev, cur = 1, 0b10
    if m == 0:
        return Poly2(prev)
    for _ in range(m - 1):
        prev, cur = cur, (cur << 1) ^ prev
    return Poly2(cur)
