"""Dense bit-packed linear algebra over the two-element field.

Vectors are Python ints used as bitsets (bit i = coordinate i), so a row
operation is one XOR regardless of length.  Everything is deterministic:
elimination always pivots on the first nonzero column using the lowest
remaining row, kernel bases enumerate free columns in increasing order,
and solve() sets free variables to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Gf2Vector",
    "Gf2Matrix",
    "Gf2Span",
    "extend_to_basis",
]


def _low_bit(x: int) -> int:
    # index of the least significant set bit; x must be nonzero
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class Gf2Vector:
    """A vector in F2^length, coordinates packed into an int."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits 0x{self.bits:x} out of range for length {self.length}")

    @classmethod
    def from_support(cls, length: int, indices: Iterable[int]) -> "Gf2Vector":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise IndexError(f"coordinate {i} out of range for length {length}")
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "Gf2Vector":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(len(coeffs), bits)

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"coordinate {i} out of range for length {self.length}")
        return self.bits >> i & 1

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if self.bits >> i & 1)

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def is_zero(self) -> bool:
        return self.bits == 0

    def dot(self, other: "Gf2Vector") -> int:
        if self.length != other.length:
            raise ValueError(f"length mismatch {self.length} != {other.length}")
        return bin(self.bits & other.bits).count("1") & 1

    def to_coeffs(self) -> list[int]:
        return [self.bits >> i & 1 for i in range(self.length)]

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.length != other.length:
            raise ValueError(f"length mismatch {self.length} != {other.length}")
        return Gf2Vector(self.length, self.bits ^ other.bits)

    def __repr__(self) -> str:
        return f"Gf2Vector('{''.join(str(b) for b in self.to_coeffs())}')"


class Gf2Matrix:
    """A matrix over F2 stored as one packed int per row (bit j = column j)."""

    __slots__ = ("n_rows", "n_cols", "_rows")

    def __init__(self, n_rows: int, n_cols: int, rows: Sequence[int]) -> None:
        if len(rows) != n_rows:
            raise ValueError(f"expected {n_rows} rows, got {len(rows)}")
        for r in rows:
            if r < 0 or r >> n_cols:
                raise ValueError(f"row 0x{r:x} out of range for {n_cols} columns")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self._rows = tuple(rows)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "Gf2Matrix":
        return cls(n_rows, n_cols, [0] * n_rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Gf2Vector], n_cols: Optional[int] = None) -> "Gf2Matrix":
        if rows:
            n_cols = rows[0].length if n_cols is None else n_cols
            for v in rows:
                if v.length != n_cols:
                    raise ValueError("ragged rows")
        elif n_cols is None:
            raise ValueError("n_cols required for an empty row list")
        return cls(len(rows), n_cols, [v.bits for v in rows])

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], n_cols: Optional[int] = None) -> "Gf2Matrix":
        return cls.from_rows([Gf2Vector.from_coeffs(r) for r in entries], n_cols)

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.n_cols, self._rows[i])

    def rows(self) -> Iterator[Gf2Vector]:
        for r in self._rows:
            yield Gf2Vector(self.n_cols, r)

    def get(self, i: int, j: int) -> int:
        return self._rows[i] >> j & 1

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self._rows):
            while r:
                j = _low_bit(r)
                cols[j] |= 1 << i
                r &= r - 1
        return Gf2Matrix(self.n_cols, self.n_rows, cols)

    def apply(self, v: Gf2Vector) -> Gf2Vector:
        """Matrix-vector product; v has one coordinate per column."""
        if v.length != self.n_cols:
            raise ValueError(f"vector length {v.length} != {self.n_cols} columns")
        bits = 0
        for i, r in enumerate(self._rows):
            if bin(r & v.bits).count("1") & 1:
                bits |= 1 << i
        return Gf2Vector(self.n_rows, bits)

    def stack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.n_cols != other.n_cols:
            raise ValueError("column count mismatch")
        return Gf2Matrix(self.n_rows + other.n_rows, self.n_cols, self._rows + other._rows)

    def _rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form; returns (rows, pivot columns)."""
        rows = list(self._rows)
        pivots: list[int] = []
        r = 0
        for c in range(self.n_cols):
            pr = next((i for i in range(r, len(rows)) if rows[i] >> c & 1), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            for i in range(len(rows)):
                if i != r and rows[i] >> c & 1:
                    rows[i] ^= rows[r]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel_basis(self) -> list[Gf2Vector]:
        """Deterministic basis of {x : M x = 0}, one vector per free column."""
        rows, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.n_cols):
            if f in pivot_set:
                continue
            bits = 1 << f
            for r, p in enumerate(pivots):
                if rows[r] >> f & 1:
                    bits |= 1 << p
            basis.append(Gf2Vector(self.n_cols, bits))
        return basis

    def solve(self, b: Gf2Vector) -> Optional[Gf2Vector]:
        """One solution of M x = b (free variables zero), or None."""
        if b.length != self.n_rows:
            raise ValueError(f"rhs length {b.length} != {self.n_rows} rows")
        rows = list(self._rows)
        rhs = b.to_coeffs()
        pivots: list[int] = []
        r = 0
        for c in range(self.n_cols):
            pr = next((i for i in range(r, len(rows)) if rows[i] >> c & 1), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            rhs[r], rhs[pr] = rhs[pr], rhs[r]
            for i in range(len(rows)):
                if i != r and rows[i] >> c & 1:
                    rows[i] ^= rows[r]
                    rhs[i] ^= rhs[r]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        if any(rhs[i] and not rows[i] for i in range(len(rows))):
            return None
        bits = 0
        for i, p in enumerate(pivots):
            if rhs[i]:
                bits |= 1 << p
        return Gf2Vector(self.n_cols, bits)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Gf2Matrix)
                and (self.n_rows, self.n_cols, self._rows)
                == (other.n_rows, other.n_cols, other._rows))

    def __hash__(self) -> int:
        return hash((self.n_rows, self.n_cols, self._rows))

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.n_rows}x{self.n_cols})"


class Gf2Span:
    """Incrementally built subspace kept in reduced echelon form.

    add() returns whether the vector enlarged the span, so this doubles
    as a greedy independence filter; reduce() gives the canonical residue
    of a vector modulo the span.
    """

    def __init__(self, length: int) -> None:
        self.length = length
        self._pivot_rows: dict[int, int] = {}

    @property
    def dim(self) -> int:
        return len(self._pivot_rows)

    def _reduce_bits(self, bits: int) -> int:
        for p in sorted(self._pivot_rows):
            if bits >> p & 1:
                bits ^= self._pivot_rows[p]
        return bits

    def reduce(self, v: Gf2Vector) -> Gf2Vector:
        if v.length != self.length:
            raise ValueError(f"length mismatch {v.length} != {self.length}")
        return Gf2Vector(self.length, self._reduce_bits(v.bits))

    def contains(self, v: Gf2Vector) -> bool:
        return self.reduce(v).is_zero()

    def add(self, v: Gf2Vector) -> bool:
        bits = self.reduce(v).bits
        if bits == 0:
            return False
        p = _low_bit(bits)
        for q, row in self._pivot_rows.items():
            if row >> p & 1:
                self._pivot_rows[q] = row ^ bits
        self._pivot_rows[p] = bits
        return True

    def vectors(self) -> list[Gf2Vector]:
        return [Gf2Vector(self.length, self._pivot_rows[p]) for p in sorted(self._pivot_rows)]


def extend_to_basis(independent: Sequence[Gf2Vector],
                    spanning: Sequence[Gf2Vector]) -> list[Gf2Vector]:
    """Complete an independent family to a basis of span(spanning).

    Vectors are drawn greedily from spanning in list order.  Raises if the
    given family is dependent or not contained in span(spanning).
    """
    if not independent and not spanning:
        return []
    length = (independent[0] if independent else spanning[0]).length
    target = Gf2Span(length)
    for v in spanning:
        target.add(v)
    span = Gf2Span(length)
    basis = []
    for v in independent:
        if not target.contains(v):
            raise ValueError(f"{v!r} is not in the span of the spanning family")
        if not span.add(v):
            raise ValueError(f"{v!r} is dependent on the preceding vectors")
        basis.append(v)
    for v in spanning:
        if span.add(v):
            basis.append(v)
    if span.dim != target.dim:
        raise AssertionError("completion missed the target span")
    return basis
