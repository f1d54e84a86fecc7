"""Characteristic 0/1 matrices of bipartition tuples.

Row i records which entries cut element i away from element 1, so the first
row is always zero and a tuple's entries form a separating family exactly
when all rows are distinct. Rows are stored as k-bit integers, bit j for
column j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Bipartition, BipartitionFamily, BipartitionTuple


def cut_vector(p: Bipartition) -> tuple[int, ...]:
    """Coordinate i is 1 when p cuts elements 1 and i; coordinate 1 is 0."""
    return tuple(p.coblock >> (i - 1) & 1 for i in range(1, p.n + 1))


@dataclass(frozen=True)
class CharMatrix:
    """An n x k 0/1 matrix with an all-zero first row."""

    n: int
    k: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"matrix needs n >= 1, got {self.n}")
        if self.k < 0:
            raise ValueError(f"matrix needs k >= 0, got {self.k}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << self.k):
                raise ValueError(f"row mask {r} does not fit {self.k} columns")
        if self.rows[0] != 0:
            raise ValueError("first row must be all zero")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> CharMatrix:
        """Build from explicit 0/1 row lists of equal length."""
        mat = [list(r) for r in rows]
        if not mat:
            raise ValueError("matrix needs at least one row")
        k = len(mat[0])
        packed = []
        for r in mat:
            if len(r) != k:
                raise ValueError("rows have unequal lengths")
            if any(bit not in (0, 1) for bit in r):
                raise ValueError("entries must be 0 or 1")
            packed.append(sum(bit << j for j, bit in enumerate(r)))
        return cls(len(mat), k, tuple(packed))

    @classmethod
    def encode(cls, t: BipartitionTuple) -> CharMatrix:
        """Column j is the cut vector of entry j."""
        rows = tuple(
            sum((e.coblock >> (i - 1) & 1) << j for j, e in enumerate(t.entries))
            for i in range(1, t.n + 1)
        )
        return cls(t.n, len(t.entries), rows)

    def decode(self) -> BipartitionTuple:
        """Read each column back as a bipartition; inverse of encode."""
        entries = tuple(
            Bipartition(self.n, sum((self.rows[i] >> j & 1) << i for i in range(self.n)))
            for j in range(self.k)
        )
        return BipartitionTuple(self.n, entries)

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.k)] for r in self.rows]

    def has_distinct_rows(self) -> bool:
        """Equivalent to the columns forming a separating family."""
        return len(set(self.rows)) == self.n

    def transpose_dual(self) -> CharMatrix:
        """Swap the roles of elements and entries.

        Defined when the first column is zero (the first entry is the
        one-block partition); the result is then a valid matrix again and
        the operation is an involution.
        """
        if self.k < 1 or any(r & 1 for r in self.rows):
            raise ValueError("transpose needs an all-zero first column")
        rows = tuple(
            sum((self.rows[i] >> j & 1) << i for i in range(self.n))
            for j in range(self.k)
        )
        return CharMatrix(self.k, self.n, rows)


def encode_family(f: BipartitionFamily) -> CharMatrix:
    """Encode a family's members in canonical order."""
    return CharMatrix.encode(BipartitionTuple.from_family(f))
