"""Ground sets, canonical bipartitions, and the separating-family predicates.

A bipartition of {1..n} is a partition into at most two blocks. It is keyed
by its coblock, the block that does not contain element 1, stored as a
bitmask in which bit i-1 stands for element i. The empty coblock encodes the
one-block partition of the whole set. Everything here is immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

FULL_ENUM_MAX_N = 24


class CapacityError(ValueError):
    """An enumeration request exceeds the supported problem size."""


@dataclass(frozen=True)
class GroundSet:
    """The element set {1..n}."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ground set needs n >= 1, got {self.n}")

    def elements(self) -> range:
        return range(1, self.n + 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All unordered element pairs (i, j) with i < j."""
        return itertools.combinations(self.elements(), 2)


@dataclass(frozen=True, order=True)
class Bipartition:
    """A partition of {1..n} into at most two blocks, keyed by its coblock mask."""

    n: int
    coblock: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"bipartition needs n >= 1, got {self.n}")
        if not 0 <= self.coblock < (1 << self.n):
            raise ValueError(f"coblock mask {self.coblock} does not fit a {self.n}-element set")
        if self.coblock & 1:
            raise ValueError("element 1 cannot be in the coblock")

    @classmethod
    def from_coblock(cls, n: int, members: Iterable[int]) -> Bipartition:
        """Build from the elements of the block avoiding element 1."""
        mask = 0
        for x in members:
            if not 2 <= x <= n:
                raise ValueError(f"coblock element {x} outside {{2..{n}}}")
            mask |= 1 << (x - 1)
        return cls(n, mask)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> Bipartition:
        """Build from explicit blocks, which must partition {1..n}."""
        mat = [tuple(b) for b in blocks]
        if not 1 <= len(mat) <= 2:
            raise ValueError(f"a bipartition has one or two blocks, got {len(mat)}")
        seen: set[int] = set()
        for block in mat:
            if not block:
                raise ValueError("blocks must be nonempty")
            for x in block:
                if x in seen:
                    raise ValueError(f"element {x} appears twice")
                seen.add(x)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks must partition {{1..{n}}}")
        if len(mat) == 1:
            return cls(n, 0)
        co = mat[1] if 1 in mat[0] else mat[0]
        return cls.from_coblock(n, co)

    @property
    def is_proper(self) -> bool:
        """True when there really are two blocks."""
        return self.coblock != 0

    def coblock_members(self) -> tuple[int, ...]:
        return tuple(i for i in range(2, self.n + 1) if self.coblock >> (i - 1) & 1)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """The blocks, the one containing element 1 first."""
        first = tuple(i for i in range(1, self.n + 1) if not self.coblock >> (i - 1) & 1)
        co = self.coblock_members()
        return (first,) if not co else (first, co)

    def cuts(self, i: int, j: int) -> bool:
        """True when elements i and j land in different blocks."""
        for x in (i, j):
            if not 1 <= x <= self.n:
                raise ValueError(f"element {x} outside {{1..{self.n}}}")
        return bool((self.coblock >> (i - 1) ^ self.coblock >> (j - 1)) & 1)


@dataclass(frozen=True)
class BipartitionFamily:
    """Distinct bipartitions over one ground set, kept sorted by coblock mask."""

    n: int
    members: tuple[Bipartition, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"family needs n >= 1, got {self.n}")
        for b in self.members:
            if b.n != self.n:
                raise ValueError(f"member over n={b.n} in a family over n={self.n}")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def without(self, member: Bipartition) -> BipartitionFamily:
        """The family with one member removed."""
        if member not in self.members:
            raise ValueError("not a member of this family")
        return BipartitionFamily(self.n, tuple(b for b in self.members if b != member))

    def is_separating(self) -> bool:
        """Every element pair is cut by at least one member."""
        return all(
            any(b.cuts(i, j) for b in self.members)
            for i, j in GroundSet(self.n).pairs()
        )

    def is_minimal_separating(self) -> bool:
        """Separating, and dropping any one member stops it separating."""
        if not self.is_separating():
            return False
        # separation is monotone, so single-member drops suffice
        return all(not self.without(b).is_separating() for b in self.members)


@dataclass(frozen=True)
class BipartitionTuple:
    """Ordered bipartitions over one ground set; repeats allowed."""

    n: int
    entries: tuple[Bipartition, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"tuple needs n >= 1, got {self.n}")
        object.__setattr__(self, "entries", tuple(self.entries))
        for b in self.entries:
            if b.n != self.n:
                raise ValueError(f"entry over n={b.n} in a tuple over n={self.n}")

    @classmethod
    def from_family(cls, family: BipartitionFamily) -> BipartitionTuple:
        """The family's members in canonical (coblock mask) order."""
        return cls(family.n, family.members)

    def to_family(self) -> BipartitionFamily:
        """Forget order and repeats."""
        return BipartitionFamily(self.n, self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(self.entries)


def bipartition_count(n: int, proper: bool = False) -> int:
    """Number of bipartitions of {1..n}: 2^(n-1), one less for proper only."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 1 << (n - 1)
    return total - 1 if proper else total


def all_bipartitions(n: int, proper_only: bool = False) -> list[Bipartition]:
    """Every bipartition of {1..n} in increasing coblock-mask order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > FULL_ENUM_MAX_N:
        raise CapacityError(f"full enumeration is capped at n <= {FULL_ENUM_MAX_N} (got n={n})")
    start = 1 if proper_only else 0
    return [Bipartition(n, c << 1) for c in range(start, 1 << (n - 1))]
