"""Exact counts of separating families and the identities tying them together.

All arithmetic is exact integer arithmetic; the closed forms divide an
alternating sum by a factorial at the very end, and that division is checked
to leave no remainder. Counts for k outside the range where any family can
exist are 0 by convention; a ground set smaller than 2 is an error.
"""

from __future__ import annotations

from math import comb, factorial
from typing import NamedTuple

from .core import bipartition_count


class StirlingTable:
    """Triangular table of Stirling numbers, grown on demand.

    kind "second": ways to partition a k-set into i nonempty blocks.
    kind "first-unsigned": permutations of k elements with i cycles.
    Growth is not thread-safe; a finished table may be shared read-only.
    """

    def __init__(self, kind: str) -> None:
        if kind not in ("second", "first-unsigned"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self._rows: list[list[int]] = [[1]]

    @property
    def max_k(self) -> int:
        return len(self._rows) - 1

    def entry(self, k: int, i: int) -> int:
        if k < 0 or i < 0 or i > k:
            return 0
        while self.max_k < k:
            self._grow()
        return self._rows[k][i]

    def _grow(self) -> None:
        k = len(self._rows)
        prev = self._rows[-1]
        row = [0] * (k + 1)
        for i in range(1, k + 1):
            above = prev[i] if i < k else 0
            mult = i if self.kind == "second" else k - 1
            row[i] = mult * above + prev[i - 1]
        self._rows.append(row)


_SECOND = StirlingTable("second")
_FIRST = StirlingTable("first-unsigned")


def stirling2(k: int, i: int) -> int:
    """Partitions of a k-set into i nonempty blocks; 0 outside the triangle."""
    return _SECOND.entry(k, i)


def stirling1_unsigned(k: int, i: int) -> int:
    """Permutations of k elements with exactly i cycles; 0 outside the triangle."""
    return _FIRST.entry(k, i)


def surjective_sequences(k: int, i: int) -> int:
    """Length-k sequences over i symbols using every symbol at least once."""
    if i < 0:
        return 0
    return factorial(i) * stirling2(k, i)


def _require_ground(n: int) -> None:
    if n < 2:
        raise ValueError(f"counting needs a ground set with n >= 2 (got n={n})")


def is_forced_zero(n: int, k: int, proper: bool = False) -> bool:
    """True when no family of k distinct bipartitions can exist at all.

    That happens for k < 1 and for k larger than the pool of available
    bipartitions (2^(n-1), or one less for proper only); the count is 0
    there without consulting any formula.
    """
    _require_ground(n)
    return k < 1 or k > bipartition_count(n, proper=proper)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division: {num} is not a multiple of {den}")
    if q < 0:
        raise ArithmeticError(f"count came out negative ({q})")
    return q


def count_separating(n: int, k: int, proper: bool = False) -> int:
    """Separating families of k distinct bipartitions of {1..n}, exactly.

    With proper=True only two-block bipartitions may be used. The sum runs
    over the number of distinct rows a characteristic matrix can have.
    """
    if is_forced_zero(n, k, proper):
        return 0
    if proper:
        acc = sum(
            (-1) ** (k - i) * stirling1_unsigned(k + 1, i + 1) * comb((1 << i) - 1, n - 1)
            for i in range(1, k + 1)
        )
    else:
        acc = sum(
            (-1) ** (k - i) * stirling1_unsigned(k, i) * comb((1 << i) - 1, n - 1)
            for i in range(1, k + 1)
        )
    return _exact_div(factorial(n - 1) * acc, factorial(k))


def count_separating_dual(n: int, k: int, proper: bool = False) -> int:
    """The same counts by the transposed closed form.

    Sums over the ground-set side instead of the family side; division-free.
    Undefined at k = 1 with proper=False (that edge of the formula is wrong;
    use count_separating there).
    """
    _require_ground(n)
    if not proper and k == 1:
        raise ValueError("dual closed form is undefined for a single arbitrary bipartition")
    if is_forced_zero(n, k, proper):
        return 0
    total = 0
    for i in range(1, n):
        top = ((1 << i) - 1) if proper else (1 << i)
        total += (-1) ** (n - 1 - i) * stirling1_unsigned(n, i + 1) * comb(top, k)
    if total < 0:
        raise ArithmeticError(f"count came out negative ({total})")
    return total


class IdentityCheck(NamedTuple):
    """Outcome of evaluating both sides of an identity; truthy iff they agree."""

    ok: bool
    lhs: int
    rhs: int

    def __bool__(self) -> bool:
        return self.ok


def distinct_row_matrix_count(n: int, k: int) -> int:
    """n x k 0/1 matrices with zero first row and pairwise-distinct rows."""
    _require_ground(n)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    out = 1
    for j in range(1, n):
        out *= (1 << k) - j
        if out == 0:
            break
    return out


def check_matrix_count_identity(n: int, k: int) -> IdentityCheck:
    """Families resummed by distinct-member count vs the distinct-row matrix count."""
    _require_ground(n)
    if not 1 <= k <= bipartition_count(n):
        raise ValueError(f"k={k} outside 1..{bipartition_count(n)}")
    lhs = sum(surjective_sequences(k, i) * count_separating(n, i) for i in range(1, k + 1))
    rhs = distinct_row_matrix_count(n, k)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_trivial_split(n: int, k: int) -> IdentityCheck:
    """Proper counts at sizes k and k-1 must add up to the arbitrary count at k.

    Splitting the size-k families by whether they contain the one-block
    partition gives exactly that recurrence.
    """
    _require_ground(n)
    if not 2 <= k <= bipartition_count(n):
        raise ValueError(f"k={k} outside 2..{bipartition_count(n)}")
    lhs = count_separating(n, k, proper=True) + count_separating(n, k - 1, proper=True)
    rhs = count_separating(n, k)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_stirling_first_sum(k: int, i: int) -> IdentityCheck:
    """c(k+1, i+1) = sum over j of (k!/j!) c(j, i), in exact integers."""
    if k < 0 or i < 0:
        raise ValueError("indices must be nonnegative")
    lhs = stirling1_unsigned(k + 1, i + 1)
    kfact = factorial(k)
    rhs = sum((kfact // factorial(j)) * stirling1_unsigned(j, i) for j in range(i, k + 1))
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_transpose_symmetry(n: int, k: int) -> IdentityCheck:
    """Matrices with zero first row and column, counted from either side."""
    _require_ground(n)
    if not 2 <= k <= bipartition_count(n):
        raise ValueError(f"k={k} outside 2..{bipartition_count(n)}")
    lhs = count_separating(n, k - 1, proper=True) * factorial(k - 1)
    rhs = count_separating(k, n - 1, proper=True) * factorial(n - 1)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def ceil_log2(x: int) -> int:
    """Smallest m with 2^m >= x, for x >= 1."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    return (x - 1).bit_length()


def min_separating_size(n: int) -> int:
    """Smallest size a separating family over {1..n} can have."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return ceil_log2(n)


def count_min_size_families(n: int) -> int:
    """Number of separating families of that smallest size.

    At the minimum size every separating family is automatically minimal
    and contains no one-block member, so one count serves all three reads.
    """
    _require_ground(n)
    m = min_separating_size(n)
    return (factorial(n - 1) // factorial(m)) * comb((1 << m) - 1, n - 1)


def min_ground_size(k: int, proper: bool = False) -> int:
    """Smallest n admitting a separating family of k bipartitions of {1..n}."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return ceil_log2(k + 1 if proper else k) + 1


def count_min_ground_families(k: int, proper: bool = False) -> int:
    """Separating k-families over that smallest ground set.

    The arbitrary-bipartition count is defined for k >= 2 (a lone
    bipartition only separates a 2-set and the closed form starts at 2).
    """
    if proper:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        m = ceil_log2(k + 1)
        return comb((1 << m) - 1, k)
    if k < 2:
        raise ValueError(f"k must be >= 2 for the arbitrary count, got {k}")
    m = ceil_log2(k)
    return comb(1 << m, k)
