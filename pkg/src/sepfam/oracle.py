"""Exhaustive ground truth on small ground sets, and the cross-check harness.

Everything here works straight from the definitions: scan subsets of the
bipartition pool and test pair coverage. Each pool member carries a bitmask
of the element pairs it cuts, so a family separates exactly when the OR of
its masks covers all C(n,2) pair bits. Scans are capped at n <= 5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from . import counting, tree
from .core import (
    BipartitionFamily,
    CapacityError,
    GroundSet,
    all_bipartitions,
    bipartition_count,
)

ORACLE_MAX_N = 5


def _require_oracle_n(n: int) -> None:
    if not 2 <= n <= ORACLE_MAX_N:
        raise CapacityError(f"brute-force scans support 2 <= n <= {ORACLE_MAX_N} (got n={n})")


def _cut_masks(n: int, proper_only: bool):
    pool = all_bipartitions(n, proper_only)
    pairs = list(GroundSet(n).pairs())
    masks = []
    for b in pool:
        m = 0
        for idx, (i, j) in enumerate(pairs):
            if b.cuts(i, j):
                m |= 1 << idx
        masks.append(m)
    return pool, masks, (1 << len(pairs)) - 1


def _is_minimal(masks: list[int], full: int) -> bool:
    # prefix/suffix ORs; a member is redundant iff the others still cover full
    m = len(masks)
    prefix = [0] * (m + 1)
    suffix = [0] * (m + 1)
    for i in range(m):
        prefix[i + 1] = prefix[i] | masks[i]
    for i in reversed(range(m)):
        suffix[i] = suffix[i + 1] | masks[i]
    return all(prefix[i] | suffix[i + 1] != full for i in range(m))


def brute_count_separating(n: int, k: int, proper_only: bool = False) -> int:
    """k-subsets of the bipartition pool whose members cut every pair."""
    _require_oracle_n(n)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _, masks, full = _cut_masks(n, proper_only)
    if k > len(masks):
        return 0
    count = 0
    for combo in itertools.combinations(masks, k):
        acc = 0
        for m in combo:
            acc |= m
        if acc == full:
            count += 1
    return count


def separating_families(
    n: int,
    size: int | None = None,
    proper_only: bool = False,
    minimal_only: bool = False,
) -> Iterator[BipartitionFamily]:
    """Yield separating families in canonical order; size=None means every size."""
    _require_oracle_n(n)
    pool, masks, full = _cut_masks(n, proper_only)
    sizes = range(len(pool) + 1) if size is None else [size]
    for k in sizes:
        if k < 0 or k > len(pool):
            continue
        for idxs in itertools.combinations(range(len(pool)), k):
            sel = [masks[i] for i in idxs]
            acc = 0
            for m in sel:
                acc |= m
            if acc != full:
                continue
            if minimal_only and not _is_minimal(sel, full):
                continue
            yield BipartitionFamily(n, tuple(pool[i] for i in idxs))


def brute_minimal_max_families(n: int) -> list[BipartitionFamily]:
    """All minimal separating families of the maximum size n-1, by scan."""
    return list(separating_families(n, size=n - 1, minimal_only=True))


def brute_minimal_size_profile(n: int) -> dict[int, int]:
    """size -> number of minimal separating families of that size, all sizes scanned."""
    _require_oracle_n(n)
    _, masks, full = _cut_masks(n, False)
    profile: dict[int, int] = {}
    for k in range(len(masks) + 1):
        c = 0
        for combo in itertools.combinations(masks, k):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full and _is_minimal(list(combo), full):
                c += 1
        if c:
            profile[k] = c
    return profile


def _brute_min_ground(k: int, proper: bool) -> tuple[int, int]:
    # smallest n admitting a separating k-family, with the family count there;
    # n=1 works for a lone arbitrary bipartition (no pairs to cut)
    if not proper and k == 1:
        return 1, 1
    for n in range(2, ORACLE_MAX_N + 1):
        c = brute_count_separating(n, k, proper_only=proper)
        if c:
            return n, c
    raise CapacityError(f"min ground size for k={k} lies beyond the oracle range")


@dataclass(frozen=True)
class CheckResult:
    """One named comparison; lhs/rhs kept as strings for reporting."""

    name: str
    ok: bool
    lhs: str
    rhs: str


def _sides(check) -> tuple[int, int]:
    return check.lhs, check.rhs


@dataclass
class ValidationReport:
    """Outcome of a cross_validate run."""

    n_max: int
    k_max: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, ok: bool, lhs, rhs) -> None:
        self.checks.append(CheckResult(name, bool(ok), str(lhs), str(rhs)))

    def group_counts(self) -> dict[str, tuple[int, int]]:
        """group name -> (passed, total), grouped by the first token of the name."""
        out: dict[str, tuple[int, int]] = {}
        for c in self.checks:
            key = c.name.split(" ", 1)[0]
            good, total = out.get(key, (0, 0))
            out[key] = (good + (1 if c.ok else 0), total + 1)
        return out

    def summary_lines(self) -> list[str]:
        lines = [f"verify: n_max={self.n_max} k_max={self.k_max}"]
        for key, (good, total) in self.group_counts().items():
            lines.append(f"{key}: {good}/{total} ok")
        for c in self.failures():
            lines.append(f"FAIL {c.name}: lhs={c.lhs} rhs={c.rhs}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {verdict} ({len(self.checks)} checks, {len(self.failures())} failed)")
        return lines

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "k_max": self.k_max,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "ok": c.ok, "lhs": c.lhs, "rhs": c.rhs}
                for c in self.checks
            ],
        }


def cross_validate(n_max: int, k_max: int) -> ValidationReport:
    """Run every formula, identity, and bijection check at desk scale.

    Oracle comparisons stop at n = 5 and tree sweeps at n = 6 no matter how
    large n_max is; formula-vs-formula and identity checks use the full
    requested range. Failures are recorded in the report, never raised.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    rep = ValidationReport(n_max, k_max)
    oracle_n = min(n_max, ORACLE_MAX_N)
    tree_n = min(n_max, 6)

    def compare(name: str, make) -> None:
        # make() -> (lhs, rhs); a formula blowing up is itself a failure
        try:
            lhs, rhs = make()
        except (ArithmeticError, ValueError) as exc:
            rep.add(name, False, f"error: {exc}", "unavailable")
            return
        rep.add(name, lhs == rhs, lhs, rhs)

    for n in range(2, oracle_n + 1):
        pool = bipartition_count(n)
        for k in range(1, min(k_max, pool) + 1):
            brute_a = brute_count_separating(n, k)
            brute_p = brute_count_separating(n, k, proper_only=True)
            compare(
                f"arbitrary-count-vs-oracle n={n} k={k}",
                lambda: (counting.count_separating(n, k), brute_a),
            )
            compare(
                f"proper-count-vs-oracle n={n} k={k}",
                lambda: (counting.count_separating(n, k, proper=True), brute_p),
            )
            if k >= 2:
                compare(
                    f"arbitrary-dual-vs-oracle n={n} k={k}",
                    lambda: (counting.count_separating_dual(n, k), brute_a),
                )
            compare(
                f"proper-dual-vs-oracle n={n} k={k}",
                lambda: (counting.count_separating_dual(n, k, proper=True), brute_p),
            )

    for n in range(2, n_max + 1):
        pool = bipartition_count(n)
        for k in range(2, min(k_max, pool) + 1):
            compare(
                f"closed-forms-agree-arbitrary n={n} k={k}",
                lambda: (counting.count_separating(n, k), counting.count_separating_dual(n, k)),
            )
        for k in range(1, min(k_max, pool - 1) + 1):
            compare(
                f"closed-forms-agree-proper n={n} k={k}",
                lambda: (
                    counting.count_separating(n, k, proper=True),
                    counting.count_separating_dual(n, k, proper=True),
                ),
            )
        for k in range(1, min(k_max, pool) + 1):
            compare(
                f"matrix-count-identity n={n} k={k}",
                lambda: _sides(counting.check_matrix_count_identity(n, k)),
            )
        for k in range(2, min(k_max, pool) + 1):
            compare(
                f"trivial-split n={n} k={k}",
                lambda: _sides(counting.check_trivial_split(n, k)),
            )
            compare(
                f"transpose-symmetry n={n} k={k}",
                lambda: _sides(counting.check_transpose_symmetry(n, k)),
            )

    for k in range(0, k_max + 1):
        for i in range(0, k + 1):
            compare(
                f"stirling-first-sum k={k} i={i}",
                lambda: _sides(counting.check_stirling_first_sum(k, i)),
            )

    for n in range(2, tree_n + 1):
        total = good_code = good_tree = good_min = 0
        seen = set()
        for seq in itertools.product(range(1, n + 1), repeat=n - 2):
            t = tree.prufer_decode(n, seq)
            total += 1
            if tree.prufer_encode(t) == seq:
                good_code += 1
            fam = tree.edge_cut_family(t)
            seen.add(fam)
            if tree.unique_cut_graph(fam) == t:
                good_tree += 1
            if len(fam) == n - 1 and fam.is_minimal_separating():
                good_min += 1
        rep.add(f"prufer-roundtrip n={n}", good_code == total, good_code, total)
        rep.add(f"tree-roundtrip n={n}", good_tree == total, good_tree, total)
        rep.add(f"edge-cut-minimal n={n}", good_min == total, good_min, total)
        cayley = n ** (n - 2)
        rep.add(f"cayley-count n={n}", len(seen) == cayley, len(seen), cayley)

    for n in range(2, oracle_n + 1):
        brute_set = set(brute_minimal_max_families(n))
        enum_set = set(tree.minimal_max_families(n))
        rep.add(
            f"enumeration-matches-oracle n={n}",
            brute_set == enum_set,
            len(enum_set),
            len(brute_set),
        )
        prof = brute_minimal_size_profile(n)
        lo, hi = counting.min_separating_size(n), n - 1
        rep.add(
            f"minimal-size-support n={n}",
            all(lo <= s <= hi for s in prof),
            sorted(prof),
            [lo, hi],
        )
        formula = counting.count_min_size_families(n)
        rep.add(f"min-size-count n={n}", formula == prof.get(lo, 0), formula, prof.get(lo, 0))

    for k in range(1, min(k_max, 7) + 1):
        for proper in (False, True):
            label = "proper" if proper else "arbitrary"
            got_n, got_c = _brute_min_ground(k, proper)
            want_n = counting.min_ground_size(k, proper)
            rep.add(f"min-ground-size-{label} k={k}", got_n == want_n, want_n, got_n)
            if proper or k >= 2:
                want_c = counting.count_min_ground_families(k, proper)
                rep.add(f"min-ground-count-{label} k={k}", got_c == want_c, want_c, got_c)

    return rep
