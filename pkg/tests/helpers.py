"""Definition-level reference implementations used to check the library.

Everything here works on frozensets of frozensets with no bitmasks and no
code shared with the package, so agreement between the two is meaningful.
Minimality is checked against the raw definition (no proper subfamily
separates), not the single-removal shortcut the library uses.
"""

import itertools


def to_naive(b):
    """Library bipartition -> frozenset of its blocks."""
    return frozenset(frozenset(block) for block in b.blocks())


def naive_all_bipartitions(n, proper_only=False):
    base = frozenset(range(1, n + 1))
    out = [] if proper_only else [frozenset([base])]
    rest = sorted(base - {1})
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            a = frozenset({1, *combo})
            b = base - a
            if b:
                out.append(frozenset([a, b]))
    return out


def _block_of(p, x):
    for block in p:
        if x in block:
            return block
    raise AssertionError(f"{x} not covered")


def naive_cuts(p, i, j):
    return _block_of(p, i) is not _block_of(p, j)


def naive_is_separating(fam, n):
    return all(
        any(naive_cuts(p, i, j) for p in fam)
        for i, j in itertools.combinations(range(1, n + 1), 2)
    )


def naive_is_minimal(fam, n):
    if not naive_is_separating(fam, n):
        return False
    members = list(fam)
    for r in range(len(members)):
        for sub in itertools.combinations(members, r):
            if naive_is_separating(list(sub), n):
                return False
    return True
