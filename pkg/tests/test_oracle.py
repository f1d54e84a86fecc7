"""The exhaustive oracle against frozen tables, a live reference, and the harness."""

import itertools

import pytest

import helpers
import reference_tables as ref
import sepfam.counting
from sepfam import (
    CapacityError,
    brute_count_separating,
    brute_minimal_max_families,
    brute_minimal_size_profile,
    cross_validate,
    min_separating_size,
    separating_families,
)


def test_brute_counts_match_frozen_tables():
    for n, row in ref.SEPARATING_COUNTS.items():
        for k, want in row.items():
            assert brute_count_separating(n, k) == want, (n, k)
    for n, row in ref.SEPARATING_COUNTS_PROPER.items():
        for k, want in row.items():
            assert brute_count_separating(n, k, proper_only=True) == want, (n, k)


def test_brute_matches_reference_live():
    # independent re-derivation of the n <= 4 slice straight from definitions
    for n in (2, 3, 4):
        pool = helpers.naive_all_bipartitions(n)
        for k in range(len(pool) + 1):
            want = sum(
                1
                for combo in itertools.combinations(pool, k)
                if helpers.naive_is_separating(list(combo), n)
            )
            assert brute_count_separating(n, k) == want, (n, k)


def test_oracle_capacity():
    for bad in (1, 6):
        with pytest.raises(CapacityError):
            brute_count_separating(bad, 2)
    with pytest.raises(CapacityError):
        next(separating_families(6))
    with pytest.raises(ValueError):
        brute_count_separating(4, -1)
    assert brute_count_separating(4, 9) == 0  # larger than the pool, not an error


def test_separating_families_stream(ex):
    fams = list(separating_families(4, size=2))
    assert len(fams) == 3
    assert ex.fp in fams
    assert all(f.is_separating() and len(f) == 2 for f in fams)
    minimal = list(separating_families(4, minimal_only=True))
    assert len(minimal) == 19  # 3 of size 2 plus 16 of size 3
    assert all(f.is_minimal_separating() for f in minimal)
    proper3 = list(separating_families(4, size=3, proper_only=True))
    assert len(proper3) == 29


def test_brute_minimal_max_families(ex):
    fams = brute_minimal_max_families(4)
    assert len(fams) == 16
    assert ex.fq in fams
    assert ex.fp not in fams  # size 2, not n-1
    for f in fams:
        assert len(f) == 3
        assert f.is_minimal_separating()


def test_minimal_size_profile():
    for n, want in ref.MINIMAL_PROFILES.items():
        assert brute_minimal_size_profile(n) == want


def test_profile_support_within_bounds():
    for n in range(2, 6):
        prof = brute_minimal_size_profile(n)
        lo, hi = min_separating_size(n), n - 1
        assert all(lo <= s <= hi for s in prof)
        assert prof[hi] == n ** (n - 2)


def test_cross_validate_passes():
    rep = cross_validate(4, 6)
    assert rep.passed
    assert not rep.failures()
    d = rep.to_dict()
    assert d["passed"] is True and d["n_max"] == 4
    groups = rep.group_counts()
    for expected in (
        "arbitrary-count-vs-oracle",
        "proper-dual-vs-oracle",
        "tree-roundtrip",
        "enumeration-matches-oracle",
        "min-ground-count-proper",
        "stirling-first-sum",
    ):
        good, total = groups[expected]
        assert good == total > 0
    assert rep.summary_lines()[-1].startswith("result: PASS")


def test_cross_validate_arg_validation():
    with pytest.raises(ValueError):
        cross_validate(1, 4)
    with pytest.raises(ValueError):
        cross_validate(4, 0)


def test_cross_validate_reports_injected_fault(monkeypatch):
    # corrupt one Stirling entry; the harness must notice, not crash
    real = sepfam.counting.stirling1_unsigned

    def warped(k, i):
        if (k, i) == (4, 2):
            return real(k, i) + 1
        return real(k, i)

    monkeypatch.setattr(sepfam.counting, "stirling1_unsigned", warped)
    rep = cross_validate(4, 6)
    assert not rep.passed
    failing_groups = {c.name.split(" ", 1)[0] for c in rep.failures()}
    assert "stirling-first-sum" in failing_groups
    summary = "\n".join(rep.summary_lines())
    assert "FAIL stirling-first-sum" in summary
    assert summary.splitlines()[-1].startswith("result: FAIL")
