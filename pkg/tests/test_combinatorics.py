"""Exact combinatorics: perfectness, closed-form counts, lower bounds."""
from __future__ import annotations

import math

import pytest

from waringvec.combinatorics import (CaseSpec, binary_identifiable, is_perfect,
                                     pair_lower_bound, veronese_count)
from waringvec.tables import load_table


def test_perfectness_known_cases():
    assert is_perfect(2, (3, 3, 4)) == 7
    assert is_perfect(2, (4, 5)) == 9
    assert is_perfect(3, (3, 3, 3)) == 10
    assert is_perfect(2, (4,)) == 5
    assert is_perfect(2, (3, 4)) is None          # N=25, r+n=4
    assert is_perfect(1, (2, 5)) == 3
    assert is_perfect(2, (2, 3, 3, 3)) == 6


def test_perfectness_matches_registry():
    for row in load_table():
        assert is_perfect(row.n, row.degrees) == row.k


def test_consecutive_pairs_parity_exhaustive():
    # (a, a+1) ternary pairs: perfect iff a is even, with k = (a+2)^2 / 4
    for a in range(2, 21):
        k = is_perfect(2, (a, a + 1))
        if a % 2 == 0:
            assert k == (a + 2) ** 2 // 4
        else:
            assert k is None


def test_case_spec_normalizes_and_validates():
    case = CaseSpec(2, (4, 3, 3))
    assert case.degrees == (3, 3, 4)
    assert case.r == 3 and case.num_vars == 3
    assert case.N == 10 + 10 + 15 and case.k == 7 and case.perfect
    with pytest.raises(ValueError):
        CaseSpec(2, ())
    with pytest.raises(ValueError):
        CaseSpec(2, (1, 3))
    with pytest.raises(ValueError):
        CaseSpec(0, (2, 2))


def test_pair_lower_bound_values():
    assert pair_lower_bound(1) == 1
    assert pair_lower_bound(2) == 3
    assert pair_lower_bound(3) == 8
    with pytest.raises(ValueError):
        pair_lower_bound(0)


def test_pair_cases_are_perfect_with_square_rank():
    for t in range(1, 8):
        assert is_perfect(2, (2 * t, 2 * t + 1)) == (t + 1) ** 2


def test_veronese_count_structure():
    # the derived quantities obey their defining relations exactly
    for d, n in [(2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (5, 2), (6, 2)]:
        vc = veronese_count(d, n)
        s = math.comb(d + n, n) - n
        assert vc.forms == s == vc.k
        assert vc.count == math.comb(d ** n, s)
        assert is_perfect(n, (d,) * s) == s


def test_veronese_count_known_values():
    assert veronese_count(2, 3).count == 8
    assert veronese_count(3, 2).count == 9
    assert veronese_count(2, 4).count == 4368
    assert veronese_count(4, 2).count == 560
    assert veronese_count(3, 3).count == 8436285
    assert veronese_count(5, 2).count == 177100
    assert veronese_count(6, 2).count == 254186856


def test_veronese_count_rejects_bad_input():
    with pytest.raises(ValueError):
        veronese_count(1, 2)
    with pytest.raises(ValueError):
        veronese_count(2, 0)


def test_binary_identifiability():
    assert binary_identifiable((2, 2))          # k=2 <= 3
    assert binary_identifiable((2, 5))          # k=3 = a1+1, edge
    assert binary_identifiable((3, 4))          # k=3 <= 4
    assert not binary_identifiable((2, 3))      # not perfect (N=7, r+n=3)
    assert not binary_identifiable((2, 2, 6, 6))  # perfect, k=4 > a1+1=3
