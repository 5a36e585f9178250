import pytest

from multiramsey.errors import DomainError
from multiramsey.formulas import (
    COR_2_4,
    COR_2_5,
    M2_CASE,
    PART_I,
    PART_II,
    PART_III_INTERVAL,
    PART_IV,
    THM_2_6,
    THM_2_7,
    BoundResult,
    ceil_div,
    chromatic_lower_bound,
    exact_star,
    f_formula,
    maxdeg_lower_bound,
    star_bounds,
)


def test_ceil_div():
    assert ceil_div(7, 2) == 4
    assert ceil_div(6, 2) == 3
    assert ceil_div(1, 5) == 1


# ---------------------------------------------------------------------------
# chromatic_lower_bound
# ---------------------------------------------------------------------------


def test_chromatic_lower_bound_values():
    assert chromatic_lower_bound(3, 2, 5) == 2
    assert chromatic_lower_bound(4, 3, 5) == 3
    assert chromatic_lower_bound(6, 3, 4) == 2


def test_chromatic_lower_bound_domain():
    with pytest.raises(DomainError):
        chromatic_lower_bound(3, 4, 5)
    with pytest.raises(DomainError):
        chromatic_lower_bound(4, 1, 5)
    with pytest.raises(DomainError):
        chromatic_lower_bound(4, 2, 1)


# ---------------------------------------------------------------------------
# maxdeg_lower_bound
# ---------------------------------------------------------------------------


def test_maxdeg_lower_bound_values():
    assert maxdeg_lower_bound(4, 3, 3) == 3
    assert maxdeg_lower_bound(5, 2, 5) == 2
    assert maxdeg_lower_bound(5, 4, 2) == 2
    # the bound is attained by the exact star value for K_{1,2}
    assert exact_star(5, 4, 2).exact == 2


def test_maxdeg_lower_bound_domain():
    with pytest.raises(DomainError):
        maxdeg_lower_bound(3, 4, 2)
    with pytest.raises(DomainError):
        maxdeg_lower_bound(4, 3, 0)


# ---------------------------------------------------------------------------
# star_bounds
# ---------------------------------------------------------------------------


def test_star_bounds_values():
    assert star_bounds(6, 4, 7) == BoundResult(lower=7, upper=7, provenance=("Thm 2.3",))
    r = star_bounds(5, 4, 5)
    assert (r.lower, r.upper) == (5, 7)
    r = star_bounds(4, 3, 3)
    assert (r.lower, r.upper) == (3, 3)


def test_star_bounds_ordered_everywhere():
    for j in range(2, 30):
        for m in range(2, j + 1):
            for n in range(2, 30):
                r = star_bounds(j, m, n)
                assert 1 <= r.lower <= r.upper


# ---------------------------------------------------------------------------
# exact_star
# ---------------------------------------------------------------------------


def test_exact_star_m2():
    assert exact_star(5, 2, 9).exact == 3
    assert exact_star(5, 2, 9).provenance == (M2_CASE,)
    # j = 2 reduces to the even diagonal value n
    for n in range(2, 12):
        r = exact_star(2, 2, n)
        assert r.exact == n
        assert r.provenance == (M2_CASE, THM_2_6)


def test_exact_star_examples():
    r = exact_star(4, 3, 3)
    assert r.exact == 3
    assert r.provenance == (THM_2_7, COR_2_5)
    r = exact_star(4, 4, 4)
    assert r.exact == 5
    assert r.provenance == (THM_2_6,)
    r = exact_star(3, 3, 2)
    assert r.exact == 2
    assert r.provenance == (THM_2_7, THM_2_6)
    r = exact_star(5, 4, 3)
    assert r.exact == 3
    assert r.provenance == (COR_2_4,)


def test_exact_star_no_case():
    # j = 7, m = 4: 7 mod 3 = 1, not diagonal, not m = 3
    r = exact_star(7, 4, 5)
    assert r.exact is None
    assert (r.lower, r.upper) == (3, 4)


def test_exact_star_within_bounds_when_exact():
    for j in range(2, 25):
        for m in range(2, min(j, 8) + 1):
            for n in range(2, 25):
                r = exact_star(j, m, n)
                if r.exact is not None:
                    assert r.lower <= r.exact <= r.upper


def test_thm27_equals_cor25_for_even_j():
    # for m = 3 and even j the two closed forms coincide
    for j in range(4, 41, 2):
        for n in range(2, 201):
            a = (n - 1) // (ceil_div(j, 2) - 1) + 1
            b = 2 * (n - 1) // (j - 2) + 1
            assert a == b
            r = exact_star(j, 3, n)
            assert r.exact == a
            assert THM_2_7 in r.provenance and COR_2_5 in r.provenance


def test_exact_star_domain():
    with pytest.raises(DomainError):
        exact_star(3, 4, 5)
    with pytest.raises(DomainError):
        exact_star(4, 1, 5)
    with pytest.raises(DomainError):
        exact_star(4, 3, 1)


# ---------------------------------------------------------------------------
# f_formula
# ---------------------------------------------------------------------------


def test_f_values():
    assert f_formula(1, 4, 3).exact == 2
    assert f_formula(2, 4, 4).exact == 4
    assert f_formula(1, 5, 4).exact == 3
    assert f_formula(1, 3, 3).exact == 1
    assert f_formula(2, 3, 3).exact == 2
    assert f_formula(1, 5, 5).exact == 3
    assert f_formula(1, 9, 9).exact == 8 - ceil_div(8, 14)


def test_f_provenance():
    assert PART_I in f_formula(2, 6, 3).provenance
    assert PART_II in f_formula(2, 4, 4).provenance
    assert PART_IV in f_formula(3, 5, 4).provenance
    # the (1, 7, 5) interval collapses and part-iv applies too; both agree on 5
    r = f_formula(1, 7, 5)
    assert r.exact == 5
    assert PART_IV in r.provenance and PART_III_INTERVAL in r.provenance


def test_f_overlap_part_i_part_ii():
    # m = j = 3 is covered by two cases; the dispatcher must see them agree
    for t in range(1, 30):
        r = f_formula(t, 3, 3)
        assert r.exact == t
        assert PART_I in r.provenance and PART_II in r.provenance


def test_f_interval_case():
    r = f_formula(2, 7, 4)
    assert r.exact is None
    assert (r.lo, r.hi) == (8, 9)


def test_f_interval_well_ordered_sweep():
    for j in range(3, 26):
        for m in range(3, j + 1):
            for t in range(1, 51):
                r = f_formula(t, j, m)
                assert 0 <= r.lo <= r.hi <= (j - 1) * t
                if r.exact is not None:
                    assert r.lo <= r.exact <= r.hi


def test_f_domain():
    with pytest.raises(DomainError):
        f_formula(1, 4, 2)
    with pytest.raises(DomainError):
        f_formula(0, 4, 3)
    with pytest.raises(DomainError):
        f_formula(1, 3, 4)


# ---------------------------------------------------------------------------
# integer arithmetic stays exact at the domain corners
# ---------------------------------------------------------------------------


def test_large_arguments_fit_in_64_bits():
    big = 10**6
    limit = 2**63
    r = exact_star(big, big, big)
    assert r.exact is not None and 0 < r.exact < limit
    assert 2 * (big - 1) * (big - 1) < limit  # largest intermediate product
    r = f_formula(50, big, big)
    assert r.exact is not None and 0 < r.exact < limit
    assert big * 50 * (big - 2) < limit
    assert 0 < chromatic_lower_bound(big, big, big) < limit
    assert 0 < maxdeg_lower_bound(big, big, big) < limit
    b = star_bounds(big, 2, big)
    assert 0 < b.lower <= b.upper < limit
