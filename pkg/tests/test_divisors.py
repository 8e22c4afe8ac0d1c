import pytest
from hypothesis import given, settings, strategies as st

from dyndeg.divisors import Case, I_set, build_profile, check_rho, classify
from dyndeg.errors import UnknownDivisor, UnsupportedQ

Q_RANGE = st.integers(min_value=3, max_value=200)


def test_classification():
    assert classify(7) == Case.ODD_PRIME
    assert classify(45) == Case.ODD
    assert classify(30) == Case.TWICE_ODD
    assert classify(60) == Case.DIVISIBLE_BY_4
    with pytest.raises(UnsupportedQ):
        build_profile(2)


def test_q45_profile():
    prof = build_profile(45)
    assert prof.proper_divisors == (3, 5, 9, 15)
    assert prof.S[1] == [1, 2, 4, 7, 8, 11, 13, 14, 16, 17, 19, 22]
    assert prof.S[3] == [3, 6, 12, 21]
    assert prof.S[5] == [5, 10, 20]
    assert prof.S[9] == [9, 18]
    assert prof.S[15] == [15]
    assert {r: prof.kappa[r] for r in prof.proper_divisors} == {3: 4, 5: 3, 9: 2, 15: 1}
    assert prof.kappa_1 == 12
    assert prof.mu == {3: 8, 5: 5, 9: 3, 15: 2}


def test_q45_I_sets():
    prof = build_profile(45)
    assert I_set(prof, 9) == {3, 9}
    assert I_set(prof, 15) == {3, 5, 15}
    assert I_set(prof, 3) == {3}
    with pytest.raises(UnknownDivisor):
        I_set(prof, 7)


def test_q60_profile():
    prof = build_profile(60)
    assert prof.S[1] == [1, 7, 11, 13, 17, 19, 23, 29]
    assert prof.S[4] == [4, 8, 16, 28]
    assert prof.S[12] == [12, 24]
    assert prof.r_list == (2, 6, 10)
    assert prof.rho_list == (3, 5)


def test_q30_counts():
    prof = build_profile(30)
    assert prof.kappa_1 == 4
    assert (prof.kappa[3], prof.mu[3], prof.kappa[5], prof.mu[5]) == (2, 3, 1, 2)
    assert (prof.p + 1) // 2 == 8


def test_check_rho():
    assert check_rho(60, 3) == 5
    with pytest.raises(UnknownDivisor):
        check_rho(60, 7)


@settings(max_examples=80, deadline=None)
@given(Q_RANGE)
def test_S_partition(q):
    prof = build_profile(q)
    if q % 2:
        indices = range(1, prof.p + 1)
    else:
        indices = range(1, prof.p)
    seen = []
    for g, members in prof.S.items():
        seen.extend(j for j in members if j in indices)
    assert sorted(seen) == list(indices)
    if prof.case in (Case.ODD, Case.ODD_PRIME):
        assert sum(prof.kappa[r] for r in prof.proper_divisors) + prof.kappa_1 == (q - 1) // 2


@settings(max_examples=80, deadline=None)
@given(Q_RANGE)
def test_I_sets_are_divisor_closures(q):
    prof = build_profile(q)
    for r in prof.tracked:
        assert I_set(prof, r) == {s for s in prof.tracked if r % s == 0}


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=50).map(lambda k: 4 * k + 2))
def test_twice_odd_mirror(q):
    prof = build_profile(q)
    for r in (1,) + prof.proper_divisors:
        assert prof.S[2 * r] == sorted(prof.p - j for j in prof.S[r])
        assert prof.kappa[r] == prof.kappa[2 * r]


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=2, max_value=50).map(lambda k: 4 * k))
def test_check_is_involution(q):
    prof = build_profile(q)
    for rho in prof.rho_list:
        assert check_rho(q, check_rho(q, rho)) == rho


@settings(max_examples=80, deadline=None)
@given(Q_RANGE)
def test_mu_monotone(q):
    prof = build_profile(q)
    divs = sorted(prof.mu)
    values = [prof.mu[r] for r in divs]
    assert values == sorted(values, reverse=True)
