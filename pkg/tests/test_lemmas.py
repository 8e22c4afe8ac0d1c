import pytest

from dyndeg.cyclotomic import CycInt, build_A, projective_equal
from dyndeg.lemmas import div4_fiber_expected, div4_fiber, verify_orbit_lemmas


@pytest.mark.parametrize("q", [3, 4, 5, 9, 12, 15, 30, 45, 60])
def test_lemma_suite_passes(q):
    rep = verify_orbit_lemmas(q)
    assert rep.passed, [c.to_dict() for c in rep.failures]


def test_checks_are_not_vacuous():
    assert verify_orbit_lemmas(9).summary()["f(a_k) = v_k"] == (3, 3)
    assert verify_orbit_lemmas(45).summary()["J a_r = A eta_r"] == (4, 4)
    s30 = verify_orbit_lemmas(30).summary()
    assert s30["f(a_i) in Pi_even (i in S_2)"] == (4, 4)
    s60 = verify_orbit_lemmas(60).summary()
    assert s60["fiber of f_X a_1 = [0:p-1:0:3-p:...]"] == (1, 1)


def test_q12_fiber():
    A = build_A(12)
    expected = [CycInt.constant(12, v) for v in (0, 5, 0, -3, 0, 1, 0)]
    assert div4_fiber_expected(12, 6) == expected
    assert projective_equal(div4_fiber(A, 6), expected)


def test_report_dict_shape():
    d = verify_orbit_lemmas(7).to_dict()
    assert d["q"] == 7 and d["passed"] is True
    assert d["failures"] == []
    assert d["summary"]["A^2 = qI"] == {"passed": 1, "total": 1}


def test_small_q_rejected():
    with pytest.raises(ValueError):
        verify_orbit_lemmas(2)
