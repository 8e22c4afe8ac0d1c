import pytest
from hypothesis import given, settings, strategies as st

from conftest import fixture_columns, printed_poly
from dyndeg.cyclotomic import split_cyclotomic
from dyndeg.divisors import Case, build_profile
from dyndeg.errors import InvalidIndex, UnsupportedQ
from dyndeg.numeric import X, charpoly, largest_real_root, spectral_radius, unit_circle_cofactor_check
from dyndeg.picard import (
    BasisKind, block_determinant_Mn, block_determinant_Mprime, build_cyclic, build_div4,
    build_odd, build_symmetric, build_twice_odd, closed_form, closed_form_odd,
    closed_form_twice_odd, parse_label, t_polynomials,
)
from dyndeg.picard.basis import A, E, H, Ahalf, P
from dyndeg.picard.blocks import literal_determinant, literal_Mn, literal_Mprime
from dyndeg.picard.export import from_csv, from_json, to_csv, to_json


def test_q45_rows_match_fixture_except_A0():
    # The printed A_0 row carries -E_0; with it the characteristic polynomial
    # no longer matches the printed one, so the builder uses H - E^(1).
    m, cols = fixture_columns("q45_rows.txt", 45)
    assert set(cols) == set(m.basis)
    a0, e0 = A(0), E(0)
    for b, image in cols.items():
        if b == a0:
            expected = dict(image)
            del expected[e0]
            assert m.image(b) == expected
        else:
            assert m.image(b) == image, b.label


def test_q30_rows_match_fixture():
    m, cols = fixture_columns("q30_rows.txt", 30)
    assert set(cols) == set(m.basis)
    for b, image in cols.items():
        assert m.image(b) == image, b.label


def test_q60_rows_match_fixture_except_half_row():
    # The A_{p/2} row as printed omits the self term that the odd-p/2 rule
    # requires; the builder keeps it (see README).
    m, cols = fixture_columns("q60_rows.txt", 60)
    half = Ahalf(15)
    for b, image in cols.items():
        if b == half:
            expected = dict(image)
            expected[half] = -1
            assert m.image(b) == expected
        else:
            assert m.image(b) == image, b.label


def test_q45_H_row_text():
    m = build_odd(45)
    assert m.image_text(H) == "22H - 21E_0 - 21E^(1) - 14P_3 - 17P_5 - 19P_9 - 20P_15"


def test_q30_H_entry_and_A3():
    m = build_twice_odd(30)
    assert m.degree == 15
    assert m.image_text("A^(3)") == "4H - 4E - 2Pw - 2Pw_3 - 4Pw_5"


def test_q60_H_row():
    m = build_div4(60)
    assert m[H, "H"] == 30
    assert m["A_15", "H"] == -14
    assert m["Gamma_5", "H"] == -2 and m["Gamma_3", "H"] == -4


def test_cyclic_basics():
    m = build_cyclic(7)
    assert m.n == 15
    assert m.degree == 6
    col = m.image(H)
    assert all(col[b] == -5 for b in m.basis if b.label.startswith("E_"))


def test_cyclic_q4_dominant():
    _, _, dom = split_cyclotomic(charpoly(build_cyclic(4)))
    assert dom.degree <= 0
    rho = spectral_radius(build_cyclic(4))
    assert abs(rho.rho - 1) < 1e-9 and abs(rho.delta - 1) < 1e-9


@pytest.mark.parametrize("q", [7, 11, 13, 17, 19])
def test_prime_dominant_factor(q):
    p = (q - 1) // 2
    _, _, dom = split_cyclotomic(charpoly(build_odd(q)))
    assert dom == X ** 2 - p * X + 1


def test_q7_spectral():
    res = spectral_radius(build_odd(7))
    assert abs(res.rho - 2.6180339887) < 1e-9
    assert abs(res.delta - 6.854101966) < 1e-8


def test_builder_errors():
    with pytest.raises(UnsupportedQ):
        build_odd(8)
    with pytest.raises(UnsupportedQ):
        build_twice_odd(12)
    with pytest.raises(UnsupportedQ):
        build_div4(6)
    with pytest.raises(UnsupportedQ):
        build_cyclic(2)
    with pytest.raises(InvalidIndex):
        build_odd(9).image("nope")


@pytest.mark.parametrize("q", [6, 10, 14, 18, 30, 42])
def test_twice_odd_P_columns_vanish(q):
    m = build_twice_odd(q, BasisKind.FULL)
    for r in build_profile(q).proper_divisors:
        assert m.image(P(r)) == {}


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=3, max_value=60))
def test_symmetrized_consistency(q):
    sym = build_symmetric(q)
    full = build_symmetric(q, BasisKind.FULL)
    assert charpoly(sym).divides(charpoly(full))
    assert abs(spectral_radius(sym).rho - spectral_radius(full).rho) < 1e-9
    assert sym.degree == full.degree == build_profile(q).p


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=3, max_value=60))
def test_basis_each_element_once_H_first(q):
    for kind in (BasisKind.FULL, BasisKind.SYMMETRIZED):
        m = build_symmetric(q, kind)
        assert m.basis[0] == H
        assert len(set(m.basis)) == m.n


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=3, max_value=60))
def test_export_round_trip(q):
    for kind in (BasisKind.FULL, BasisKind.SYMMETRIZED):
        m = build_symmetric(q, kind)
        assert from_json(to_json(m)) == m
        assert from_csv(to_csv(m), q, m.case, m.basis_kind) == m
        for b in m.basis:
            half = q // 4 if m.case == Case.DIVISIBLE_BY_4 else None
            assert parse_label(b.label, kind, half) == b


def test_q45_T_polynomials():
    prof = build_profile(45)
    T, T0 = t_polynomials(prof.proper_divisors, prof.kappa)
    x2 = X ** 2
    assert T[3] == 4 * (x2 - 3) * (x2 - 2) * (x2 - 1)
    assert T[9] == 2 * x2 * (x2 - 3) * (x2 - 1)
    for r in (3, 5, 9, 15):
        assert T[r] == printed_poly(f"q45_T{r}")
    assert T0 == X ** 8 - 20 * X ** 4 + 30 * X ** 2


def test_q45_closed_form():
    assert closed_form_odd(45) == (X - 1) * printed_poly("q45_degree12")
    root = largest_real_root(closed_form(45))
    assert abs(root - 21.6052) < 5e-4


def test_q30_closed_form():
    cf = closed_form_twice_odd(30)
    sextic = printed_poly("q30_sextic")
    assert unit_circle_cofactor_check(cf, sextic)
    assert abs(largest_real_root(cf) - 14.26) < 0.01


def test_closed_form_rejects():
    for q in (7, 13):
        with pytest.raises(UnsupportedQ):
            closed_form_odd(q)
    with pytest.raises(UnsupportedQ):
        closed_form_twice_odd(14)
    with pytest.raises(UnsupportedQ):
        closed_form(60)


@pytest.mark.parametrize("q", [9, 15, 21, 25, 27, 33, 35, 39, 45, 49, 51, 55, 57])
def test_closed_form_odd_root_matches_matrix(q):
    cf = closed_form_odd(q)
    rho = spectral_radius(build_odd(q)).rho
    assert abs(largest_real_root(cf) - rho) < 1e-9


@pytest.mark.parametrize("q", [18, 30, 42, 50, 54])
def test_closed_form_twice_odd_root_matches_matrix(q):
    rho = spectral_radius(build_twice_odd(q)).rho
    assert abs(largest_real_root(closed_form_twice_odd(q)) - rho) < 1e-9


def test_block_examples():
    x2 = X ** 2
    assert block_determinant_Mn([2, 5]) == (x2 - 2) * (x2 - 5)
    assert block_determinant_Mprime([4, 7]).coeffs == (-28,)
    m3 = block_determinant_Mprime([1, 2, 3])
    assert m3 == literal_determinant(literal_Mprime([1, 2, 3]))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_Mn_matches_literal(a):
    assert block_determinant_Mn(a) == literal_determinant(literal_Mn(a))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4))
def test_Mprime_matches_literal(a):
    assert block_determinant_Mprime(a) == literal_determinant(literal_Mprime(a))
