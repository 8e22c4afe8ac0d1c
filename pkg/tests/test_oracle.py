import flint
import pytest
from hypothesis import given, settings, strategies as st

from dyndeg.divisors import half_dimension
from dyndeg.errors import BadPrime, DegenerateLine
from dyndeg.numeric import spectral_radius
from dyndeg.oracle import (
    DegreeSequence, LineIterationState, MapKind, compare, run_oracle, run_oracle_two_primes, step,
)
from dyndeg.picard import BasisKind, build_cyclic, build_symmetric


def full(q):
    return build_symmetric(q, BasisKind.FULL)


def test_first_degrees():
    assert run_oracle(5, n_max=2).degrees[:2] == (1, 2)
    assert run_oracle(3, MapKind.CYCLIC, n_max=2).degrees[:2] == (1, 2)


def test_q7_matches_matrix_to_depth_8():
    rep = compare(run_oracle(7, n_max=8, seed=1), full(7))
    assert rep.matches, rep.first_mismatch


@pytest.mark.parametrize("q,n", [(4, 10), (6, 8), (8, 6), (9, 6), (10, 6), (12, 6), (14, 5), (15, 5)])
def test_small_q_match(q, n):
    rep = compare(run_oracle(q, n_max=n), full(q))
    assert rep.matches, rep.first_mismatch


@pytest.mark.parametrize("q", [3, 4, 5, 6, 7])
def test_cyclic_match(q):
    rep = compare(run_oracle(q, MapKind.CYCLIC, n_max=6), build_cyclic(q))
    assert rep.matches, rep.first_mismatch


def test_deterministic_and_json_round_trip():
    a = run_oracle(9, n_max=4, seed=3)
    b = run_oracle(9, n_max=4, seed=3)
    assert a == b
    back = DegreeSequence.from_json(a.to_json())
    assert back.degrees == a.degrees and back.prime == a.prime and back.q == 9
    assert set(a.to_dict()) >= {"q", "map_kind", "prime", "seed", "degrees"}


def test_two_primes_agree():
    a, b = run_oracle_two_primes(11, n_max=5)
    assert a.prime != b.prime
    assert a.degrees == b.degrees


def test_argument_errors():
    with pytest.raises(ValueError):
        run_oracle(7, n_max=0)
    with pytest.raises(ValueError):
        run_oracle(7, trials=1)
    with pytest.raises(BadPrime):
        run_oracle(7, prime=1000003)


def test_degenerate_line_detected():
    mu = 1048583
    coords = [flint.nmod_poly([1, 1], mu), flint.nmod_poly([2, 1], mu), flint.nmod_poly([3, 1], mu)]
    state = LineIterationState(5, MapKind.SYMMETRIC, mu, 2, coords, 0, [1])
    with pytest.raises(DegenerateLine):
        step(state, [[1, 0, 0], [0, 0, 0], [0, 0, 1]])


def test_degree_cap_truncates():
    seq = run_oracle(11, n_max=8, degree_cap=100)
    assert seq.truncated
    assert seq.degrees[-1] > 100 and len(seq.degrees) < 9


def test_growth_rate_close_to_rho():
    seq = run_oracle(13, n_max=6)
    rho = float(spectral_radius(full(13)).rho)
    ratio = seq.degrees[-1] / seq.degrees[-2]
    assert abs(ratio - rho) < 0.05 * rho


def test_integrable_q5_growth():
    d = run_oracle(5, n_max=10).degrees
    second = [d[n + 2] - 2 * d[n + 1] + d[n] for n in range(len(d) - 2)]
    assert max(abs(v) for v in second) <= 4


@pytest.mark.parametrize("q", [5, 6, 7])
def test_cyclic_second_order_recurrence(q):
    # degrees satisfy the recurrence of x^2 + (2 - q) x + 1 from n = 2 on
    # within the constant part contributed by roots on the unit circle
    d = run_oracle(q, MapKind.CYCLIC, n_max=7).degrees
    resid = [d[n + 2] - (q - 2) * d[n + 1] + d[n] for n in range(1, len(d) - 2)]
    assert len(set(resid)) == 1


@settings(max_examples=12, deadline=None)
@given(st.integers(min_value=3, max_value=24), st.integers(0, 1000))
def test_sequence_invariants(q, seed):
    seq = run_oracle(q, n_max=4, seed=seed)
    d = seq.degrees
    assert d[0] == 1
    assert d[1] == half_dimension(q)
    for a in range(len(d)):
        for b in range(len(d) - a):
            assert d[a + b] <= d[a] * d[b]
