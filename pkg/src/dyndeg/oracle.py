"""Degree sequences measured by iterating the map on a random line.

The map is reduced to a prime field F_mu with mu = 1 mod q, where some g has
multiplicative order q and stands in for the root of unity. A random line
t -> a + b t is pushed through f = A o J (or F o J for the cyclic map) with
exact polynomial arithmetic over F_mu; after each step the common factor of
the coordinates is divided out and the remaining degree is recorded.
"""

import json
import random
from dataclasses import dataclass, field
from enum import Enum

import flint

from .cyclotomic import (
    build_A, build_F, check_prime, find_generator, find_prime, reduce_matrix_mod_prime,
)
from .divisors import half_dimension
from .errors import BadPrime, CrossCheckFailure, DegenerateLine, UnsupportedQ
from .lemmas import LemmaReport, verify_orbit_lemmas
from .numeric import as_matrix, power_entries

DEFAULT_DEGREE_CAP = 10 ** 6
RETRY_BUDGET = 8


class MapKind(str, Enum):
    CYCLIC = "Cyclic"
    SYMMETRIC = "SymmetricCyclic"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        v = str(value).strip().lower()
        for kind in cls:
            if kind.value.lower() == v:
                return kind
        if v in ("symmetric", "sym", "sc"):
            return cls.SYMMETRIC
        raise ValueError(f"unknown map kind {value!r}")


@dataclass(frozen=True)
class DegreeSequence:
    q: int
    map_kind: MapKind
    degrees: tuple
    prime: int
    seed: int
    trials: int
    generator: int = 0
    truncated: bool = False

    def to_dict(self):
        return {"q": self.q, "map_kind": self.map_kind.value, "prime": self.prime,
                "seed": self.seed, "degrees": list(self.degrees)}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d):
        return cls(q=d["q"], map_kind=MapKind.parse(d["map_kind"]), degrees=tuple(d["degrees"]),
                   prime=d["prime"], seed=d["seed"], trials=d.get("trials", 0))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass
class LineIterationState:
    q: int
    map_kind: MapKind
    mu: int
    g: int
    coords: list
    n: int = 0
    degrees: list = field(default_factory=list)


def field_matrix(q, map_kind, mu, g):
    """A (or F) with w -> g, as integers mod mu."""
    kind = MapKind.parse(map_kind)
    m = build_F(q) if kind == MapKind.CYCLIC else build_A(q)
    return reduce_matrix_mod_prime(m, mu, g)


def _dimension(q, kind):
    return q if kind == MapKind.CYCLIC else half_dimension(q) + 1


def step(state, L):
    """One application of f followed by removal of the common factor."""
    mu = state.mu
    x = state.coords
    n = len(x)
    one = flint.nmod_poly([1], mu)
    pre = [one]
    for i in range(n - 1):
        pre.append(pre[-1] * x[i])
    suf = [one] * n
    for i in range(n - 2, -1, -1):
        suf[i] = suf[i + 1] * x[i + 1]
    J = [pre[i] * suf[i] for i in range(n)]
    y = []
    for row in L:
        acc = flint.nmod_poly([], mu)
        for c, Ji in zip(row, J):
            if c:
                acc += Ji * c
        y.append(acc)
    if any(v.is_zero() for v in y):
        raise DegenerateLine(f"a coordinate vanished identically at step {state.n + 1}")
    g = y[0]
    for v in y[1:]:
        if g.degree() == 0:
            break
        g = g.gcd(v)
    if g.degree() > 0:
        y = [v // g for v in y]
    lead = y[0].coeffs()[-1]
    if int(lead) != 1:
        inv = pow(int(lead), -1, mu)
        y = [v * inv for v in y]
    state.coords = y
    state.n += 1
    state.degrees.append(max(v.degree() for v in y))
    return state


def _random_line(n, mu, rng):
    return [flint.nmod_poly([rng.randrange(mu), rng.randrange(1, mu)], mu) for _ in range(n)]


def iterate_line(q, map_kind, mu, g, L, n_max, rng, degree_cap=DEFAULT_DEGREE_CAP):
    """Degrees of f^0..f^n_max on one random line (shorter if the cap is hit)."""
    kind = MapKind.parse(map_kind)
    state = LineIterationState(q, kind, mu, g, _random_line(_dimension(q, kind), mu, rng), 0, [1])
    for _ in range(n_max):
        step(state, L)
        if degree_cap is not None and state.degrees[-1] > degree_cap:
            return state.degrees, True
    return state.degrees, False


def run_oracle(q, map_kind=MapKind.SYMMETRIC, n_max=6, trials=2, seed=0, prime=None,
               degree_cap=DEFAULT_DEGREE_CAP, generator=None):
    """Measured deg(f^n), n = 0..n_max, as the maximum over ``trials`` random lines."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if trials < 2:
        raise ValueError("at least two trials are required")
    kind = MapKind.parse(map_kind)
    if q < 3:
        raise UnsupportedQ(f"q must be at least 3, got {q}")
    mu = find_prime(q) if prime is None else prime
    check_prime(q, mu)
    g = generator if generator is not None else find_generator(q, mu, random.Random(f"g:{seed}"))
    L = field_matrix(q, kind, mu, g)
    best = None
    truncated = False
    for t in range(trials):
        rng = random.Random(f"line:{seed}:{t}")
        for attempt in range(RETRY_BUDGET + 1):
            try:
                degs, cut = iterate_line(q, kind, mu, g, L, n_max, rng, degree_cap)
                break
            except DegenerateLine:
                if attempt == RETRY_BUDGET:
                    raise
        truncated = truncated or cut
        if best is None:
            best = degs
        else:
            k = min(len(best), len(degs))
            best = [max(a, b) for a, b in zip(best[:k], degs[:k])]
    return DegreeSequence(q=q, map_kind=kind, degrees=tuple(best), prime=mu, seed=seed,
                          trials=trials, generator=g, truncated=truncated)


def run_oracle_two_primes(q, map_kind=MapKind.SYMMETRIC, n_max=6, trials=2, seed=0,
                          degree_cap=DEFAULT_DEGREE_CAP):
    """Run over the two smallest admissible primes above 2^20; they must agree."""
    kind = MapKind.parse(map_kind)
    mu1, mu2 = find_prime(q), find_prime(q, skip=1)
    a = run_oracle(q, kind, n_max, trials, seed, mu1, degree_cap)
    b = run_oracle(q, kind, n_max, trials, seed, mu2, degree_cap)
    k = min(len(a.degrees), len(b.degrees))
    if a.degrees[:k] != b.degrees[:k]:
        raise CrossCheckFailure(f"primes {mu1} and {mu2} give different degrees for q={q}",
                                {"q": q, mu1: list(a.degrees), mu2: list(b.degrees)})
    return a, b


@dataclass(frozen=True)
class CompareReport:
    q: int
    matches: bool
    oracle: tuple
    predicted: tuple
    first_mismatch: tuple = None

    def to_dict(self):
        return {"q": self.q, "matches": self.matches, "oracle": list(self.oracle),
                "predicted": list(self.predicted),
                "first_mismatch": None if self.first_mismatch is None else list(self.first_mismatch)}


def compare(seq, m):
    """Check degrees[n] = (M^n)[H, H] for every recorded n."""
    q = getattr(m, "q", seq.q)
    if q != seq.q:
        raise ValueError(f"sequence is for q={seq.q} but the matrix is for q={q}")
    n_max = len(seq.degrees) - 1
    predicted = tuple(power_entries(as_matrix(m), n_max, 0, 0))
    mismatch = None
    for n, (a, b) in enumerate(zip(seq.degrees, predicted)):
        if a != b:
            mismatch = (n, a, b)
            break
    return CompareReport(seq.q, mismatch is None, tuple(seq.degrees), predicted, mismatch)


__all__ = [
    "BadPrime", "CompareReport", "DegreeSequence", "LemmaReport", "LineIterationState", "MapKind",
    "compare", "field_matrix", "iterate_line", "run_oracle", "run_oracle_two_primes", "step",
    "verify_orbit_lemmas",
]
