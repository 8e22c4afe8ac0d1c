"""Divisor combinatorics of q.

The builders need, for every q, the index classes S_r = {1 <= j <= p :
gcd(j, q) = r}, their sizes, the H-column multipliers and the divisor
closures used in the column formulas. ``build_profile`` collects all of that
in one immutable record.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import UnknownDivisor, UnsupportedQ


class Case(str, Enum):
    CYCLIC_ONLY = "CyclicOnly"
    ODD_PRIME = "OddPrime"
    ODD = "Odd"
    TWICE_ODD = "TwiceOdd"
    DIVISIBLE_BY_4 = "DivisibleBy4"


def prime_factors(n):
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors_of(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n):
    out = n
    for p in prime_factors(n):
        out = out // p * (p - 1)
    return out


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def two_adic(n):
    """(m, odd) with n = 2**m * odd."""
    m = 0
    while n % 2 == 0:
        n //= 2
        m += 1
    return m, n


def classify(q):
    if q < 3:
        raise UnsupportedQ(f"q must be at least 3, got {q}")
    if q % 2:
        return Case.ODD_PRIME if is_prime(q) else Case.ODD
    return Case.TWICE_ODD if q % 4 == 2 else Case.DIVISIBLE_BY_4


def half_dimension(q):
    """p with SC_q parametrised by P^p."""
    return (q - 1) // 2 if q % 2 else q // 2


def index_class(q, p, r):
    """S_r = {1 <= j <= p : gcd(j, q) = r}."""
    return [j for j in range(1, p + 1) if gcd(j, q) == r]


@dataclass(frozen=True)
class DivisorProfile:
    q: int
    p: int
    case: Case
    proper_divisors: tuple
    S: dict
    kappa: dict
    mu: dict
    I: dict
    r_list: tuple = ()
    rho_list: tuple = ()
    kappa_1: int = 0

    @property
    def tracked(self):
        """Divisors carrying their own basis elements."""
        if self.case == Case.DIVISIBLE_BY_4:
            return self.r_list
        return self.proper_divisors

    def S_of(self, g):
        """S_g for any g (computed on demand if not stored)."""
        if g in self.S:
            return self.S[g]
        return index_class(self.q, self.p, g)


def build_profile(q):
    case = classify(q)
    p = half_dimension(q)
    S = {}
    kappa = {}
    mu = {}
    I = {}
    r_list = ()
    rho_list = ()
    if case in (Case.ODD, Case.ODD_PRIME):
        divs = tuple(d for d in divisors_of(q) if 1 < d < q)
        for r in (1,) + divs:
            S[r] = index_class(q, p, r)
        for r in divs:
            mu[r] = (q - 1) // (2 * r) + 1
    elif case == Case.TWICE_ODD:
        divs = tuple(d for d in divisors_of(p) if 1 < d < p)
        for r in (1,) + divs:
            S[r] = index_class(q, p, r)
            S[2 * r] = index_class(q, p, 2 * r)
        for r in divs:
            mu[r] = (p // r + 1) // 2
    else:
        m, q_odd = two_adic(q)
        base = 2 ** (m - 1)
        r_list = tuple(sorted(base * d for d in divisors_of(q_odd) if base * d < p))
        rho_list = tuple(d for d in divisors_of(q // 4) if 1 < d < q // 4)
        divs = r_list
        for g in sorted(set(gcd(j, q) for j in range(1, p + 1))):
            S[g] = index_class(q, p, g)
        for r in r_list:
            S.setdefault(2 * r, index_class(q, p, 2 * r))
            mu[r] = (p // r + 1) // 2
    for g, members in S.items():
        kappa[g] = len(members)
    for r in divs:
        I[r] = tuple(s for s in divs if r % s == 0)
    return DivisorProfile(
        q=q, p=p, case=case, proper_divisors=divs, S=S, kappa=kappa, mu=mu, I=I,
        r_list=r_list, rho_list=rho_list, kappa_1=len(S[1]),
    )


def I_set(profile, r):
    """{s > 1 : s | r, s tracked}, including r itself."""
    if r not in profile.I:
        raise UnknownDivisor(f"{r} is not a tracked divisor of q={profile.q}")
    return set(profile.I[r])


def check_rho(q, rho):
    """q / (4 rho)."""
    if q % (4 * rho):
        raise UnknownDivisor(f"{rho} does not divide q/4 for q={q}")
    return q // (4 * rho)
