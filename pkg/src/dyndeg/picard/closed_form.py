"""Closed-form characteristic polynomials for odd and twice-odd q.

Both formulas are assembled from the counts kappa_r = #S_r, the
multipliers mu_r, and auxiliary polynomials T_r defined recursively over
the divisor lattice.
"""

from ..divisors import Case, build_profile, is_prime
from ..errors import UnsupportedQ
from ..numeric import IntPoly, X

_X2 = X * X


def _product(factors):
    out = IntPoly.constant(1)
    for f in factors:
        out = out * f
    return out


def t_polynomials(divisors, kappa):
    """T_r for every r in ``divisors`` and T_0.

    For prime r, T_r = kappa_r * prod_{s != r} (x^2 - kappa_s). For composite
    r, T_r adds kappa_r / (x^2 - kappa_r) times the sum of T_s over the
    proper tracked divisors s of r; that division is exact. T_0 is the full
    product plus the sum of all T_r.
    """
    divisors = sorted(divisors)
    quad = {r: _X2 - kappa[r] for r in divisors}
    T = {}
    for r in divisors:
        base = _product(quad[s] for s in divisors if s != r) * kappa[r]
        below = [s for s in divisors if s < r and r % s == 0]
        if below:
            acc = IntPoly()
            for s in below:
                acc = acc + T[s]
            base = base + acc.exact_divide(quad[r]) * kappa[r]
        T[r] = base
    total = _product(quad.values())
    for r in divisors:
        total = total + T[r]
    return T, total


def closed_form_odd(q):
    """Expanded (x-p)(x^4-1)Pi + kappa(x-1)Pi + (x-1)(x^2+1)T_0 + sum (x-mu_r)(x^4-1)T_r,
    Pi = prod_r (x^2 - kappa_r), for odd composite q."""
    if q < 9 or q % 2 == 0 or is_prime(q):
        raise UnsupportedQ(f"closed_form_odd needs an odd composite q, got {q}")
    prof = build_profile(q)
    divs = prof.proper_divisors
    kappa = {r: prof.kappa[r] for r in divs}
    T, T0 = t_polynomials(divs, kappa)
    Pi = _product(_X2 - kappa[r] for r in divs)
    x4m1 = X ** 4 - 1
    out = (X - prof.p) * x4m1 * Pi + (X - 1) * Pi * prof.kappa_1
    out = out + (X - 1) * (_X2 + 1) * T0
    for r in divs:
        out = out + (X - prof.mu[r]) * x4m1 * T[r]
    return out


def closed_form_twice_odd(q):
    """Expanded (x-p)(x^2-kappa-1)Pi + 2 kappa(x-mu)Pi + 2(x-1)T_0 + 2 sum (x-mu_r)(x^2-1)T_r
    for q = 2 mod 4 with p = q/2 composite; mu = (p+1)/2 and mu_r = (p/r+1)/2."""
    if q % 4 != 2 or q < 18 or is_prime(q // 2):
        raise UnsupportedQ(f"closed_form_twice_odd needs q = 2 mod 4 with q/2 composite, got {q}")
    prof = build_profile(q)
    p = prof.p
    divs = prof.proper_divisors
    kappa = {r: prof.kappa[r] for r in divs}
    k1 = prof.kappa_1
    mu = (p + 1) // 2
    T, T0 = t_polynomials(divs, kappa)
    Pi = _product(_X2 - kappa[r] for r in divs)
    out = (X - p) * (_X2 - k1 - 1) * Pi + (X - mu) * Pi * (2 * k1)
    out = out + (X - 1) * T0 * 2
    for r in divs:
        out = out + (X - prof.mu[r]) * (_X2 - 1) * T[r] * 2
    return out


def closed_form(q):
    """Dispatch to the formula that applies to q."""
    prof = build_profile(q)
    if prof.case == Case.ODD:
        return closed_form_odd(q)
    if prof.case == Case.TWICE_ODD:
        return closed_form_twice_odd(q)
    raise UnsupportedQ(f"no closed form for q={q} ({prof.case.value})")
