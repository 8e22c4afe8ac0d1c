"""Factor the characteristic polynomials for q = 30, 45 and 60 and show
how the full basis relates to the symmetrized one."""

import mpmath

from dyndeg.cyclotomic import split_cyclotomic
from dyndeg.numeric import charpoly, spectral_radius
from dyndeg.picard import BasisKind, build_symmetric, closed_form
from dyndeg.errors import UnsupportedQ


def show(q):
    sym = build_symmetric(q)
    full = build_symmetric(q, BasisKind.FULL)
    cs, cf = charpoly(sym), charpoly(full)
    zeros, cyc, rest = split_cyclotomic(cs)
    res = spectral_radius(sym)
    print(f"q = {q}: {sym.n} symmetrized classes, {full.n} full classes")
    print(f"  symmetrized charpoly = x^{zeros} * {dict(sorted(cyc.items()))} cyclotomic * ({rest})")
    print(f"  rho = {mpmath.nstr(res.rho, 12)}  delta = {mpmath.nstr(res.delta, 12)}")
    z, c, r = split_cyclotomic(cf.exact_divide(cs))
    print(f"  full / symmetrized = x^{z} * {dict(sorted(c.items()))} cyclotomic * ({r})")
    try:
        print(f"  closed form = {closed_form(q)}")
    except UnsupportedQ as exc:
        print(f"  closed form: {exc}")


if __name__ == "__main__":
    for q in (30, 45, 60):
        show(q)
