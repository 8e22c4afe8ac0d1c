"""Pullback matrices f_X^* for the cyclic and symmetric cyclic maps.

Every blowup center in the symmetric cases is described by the set of
homogeneous coordinates that vanish on it. Two bookkeeping rules then give
all columns:

* the strict transform of a coordinate hyperplane {x_i = 0} is
  H minus every center on which x_i vanishes;
* f_X^* H = pH minus (k - 1) times each center with k >= 2 vanishing
  coordinates, k - 1 being the order of vanishing of the products that
  define J along that center.

Orbit columns (a fiber mapped onto the next fiber of the same orbit) are
entered directly.
"""

from dataclasses import dataclass
from functools import lru_cache

from ..divisors import Case, build_profile, classify
from ..errors import UnsupportedQ
from . import basis as B
from .basis import BasisKind
from .pic import from_columns, symmetrize


def _check_q(q, lo=3):
    if not isinstance(q, int) or isinstance(q, bool) or q < lo:
        raise UnsupportedQ(f"q must be an integer >= {lo}, got {q!r}")


def build_cyclic(q):
    """Cyclic q x q matrices: basis H, E_0, F_0, ..., E_{q-1}, F_{q-1}."""
    _check_q(q)
    E = [B.E(j) for j in range(q)]
    F = [B.Fcyc(j) for j in range(q)]
    basis = [B.H] + [b for j in range(q) for b in (E[j], F[j])]
    cols = {B.H: {B.H: q - 1, **{e: -(q - 2) for e in E}}}
    for j in range(q):
        cols[E[j]] = {F[j]: 1}
        cols[F[j]] = {B.H: 1, **{E[k]: -1 for k in range(q) if k != j}}
    return from_columns(q, Case.CYCLIC_ONLY, BasisKind.FULL, basis, cols)


@dataclass(frozen=True)
class Center:
    """A blowup center: its exceptional class and the coordinates vanishing on it."""

    element: B.BasisElement
    zeros: frozenset

    @property
    def multiplicity(self):
        k = len(self.zeros)
        return k - 1 if k >= 2 else 0


def a_entry_vanishes(q, i, j):
    """Entry (i, j) of A is zero: w_{ij} = 0, i.e. 4ij = q mod 2q, off the
    columns 0 and p (which are +-1)."""
    p = (q - 1) // 2 if q % 2 else q // 2
    if j == 0 or (q % 2 == 0 and j == p):
        return False
    return (4 * i * j - q) % (2 * q) == 0


def _point_e(p, k):
    return frozenset(i for i in range(p + 1) if i != k)


def _point_a(q, p, j):
    return frozenset(i for i in range(p + 1) if a_entry_vanishes(q, i, j))


def _support_complement(p, keep):
    return frozenset(i for i in range(p + 1) if not keep(i))


def sigma_class(i, centers):
    """Class of the strict transform of {x_i = 0}."""
    out = {B.H: 1}
    for c in centers:
        if i in c.zeros:
            out[c.element] = out.get(c.element, 0) - 1
    return out


def h_column(p, centers):
    out = {B.H: p}
    for c in centers:
        if c.multiplicity:
            out[c.element] = out.get(c.element, 0) - c.multiplicity
    return out


def _add(target, image, scale=1):
    for b, c in image.items():
        target[b] = target.get(b, 0) + scale * c
    return target


def _parse_kind(kind):
    return BasisKind.parse(kind)


# odd q ---------------------------------------------------------------------

def _odd_full(q):
    prof = build_profile(q)
    p, S1, divs = prof.p, set(prof.S[1]), prof.proper_divisors
    basis = [B.H, B.E(0), B.A(0)]
    for i in range(1, p + 1):
        if i in S1:
            basis += [B.E(i), B.AV(i), B.V(i), B.A(i)]
        else:
            basis.append(B.A(i))
    basis += [B.P(r) for r in divs]

    centers = [Center(B.E(0), _point_e(p, 0)), Center(B.A(0), _point_a(q, p, 0))]
    for i in sorted(S1):
        centers += [Center(B.E(i), _point_e(p, i)), Center(B.AV(i), frozenset()),
                    Center(B.V(i), frozenset())]
    for i in range(1, p + 1):
        centers.append(Center(B.A(i), _point_a(q, p, i)))
    for r in divs:
        centers.append(Center(B.P(r), _support_complement(p, lambda k, r=r: k % r == 0)))

    cols = {B.E(0): {B.A(0): 1}, B.A(0): sigma_class(0, centers), B.H: h_column(p, centers)}
    for i in range(1, p + 1):
        cols[B.A(i)] = sigma_class(i, centers)
        if i in S1:
            cols[B.E(i)] = {B.AV(i): 1}
            cols[B.AV(i)] = {B.V(i): 1}
            cols[B.V(i)] = {B.A(i): 1}
    for r in divs:
        cols[B.P(r)] = {B.A(j): 1 for j in prof.S[r]}
    case = classify(q)
    return from_columns(q, case, BasisKind.FULL, basis, cols), prof


def _odd_groups(prof):
    S1 = prof.S[1]
    groups = [
        (B.H, [B.H]), (B.E(0), [B.E(0)]), (B.A(0), [B.A(0)]),
        (B.SymE(1), [B.E(i) for i in S1]),
        (B.SymAV(1), [B.AV(i) for i in S1]),
        (B.SymV(1), [B.V(i) for i in S1]),
        (B.SymA(1), [B.A(i) for i in S1]),
    ]
    for r in prof.proper_divisors:
        groups += [(B.P(r), [B.P(r)]), (B.SymA(r), [B.A(j) for j in prof.S[r]])]
    return groups


def build_odd(q, basis_kind=BasisKind.SYMMETRIZED):
    """Odd q (prime or composite)."""
    _check_q(q)
    if q % 2 == 0:
        raise UnsupportedQ(f"build_odd needs odd q, got {q}")
    full, prof = _odd_full(q)
    if _parse_kind(basis_kind) == BasisKind.FULL:
        return full
    return symmetrize(full, _odd_groups(prof))


# q = 2 x odd ---------------------------------------------------------------

def _twice_odd_full(q):
    prof = build_profile(q)
    p, divs = prof.p, prof.proper_divisors
    levels = (1,) + divs
    basis = [B.H, B.E(0), B.E(p)] + [B.A(i) for i in range(p + 1)]
    basis += [B.Pe(1), B.Po(1), B.APe, B.APo]
    for r in divs:
        basis += [B.Pe(r), B.Po(r), B.P(r)]

    centers = [Center(B.E(0), _point_e(p, 0)), Center(B.E(p), _point_e(p, p))]
    centers += [Center(B.A(i), _point_a(q, p, i)) for i in range(p + 1)]
    for s in levels:
        centers.append(Center(B.Pe(s), _support_complement(p, lambda k, s=s: k % (2 * s) == 0)))
        centers.append(Center(B.Po(s), _support_complement(p, lambda k, s=s: k % (2 * s) == s)))
    centers += [Center(B.APe, frozenset()), Center(B.APo, frozenset())]
    for r in divs:
        centers.append(Center(B.P(r), _support_complement(p, lambda k, r=r: k % r == 0)))

    cols = {B.E(0): {B.A(0): 1}, B.E(p): {B.A(p): 1}, B.H: h_column(p, centers)}
    for i in range(p + 1):
        cols[B.A(i)] = sigma_class(i, centers)
    cols[B.Pe(1)] = {B.APe: 1, **{B.A(i): 1 for i in prof.S[2]}}
    cols[B.Po(1)] = {B.APo: 1, **{B.A(i): 1 for i in prof.S[1]}}
    cols[B.APe] = {B.Po(1): 1}
    cols[B.APo] = {B.Pe(1): 1}
    for r in divs:
        cols[B.Pe(r)] = {B.A(i): 1 for i in prof.S[2 * r]}
        cols[B.Po(r)] = {B.A(i): 1 for i in prof.S[r]}
        cols[B.P(r)] = {}
    return from_columns(q, Case.TWICE_ODD, BasisKind.FULL, basis, cols), prof


def _twice_odd_groups(prof):
    p, divs = prof.p, prof.proper_divisors
    groups = [(B.H, [B.H]), (B.SymE(), [B.E(0), B.E(p)]), (B.SymA(), [B.A(0), B.A(p)])]
    for r in (1,) + divs:
        groups.append((B.SymA(r), [B.A(i) for i in sorted(prof.S[r] + prof.S[2 * r])]))
    groups += [(B.SymPw(), [B.Pe(1), B.Po(1)]), (B.SymAPw, [B.APe, B.APo])]
    for r in divs:
        groups.append((B.SymPw(r), [B.Pe(r), B.Po(r)]))
    return groups, [B.P(r) for r in divs]


def build_twice_odd(q, basis_kind=BasisKind.SYMMETRIZED):
    """q = 2 mod 4."""
    _check_q(q, 6)
    if q % 4 != 2:
        raise UnsupportedQ(f"build_twice_odd needs q = 2 mod 4, got {q}")
    full, prof = _twice_odd_full(q)
    if _parse_kind(basis_kind) == BasisKind.FULL:
        return full
    groups, drop = _twice_odd_groups(prof)
    return symmetrize(full, groups, drop)


# q = 0 mod 4 ---------------------------------------------------------------

def _div4_tracked(prof):
    out = set()
    for r in prof.r_list:
        out.update(prof.S[r])
        out.update(prof.S[2 * r])
    return sorted(out)


def _div4_full(q):
    prof = build_profile(q)
    p, half = prof.p, prof.p // 2
    tracked = _div4_tracked(prof)
    basis = [B.H, B.E(0), B.E(p), B.A(0), B.A(p), B.Ahalf(half)]
    basis += [B.A(i) for i in tracked]
    for r in prof.r_list:
        basis += [B.Pe(r), B.Po(r)]
    basis += [B.Gamma(rho) for rho in prof.rho_list]

    centers = [Center(B.E(0), _point_e(p, 0)), Center(B.E(p), _point_e(p, p)),
               Center(B.A(0), _point_a(q, p, 0)), Center(B.A(p), _point_a(q, p, p)),
               Center(B.Ahalf(half), _point_a(q, p, half))]
    centers += [Center(B.A(i), _point_a(q, p, i)) for i in tracked]
    for r in prof.r_list:
        centers.append(Center(B.Pe(r), _support_complement(p, lambda k, r=r: k % (2 * r) == 0)))
        centers.append(Center(B.Po(r), _support_complement(p, lambda k, r=r: k % (2 * r) == r)))
    for rho in prof.rho_list:
        centers.append(Center(B.Gamma(rho), frozenset(k for k in range(p + 1) if k % (2 * rho) == rho)))

    cols = {B.E(0): {B.A(0): 1}, B.E(p): {B.A(p): 1}, B.H: h_column(p, centers)}
    for i in (0, p, half):
        el = B.Ahalf(half) if i == half else B.A(i)
        cols[el] = sigma_class(i, centers)
    for i in tracked:
        cols[B.A(i)] = sigma_class(i, centers)
    for r in prof.r_list:
        cols[B.Pe(r)] = {B.A(i): 1 for i in prof.S[2 * r]}
        cols[B.Po(r)] = {B.A(i): 1 for i in prof.S[r]}
    for rho in prof.rho_list:
        img = {}
        for i in prof.S[q // (4 * rho)]:
            _add(img, sigma_class(i, centers))
        cols[B.Gamma(rho)] = img
    return from_columns(q, Case.DIVISIBLE_BY_4, BasisKind.FULL, basis, cols), prof


def _div4_groups(prof):
    p = prof.p
    groups = [(B.H, [B.H]), (B.SymE(), [B.E(0), B.E(p)]), (B.SymA(), [B.A(0), B.A(p)]),
              (B.Ahalf(p // 2), [B.Ahalf(p // 2)])]
    for r in prof.r_list:
        groups.append((B.SymA(r), [B.A(i) for i in sorted(prof.S[r] + prof.S[2 * r])]))
    for r in prof.r_list:
        groups.append((B.SymP(r), [B.Pe(r), B.Po(r)]))
    groups += [(B.Gamma(rho), [B.Gamma(rho)]) for rho in prof.rho_list]
    return groups


def build_div4(q, basis_kind=BasisKind.SYMMETRIZED):
    """q = 0 mod 4. For q = 4 the same rules leave H, E_0, E_2, A_0, A_2, A_1."""
    _check_q(q, 4)
    if q % 4:
        raise UnsupportedQ(f"build_div4 needs q = 0 mod 4, got {q}")
    full, prof = _div4_full(q)
    if _parse_kind(basis_kind) == BasisKind.FULL:
        return full
    return symmetrize(full, _div4_groups(prof))


# dispatch ------------------------------------------------------------------

def supports_symmetric(q):
    """Symmetric cyclic builders exist for every q >= 3."""
    return q >= 3


@lru_cache(maxsize=256)
def build_symmetric(q, basis_kind=BasisKind.SYMMETRIZED):
    """Dispatch on the case of q."""
    _check_q(q)
    kind = _parse_kind(basis_kind)
    case = classify(q)
    if case in (Case.ODD, Case.ODD_PRIME):
        return build_odd(q, kind)
    if case == Case.TWICE_ODD:
        return build_twice_odd(q, kind)
    return build_div4(q, kind)
