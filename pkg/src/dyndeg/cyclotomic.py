"""Exact arithmetic in Z[w] = Z[x]/Phi_q(x) for a primitive q-th root of
unity w, the symmetric Fourier matrix A, and the special sign vectors.

Elements are kept reduced modulo Phi_q, so equality is coefficient-wise.
Polynomial products go through FLINT's ``fmpz_poly``; the matrices involved
are small, but products of many entries (the map J) are frequent.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import flint

from .divisors import divisors_of, half_dimension, prime_factors, totient
from .errors import BadGenerator, BadPrime, InvalidIndex, UnsupportedQ
from .numeric import IntPoly, squarefree_part


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q):
    """Phi_q by exact division of x^q - 1 by Phi_d over proper divisors d."""
    if q < 1:
        raise UnsupportedQ(f"cyclotomic polynomial needs q >= 1, got {q}")
    out = IntPoly((-1,) + (0,) * (q - 1) + (1,))
    for d in divisors_of(q):
        if d < q:
            out = out.exact_divide(cyclotomic_polynomial(d))
    return out


@lru_cache(maxsize=None)
def _phi(q):
    return flint.fmpz_poly(list(cyclotomic_polynomial(q).coeffs))


@lru_cache(maxsize=None)
def _power(q, k):
    return flint.fmpz_poly([0] * (k % q) + [1]) % _phi(q)


class CycInt:
    """An element of Z[w], w a primitive q-th root of unity."""

    __slots__ = ("q", "_p")

    def __init__(self, q, coeffs=()):
        self.q = q
        self._p = flint.fmpz_poly([int(c) for c in coeffs]) % _phi(q)

    @classmethod
    def _wrap(cls, q, poly):
        obj = cls.__new__(cls)
        obj.q = q
        obj._p = poly
        return obj

    @classmethod
    def constant(cls, q, c):
        return cls._wrap(q, flint.fmpz_poly([int(c)]) if c else flint.fmpz_poly())

    @classmethod
    def omega_power(cls, q, k):
        return cls._wrap(q, _power(q, k))

    @property
    def coeffs(self):
        n = totient(self.q)
        c = [int(v) for v in self._p.coeffs()]
        return tuple(c + [0] * (n - len(c)))

    def is_zero(self):
        return self._p.is_zero()

    def __bool__(self):
        return not self._p.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.q != self.q:
                raise ValueError(f"mixing q={self.q} and q={other.q}")
            return other._p
        if isinstance(other, int):
            return flint.fmpz_poly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt._wrap(self.q, self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt._wrap(self.q, self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt._wrap(self.q, o - self._p)

    def __neg__(self):
        return CycInt._wrap(self.q, -self._p)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt._wrap(self.q, self._p * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt._wrap(self.q, (self._p * o) % _phi(self.q))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = CycInt.constant(self.q, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self._p == flint.fmpz_poly([other])
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.q == other.q and self._p == other._p

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"CycInt(q={self.q}, {list(self.coeffs)})"

    def value(self):
        """Complex value under w = exp(2 pi i / q); for sanity checks only."""
        import cmath

        w = cmath.exp(2j * cmath.pi / self.q)
        return sum(c * w ** k for k, c in enumerate(self.coeffs))


def omega_j(q, j):
    """w^j + w^(q-j)."""
    return CycInt._wrap(q, _power(q, j) + _power(q, -j))


class CycMatrix:
    """Immutable matrix over Z[w]."""

    __slots__ = ("q", "rows")

    def __init__(self, q, rows):
        rows = tuple(tuple(e if isinstance(e, CycInt) else CycInt.constant(q, e) for e in row)
                     for row in rows)
        for row in rows:
            for e in row:
                if e.q != q:
                    raise ValueError("all entries must share the same q")
        self.q = q
        self.rows = rows

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, q, n):
        return cls.scalar(q, n, 1)

    @classmethod
    def scalar(cls, q, n, c):
        return cls(q, [[c if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [row[j] for row in self.rows]

    def __matmul__(self, other):
        phi = _phi(self.q)
        if isinstance(other, CycMatrix):
            b = [[e._p for e in row] for row in other.rows]
            cols = list(zip(*b))
            out = []
            for row in self.rows:
                a = [e._p for e in row]
                out.append([CycInt._wrap(self.q, _dot(a, col) % phi) for col in cols])
            return CycMatrix(self.q, out)
        return matvec(self, other)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.q == other.q and self.rows == other.rows

    def __hash__(self):
        return hash((self.q, self.rows))

    def __repr__(self):
        r, c = self.shape
        return f"CycMatrix(q={self.q}, {r}x{c})"


def _dot(a, b):
    acc = flint.fmpz_poly()
    for u, v in zip(a, b):
        if not u.is_zero() and not v.is_zero():
            acc += u * v
    return acc


def matvec(m, v):
    phi = _phi(m.q)
    vp = [e._p for e in v]
    return [CycInt._wrap(m.q, _dot([e._p for e in row], vp) % phi) for row in m.rows]


def build_A(q):
    """The (p+1)x(p+1) symmetric Fourier matrix acting on P^p."""
    if q <= 2:
        raise UnsupportedQ(f"A is defined for q >= 3, got {q}")
    p = half_dimension(q)
    rows = []
    for i in range(p + 1):
        row = [CycInt.constant(q, 1)]
        for j in range(1, p + 1):
            if q % 2 == 0 and j == p:
                row.append(CycInt.constant(q, (-1) ** i))
            else:
                row.append(omega_j(q, i * j))
        rows.append(row)
    return CycMatrix(q, rows)


def build_F(q):
    """The q x q Fourier matrix (w^(jk)) of the cyclic case."""
    if q <= 2:
        raise UnsupportedQ(f"F is defined for q >= 3, got {q}")
    return CycMatrix(q, [[CycInt.omega_power(q, j * k) for k in range(q)] for j in range(q)])


def apply_J(x):
    """Coordinate-wise reciprocal, written as products of the other coordinates."""
    n = len(x)
    q = x[0].q
    one = CycInt.constant(q, 1)
    pre = [one]
    for i in range(n - 1):
        pre.append(pre[-1] * x[i])
    suf = [one] * n
    for i in range(n - 2, -1, -1):
        suf[i] = suf[i + 1] * x[i + 1]
    return [pre[i] * suf[i] for i in range(n)]


def apply_f(A, x):
    """f = A o J."""
    return A @ apply_J(x)


def projective_equal(u, v):
    """u and v represent the same point of projective space.

    Z[w] is a domain, so comparing against one pivot coordinate is equivalent
    to the full cross-multiplication test u_i v_j = u_j v_i.
    """
    if len(u) != len(v):
        return False
    k = next((i for i, e in enumerate(u) if not e.is_zero()), None)
    if k is None or v[k].is_zero():
        return False
    return all(ui * v[k] == vi * u[k] for ui, vi in zip(u, v))


def support(x):
    return [i for i, e in enumerate(x) if not e.is_zero()]


@dataclass(frozen=True)
class SignVector:
    """A point of projective space whose coordinates are in {-1, 0, 1}."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise ValueError("sign vector entries must be -1, 0 or 1")
        if not any(self.entries):
            raise ValueError("sign vector cannot be zero")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def lift(self, q):
        return [CycInt.constant(q, e) for e in self.entries]


def _t_sequence(p):
    """t_0..t_p with t_0 = 1 and the period-4 sign pattern of v_1."""
    t = [1]
    for j in range(1, p + 1):
        if p % 2 == 0:
            t.append((-1) ** (j // 2))
        else:
            t.append((-1) ** ((j + 1) // 2))
    return t


def fold_index(q, k):
    """The representative in 0..p of +-k mod q, so that w_k = w_fold."""
    k %= q
    return min(k, q - k)


def v_vector(q, k=1):
    """v_k: for k = 1 the sign pattern with f(a_1) = v_1; for other units k
    the entries are permuted by j -> fold(jk)."""
    if q % 2 == 0 or q < 3:
        raise UnsupportedQ(f"v_k is defined for odd q >= 3, got {q}")
    if gcd(k, q) != 1:
        raise InvalidIndex(f"gcd({k}, {q}) != 1")
    p = half_dimension(q)
    t = _t_sequence(p)
    out = [0] * (p + 1)
    for j in range(p + 1):
        out[fold_index(q, j * k)] = t[j]
    return SignVector(out)


def eta_vector(q, r):
    """v_1 for q/r, spread over the multiples of r (zeros in between)."""
    if q % 2 == 0 or q % r or not 1 < r < q:
        raise InvalidIndex(f"{r} is not a proper divisor of odd q={q}")
    p = half_dimension(q)
    small = v_vector(q // r, 1).entries
    out = [0] * (p + 1)
    for j, e in enumerate(small):
        out[j * r] = e
    return SignVector(out)


def is_prime(n):
    return flint.fmpz(n).is_prime()


def check_prime(q, mu):
    if mu % q != 1 or not is_prime(mu):
        raise BadPrime(f"{mu} is not a prime congruent to 1 mod {q}")


def check_generator(q, mu, g):
    g %= mu
    if pow(g, q, mu) != 1 or any(pow(g, q // ell, mu) == 1 for ell in prime_factors(q)):
        raise BadGenerator(f"{g} does not have multiplicative order {q} mod {mu}")


def find_prime(q, above=2 ** 20, skip=0):
    """The (skip+1)-th smallest prime mu > above with mu = 1 mod q."""
    mu = above + 1
    mu += (1 - mu) % q
    found = 0
    while True:
        if is_prime(mu):
            if found == skip:
                return mu
            found += 1
        mu += q


def find_generator(q, mu, rng):
    """An element of order q mod mu: a random element raised to (mu-1)/q."""
    check_prime(q, mu)
    while True:
        g = pow(rng.randrange(2, mu - 1), (mu - 1) // q, mu)
        try:
            check_generator(q, mu, g)
        except BadGenerator:
            continue
        return g


def reduce_mod_prime(x, mu, g):
    """Image of x under the ring map Z[w] -> F_mu, w -> g."""
    check_prime(x.q, mu)
    check_generator(x.q, mu, g)
    return _reduce_unchecked(x, mu, g)


def _reduce_unchecked(x, mu, g):
    acc = 0
    for c in reversed(x.coeffs):
        acc = (acc * g + c) % mu
    return acc


def reduce_matrix_mod_prime(m, mu, g):
    check_prime(m.q, mu)
    check_generator(m.q, mu, g)
    return [[_reduce_unchecked(e, mu, g) for e in row] for row in m.rows]


@lru_cache(maxsize=None)
def _cyclotomic_candidates(max_degree):
    bound = 2 * max_degree * max_degree + 2
    return tuple(m for m in range(1, bound + 1) if totient(m) <= max_degree)


def split_cyclotomic(poly):
    """Factor out every root of unity and every zero root.

    Returns (zero_multiplicity, {m: multiplicity of Phi_m}, remaining factor).
    """
    c = list(poly.coeffs)
    zeros = 0
    while c and c[0] == 0:
        c.pop(0)
        zeros += 1
    rest = IntPoly(c)
    found = {}
    if rest.degree <= 0:
        return zeros, found, rest

    core = squarefree_part(rest)
    for m in _cyclotomic_candidates(core.degree):
        phi = cyclotomic_polynomial(m)
        if phi.degree > core.degree:
            continue
        if phi.divides(core):
            core = core.exact_divide(phi)
            k = 0
            while phi.divides(rest):
                rest = rest.exact_divide(phi)
                k += 1
            found[m] = k
    return zeros, found, rest
