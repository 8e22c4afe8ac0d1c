"""Exact integer polynomials and matrices, characteristic polynomials and
certified spectral radii.

Everything here is exact except the final root extraction, which runs at a
working precision of at least 128 bits and reports a rigorous error radius.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath

from .errors import InexactDivision, InvalidIndex, NonConvergence

DEFAULT_TOL = 1e-9
MIN_PREC_BITS = 128
POWER_ITERATION_WINDOW = 64


class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs`` is ascending (``coeffs[k]`` multiplies ``x**k``) with no trailing
    zeros, so the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots):
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    @staticmethod
    def _lift(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        out, base = IntPoly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def divmod_rational(self, other):
        """Long division over Q: returns (quotient, remainder) as Fraction lists."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = other.leading
        if len(rem) - 1 < d:
            return [], rem
        quo = [Fraction(0)] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c:
                quo[k - d] = c
                for i, v in enumerate(other.coeffs):
                    rem[k - d + i] -= c * v
        rem = rem[:d]
        while rem and rem[-1] == 0:
            rem.pop()
        return quo, rem

    def exact_divide(self, other):
        """Quotient ``self / other``; raises InexactDivision unless it is exact over Z."""
        if other.degree >= 0 and abs(other.leading) == 1:
            rem = list(self.coeffs)
            d = other.degree
            if len(rem) - 1 < d:
                if rem:
                    raise InexactDivision(f"{other} does not divide {self}")
                return IntPoly()
            lead = other.leading
            quo = [0] * (len(rem) - d)
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k] * lead
                if c:
                    quo[k - d] = c
                    for i, v in enumerate(other.coeffs):
                        rem[k - d + i] -= c * v
            if any(rem):
                raise InexactDivision(f"{other} does not divide {self}")
            return IntPoly(quo)
        quo, rem = self.divmod_rational(other)
        if rem or any(c.denominator != 1 for c in quo):
            raise InexactDivision(f"{other} does not divide {self}")
        return IntPoly(int(c) for c in quo)

    def __floordiv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.exact_divide(other)

    def divides(self, other):
        try:
            other.exact_divide(self)
        except InexactDivision:
            return False
        return True

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = IntPoly.x()


def pseudo_remainder(a, b):
    """lc(b)^(deg a - deg b + 1) * a mod b, computed over Z."""
    rem = list(a.coeffs)
    d = b.degree
    lead = b.leading
    if len(rem) - 1 < d:
        return IntPoly(rem)
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k]
        rem = [lead * v for v in rem]
        if c:
            for i, v in enumerate(b.coeffs):
                rem[k - d + i] -= c * v
        rem[k] = 0
    return IntPoly(rem[:d])


def poly_gcd(a, b):
    """Greatest common divisor over Q, normalised to a primitive integer
    polynomial with positive leading coefficient (primitive remainder sequence)."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    return a.primitive()


def squarefree_part(p):
    """Product of the distinct irreducible factors of ``p`` (primitive)."""
    if p.degree <= 0:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    return p.primitive().exact_divide(g).primitive() if g.degree > 0 else p.primitive()


def cofactor_determinant(rows, zero=0, one=1):
    """Determinant by Laplace expansion along the first row, memoised over
    column subsets. Works for any commutative ring whose elements support
    ``+``, ``-`` and ``*`` (integers, IntPoly, ...)."""
    n = len(rows)
    if n == 0:
        return one
    memo = {}

    def minor(r, cols):
        if r == n:
            return one
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = zero
        sign = 1
        # sign alternates over the columns still available
        for c in range(n):
            if cols >> c & 1:
                continue
            entry = rows[r][c]
            term = minor(r + 1, cols | (1 << c))
            prod = entry * term
            acc = acc + prod if sign > 0 else acc - prod
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, 0)


class BigIntMatrix:
    """Immutable labelled square matrix of Python integers."""

    __slots__ = ("entries", "labels", "_index")

    def __init__(self, entries, labels=None):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        if labels is None:
            labels = tuple(range(n))
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError("label count does not match dimension")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        self.entries = rows
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def n(self):
        return len(self.entries)

    @property
    def row_labels(self):
        return self.labels

    @property
    def col_labels(self):
        return self.labels

    @classmethod
    def identity(cls, n, labels=None):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], labels)

    @classmethod
    def from_columns(cls, labels, columns):
        """Build from ``{label: {label: coefficient}}`` column images."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        rows = [[0] * n for _ in range(n)]
        for src, image in columns.items():
            j = index[src]
            for dst, c in image.items():
                rows[index[dst]][j] += c
        return cls(rows, labels)

    def index(self, key):
        """Resolve a label or an integer position to a row/column index."""
        if key in self._index:
            return self._index[key]
        if isinstance(key, int) and not isinstance(key, bool) and 0 <= key < self.n:
            return key
        raise InvalidIndex(f"no row/column {key!r} in a {self.n}x{self.n} matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[self.index(i)][self.index(j)]

    def column(self, key):
        j = self.index(key)
        return [row[j] for row in self.entries]

    def column_image(self, key):
        """Nonzero entries of a column as ``{label: coefficient}``."""
        j = self.index(key)
        return {self.labels[i]: row[j] for i, row in enumerate(self.entries) if row[j]}

    def matvec(self, v):
        return [sum(a * b for a, b in zip(row, v) if a) for row in self.entries]

    def __matmul__(self, other):
        cols = list(zip(*other.entries))
        out = [[sum(a * b for a, b in zip(row, col) if a) for col in cols] for row in self.entries]
        return BigIntMatrix(out, self.labels)

    def __eq__(self, other):
        if not isinstance(other, BigIntMatrix):
            return NotImplemented
        return self.entries == other.entries and self.labels == other.labels

    def __hash__(self):
        return hash((self.entries, self.labels))

    def transpose(self):
        return BigIntMatrix(list(zip(*self.entries)), self.labels)

    def submatrix(self, keep):
        """Principal submatrix on the given labels (order preserved)."""
        idx = [self.index(k) for k in keep]
        return BigIntMatrix([[self.entries[i][j] for j in idx] for i in idx],
                            [self.labels[i] for i in idx])

    def __repr__(self):
        return f"BigIntMatrix(n={self.n})"


def as_matrix(m):
    """Accept a BigIntMatrix, anything wrapping one in ``.matrix``, or nested lists."""
    if isinstance(m, BigIntMatrix):
        return m
    inner = getattr(m, "matrix", None)
    if isinstance(inner, BigIntMatrix):
        return inner
    return BigIntMatrix(m)


def charpoly(m):
    """det(xI - m) by Berkowitz's division-free algorithm.

    Leading principal blocks are kept as sparse rows, which matters because
    pullback matrices are mostly zeros.
    """
    m = as_matrix(m)
    a = m.entries
    n = m.n
    rows = [[] for _ in range(n)]
    poly = [1]  # descending coefficients of det(xI - M_k)
    for k in range(n):
        R = [(j, a[k][j]) for j in range(k) if a[k][j]]
        C = [a[i][k] for i in range(k)]
        cvec = [1, -a[k][k]]
        if R and any(C):
            w = C
            for step in range(k):
                cvec.append(-sum(v * w[j] for j, v in R))
                if step + 1 < k:
                    w = [sum(v * w[j] for j, v in rows[i]) for i in range(k)]
        new = []
        clen = len(cvec)
        for i in range(k + 2):
            lo = max(0, i - clen + 1)
            hi = min(i, k)
            new.append(sum(cvec[i - j] * poly[j] for j in range(lo, hi + 1)))
        poly = new
        for i in range(k):
            if a[i][k]:
                rows[i].append((k, a[i][k]))
        rows[k] = R + ([(k, a[k][k])] if a[k][k] else [])
    return IntPoly(reversed(poly))


def matrix_power_entry(m, n, row, col):
    """Entry (row, col) of m**n, exact. Rows and columns may be labels or indices."""
    m = as_matrix(m)
    if n < 0:
        raise ValueError("n must be non-negative")
    i, j = m.index(row), m.index(col)
    return power_column(m, n, j)[i]


def power_column(m, n, col):
    """Column ``col`` of m**n as a list of integers."""
    m = as_matrix(m)
    j = m.index(col)
    v = [int(i == j) for i in range(m.n)]
    sparse = [[(c, val) for c, val in enumerate(row) if val] for row in m.entries]
    for _ in range(n):
        v = [sum(val * v[c] for c, val in row) for row in sparse]
    return v


def power_entries(m, n_max, row=0, col=0):
    """[(m**k)[row][col] for k = 0..n_max]."""
    m = as_matrix(m)
    i, j = m.index(row), m.index(col)
    v = [int(t == j) for t in range(m.n)]
    sparse = [[(c, val) for c, val in enumerate(r) if val] for r in m.entries]
    out = [v[i]]
    for _ in range(n_max):
        v = [sum(val * v[c] for c, val in r) for r in sparse]
        out.append(v[i])
    return out


@dataclass(frozen=True)
class SpectralResult:
    rho: mpmath.mpf
    delta: mpmath.mpf
    certified_error: float
    method_tags: tuple = field(default_factory=tuple)

    def digits(self, n=12):
        return mpmath.nstr(self.rho, n), mpmath.nstr(self.delta, n)


@dataclass(frozen=True)
class RootEnclosure:
    """Approximate roots of a squarefree polynomial, each with a disk radius
    guaranteed to contain exactly one true root."""

    roots: tuple
    radii: tuple
    zero_multiplicity: int
    prec: int


def _certified_roots(s, prec):
    d = s.degree
    desc = [mpmath.mpf(c) for c in reversed(s.coeffs)]
    with mpmath.workprec(prec):
        roots = mpmath.polyroots(desc, maxsteps=max(200, 20 * d), extraprec=prec)
        ds = s.derivative()
        radii = []
        for z in roots:
            fz = abs(s(mpmath.mpc(z)))
            dz = abs(ds(mpmath.mpc(z)))
            if dz == 0:
                return None
            radii.append(d * fz / dz)
        # Each disk holds at least one root; with d pairwise disjoint disks
        # every disk holds exactly one.
        for i in range(d):
            for j in range(i + 1, d):
                if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                    return None
    return roots, radii


def enclose_roots(p, tol=DEFAULT_TOL, prec=MIN_PREC_BITS, max_prec=4096):
    """All distinct roots of ``p`` with rigorous error radii below ``tol``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    s = squarefree_part(p)
    zeros = 0
    while s.coeffs and s.coeffs[0] == 0:
        s = IntPoly(s.coeffs[1:])
        zeros = 1
    if s.degree <= 0:
        return RootEnclosure((), (), zeros, prec)
    prec = max(prec, MIN_PREC_BITS)
    while prec <= max_prec:
        try:
            got = _certified_roots(s, prec)
        except mpmath.NoConvergence:
            got = None
        if got is not None:
            roots, radii = got
            if max(radii) < tol:
                return RootEnclosure(tuple(roots), tuple(radii), zeros, prec)
        prec *= 2
    raise NonConvergence(f"could not isolate the roots of a degree-{s.degree} polynomial")


def root_modulus_bound(p, tol=DEFAULT_TOL):
    """(largest root modulus, certified error) for an integer polynomial."""
    enc = enclose_roots(p, tol)
    if not enc.roots:
        return mpmath.mpf(0), 0.0
    with mpmath.workprec(enc.prec):
        mods = [abs(z) for z in enc.roots]
        rho = max(mods)
        upper = max(m + r for m, r in zip(mods, enc.radii))
        lower = max(m - r for m, r in zip(mods, enc.radii))
        err = max(upper - rho, rho - lower, mpmath.mpf(2) ** (8 - enc.prec))
    return +rho, float(err)


def largest_real_root(p, tol=DEFAULT_TOL):
    """Largest real root of ``p`` (None when there is none)."""
    enc = enclose_roots(p, tol)
    best = None
    with mpmath.workprec(enc.prec):
        for z, r in zip(enc.roots, enc.radii):
            if abs(mpmath.im(z)) <= r:
                x = mpmath.re(z)
                if best is None or x > best:
                    best = x
        if enc.zero_multiplicity and (best is None or best < 0):
            best = mpmath.mpf(0)
    return best


def _power_iteration(m, tol):
    """Exact power iteration from the all-ones vector. Returns the limiting
    entry ratio, or None when the spread does not fall below ``tol``."""
    sparse = [[(c, val) for c, val in enumerate(row) if val] for row in m.entries]
    v = [1] * m.n
    prev = None
    with mpmath.workprec(MIN_PREC_BITS):
        for _ in range(POWER_ITERATION_WINDOW):
            w = [sum(val * v[c] for c, val in row) for row in sparse]
            top = max(abs(t) for t in v)
            if top == 0:
                return None
            cut = mpmath.mpf(top) * mpmath.mpf(2) ** -20
            ratios = [mpmath.mpf(wi) / vi for wi, vi in zip(w, v) if vi and abs(vi) >= cut]
            hi, lo = max(ratios), min(ratios)
            if lo > 0 and hi - lo < tol and prev is not None and abs(hi - prev) < tol:
                return (hi + lo) / 2
            prev = hi
            g = 0
            for t in w:
                g = gcd(g, t)
            v = [t // g for t in w] if g > 1 else w
    return None


def spectral_radius(m, tol=DEFAULT_TOL):
    """Spectral radius certified by a root solve of the characteristic
    polynomial, cross-checked by exact power iteration when that converges."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    m = as_matrix(m)
    cp = charpoly(m)
    rho, err = root_modulus_bound(cp, tol)
    tags = ["charpoly-roots"]
    pi = _power_iteration(m, tol)
    if pi is not None:
        if abs(pi - rho) > 10 * tol:
            raise NonConvergence(
                f"root solve gives {mpmath.nstr(rho, 15)} but power iteration gives "
                f"{mpmath.nstr(pi, 15)}")
        tags.append("power-iteration")
    else:
        tags.append("power-iteration-fallback")
    with mpmath.workprec(MIN_PREC_BITS):
        delta = rho * rho
    return SpectralResult(rho, delta, err, tuple(tags))


def spectral_radius_of_poly(p, tol=DEFAULT_TOL):
    """Largest root modulus of a polynomial (root solve only)."""
    rho, err = root_modulus_bound(p, tol)
    with mpmath.workprec(MIN_PREC_BITS):
        delta = rho * rho
    return SpectralResult(rho, delta, err, ("charpoly-roots",))


def unit_circle_cofactor_check(p, q, slack=1e-6):
    """True iff every root of p/q has modulus at most 1 + slack."""
    cof = p.exact_divide(q)
    if cof.degree <= 0:
        return True
    rho, _ = root_modulus_bound(cof, tol=min(slack, 1e-3) / 10)
    return bool(rho <= 1 + slack)
