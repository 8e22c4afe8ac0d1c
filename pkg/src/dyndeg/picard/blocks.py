"""Block determinants used to expand characteristic polynomials by hand.

D(a) = [[-x, a], [1, -x]] and U(a) = [[0, a], [0, 0]]. M_n(a_1..a_n) is
block upper triangular with D(a_j) on the diagonal and U(a_j) above it in
block column j. M'_n borders M_{n-1} with a column of U(a_n) blocks, the row
[U(a_1), 0, ..., 0] and the corner B = [[0, 0], [1, -x]].
"""

from ..numeric import IntPoly, X, cofactor_determinant

_ZERO = IntPoly()
_ONE = IntPoly.constant(1)


def _c(a):
    return IntPoly.constant(a)


def _D(a):
    return [[-X, _c(a)], [_ONE, -X]]


def _U(a):
    return [[_ZERO, _c(a)], [_ZERO, _ZERO]]


def _Z():
    return [[_ZERO, _ZERO], [_ZERO, _ZERO]]


def _assemble(blocks):
    rows = []
    for block_row in blocks:
        for r in range(2):
            rows.append([e for blk in block_row for e in blk[r]])
    return rows


def literal_Mn(a):
    """The 2n x 2n matrix M_n(a_1, ..., a_n) with entries in Z[x]."""
    n = len(a)
    blocks = [[_D(a[i]) if i == j else (_U(a[j]) if j > i else _Z()) for j in range(n)]
              for i in range(n)]
    return _assemble(blocks)


def literal_Mprime(a):
    """The 2n x 2n matrix M'_n(a_1, ..., a_n)."""
    n = len(a)
    if n < 2:
        raise ValueError("M'_n needs n >= 2")
    inner = literal_Mn(a[:-1])
    rows = []
    for i, row in enumerate(inner):
        tail = _U(a[-1])[i % 2]
        rows.append(list(row) + list(tail))
    bottom = [_assemble([[_U(a[0])] + [_Z()] * (n - 2) + [[[_ZERO, _ZERO], [_ONE, -X]]]])]
    return rows + bottom[0]


def literal_determinant(rows):
    return cofactor_determinant(rows, zero=_ZERO, one=_ONE)


def block_determinant_Mn(a):
    """det M_n(a) = prod_j (x^2 - a_j)."""
    if len(a) < 1:
        raise ValueError("M_n needs n >= 1")
    out = _ONE
    for aj in a:
        out = out * (X * X - aj)
    return out


def block_determinant_Mprime(a):
    """det M'_n(a) by the recursion over the first block row.

    det M'_2 = -a_1 a_2 and, for n >= 3,
    det M'_n = a_1 [ sum_{k=2}^{n-1} prod_{j=2}^{k-1} (x^2 - a_j) det M'_{n-k+1}(a_k..a_n)
                     - a_n prod_{j=2}^{n-1} (x^2 - a_j) ].
    """
    a = list(a)
    n = len(a)
    if n < 2:
        raise ValueError("M'_n needs n >= 2")
    if n == 2:
        return _c(-a[0] * a[1])
    acc = _ZERO
    prefix = _ONE
    for k in range(2, n):
        acc = acc + prefix * block_determinant_Mprime(a[k - 1:])
        prefix = prefix * (X * X - a[k - 1])
    acc = acc - prefix * a[-1]
    return acc * a[0]
