"""Labelled pullback matrices and the passage to symmetrized bases."""

from dataclasses import dataclass

from ..divisors import Case
from ..errors import CrossCheckFailure, InvalidIndex
from ..numeric import BigIntMatrix
from .basis import H, BasisKind


@dataclass(frozen=True)
class PicMatrix:
    """f_X^* on Pic(X): column b holds the coordinates of f_X^*(b)."""

    matrix: BigIntMatrix
    q: int
    case: Case
    basis_kind: BasisKind

    @property
    def basis(self):
        return self.matrix.labels

    @property
    def n(self):
        return self.matrix.n

    @property
    def labels(self):
        return [b.label for b in self.basis]

    def element(self, key):
        """Resolve a BasisElement, a label string or a position."""
        if isinstance(key, str):
            for b in self.basis:
                if b.label == key:
                    return b
            raise InvalidIndex(f"no basis element labelled {key!r}")
        if isinstance(key, int) and not isinstance(key, bool):
            if 0 <= key < self.n:
                return self.basis[key]
            raise InvalidIndex(f"position {key} out of range")
        if key in self.matrix._index:
            return key
        raise InvalidIndex(f"{key!r} is not in this basis")

    def index(self, key):
        return self.matrix.index(self.element(key))

    def __getitem__(self, ij):
        i, j = ij
        return self.matrix.entries[self.index(i)][self.index(j)]

    def image(self, key):
        """f_X^*(b) as {BasisElement: coefficient}."""
        return self.matrix.column_image(self.element(key))

    @property
    def degree(self):
        return self[H, H]

    def image_text(self, key):
        return format_combination(self.image(key), self.basis)

    def rows_text(self):
        return [f"{b.label} -> {self.image_text(b)}" for b in self.basis]


def format_combination(coeffs, order):
    parts = []
    for b in order:
        c = coeffs.get(b, 0)
        if not c:
            continue
        mag = abs(c)
        body = b.label if mag == 1 else f"{mag}{b.label}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def from_columns(q, case, kind, basis, columns):
    return PicMatrix(BigIntMatrix.from_columns(basis, columns), q, case, kind)


def symmetrize(full, groups, drop=()):
    """Restrict f_X^* to the span of group sums, modulo the span of ``drop``.

    ``groups`` is a list of (new element, [full elements]). The dropped
    elements must span an invariant subspace, and the span of the group sums
    must be invariant modulo it; both are checked exactly.
    """
    members = [b for _, g in groups for b in g] + list(drop)
    if sorted(members, key=str) != sorted(full.basis, key=str) or len(set(members)) != len(members):
        raise CrossCheckFailure("symmetrization groups do not partition the basis")
    dropped = set(drop)
    for d in drop:
        leak = [b for b in full.image(d) if b not in dropped]
        if leak:
            raise CrossCheckFailure(f"{d.label} does not span an invariant subspace",
                                    {"element": d.label, "leak": [b.label for b in leak]})
    owner = {}
    for new, g in groups:
        for b in g:
            owner[b] = new
    columns = {}
    for new, g in groups:
        total = {}
        for b in g:
            for t, c in full.image(b).items():
                total[t] = total.get(t, 0) + c
        image = {}
        for new2, g2 in groups:
            vals = {total.get(b, 0) for b in g2}
            if len(vals) != 1:
                raise CrossCheckFailure(
                    f"image of {new.label} is not constant on {new2.label}",
                    {"source": new.label, "group": new2.label,
                     "coefficients": {b.label: total.get(b, 0) for b in g2}})
            v = vals.pop()
            if v:
                image[new2] = v
        columns[new] = image
    basis = [new for new, _ in groups]
    return from_columns(full.q, full.case, BasisKind.SYMMETRIZED, basis, columns)
