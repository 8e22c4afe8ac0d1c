"""JSON and CSV serialization of labelled pullback matrices.

JSON layout::

    {"q": 45, "case": "Odd", "basis_kind": "Symmetrized",
     "labels": ["H", "E_0", ...],
     "columns_are_images": true,
     "entries": [["22", "1", ...], ...]}

``entries[i][j]`` is the coefficient of labels[i] in f_X^*(labels[j]), as a
decimal string. The CSV form has a header ``label,<labels...>`` followed by
one row per basis element, with the same row/column convention.
"""

import csv
import io
import json

from ..divisors import Case
from ..numeric import BigIntMatrix
from .basis import BasisKind, parse_label
from .pic import PicMatrix


def to_dict(m):
    return {
        "q": m.q,
        "case": m.case.value,
        "basis_kind": m.basis_kind.value,
        "labels": m.labels,
        "columns_are_images": True,
        "entries": [[str(v) for v in row] for row in m.matrix.entries],
    }


def to_json(m, indent=None):
    return json.dumps(to_dict(m), indent=indent)


def _half(q, case):
    return q // 4 if case == Case.DIVISIBLE_BY_4 else None


def from_dict(d):
    case = Case(d["case"])
    kind = BasisKind.parse(d["basis_kind"])
    basis = [parse_label(s, kind, _half(d["q"], case)) for s in d["labels"]]
    entries = [[int(v) for v in row] for row in d["entries"]]
    return PicMatrix(BigIntMatrix(entries, basis), d["q"], case, kind)


def from_json(text):
    return from_dict(json.loads(text))


def to_csv(m):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label"] + m.labels)
    for label, row in zip(m.labels, m.matrix.entries):
        w.writerow([label] + [str(v) for v in row])
    return buf.getvalue()


def from_csv(text, q, case, basis_kind):
    """Read a CSV written by to_csv; q, case and kind are not stored in it."""
    case = Case(case) if not isinstance(case, Case) else case
    kind = BasisKind.parse(basis_kind)
    rows = list(csv.reader(io.StringIO(text)))
    labels = rows[0][1:]
    basis = [parse_label(s, kind, _half(q, case)) for s in labels]
    entries = []
    for row, label in zip(rows[1:], labels):
        if row[0] != label:
            raise ValueError(f"row label {row[0]!r} does not match column label {label!r}")
        entries.append([int(v) for v in row[1:]])
    return PicMatrix(BigIntMatrix(entries, basis), q, case, kind)


def rows_from_text(lines, basis):
    """Build column images from lines such as "A_15 -> H - E - Gamma_5".

    Used to load fixtures transcribed as image rows. ``basis`` is the list of
    BasisElement in the intended order.
    """
    by_label = {b.label: b for b in basis}
    cols = {}
    for line in lines:
        src, rhs = (s.strip() for s in line.split("->"))
        cols[by_label[src]] = _parse_combination(rhs, by_label)
    return cols


def _parse_combination(text, by_label):
    out = {}
    tokens = text.replace("-", " - ").replace("+", " + ").split()
    sign = 1
    for tok in tokens:
        if tok in "+-":
            sign = -1 if tok == "-" else 1
            continue
        i = 0
        while i < len(tok) and tok[i].isdigit():
            i += 1
        coeff = int(tok[:i]) if i else 1
        label = tok[i:]
        if label not in by_label:
            raise ValueError(f"unknown label {label!r} in {text!r}")
        b = by_label[label]
        out[b] = out.get(b, 0) + sign * coeff
        sign = 1
    return {b: c for b, c in out.items() if c}
