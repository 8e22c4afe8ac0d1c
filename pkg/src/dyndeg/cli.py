"""Command-line front end.

Subcommands: delta, table, matrix, charpoly, oracle, verify. Exit status is
0 on success, 2 for invalid input, 3 for a failed cross-check and 4 when the
oracle runs out of retries on degenerate lines.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import mpmath

from .cyclotomic import split_cyclotomic
from .divisors import classify
from .errors import CrossCheckFailure, DyndegError, UnsupportedQ
from .lemmas import verify_orbit_lemmas
from .numeric import DEFAULT_TOL, IntPoly, charpoly, largest_real_root, spectral_radius, spectral_radius_of_poly
from .oracle import MapKind, compare, run_oracle
from .picard import BasisKind, build_cyclic, build_symmetric, closed_form
from .picard.export import to_csv, to_json

WORKERS_ENV = "DYNDEG_WORKERS"
CSV_HEADER = ["q", "case", "basis_size", "rho", "delta", "method"]
SIG_DIGITS = 12


def _num(x):
    return mpmath.nstr(x, SIG_DIGITS, min_fixed=-4, max_fixed=SIG_DIGITS)


@dataclass
class DeltaReport:
    q: int
    case: str
    basis_kind: str
    basis_size: int
    charpoly: list
    dominant_factor: list
    rho: str
    delta: str
    certified_error: float
    method: str
    closed_form_used: bool = False
    oracle_checked: bool = False
    timings: dict = field(default_factory=dict)

    def to_dict(self, timings=True):
        d = {
            "q": self.q, "case": self.case, "basis_kind": self.basis_kind,
            "basis_size": self.basis_size, "charpoly": self.charpoly,
            "dominant_factor": self.dominant_factor, "rho": self.rho, "delta": self.delta,
            "certified_error": self.certified_error, "method": self.method,
            "closed_form_used": self.closed_form_used, "oracle_checked": self.oracle_checked,
        }
        if timings:
            d["timings"] = self.timings
        return d


def _coeff_strings(p):
    return [str(c) for c in p.coeffs]


def cyclic_delta(q):
    """rho^2 with rho the largest root of x^2 + (2 - q) x + 1."""
    return spectral_radius_of_poly(IntPoly([1, 2 - q, 1])).delta


def compute_delta(q, basis=BasisKind.SYMMETRIZED, tol=DEFAULT_TOL, use_closed_form=False,
                  check_oracle=0, seed=0):
    """Build the matrix for q, extract rho and delta, and run the optional checks."""
    timings = {}
    t = time.perf_counter()
    m = build_symmetric(q, BasisKind.parse(basis))
    timings["build"] = time.perf_counter() - t
    t = time.perf_counter()
    cp = charpoly(m.matrix)
    _, _, dom = split_cyclotomic(cp)
    timings["charpoly"] = time.perf_counter() - t
    t = time.perf_counter()
    res = spectral_radius(m, tol)
    timings["spectral"] = time.perf_counter() - t
    used = False
    if use_closed_form:
        t = time.perf_counter()
        cf = closed_form(q)
        root = largest_real_root(cf, tol)
        if root is None or abs(root - res.rho) > 10 * tol:
            raise CrossCheckFailure(
                f"closed form for q={q} gives {mpmath.nstr(root, 15)}, matrix gives "
                f"{mpmath.nstr(res.rho, 15)}",
                {"q": q, "closed_form": _coeff_strings(cf), "rho": _num(res.rho)})
        used = True
        timings["closed_form"] = time.perf_counter() - t
    checked = False
    if check_oracle:
        t = time.perf_counter()
        seq = run_oracle(q, MapKind.SYMMETRIC, check_oracle, seed=seed)
        rep = compare(seq, m)
        if not rep.matches:
            raise CrossCheckFailure(f"oracle disagrees with the matrix for q={q}", rep.to_dict())
        checked = True
        timings["oracle"] = time.perf_counter() - t
    return DeltaReport(
        q=q, case=m.case.value, basis_kind=m.basis_kind.value, basis_size=m.n,
        charpoly=_coeff_strings(cp),
        dominant_factor=_coeff_strings(dom) if dom.degree > 0 else None,
        rho=_num(res.rho), delta=_num(res.delta), certified_error=float(res.certified_error),
        method="+".join(res.method_tags), closed_form_used=used, oracle_checked=checked,
        timings={k: round(v, 6) for k, v in timings.items()})


def _table_row(args):
    q, tol = args
    row = {"q": q, "cyclic_delta": _num(cyclic_delta(q))}
    try:
        rep = compute_delta(q, tol=tol)
        row.update({"case": rep.case, "basis_size": rep.basis_size, "rho": rep.rho,
                    "delta": rep.delta, "method": rep.method, "error": None})
    except DyndegError as exc:
        row.update({"case": classify(q).value, "basis_size": None, "rho": None, "delta": None,
                    "method": None, "error": f"{type(exc).__name__}: {exc}"})
    return row


def _workers():
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UnsupportedQ(f"{WORKERS_ENV} must be an integer, got {raw!r}")


def table_rows(q_from, q_to, tol=DEFAULT_TOL, workers=1):
    jobs = [(q, tol) for q in range(q_from, q_to + 1)]
    if workers == 1:
        return [_table_row(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_table_row, jobs))


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _need_q(q):
    if q is None:
        raise UnsupportedQ("--q is required")
    if q < 3:
        raise UnsupportedQ(f"q must be at least 3, got {q}")
    return q


def _basis(args):
    return BasisKind.FULL if getattr(args, "full", False) else BasisKind.parse(args.basis)


def cmd_delta(args):
    q = _need_q(args.q)
    rep = compute_delta(q, _basis(args), args.tol, args.closed_form, args.check_oracle, args.seed)
    _emit(_dump(rep.to_dict(timings=not args.no_timings)), args.out)
    return 0


def cmd_table(args):
    if args.q_from is None or args.q_to is None:
        raise UnsupportedQ("--q-from and --q-to are required")
    if not 3 <= args.q_from <= args.q_to:
        raise UnsupportedQ("need 3 <= q-from <= q-to")
    rows = table_rows(args.q_from, args.q_to, args.tol, _workers())
    if args.format == "json":
        text = "".join(json.dumps(r) + "\n" for r in rows)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            w.writerow(["" if r[k] is None else r[k] for k in CSV_HEADER])
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def _matrix_for(args):
    q = _need_q(args.q)
    if args.cyclic:
        return build_cyclic(q)
    return build_symmetric(q, _basis(args))


def cmd_matrix(args):
    m = _matrix_for(args)
    if args.format == "csv":
        text = to_csv(m)
    else:
        text = to_json(m, indent=None) + "\n"
    _emit(text, args.out)
    return 0


def cmd_charpoly(args):
    m = _matrix_for(args)
    cp = charpoly(m.matrix)
    zeros, cyc, dom = split_cyclotomic(cp)
    obj = {"q": m.q, "case": m.case.value, "basis_kind": m.basis_kind.value,
           "charpoly": _coeff_strings(cp), "text": str(cp),
           "x_power": zeros, "cyclotomic_factors": {str(k): v for k, v in sorted(cyc.items())},
           "dominant_factor": _coeff_strings(dom) if dom.degree > 0 else None}
    _emit(_dump(obj), args.out)
    return 0


def cmd_oracle(args):
    q = _need_q(args.q)
    kind = MapKind.CYCLIC if args.cyclic else MapKind.SYMMETRIC
    seq = run_oracle(q, kind, args.n, trials=args.trials, seed=args.seed)
    m = build_cyclic(q) if args.cyclic else build_symmetric(q, BasisKind.FULL)
    rep = compare(seq, m)
    obj = {"sequence": seq.to_dict(), "compare": rep.to_dict()}
    _emit(_dump(obj), args.out)
    return 0 if rep.matches else 3


def cmd_verify(args):
    q = _need_q(args.q)
    rep = verify_orbit_lemmas(q, seed=args.seed)
    _emit(_dump(rep.to_dict()), args.out)
    return 0 if rep.passed else 3


def build_parser():
    ap = argparse.ArgumentParser(prog="dyndeg", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, basis=True):
        p.add_argument("--q", type=int)
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--seed", type=int, default=0)
        if basis:
            p.add_argument("--basis", default="symmetrized", choices=["full", "symmetrized"])
            p.add_argument("--full", action="store_true", help="same as --basis full")
        return p

    p = common(sub.add_parser("delta", help="dynamical degree for one q"))
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--check-oracle", type=int, default=0, metavar="N")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("table", help="one row per q in a range")
    p.add_argument("--q-from", type=int)
    p.add_argument("--q-to", type=int)
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_table)

    for name, func, hlp in (("matrix", cmd_matrix, "export the pullback matrix"),
                            ("charpoly", cmd_charpoly, "characteristic polynomial")):
        p = common(sub.add_parser(name, help=hlp))
        p.add_argument("--cyclic", action="store_true", help="the cyclic (not symmetric) map")
        if name == "matrix":
            p.add_argument("--format", default="json", choices=["json", "csv"])
        p.set_defaults(func=func)

    p = common(sub.add_parser("oracle", help="measured degrees vs matrix powers"), basis=False)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--trials", type=int, default=2)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = common(sub.add_parser("verify", help="exact orbit lemma checks"), basis=False)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CrossCheckFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.payload is not None:
            print(json.dumps(exc.payload, default=str), file=sys.stderr)
        return exc.exit_code
    except DyndegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
