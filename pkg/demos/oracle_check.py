"""Compare measured degrees on a random line with (M^n)[H, H] for a few q."""

import sys
import time

from dyndeg.oracle import MapKind, compare, run_oracle_two_primes
from dyndeg.picard import BasisKind, build_cyclic, build_symmetric


def check(q, kind, n_max):
    t = time.perf_counter()
    a, _ = run_oracle_two_primes(q, kind, n_max)
    m = build_cyclic(q) if kind == MapKind.CYCLIC else build_symmetric(q, BasisKind.FULL)
    rep = compare(a, m)
    status = "match" if rep.matches else f"first mismatch (n, measured, predicted) = {rep.first_mismatch}"
    print(f"{kind.value:<16} q={q:<3} n<={n_max}  {list(a.degrees)}  {status}  "
          f"({time.perf_counter() - t:.1f}s)")


def main(n_max=5):
    for q in (3, 4, 5, 6):
        check(q, MapKind.CYCLIC, n_max)
    for q in (5, 7, 9, 10, 12, 14, 16, 30):
        check(q, MapKind.SYMMETRIC, min(n_max, 4 if q > 9 else n_max))


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:2]))
