"""Print the dynamical degree of the symmetric cyclic map for a range of q."""

import sys

import mpmath

from dyndeg.cli import compute_delta, cyclic_delta


def main(q_from=3, q_to=30):
    print(f"{'q':>3} {'case':<16} {'size':>4} {'rho':>14} {'delta':>14} {'cyclic delta':>14}")
    for q in range(q_from, q_to + 1):
        rep = compute_delta(q)
        print(f"{q:>3} {rep.case:<16} {rep.basis_size:>4} {mpmath.nstr(mpmath.mpf(rep.rho), 10):>14} "
              f"{mpmath.nstr(mpmath.mpf(rep.delta), 10):>14} {mpmath.nstr(cyclic_delta(q), 10):>14}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
