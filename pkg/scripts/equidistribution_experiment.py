"""Root ratios v/p of a quadratic congruence over primes in a progression."""

import argparse

from sympy import primepi

from hyperint.equidist import (
    Progression,
    QuadraticPoly,
    count_mod_p2_roots,
    count_prime_square_values,
    histogram,
    sample_X,
    star_discrepancy,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poly", default="1,0,-2")
    parser.add_argument("--mod", type=int, default=8)
    parser.add_argument("--res", default="1,7")
    parser.add_argument("--xmax", type=int, nargs="+", default=[10**3, 10**4, 10**5])
    parser.add_argument("--bins", type=int, default=10)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    f = QuadraticPoly(*map(int, args.poly.split(",")))
    prog = Progression(args.mod, tuple(map(int, args.res.split(","))))
    for x in args.xmax:
        samples = sample_X(f, prog, x, args.threads)
        d = star_discrepancy(samples)
        p2, _ = count_mod_p2_roots(f, prog, x, args.threads)
        sq = count_prime_square_values(f, prog, x, 1)
        print(f"x={x:>7}  N={len(samples):>6}  D*={float(d):.5f}  p^2 roots={p2}  square values={sq}  pi(x)={primepi(x)}")
        print("          histogram", histogram(samples, args.bins))


if __name__ == "__main__":
    main()
