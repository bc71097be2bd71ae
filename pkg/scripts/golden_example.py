"""Decide and scan the four-parameter quadratic family for several D."""

import argparse
import time
from fractions import Fraction

from hyperint import QuadraticNumber as Q
from hyperint.oracle import ValuationScanConfig, scan_details
from hyperint.quadratic_criterion import decide_thm14, decompose


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--D", type=int, nargs="+", default=[2, -1, 5, -6])
    parser.add_argument("--pmax", type=int, default=500)
    parser.add_argument("--nmax", type=int, default=300)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    half = Fraction(1, 2)
    for D in args.D:
        start = time.perf_counter()
        alpha = [Q(0, 1, D), Q(0, -1, D), Q(half, 1, D), Q(half, -1, D)]
        sys = decompose(alpha, [Q(0, 2, D), Q(0, -2, D)])
        rep = decide_thm14(sys)
        above = scan_details(sys, ValuationScanConfig(args.pmax, args.nmax, p_min=3, threads=args.threads))
        every = scan_details(sys, ValuationScanConfig(args.pmax, args.nmax, p_min=3, p0=0, threads=args.threads))
        print(
            f"D={D:>3}  {rep.verdict} ({rep.route})  P0={above.p0}  "
            f"above P0: {len(above.scanned)} primes, {len(above.violations)} violations  "
            f"all odd p: {len(every.scanned)} primes, {len(every.violations)} violations  "
            f"{time.perf_counter() - start:.1f}s"
        )


if __name__ == "__main__":
    main()
