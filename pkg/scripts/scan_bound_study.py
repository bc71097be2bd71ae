"""How far must a direct scan go to confirm the per-prime verdict?

For random rational systems at their smallest valid prime, compare the
per-prime criterion with a scan up to n = p^2, and for each disagreement
report the witness index where the coefficient valuation actually drops.
"""

import argparse

from hyperint.oracle import ValuationScanConfig, scan
from hyperint.rational_criterion import coefficient_vp, decide_thm12
from hyperint.sampling import criterion_systems, smallest_valid_prime


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2, 3, 4, 5])
    parser.add_argument("--count", type=int, default=30)
    args = parser.parse_args()

    for seed in args.seeds:
        systems = criterion_systems(seed, args.count)
        bad = []
        for sys in systems:
            p = smallest_valid_prime(sys)
            rep = decide_thm12(sys, p)
            violated = bool(scan(sys, ValuationScanConfig(p_max=p, n_max=p * p, p_min=p)))
            if rep.holds == violated:
                bad.append((sys, p, rep))
        print(f"seed {seed}: {args.count - len(bad)}/{args.count} agree up to n=p^2")
        for sys, p, rep in bad:
            w = rep.witness
            n = w.get("n")
            v = coefficient_vp(sys.alpha, sys.beta, p, n) if n else None
            alpha = ",".join(map(str, sys.alpha))
            beta = ",".join(map(str, sys.beta))
            print(f"  alpha=({alpha}) beta=({beta}) p={p} {w['statement']} h={w.get('h')} n={n} (p^2={p * p}) v_p={v}")


if __name__ == "__main__":
    main()
