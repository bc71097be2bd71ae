"""Compare the shifted-beta condition with the Dwork ceiling condition."""

import argparse

from hyperint.oracle import dwork_ceiling_condition
from hyperint.rational_criterion import shifted_beta_condition
from hyperint.sampling import layer_systems


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--pmax", type=int, default=31)
    args = parser.parse_args()

    checks = holds = mismatches = 0
    for sys, primes in layer_systems(args.seed, args.count, p_max=args.pmax):
        for p in primes:
            for l in (1, 2):
                a = shifted_beta_condition(sys, p, l)
                b = dwork_ceiling_condition(sys, p, l)
                checks += 1
                holds += a
                if a != b:
                    mismatches += 1
                    print(f"mismatch: alpha={sys.alpha} beta={sys.beta} p={p} l={l}")
    print(f"{checks} checks, condition held in {holds}, {mismatches} mismatches")


if __name__ == "__main__":
    main()
