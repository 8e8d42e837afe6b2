#!/usr/bin/env python3
"""Classify a seeded batch of random maps and tabulate the verdicts.

Samples random bivariate representatives p, builds phi = p(x*z + y^2, z),
classifies the resulting map, and reports verdict counts plus the
distribution of Lojasiewicz exponents.  Every map in this family is an
automorphism, so NotAutomorphism never appears; the interesting split is
wild versus tame versus undecided.

Run:  python scripts/random_survey.py --count 200 --dvmax 8 --seed 1
"""

import argparse
import random
from collections import Counter

from nagata import classify, expand_bivariate, loj_exponent, random_poly2


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--dvmax", type=int, default=8)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    verdicts = Counter()
    exponents = Counter()
    for _ in range(args.count):
        p = random_poly2(rng, args.dvmax)
        verdicts[classify(expand_bivariate(p)).verdict.value] += 1
        exponents[loj_exponent(p).exponent] += 1

    print(f"{args.count} random maps, d_v(p) <= {args.dvmax}, seed {args.seed}")
    print()
    print("verdicts:")
    for verdict, n in verdicts.most_common():
        print(f"  {verdict:<28} {n:>5}  ({100 * n / args.count:.1f}%)")
    print()
    print("lojasiewicz exponents:")
    for exponent in sorted(exponents, reverse=True):
        print(f"  {str(exponent):>5}  {exponents[exponent]:>5}")


if __name__ == "__main__":
    main()
