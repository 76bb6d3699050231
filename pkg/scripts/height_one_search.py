"""List the primitive balanced height-one integral ratios up to a coefficient sum.

    python scripts/height_one_search.py --max-sum 40 --max-terms 2

Sporadic ratios (those not of the shape (a+b; a, b) with one numerator term)
are printed separately since the one-term ones are just binomial coefficients.
"""

import argparse
from collections import Counter

from qrious.search import search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-sum", type=int, default=31)
    ap.add_argument("--max-terms", type=int, default=2)
    args = ap.parse_args()

    found = search(args.max_sum, args.max_terms)
    counts = Counter(c.verdict for c in found)
    integral = [c for c in found if c.verdict == "Integral"]
    sporadic = [c for c in integral if len(c.numerator) > 1]
    for c in sporadic:
        print(c.label())
    print(f"# {len(found)} candidates, {dict(sorted(counts.items()))}")
    print(f"# {len(integral) - len(sporadic)} binomial-type, {len(sporadic)} with two or more "
          f"numerator terms")


if __name__ == "__main__":
    main()
