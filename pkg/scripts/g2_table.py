"""Tabulate the G2 constant term against A_q(m, n) for m + n <= N.

    python scripts/g2_table.py --max-total 4
"""

import argparse
import time

from qrious.families import get_family
from qrious.g2 import g2_product, constant_term
from qrious.qratio import q_ratio_poly


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-total", type=int, default=3)
    ap.add_argument("--budget", type=int)
    args = ap.parse_args()

    spec = get_family("Aq").spec
    print(f"{'m':>2} {'n':>2} {'terms':>8} {'deg':>5} {'A(m,n)':>14}  match  time")
    for total in range(args.max_total + 1):
        for m in range(total, -1, -1):
            n = total - m
            start = time.perf_counter()
            prod = g2_product(m, n, args.budget)
            ct = constant_term(prod)
            expected = q_ratio_poly(spec, (m, n))
            elapsed = time.perf_counter() - start
            print(f"{m:>2} {n:>2} {len(prod):>8} {ct.degree:>5} {ct(1):>14}  "
                  f"{'yes' if ct == expected else 'NO':>5}  {elapsed:.2f}s")


if __name__ == "__main__":
    main()
