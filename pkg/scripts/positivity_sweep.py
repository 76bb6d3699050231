"""Sweep q-coefficient positivity for the built-in families over growing boxes.

    python scripts/positivity_sweep.py --families Aq Cq --max-box 6 --jobs 4

Prints one row per (family, box): status, points, the minimum coefficient and
where it occurs, and wall time.  Use --json to keep the full reports.
"""

import argparse
import json
import time

from qrious.families import FAMILY_NAMES, get_family
from qrious.qratio import positivity_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--families", nargs="+", default=["Aq", "Cq", "superCatalan", "family3"],
                    choices=FAMILY_NAMES)
    ap.add_argument("--max-box", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json")
    args = ap.parse_args()

    rows = []
    print(f"{'family':<13}{'box':>4}  {'status':<25}{'points':>7}  {'min coeff':<24}{'time':>8}")
    for name in args.families:
        for box in range(1, args.max_box + 1):
            start = time.perf_counter()
            rep = positivity_scan(get_family(name).spec, box, family=name, jobs=args.jobs)
            elapsed = time.perf_counter() - start
            mc = rep.min_coefficient
            where = f"{mc['value']} at {mc['point']} q^{mc['power']}" if mc else "-"
            print(f"{name:<13}{box:>4}  {rep.status:<25}{rep.points_checked:>7}  "
                  f"{where:<24}{elapsed:>7.2f}s")
            rows.append(rep.to_dict())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
