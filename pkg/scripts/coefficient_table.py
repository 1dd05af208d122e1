#!/usr/bin/env python3
"""Print a table of heat-trace coefficients a(n, d).

The markdown format is meant for eyeballing; csv matches the layout the
CLI emits so downstream tooling only needs one parser.
"""

import argparse
import csv
import sys

from heatsphere.invariants import heat_invariant


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--max-d", type=int, default=8)
    parser.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    args = parser.parse_args()
    if args.max_n < 0 or args.max_d < 1:
        parser.error("need --max-n >= 0 and --max-d >= 1")

    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "d", "omega", "route", "num", "den", "pi_half", "float"])
        for n in range(args.max_n + 1):
            for d in range(1, args.max_d + 1):
                res = heat_invariant(n, d)
                v = res.value
                writer.writerow(
                    [n, d, "", res.route, v.coeff.numerator, v.coeff.denominator,
                     v.pi_half, repr(float(v))]
                )
        return 0

    header = ["n \\ d"] + [str(d) for d in range(1, args.max_d + 1)]
    rows = []
    for n in range(args.max_n + 1):
        row = [str(n)]
        for d in range(1, args.max_d + 1):
            row.append(str(heat_invariant(n, d).value))
        rows.append(row)
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    print(" | ".join(h.ljust(w) for h, w in zip(header, widths)))
    print("-|-".join("-" * w for w in widths))
    for row in rows:
        print(" | ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
