#!/usr/bin/env python3
"""Tabulate which pairs of small abelian groups carry a pairing.

For each pair (A, B) up to the given order the script reports whether the
canonical map onto the tensor product is non-degenerate, how that was
decided, and the sizes of its two kernels.  Output is CSV on stdout.

    python scripts/pairing_census.py --max-order 32 > census.csv
"""

from __future__ import annotations

import argparse
import csv
import sys

from abpair import bilinear as bil
from abpair.oracle import abelian_groups
from abpair.tensor import canonical_map


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-order", type=int, default=32)
    args = ap.parse_args(argv)

    groups = abelian_groups(args.max_order)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["A", "B", "tensor", "pairing", "method", "left_kernel", "right_kernel"])
    for A in groups:
        for B in groups:
            f = canonical_map(A, B)
            v = bil.nondegeneracy(f)
            kp = bil.kernels(f)
            out.writerow([A, B, f.target, v.pairing, v.method, len(kp.left_kernel), len(kp.right_kernel)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
