#!/usr/bin/env python3
"""Dimension-formula sweep over the enumerable groups of Lie type."""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from weylslice.fforacle import (
    cell_partition_check,
    conjugacy_classes,
    enumerate_group,
    verify_dimension_formula,
)

GROUPS = [("SL", 1, 3), ("SL", 1, 5), ("SL", 2, 3),
          ("Sp", 2, 3), ("SO-odd", 2, 3)]


def main():
    bad = 0
    for label, rank, q in GROUPS:
        t0 = time.time()
        group = enumerate_group(label, rank, q)
        cells = cell_partition_check(group)
        classes = conjugacy_classes(group)
        inconsistent = []
        for c in classes:
            rep = verify_dimension_formula(group, c)
            if not rep.formula_consistent:
                inconsistent.append((c.size, rep.dim, rep.tag))
        ok = cells["partition_total"] and cells["sizes_match"] \
            and not inconsistent
        bad += 0 if ok else 1
        print(f"{label}{rank} q={q}: order {group.order}, "
              f"{len(classes)} classes, cells ok={cells['sizes_match']}, "
              f"dimension formula {'PASS' if ok else 'FAIL'} "
              f"[{time.time() - t0:.1f}s]")
        for row in inconsistent:
            print("   inconsistent:", row)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
