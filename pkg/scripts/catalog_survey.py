#!/usr/bin/env python3
"""Survey the group catalog: orders, class counts, centers, central
decompositions, semi-regular elements, and factorization counts.

Usage: python scripts/catalog_survey.py [--max-order N] [--json]
"""

import argparse
import json

from setdirect.catalog import catalog_group, catalog_names
from setdirect.central import enumerate_central_decompositions, semi_regular_elements
from setdirect.errors import SearchSpaceTooLarge
from setdirect.groups import center, conjugacy_classes
from setdirect.oracle import enumerate_setdirect


def survey(max_order: int):
    rows = []
    for name in catalog_names():
        g = catalog_group(name)
        if g.order > max_order:
            continue
        try:
            res = enumerate_setdirect(g, normalized_only=True, time_budget=20.0)
            counts = (res.total, res.nontrivial, res.normalized)
        except SearchSpaceTooLarge:
            counts = None
        rows.append(
            {
                "name": g.name,
                "order": g.order,
                "k": len(conjugacy_classes(g)),
                "center": len(center(g)),
                "central_decompositions": len(enumerate_central_decompositions(g)),
                "semi_regular": len(semi_regular_elements(g)),
                "factorizations_total": counts[0] if counts else None,
                "factorizations_nontrivial": counts[1] if counts else None,
                "factorizations_normalized": counts[2] if counts else None,
            }
        )
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=32)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = survey(args.max_order)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    hdr = f"{'group':10s} {'|G|':>4s} {'k':>3s} {'|Z|':>4s} {'#cp':>4s} {'#sr':>4s} {'total':>8s} {'nontriv':>8s} {'norm':>6s}"
    print(hdr)
    print("-" * len(hdr))
    for r in rows:
        tot = "-" if r["factorizations_total"] is None else r["factorizations_total"]
        ntr = "-" if r["factorizations_nontrivial"] is None else r["factorizations_nontrivial"]
        nrm = "-" if r["factorizations_normalized"] is None else r["factorizations_normalized"]
        print(
            f"{r['name']:10s} {r['order']:4d} {r['k']:3d} {r['center']:4d} "
            f"{r['central_decompositions']:4d} {r['semi_regular']:4d} "
            f"{tot!s:>8s} {ntr!s:>8s} {nrm!s:>6s}"
        )


if __name__ == "__main__":
    main()
