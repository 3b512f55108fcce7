"""Compare minor-maximal graphs with saturated crowded parades for every small (n, m, k)."""

from __future__ import annotations

import argparse
import sys

from specfloor import census
from specfloor.extremal import admissible, build_crowded_parade, crowded_specs, is_crowded_parade, verify_maximality
from specfloor.floor import FloorMemo
from specfloor.io import encode


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    memo = FloorMemo()
    bad = 0
    for m in (1, 2):
        for n in range(1, args.max_n + 1):
            universe = census.all_graphs(n) if m == 1 else census.all_multigraphs(n)
            for k in range(n):
                cls = [g for g in universe if memo.value(g) == k]
                maximal = {g.key: g for g in cls if verify_maximality(g, m, memo)}
                crowded = {g.key for g in cls if (s := is_crowded_parade(g, m)) is not None and s.floor == k}
                built = {build_crowded_parade(s).key for s in crowded_specs(n, m, k)}
                agree = set(maximal) == crowded == built
                tag = "ok  " if agree else "DIFF"
                if not admissible(n, k, m):
                    tag = "n/a "
                    extra = "  " + " ".join(encode(g) for g in maximal.values()) if maximal else ""
                    print(f"{tag} m={m} n={n} k={k}: {len(maximal)} maximal, outside the admissible range{extra}")
                    continue
                bad += not agree
                print(f"{tag} m={m} n={n} k={k}: {len(maximal)} maximal, {len(crowded)} crowded, {len(built)} built")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
