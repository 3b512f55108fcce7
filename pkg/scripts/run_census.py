"""Write a census catalog and print the distribution of spectator floors per vertex count."""

from __future__ import annotations

import argparse
import collections
import time

from specfloor.catalog import build_catalog, write_catalog


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--mode", choices=["simple", "multi"], default="simple")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="catalog.tsv")
    args = ap.parse_args()

    t0 = time.perf_counter()
    records = build_catalog("gen", args.max_n, args.mode, jobs=args.jobs)
    write_catalog(records, args.out)
    print(f"{len(records)} records -> {args.out} ({time.perf_counter() - t0:.1f}s)")

    table = collections.Counter((r.n, r.uspcf) for r in records)
    minimal = collections.Counter((r.n, r.uspcf) for r in records if r.minimal)
    floors = sorted({f for _, f in table})
    print("n  " + " ".join(f"f={f:<8}" for f in floors))
    for n in range(1, args.max_n + 1):
        cells = [f"{table[(n, f)]:>4}/{minimal[(n, f)]:<4}" for f in floors]
        print(f"{n:<2} " + " ".join(cells))
    print("cells: graphs / minor-minimal graphs")


if __name__ == "__main__":
    main()
