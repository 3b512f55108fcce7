"""Sweep the census for minor-minimal graphs with floor 0, 1 and 2 and compare with the known lists."""

from __future__ import annotations

import argparse
import sys
import time

from specfloor.floor import FloorMemo
from specfloor.lists import verify_disconnected, verify_list


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--simple-max-n", type=int, default=7)
    ap.add_argument("--multi-max-n", type=int, default=5)
    args = ap.parse_args()
    ok = True
    for mode, max_n in (("simple", args.simple_max_n), ("multi", args.multi_max_n)):
        memo = FloorMemo()
        t0 = time.perf_counter()
        for k in (0, 1, 2):
            rep = verify_list(k, mode, max_n, memo)
            ok &= rep.passed
            print("\n".join(rep.lines()))
        for name, good in verify_disconnected(mode, memo):
            ok &= good
            print(f"{'PASS' if good else 'FAIL'} {mode} disconnected member {name}")
        print(f"  {mode}: {len(memo.table)} floors computed in {time.perf_counter() - t0:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
