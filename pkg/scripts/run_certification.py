#!/usr/bin/env python3
"""Desk-scale certification sweep.

Runs the full delightfulness pipeline (membership oracle, initial-ideal
match, optional Buchberger) for a range of ambient sizes, both ideals and
both inner orders, and prints one table row per configuration.  Exits
nonzero if any certificate fails.

Typical runs:
    python scripts/run_certification.py --n-max 6
    python scripts/run_certification.py --n-max 6 --buchberger --threads 4
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hypersecant import CircularTermOrder, delightful_check  # noqa: E402

BUCHBERGER_BOUND = {"secant": 6, "symbolic-square": 6}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--kinds", default="secant,symbolic-square")
    ap.add_argument("--orders", default="grevlex,lex")
    ap.add_argument("--buchberger", action="store_true")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    inners = [o.strip() for o in args.orders.split(",") if o.strip()]
    print(f"{'n':>3} {'kind':<16} {'inner':<8} {'gens':>5} {'spairs':>7} {'result':<6} {'time':>8}")
    all_ok = True
    for n in range(args.n_min, args.n_max + 1):
        for kind in kinds:
            for inner in inners:
                with_b = args.buchberger and n <= BUCHBERGER_BOUND.get(kind, 6)
                t0 = time.perf_counter()
                cert = delightful_check(
                    n, kind, CircularTermOrder(n, inner),
                    with_buchberger=with_b, threads=args.threads,
                )
                dt = time.perf_counter() - t0
                spairs = cert.spair_stats.count if cert.spair_stats else 0
                result = "pass" if cert.passed else "FAIL"
                all_ok = all_ok and cert.passed
                print(f"{n:>3} {kind:<16} {inner:<8} {cert.generator_count:>5} "
                      f"{spairs:>7} {result:<6} {dt:>7.1f}s")
                for check in cert.failures():
                    print(f"    failed leg: {check.name}")
    print("ALL PASS" if all_ok else "FAILURES PRESENT")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
