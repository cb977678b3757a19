"""Time the machine-checked equivalence as the carrier cap grows.

    TG_MAX_ORDER=576 python scripts/roundtrip_experiment.py --orders 4 8 12 24
"""

from __future__ import annotations

import argparse
import time

from twogroups import equivalence as eq
from twogroups import fixtures as fx


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[4, 8, 12, 24])
    args = ap.parse_args()
    print(f"{'side':5} {'cap':>4} {'objs':>5} {'mors':>5} {'2mors':>6} {'checks':>7} {'fails':>6} {'secs':>7}")
    for cap in args.orders:
        for side, build in (("xmod", fx.xmod_collection), ("2grp", fx.twogroup_collection)):
            t = time.perf_counter()
            col = build(cap)
            rep = eq.verify_round_trip(col.objects, col.morphisms, col.two_morphisms)
            dt = time.perf_counter() - t
            fails = sum(1 for c in rep.checks() if not c.ok)
            print(f"{side:5} {cap:>4} {len(col.objects):>5} {len(col.morphisms):>5} "
                  f"{len(col.two_morphisms):>6} {len(rep.checks()):>7} {fails:>6} {dt:>7.2f}")


if __name__ == "__main__":
    main()
