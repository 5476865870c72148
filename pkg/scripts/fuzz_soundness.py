#!/usr/bin/env python3
"""Soundness fuzz driver: unique-shortest-path extractions must verify.

Draws random positive-rational digraphs, extracts their unique shortest
paths, and requires the decision pipeline to return verified weights for
every instance (the rigidity and witness routes cross-check internally).
"""

import argparse
import random
import time

from pathsys.metrizability import decide, extract_usp_system
from pathsys.randgen import random_positive_graph
from pathsys.witness import verify_witness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-nodes", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    done = 0
    t0 = time.monotonic()
    while done < args.count:
        n = rng.randint(4, args.max_nodes)
        g = random_positive_graph(rng, n, density=rng.uniform(0.2, 0.6))
        s = extract_usp_system(g)
        if not s.paths:
            continue
        d = decide(s, evidence_budget_ms=None)
        assert d.is_sm, f"extraction not realizable?! {s}"
        assert verify_witness(s, d.witness_graph), f"witness failed {s}"
        done += 1
        if done % 10 == 0:
            rate = done / (time.monotonic() - t0)
            print(f"{done}/{args.count} ok ({rate:.1f}/s)")
    print(f"{args.count} instances sound in {time.monotonic() - t0:.1f}s")


if __name__ == "__main__":
    main()
