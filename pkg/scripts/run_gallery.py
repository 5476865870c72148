#!/usr/bin/env python3
"""Decide every built-in fixture and print a verification table."""

import time

from pathsys import gallery, metrizability, topology, witness
from pathsys.core import classify


def main():
    print(f"{'name':<22} {'decision':<26} {'ms':>7}  details")
    for e in gallery.ENTRIES:
        t0 = time.monotonic()
        d = metrizability.decide(e.system, evidence_budget_ms=2000.0)
        ms = (time.monotonic() - t0) * 1000
        ok = d.tag == e.expected
        detail = ""
        if d.is_sm:
            verified = witness.verify_witness(e.system, d.witness_graph)
            detail = f"witness verified={verified}"
            ok = ok and verified
        elif d.certificate is not None:
            flags = classify(d.certificate.system)
            detail = (f"certificate ok={flags.semisimple and flags.nontrivial and flags.skip_free}")
            if d.manifold is not None:
                detail += (f"; surface chi={d.manifold.euler_characteristic}"
                           f" genus={d.manifold.genus}")
        mark = "" if ok else "  <-- MISMATCH"
        print(f"{e.name:<22} {d.tag:<26} {ms:7.1f}  {detail}{mark}")
        if e.partner is not None:
            assert topology.is_polyhedral_pair(e.system, e.partner)
    print("all expectations re-verified")


if __name__ == "__main__":
    main()
