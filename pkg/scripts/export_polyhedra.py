#!/usr/bin/env python3
"""Write OFF files for the three fixture polyhedra (for external viewers)."""

import argparse
from pathlib import Path

from pathsys import gallery
from pathsys.topology import build_complex, manifold_report, to_off


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=".", help="output directory")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in ("OCT1", "HBP1", "ESB1"):
        e = gallery.by_name(name)
        cx = build_complex(e.system, e.partner)
        report = manifold_report(cx)
        path = out / f"{name.lower()}.off"
        path.write_text(to_off(cx))
        print(f"{path}: V={report.vertices} E={report.edges} "
              f"F={report.faces} chi={report.euler_characteristic} "
              f"genus={report.genus}")


if __name__ == "__main__":
    main()
