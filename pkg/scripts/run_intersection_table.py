#!/usr/bin/env python3
"""Reachable-set sizes and wall-clock for the intersection protocol.

Runs both backends over a list of horizons and prints one table row per
(N, backend): total seconds, final per-variable size total, final joint
state count, and the over-approximation surplus of the zonotope backend
against the explicit one. Mirrors `logzono bench intersection` but keeps
the two backends side by side per row.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from logzono.casestudies import intersection_system
from logzono.reach import check_containment, reach


@dataclass(frozen=True)
class TableConfig:
    horizons: tuple = (10, 50, 100, 1000)
    out_csv: str = ""


def parse_args(argv) -> TableConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--horizons", default="10,50,100,1000",
                    help="comma-separated step counts")
    ap.add_argument("--csv", default="", metavar="FILE",
                    help="also write the rows to FILE")
    a = ap.parse_args(argv)
    return TableConfig(tuple(int(x) for x in a.horizons.split(",")), a.csv)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    sys_ = intersection_system()
    rows = []
    for n in cfg.horizons:
        rz = reach(sys_, n, "zonotope")
        re_ = reach(sys_, n, "explicit")
        rep = check_containment(rz, re_)
        if not rep.ok:
            print(f"soundness violation at N={n}: {rep.violations[:3]}",
                  file=sys.stderr)
            return 2
        rows.append({
            "N": n,
            "zono_time_s": round(rz.total_time_s, 4),
            "zono_size": rz.steps[-1].size,
            "exact_time_s": round(re_.total_time_s, 4),
            "exact_size": re_.steps[-1].size,
            "exact_joint": re_.steps[-1].joint_count,
            "surplus": rep.surplus[-1],
        })

    header = list(rows[0])
    widths = [max(len(h), 12) for h in header]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for r in rows:
        print("  ".join(str(r[h]).rjust(w) for h, w in zip(header, widths)))

    if cfg.out_csv:
        with open(cfg.out_csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=header)
            w.writeheader()
            w.writerows(rows)
        print(f"\nwrote {cfg.out_csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
