"""Regenerate Tables 1-8 and write them as JSON next to a one-line summary per table.

Usage: python scripts/regenerate_tables.py [--out tables.json] [ids ...]
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from foursym.classify import TABLE_IDS, diff_lines, regenerate_tables


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("ids", nargs="*", type=int, default=list(TABLE_IDS))
    p.add_argument("--out", type=Path, default=Path("tables.json"))
    args = p.parse_args()
    doc = regenerate_tables(args.ids)
    args.out.write_text(json.dumps(doc, indent=1, default=str, sort_keys=True))
    bad = 0
    for tid, t in doc["tables"].items():
        rows = t["rows"]
        if tid == "1":
            print(f"table 1: {len(rows)} rows")
            continue
        flagged = sum(r["status"] == "flagged" for r in rows)
        open_ = [r for r in rows if r["status"] == "unresolved"]
        bad += len(open_)
        print(f"table {tid}: {len(rows)} rows, {flagged} flagged errata, {len(open_)} unresolved")
    print(f"written to {args.out}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
