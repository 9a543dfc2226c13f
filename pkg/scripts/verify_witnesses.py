"""Replay every stored conjugation witness and report the ones that fail.

Usage: python scripts/verify_witnesses.py
"""
from __future__ import annotations

import sys

from foursym.classify import load_witnesses, verify_witness


def main() -> int:
    ws = load_witnesses()
    bad = [w.id for w in ws if not verify_witness(w)]
    print(f"{len(ws) - len(bad)}/{len(ws)} witnesses verify")
    for i in bad:
        print(f"FAIL {i}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
