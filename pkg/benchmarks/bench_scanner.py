#!/usr/bin/env python3
"""Benchmark the compiled token scanner against the pure-Python fallback.

The scanner is the per-character hot loop of a scan; everything after it
works per token or per class. Usage:

    python benchmarks/bench_scanner.py [--repeat 5] [--copies 200]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from faultlint import _scanner_py

try:
    from faultlint import _scanner
except ImportError:
    _scanner = None

FIXTURES = Path(__file__).parent.parent / "tests" / "fixtures"


def build_workload(copies: int) -> str:
    pieces = []
    for fixture in sorted(FIXTURES.rglob("*.java")):
        pieces.append(fixture.read_text(encoding="utf-8"))
    return "\n".join(pieces * copies)


def time_scan(scan, text: str, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        scan(text)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best-of (default 5)")
    parser.add_argument("--copies", type=int, default=200,
                        help="fixture corpus copies in the workload (default 200)")
    args = parser.parse_args()

    text = build_workload(args.copies)
    token_count = len(_scanner_py.scan(text))
    print(f"workload: {len(text):,} chars, {token_count:,} tokens")

    pure = time_scan(_scanner_py.scan, text, args.repeat)
    print(f"pure python : {pure * 1000:8.1f} ms   "
          f"{len(text) / pure / 1e6:6.1f} Mchar/s")

    if _scanner is None:
        print("compiled    : not built (FAULTLINT_NO_EXT or missing toolchain)")
        return

    compiled = time_scan(_scanner.scan, text, args.repeat)
    print(f"compiled    : {compiled * 1000:8.1f} ms   "
          f"{len(text) / compiled / 1e6:6.1f} Mchar/s")
    print(f"speedup     : {pure / compiled:8.1f}x")

    if _scanner.scan(text) != _scanner_py.scan(text):
        raise SystemExit("BACKEND MISMATCH: outputs differ")
    print("outputs identical across backends")


if __name__ == "__main__":
    main()
