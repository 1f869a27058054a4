#!/usr/bin/env python3
"""Benchmark the compiled markup scanner against its pure-Python twin.

Runs both implementations over the fixture corpus (repeated to a stable
duration) and prints per-implementation throughput plus the speedup.

Usage: python3 benchmarks/bench_scanner.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from histevents import _scanner_py

try:
    from histevents import _scanner
except ImportError:
    _scanner = None

REPO_ROOT = Path(__file__).resolve().parent.parent
CORPUS = REPO_ROOT / "fixtures" / "corpus"


def load_corpus() -> list[str]:
    texts = [p.read_text("utf-8") for p in sorted(CORPUS.glob("*/*.wiki"))]
    if not texts:
        raise SystemExit(f"no fixture pages under {CORPUS}")
    return texts


def bench(impl, texts: list[str], repeat: int) -> tuple[float, int]:
    """(seconds, bytes processed) for `repeat` passes over the corpus."""
    total_bytes = sum(len(t.encode()) for t in texts) * repeat
    t0 = time.perf_counter()
    for _ in range(repeat):
        for text in texts:
            impl.extract_links(text)
            impl.strip_markup(text)
    return time.perf_counter() - t0, total_bytes


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200,
                    help="passes over the corpus per implementation")
    args = ap.parse_args()
    texts = load_corpus()

    results = {}
    for name, impl in (("python", _scanner_py), ("cython", _scanner)):
        if impl is None:
            print(f"{name:8s} not built, skipping")
            continue
        # correctness cross-check before timing
        for text in texts:
            assert impl.extract_links(text) == _scanner_py.extract_links(text)
            assert impl.strip_markup(text) == _scanner_py.strip_markup(text)
        seconds, nbytes = bench(impl, texts, args.repeat)
        results[name] = seconds
        print(f"{name:8s} {seconds:7.3f}s  "
              f"{nbytes / seconds / 1e6:8.1f} MB/s")

    if "cython" in results and "python" in results:
        print(f"speedup  {results['python'] / results['cython']:.2f}x "
              "(pure python time / compiled time)")


if __name__ == "__main__":
    main()
