"""Run every property suite at a weight bound and save a JSON report."""
import argparse
import json
import sys
import time
from pathlib import Path

from forest_operads.checks import SUITES, CheckConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=6)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--suite", choices=("all",) + SUITES, default="all")
    ap.add_argument("--json", type=Path, help="write the full report here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = run_suite(args.suite, CheckConfig(max_weight=args.max_weight, threads=args.threads))
    elapsed = time.perf_counter() - t0
    for r in reports:
        print("\n".join(r.text_lines()))
    ok = all(r.passed for r in reports)
    print(f"{'all passed' if ok else 'FAILURES'} in {elapsed:.1f}s")
    if args.json:
        args.json.write_text(json.dumps([r.to_json() for r in reports], indent=2, ensure_ascii=False) + "\n",
                             encoding="utf-8")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
