"""Wall-clock time per suite for the full preset corpus."""

import time
from collections import defaultdict

from glrs.workbench import resolve_targets, run_suite


def main():
    t = time.perf_counter()
    rep = run_suite(resolve_targets(["all"]), ["all"])
    total = time.perf_counter() - t
    per = defaultdict(float)
    for rec in rep.records:
        per[f"{rec.suite}/{rec.target}"] += rec.elapsed
    for key, dt in per.items():
        print(f"{key:<40} {dt:7.2f}s")
    print(f"{'total':<40} {total:7.2f}s  ({rep.summary()})")


if __name__ == "__main__":
    main()
