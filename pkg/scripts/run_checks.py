#!/usr/bin/env python3
"""Run the exhaustive checks at the configured bounds and write a JSON report.

    python scripts/run_checks.py                      # everything, default bounds
    python scripts/run_checks.py counts duality -o out.json
    python scripts/run_checks.py --config small.json  # overrides, see abpair.config
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from abpair.config import CheckConfig

log = logging.getLogger("run_checks")


def main(argv=None) -> int:
    cfg = CheckConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("checks", nargs="*", metavar="CHECK", help=f"subset of: {', '.join(cfg.names())}")
    ap.add_argument("--config", type=Path, help="JSON file with bound overrides")
    ap.add_argument("-o", "--output", type=Path, help="write the reports as JSON")
    args = ap.parse_args(argv)
    unknown = sorted(set(args.checks) - set(cfg.names()))
    if unknown:
        ap.error(f"unknown checks: {', '.join(unknown)}")
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    if args.config:
        cfg = CheckConfig.from_dict(json.loads(args.config.read_text()))
    results = []
    ok = True
    for name in args.checks or cfg.names():
        log.info("running %s ...", name)
        report = cfg.run(name)
        timely = cfg.within_budget(name, report)
        ok &= report.ok and timely
        log.info("  %s%s", report.summary(), "" if timely else "  OVER BUDGET")
        for note in report.notes:
            log.info("  %s", note)
        for msg in report.failures[:10]:
            log.info("  FAIL %s", msg)
        results.append({"check": name, "within_budget": timely, **report.to_dict()})
    if args.output:
        args.output.write_text(json.dumps({"config": cfg.to_dict(), "results": results}, indent=2) + "\n")
        log.info("report written to %s", args.output)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
