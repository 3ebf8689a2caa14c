#!/usr/bin/env python3
"""Run the full LU-yes / LC-no verification for both constructed pairs.

Prints each report as JSON and a one-line summary, exactly as the CLI
``verify`` subcommand would, but in a single pass over both sizes.
"""

from __future__ import annotations

import json
import sys

from hyperlu import counterexamples as cx


def main() -> int:
    ok = True
    for spec in (cx.BipartiteSubsets(7, 5), cx.TwentySeven()):
        report = cx.verify_construction(spec)
        print(json.dumps(report.as_dict(), indent=2))
        summary = "confirmed" if report.confirmed else "NOT CONFIRMED"
        print(
            f"[{spec.name}] {summary}: LU witness of length "
            f"{len(report.witness or ())}, LC verdict {report.lc_verdict}, "
            f"{report.elapsed_seconds:.2f}s",
            file=sys.stderr,
        )
        ok &= report.confirmed
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
