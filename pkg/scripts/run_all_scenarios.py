#!/usr/bin/env python3
"""Run every registered scenario (optionally over a parameter sweep) and write JSON-lines reports."""
import argparse
import json
import sys
import time

from gggrlab import scenarios


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="scenario_reports.jsonl")
    ap.add_argument("--sweep", action="store_true",
                    help="also run the parametrised scenarios over a few (p, e) pairs")
    args = ap.parse_args(argv)

    jobs = [(s["name"], None, None, None) for s in scenarios.list_scenarios()]
    if args.sweep:
        jobs += [("e8-char5", None, p, e) for p, e in [(5, 1), (17, 1), (29, 1), (5, 2), (13, 2)]]
        jobs += [("e7-mizuno", None, p, e) for p, e in [(7, 2), (11, 2), (13, 2), (5, 4)]]
        jobs += [("multiplicity", str(n), None, None) for n in (3, 4, 5)]

    failed = 0
    with open(args.out, "w", encoding="utf-8") as fh:
        for name, variant, p, e in jobs:
            t0 = time.perf_counter()
            rep = scenarios.run(name, variant, p, e)
            dt = time.perf_counter() - t0
            fh.write(rep.to_json() + "\n")
            ok = sum(c.passed for c in rep.checks)
            tag = "ok  " if rep.passed else "FAIL"
            extra = " ".join(f"{k}={v}" for k, v in (("variant", variant), ("p", p), ("e", e)) if v is not None)
            print(f"{tag} {name:13s} {extra:14s} {ok}/{len(rep.checks)} checks  {dt * 1000:6.1f} ms")
            failed += not rep.passed
    print(json.dumps({"runs": len(jobs), "failed": failed, "out": args.out}))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
