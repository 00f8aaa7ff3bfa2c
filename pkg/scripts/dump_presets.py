#!/usr/bin/env python3
"""Print level-set sizes and index exponents for the stored weighted diagrams, plus multiplicity tables."""
import argparse

from gggrlab import multiplicity as mult
from gggrlab.grading import WeightedDynkinDiagram, index_exponent
from gggrlab.scenarios import diagram_presets


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tables", action="store_true", help="also render the multiplicity tables for n = 3, 4, 5")
    args = ap.parse_args(argv)

    for name, doc in diagram_presets().items():
        if "ambient" in doc:
            print(f"{name:11s} {doc['type']} inside {doc['ambient']}, weights {tuple(doc['weights'])} "
                  f"on simples {[tuple(r) for r in doc['simples']]}")
            continue
        wdd = WeightedDynkinDiagram.of(doc["type"], doc["weights"])
        levels = {k: len(v) for k, v in sorted(wdd.grading.level_sets.items())}
        print(f"{name:11s} {doc['type']} {tuple(doc['weights'])} levels={levels} k={index_exponent(wdd)}")

    if args.tables:
        for n in (3, 4, 5):
            print(f"\nn = {n}")
            print(mult.kawanaka_table(n).render())


if __name__ == "__main__":
    main()
