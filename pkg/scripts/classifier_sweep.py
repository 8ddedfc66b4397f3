"""Run both heptagon classifiers over seeded random heptagons and tally the verdicts.

    python3 scripts/classifier_sweep.py --count 20000 --seed 1
"""
import argparse
import json
import time
from collections import Counter

from heptaknot.census import derive_seed, sample_embedding
from heptaknot.oracle import classify_determinant, knot_determinant, knot_diagram
from heptaknot.radon import Heptagon, classify_by_radon


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    classes, patterns, disagreements = Counter(), Counter(), []
    t0 = time.perf_counter()
    for i in range(args.count):
        pts = sample_embedding(7, derive_seed(args.seed, i)).points
        k = classify_determinant(knot_determinant(knot_diagram(pts)))
        m = classify_by_radon(Heptagon(pts))
        classes[k.value] += 1
        if m is not None:
            patterns[m.pattern_id] += 1
        if (m is not None) != (k.value == "Figure8"):
            disagreements.append([[str(c) for c in p] for p in pts])
    print(json.dumps({
        "count": args.count,
        "seed": args.seed,
        "classes": dict(classes),
        "rs_patterns": dict(patterns),
        "disagreements": disagreements,
        "seconds": round(time.perf_counter() - t0, 2),
    }, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
