"""Sample K7 drawings and report the largest figure-8 cycle count seen.

The result is an empirical lower bound on the maximum over all drawings,
never the maximum itself.

    python3 scripts/m7_search.py --count 1000 --seed 0 --out m7.json
"""
import argparse
import json
import time

from heptaknot.census import max_search


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n", type=int, default=7, choices=(6, 7))
    ap.add_argument("--out")
    args = ap.parse_args()

    t0 = time.perf_counter()
    doc = max_search(args.count, args.seed, n=args.n).to_dict()
    doc["seconds"] = round(time.perf_counter() - t0, 2)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)


if __name__ == "__main__":
    main()
