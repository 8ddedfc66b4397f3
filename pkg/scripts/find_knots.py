"""Random search for small-coordinate knotted polygons, e.g. to refresh data/.

Draws integer points in [0, box]^3 and keeps the first polygon of the wanted
class.  For figure-8 heptagons a specific Radon pattern can be requested.

    python3 scripts/find_knots.py --kind figure8 --pattern RS2 --out f8.json
"""
import argparse
import random
import sys

from heptaknot.geometry import general_position_check
from heptaknot.oracle import KnotClass, classify_determinant, knot_determinant, knot_diagram
from heptaknot.pointfile import dumps_points
from heptaknot.radon import Heptagon, classify_by_radon


def search(kind, n, pattern, box, seed, tries):
    rng = random.Random(seed)
    want = KnotClass.FIGURE8 if kind == "figure8" else KnotClass.TREFOIL
    for _ in range(tries):
        pts = [tuple(rng.randint(0, box) for _ in range(3)) for _ in range(n)]
        if general_position_check(pts) is not None:
            continue
        if classify_determinant(knot_determinant(knot_diagram(pts))) is not want:
            continue
        if pattern:
            m = classify_by_radon(Heptagon(tuple(pts)))
            if m is None or m.pattern_id != pattern:
                continue
        return pts
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", choices=("trefoil", "figure8"), default="figure8")
    ap.add_argument("--n", type=int, help="number of vertices (default 7, or 6 for trefoils)")
    ap.add_argument("--pattern", choices=("RS1", "RS2", "RS3"))
    ap.add_argument("--box", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=2_000_000)
    ap.add_argument("--out")
    args = ap.parse_args()

    n = args.n or (6 if args.kind == "trefoil" else 7)
    if args.pattern and n != 7:
        ap.error("--pattern needs a heptagon")
    pts = search(args.kind, n, args.pattern, args.box, args.seed, args.tries)
    if pts is None:
        print("nothing found", file=sys.stderr)
        return 1
    text = dumps_points(pts)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
