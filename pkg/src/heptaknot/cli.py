"""Command line: ``heptaknot {classify,table,census,sample}``.

Exit codes: 0 success, 2 input or validation error, 3 the two classifiers
disagree, 4 sampling failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from multiprocessing import Pool
from pathlib import Path

from . import __version__
from .census import (
    AgreementFailure,
    LinearEmbedding,
    SamplingFailure,
    UnsupportedN,
    census,
    derive_seed,
    fingerprint,
    sample_embedding,
)
from .geometry import GeneralPositionError, GeometryError, general_position_check, integer_frame
from .oracle import (
    KnotClass,
    OracleError,
    UnexpectedDeterminant,
    alexander_polynomial,
    classify_determinant,
    format_poly,
    knot_determinant,
    knot_diagram,
)
from .pointfile import PointFileError, append_record, dumps_points, read_points, write_points
from .radon import Heptagon, Labeling, build_table, classify_by_radon

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DISAGREE = 3
EXIT_SAMPLING = 4


class InputError(Exception):
    def __init__(self, message: str, **extra):
        self.extra = extra
        super().__init__(message)


def _fail(code: int, kind: str, message: str, **extra) -> int:
    err = {"error": kind, "message": message, **extra}
    print(json.dumps(err, sort_keys=True), file=sys.stderr)
    return code


def _load(path) -> list:
    try:
        return read_points(path)
    except PointFileError as exc:
        raise InputError(str(exc)) from None


def _check_general_position(points) -> None:
    if len(points) >= 4:
        bad = general_position_check(points)
        if bad is not None:
            raise InputError("points are not in general position", violation=list(bad))


# --- classify ---------------------------------------------------------------

def classify_points(points, mode: str = "both", seed: int = 0) -> dict:
    """Result document of the ``classify`` command.

    ``mode`` is "both" (6 or 7 points; both classifiers on 7), "oracle"
    (3..7 points) or "radon" (exactly 7 points).
    """
    n = len(points)
    if mode == "radon" and n != 7:
        raise InputError(f"expected 7 points for --radon-only, got {n}")
    if mode == "both" and n not in (6, 7):
        raise InputError(f"expected >= 6 points for heptagon/hexagon modes, got {n} "
                         "(use --oracle-only for 3..7 points)")
    if mode == "oracle" and not 3 <= n <= 7:
        raise InputError(f"expected 3..7 points for --oracle-only, got {n}")
    _check_general_position(points)
    pts = integer_frame(points)
    out: dict = {"n": n, "mode": mode, "seed": seed, "input_fingerprint": fingerprint(points)}

    knot_class = None
    if mode in ("both", "oracle"):
        d = knot_diagram(pts, seed)
        det = knot_determinant(d)
        knot_class = classify_determinant(det)
        out.update(
            knot_class=knot_class.value,
            determinant=det,
            alexander=list(alexander_polynomial(d)),
            alexander_text=format_poly(alexander_polynomial(d)),
            crossings=len(d.crossings),
        )
    if mode in ("both", "radon") and n == 7:
        h = Heptagon(tuple(pts))
        m = classify_by_radon(h)
        lab = m.labeling if m else Labeling(0, 1)
        out["rs_match"] = m.to_dict() if m else None
        out["penetration_table"] = build_table(h, lab).render().splitlines()
        out["table_labeling"] = {"base": lab.base, "direction": lab.direction}
        if mode == "radon":
            out["knot_class"] = KnotClass.FIGURE8.value if m else "NotFigure8"
        elif (m is not None) != (knot_class is KnotClass.FIGURE8):
            out["disagreement"] = True
    else:
        out["rs_match"] = None
    return out


def cmd_classify(args) -> int:
    mode = "oracle" if args.oracle_only else "radon" if args.radon_only else "both"
    points = _load(args.path)
    out = classify_points(points, mode, args.seed)
    if args.format == "text":
        print(f"knot_class: {out['knot_class']}")
        for key in ("determinant", "alexander_text", "rs_match"):
            if key in out:
                print(f"{key}: {json.dumps(out[key])}")
        if "penetration_table" in out:
            print("\n".join(out["penetration_table"]))
    else:
        print(json.dumps(out, sort_keys=True))
    if out.get("disagreement"):
        return _fail(EXIT_DISAGREE, "AgreementFailure", "Radon tables and diagram oracle disagree",
                     points=[[str(c) for c in p] for p in points])
    return EXIT_OK


# --- table ------------------------------------------------------------------

def _parse_labeling(text: str) -> Labeling:
    try:
        b, d = (int(x) for x in text.split(","))
        return Labeling(b, d)
    except ValueError:
        raise InputError(f"labeling must be 'base,direction' with base in 0..6 and direction 1 or -1, got {text!r}") from None


def cmd_table(args) -> int:
    points = _load(args.path)
    if len(points) != 7:
        raise InputError(f"expected 7 points for a penetration table, got {len(points)}")
    _check_general_position(points)
    lab = _parse_labeling(args.labeling)
    table = build_table(Heptagon(tuple(integer_frame(points))), lab)
    if args.format == "json":
        print(json.dumps({"labeling": {"base": lab.base, "direction": lab.direction},
                          "table": table.render().splitlines()}, sort_keys=True))
    else:
        print(table.render())
    return EXIT_OK


# --- census -----------------------------------------------------------------

def _census_job(job):
    kind, payload = job
    if kind == "sample":
        n, sub = payload
        e = sample_embedding(n, sub)
    else:
        e = LinearEmbedding(tuple(payload))
    t0 = time.perf_counter()
    rep = census(e)
    return e, rep, time.perf_counter() - t0


def cmd_census(args) -> int:
    if args.path is not None:
        points = _load(args.path)
        if len(points) not in (6, 7):
            raise InputError(f"expected 6 or 7 points for a census, got {len(points)}")
        _check_general_position(points)
        jobs = [("file", points)]
        seeds = [None]
    else:
        if args.sample not in (6, 7):
            raise InputError("--sample must be 6 or 7 (or give a point file)")
        seeds = [derive_seed(args.seed, i) for i in range(args.count)]
        jobs = [("sample", (args.sample, s)) for s in seeds]

    hist: dict[int, int] = {}
    summary = {"embeddings": 0, "min_trefoil": None, "max_nontrivial": 0}
    try:
        if args.jobs > 1 and len(jobs) > 1:
            with Pool(args.jobs) as pool:
                results = list(pool.imap(_census_job, jobs, chunksize=4))
        else:
            results = map(_census_job, jobs)
        for (e, rep, secs), sub in zip(results, seeds):
            record = {
                "command": "census",
                "input_fingerprint": rep.fingerprint,
                "seed": args.seed if sub is not None else None,
                "embedding_seed": sub,
                "points": [[str(c) for c in p] for p in e.points],
                "report": rep.to_dict(),
                "timing": {"census_seconds": round(secs, 6)},
            }
            if args.out:
                append_record(args.out, record)
            elif args.format == "json":
                print(json.dumps(record, sort_keys=True))
            hist[rep.c_f] = hist.get(rep.c_f, 0) + 1
            summary["embeddings"] += 1
            t = rep.counts[KnotClass.TREFOIL.value]
            summary["min_trefoil"] = t if summary["min_trefoil"] is None else min(summary["min_trefoil"], t)
            summary["max_nontrivial"] = max(summary["max_nontrivial"], rep.nontrivial)
    except AgreementFailure as exc:
        path = Path(args.repro_dir) / f"agreement_failure_{exc.repro['fingerprint']}.json"
        exc.write(path)
        return _fail(EXIT_DISAGREE, "AgreementFailure", str(exc), repro=str(path))
    except SamplingFailure as exc:
        return _fail(EXIT_SAMPLING, "SamplingFailure", str(exc))

    summary["c_f_histogram"] = {str(k): v for k, v in sorted(hist.items())}
    summary["best_c_f"] = max(hist) if hist else None
    summary["note"] = "best_c_f is an empirical lower bound, not the exact maximum"
    if args.format == "text":
        print(f"embeddings: {summary['embeddings']}")
        print(f"min trefoil count: {summary['min_trefoil']}")
        print(f"max nontrivial count: {summary['max_nontrivial']}")
        print("c(f) histogram:")
        for k, v in sorted(hist.items()):
            print(f"  {k:3d}: {v}")
    else:
        print(json.dumps({"summary": summary}, sort_keys=True))
    return EXIT_OK


# --- sample -----------------------------------------------------------------

def cmd_sample(args) -> int:
    try:
        e = sample_embedding(args.n, args.seed)
    except UnsupportedN as exc:
        raise InputError(str(exc)) from None
    except SamplingFailure as exc:
        return _fail(EXIT_SAMPLING, "SamplingFailure", str(exc))
    if args.out:
        write_points(args.out, e.points)
    else:
        sys.stdout.write(dumps_points(e.points))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heptaknot", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="knot type of a polygon given by a point file")
    p.add_argument("path")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle-only", action="store_true", help="diagram/Alexander oracle only (3..7 points)")
    g.add_argument("--radon-only", action="store_true", help="Radon sign tables only (7 points)")
    p.add_argument("--seed", type=int, default=0, help="projection direction seed")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="render the 7x3 penetration table of a heptagon")
    p.add_argument("path")
    p.add_argument("--labeling", default="0,1", help="base,direction (base is a 0-based vertex index)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("census", help="classify all Hamiltonian cycles of K6/K7 drawings")
    p.add_argument("path", nargs="?")
    p.add_argument("--sample", type=int, help="sample drawings of K_n instead of reading a file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", help="append one JSON record per drawing to this JSONL file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--repro-dir", default=".", help="where disagreement repro files go")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sample", help="write a seeded general-position point file")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "path", None) is None and args.command == "census" and args.sample is None:
        return _fail(EXIT_INPUT, "InputError", "give a point file or --sample n")
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(EXIT_INPUT, "InputError", str(exc), **exc.extra)
    except GeneralPositionError as exc:
        return _fail(EXIT_INPUT, "GeneralPositionError", str(exc), violation=list(exc.indices))
    except UnexpectedDeterminant as exc:
        return _fail(EXIT_DISAGREE, "UnexpectedDeterminant", str(exc))
    except (GeometryError, OracleError) as exc:
        return _fail(EXIT_INPUT, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
