"""Knot census over the Hamiltonian cycles of straight-line K6 / K7 drawings.

The maximum found by :func:`max_search` is only an empirical lower bound for
the largest possible number of figure-8 cycles in a K7 drawing; it is not
that maximum itself.
"""
from __future__ import annotations

import hashlib
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .geometry import Chirotope, general_position_check, integer_frame, require_general_position
from .oracle import DrawingProjection, KnotClass, classify_determinant, knot_determinant
from .radon import classify_cycle_by_radon

SUPPORTED_N = (6, 7)
LATTICE = 1 << 20
MAX_ATTEMPTS = 10**6


class CensusError(Exception):
    pass


class UnsupportedN(CensusError, ValueError):
    pass


class SamplingFailure(CensusError):
    pass


class AgreementFailure(CensusError):
    """The Radon-table and diagram classifiers disagree on a cycle."""

    def __init__(self, points, cycle, oracle_class, radon_match):
        self.repro = {
            "fingerprint": fingerprint(points),
            "points": [[str(Fraction(c)) for c in p] for p in points],
            "cycle": list(cycle),
            "oracle": oracle_class.value,
            "radon": None if radon_match is None else radon_match.to_dict(),
        }
        super().__init__(f"classifiers disagree on cycle {tuple(cycle)}: {self.repro}")

    def write(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.repro, fh, indent=2, sort_keys=True)


def _check_n(n: int) -> None:
    if n not in SUPPORTED_N:
        raise UnsupportedN(f"only K6 and K7 are supported, got n={n}")


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest index and pick the direction with the smaller second entry."""
    k = cycle.index(min(cycle))
    fwd = tuple(cycle[k:]) + tuple(cycle[:k])
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


def enumerate_cycles(n: int) -> list[tuple[int, ...]]:
    """All (n-1)!/2 undirected Hamiltonian cycles of K_n, canonical and in lexicographic order."""
    _check_n(n)
    return [(0,) + p for p in permutations(range(1, n)) if p[0] < p[-1]]


def fingerprint(points: Sequence) -> str:
    canon = json.dumps([[str(Fraction(c)) for c in p] for p in points], separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class LinearEmbedding:
    points: tuple

    def __post_init__(self):
        _check_n(len(self.points))
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        require_general_position(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def permuted(self, perm: Sequence[int]) -> "LinearEmbedding":
        """Vertex ``i`` of the result is vertex ``perm[i]`` of this embedding."""
        return LinearEmbedding(tuple(self.points[i] for i in perm))


def derive_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"heptaknot/{seed}/{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def sample_embedding(n: int, seed: int) -> LinearEmbedding:
    """Uniform points of the integer cube [0, 2^20)^3, redrawn until in general position."""
    _check_n(n)
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        pts = [tuple(rng.randrange(LATTICE) for _ in range(3)) for _ in range(n)]
        if general_position_check(pts) is None:
            return LinearEmbedding(tuple(pts))
    raise SamplingFailure(f"no general-position sample after {MAX_ATTEMPTS} attempts")


_LETTER = {KnotClass.UNKNOT: "U", KnotClass.TREFOIL: "T", KnotClass.FIGURE8: "F"}


@dataclass
class CensusReport:
    n: int
    fingerprint: str
    cycles: list[tuple[int, ...]]
    classes: list[KnotClass]
    determinants: list[int]
    direction: tuple[int, int, int]
    figure8_witnesses: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(k.value for k in self.classes)
        return {k.value: c.get(k.value, 0) for k in KnotClass}

    @property
    def nontrivial(self) -> int:
        return sum(1 for k in self.classes if k is not KnotClass.UNKNOT)

    @property
    def c_f(self) -> int:
        """Knots of polygon index n: figure-8 cycles for K7, nontrivial hexagons for K6."""
        if self.n == 7:
            return self.counts[KnotClass.FIGURE8.value]
        return self.nontrivial

    def nontrivial_cycles(self) -> list[tuple[tuple[int, ...], KnotClass]]:
        return [(c, k) for c, k in zip(self.cycles, self.classes) if k is not KnotClass.UNKNOT]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "fingerprint": self.fingerprint,
            "cycles": len(self.cycles),
            "counts": self.counts,
            "nontrivial": self.nontrivial,
            "c_f": self.c_f,
            "projection_direction": list(self.direction),
            # one letter per cycle in enumerate_cycles order: U unknot, T trefoil, F figure-8
            "per_cycle": "".join(_LETTER[k] for k in self.classes),
            "nontrivial_cycles": [
                {"cycle": list(c), "knot_class": k.value,
                 **({"rs_match": self.figure8_witnesses[c]} if c in self.figure8_witnesses else {})}
                for c, k in self.nontrivial_cycles()
            ],
        }


def census(e: LinearEmbedding, seed: int = 0, check_radon: bool = True) -> CensusReport:
    """Classify every Hamiltonian cycle of the drawing.

    For K7 every cycle is also run through the Radon-table classifier and the
    two verdicts must agree on figure-8; otherwise :class:`AgreementFailure`.
    """
    pts = integer_frame(e.points)
    drawing = DrawingProjection(pts, seed)
    chi = Chirotope(pts) if (check_radon and e.n == 7) else None
    cycles = enumerate_cycles(e.n)
    classes, dets, witnesses = [], [], {}
    for cyc in cycles:
        det = knot_determinant(drawing.diagram(cyc))
        k = classify_determinant(det)
        if chi is not None:
            m = classify_cycle_by_radon(cyc, chi.orient)
            if (m is not None) != (k is KnotClass.FIGURE8):
                raise AgreementFailure(e.points, cyc, k, m)
            if m is not None:
                witnesses[cyc] = m.to_dict()
        classes.append(k)
        dets.append(det)
    return CensusReport(e.n, fingerprint(e.points), cycles, classes, dets, drawing.direction, witnesses)


@dataclass
class SearchResult:
    n: int
    seed: int
    num_embeddings: int
    best_c: int
    best_fingerprint: str
    best_seed: int
    histogram: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "num_embeddings": self.num_embeddings,
            "best_c": self.best_c,
            "best_fingerprint": self.best_fingerprint,
            "best_seed": self.best_seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "note": "empirical lower bound over sampled drawings, not the exact maximum",
        }


def sampled_reports(n: int, num_embeddings: int, seed: int) -> Iterable[tuple[int, CensusReport]]:
    for i in range(num_embeddings):
        sub = derive_seed(seed, i)
        yield sub, census(sample_embedding(n, sub))


def max_search(num_embeddings: int, seed: int, n: int = 7) -> SearchResult:
    if num_embeddings < 1:
        raise ValueError("num_embeddings must be at least 1")
    hist: Counter = Counter()
    best = (-1, "", 0)
    for sub, rep in sampled_reports(n, num_embeddings, seed):
        hist[rep.c_f] += 1
        if rep.c_f > best[0]:
            best = (rep.c_f, rep.fingerprint, sub)
    return SearchResult(n, seed, num_embeddings, best[0], best[1], best[2], dict(hist))
