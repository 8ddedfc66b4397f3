"""Penetration tables of labeled heptagons and the three figure-8 sign patterns.

Row ``r`` (0-based) of a table belongs to the triangle on label positions
r, r+1, r+2; its three columns hold the penetration signs of the edges
(r+3, r+4), (r+4, r+5), (r+5, r+6), all mod 7.  Reports print rows 1..7 to
match the usual table notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .geometry import epsilon, orient3d, require_general_position

N = 7
RS_IDS = ("RS1", "RS2", "RS3")

_SYMBOL = {1: "+", -1: "-", 0: "x"}
_VALUE = {v: k for k, v in _SYMBOL.items()}


@dataclass(frozen=True)
class Heptagon:
    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) != N:
            raise ValueError(f"a heptagon needs 7 vertices, got {len(self.vertices)}")
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        require_general_position(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % N]


@dataclass(frozen=True, order=True)
class Labeling:
    """Label position p (0-based) sits on vertex (base + direction * p) mod 7."""

    base: int = 0
    direction: int = 1

    def __post_init__(self):
        if not 0 <= self.base < N or self.direction not in (1, -1):
            raise ValueError(f"invalid labeling {self.base}, {self.direction}")

    def vertex(self, position: int) -> int:
        return (self.base + self.direction * position) % N

    def order(self) -> list[int]:
        return [self.vertex(p) for p in range(N)]


IDENTITY = Labeling(0, 1)


def all_labelings() -> list[Labeling]:
    """The 14 labelings, base ascending, direction +1 before -1."""
    return [Labeling(b, d) for b in range(N) for d in (1, -1)]


_LABELINGS = all_labelings()


def relabel(h: Heptagon, lab: Labeling) -> Heptagon:
    return Heptagon(tuple(h.vertices[i] for i in lab.order()))


@dataclass(frozen=True)
class PenetrationTable:
    rows: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if len(rows) != N or any(len(r) != 3 or any(v not in (-1, 0, 1) for v in r) for r in rows):
            raise ValueError("a penetration table is a 7x3 grid over {-1, 0, 1}")
        object.__setattr__(self, "rows", rows)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def negated(self) -> "PenetrationTable":
        return PenetrationTable(tuple(tuple(-v for v in r) for r in self.rows))

    def shifted(self, k: int) -> "PenetrationTable":
        """Rows rotated so that new row r is old row r + k."""
        return PenetrationTable(tuple(self.rows[(r + k) % N] for r in range(N)))

    def render(self) -> str:
        return "\n".join("".join(_SYMBOL[v] for v in r) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "PenetrationTable":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        return cls(tuple(tuple(_VALUE[ch] for ch in ln) for ln in lines))


def build_table(h: Heptagon, lab: Labeling = IDENTITY) -> PenetrationTable:
    v = [h.vertices[i] for i in lab.order()]
    rows = []
    for r in range(N):
        tri = (v[r], v[(r + 1) % N], v[(r + 2) % N])
        rows.append(tuple(
            epsilon(*tri, v[(r + 3 + c) % N], v[(r + 4 + c) % N]) for c in range(3)
        ))
    return PenetrationTable(tuple(rows))


def penetration_count(t: PenetrationTable, i: int) -> int:
    """I(i): how many edges pierce the triangle of row ``i`` (0-based, taken mod 7)."""
    return sum(1 for v in t.rows[i % N] if v)


def penetration_counts(t: PenetrationTable) -> list[int]:
    return [penetration_count(t, i) for i in range(N)]


# Templates in units of the global sign s: +1 is s, -1 is -s, 0 is empty.
_RS1 = (
    (1, -1, 0),
    (-1, 0, 0),
    (0, 1, 0),
    (1, 0, 0),
    (0, -1, 0),
    (-1, 0, 0),
    (0, 1, 0),
)
_RS2 = _RS1[:5] + ((-1, 1, 0),) + _RS1[6:]
_RS3 = _RS1[:1] + ((0, -1, 0),) + _RS1[2:]

TEMPLATES = {
    "RS1": PenetrationTable(_RS1),
    "RS2": PenetrationTable(_RS2),
    "RS3": PenetrationTable(_RS3),
}


def template_table(pattern_id: str, s: int) -> PenetrationTable:
    t = TEMPLATES[pattern_id]
    return t if s == 1 else t.negated()


# the six signed templates are pairwise distinct, so a dict lookup respects
# the RS1 < RS2 < RS3, +1 before -1 preference
_SIGNED = {template_table(pid, s).rows: (pid, s) for pid in RS_IDS for s in (1, -1)}


def match_rs(t: PenetrationTable | tuple) -> tuple[str, int] | None:
    rows = t.rows if isinstance(t, PenetrationTable) else t
    return _SIGNED.get(rows)


@dataclass(frozen=True)
class RSMatch:
    labeling: Labeling
    pattern_id: str
    global_sign: int

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern_id,
            "sign": self.global_sign,
            "labeling": {"base": self.labeling.base, "direction": self.labeling.direction},
        }


class EpsilonCache:
    """The 21 penetration signs of a heptagon in its own vertex order.

    ``fwd[a][o]`` is the sign of edge a+o -> a+o+1 through triangle
    (a, a+1, a+2), o in {3, 4, 5}.  Reversing both the triangle and the edge
    negates each factor of the defining dot product, so every labeling's table
    is a reindexing of these values with no sign change.
    """

    def __init__(self, vertices: Sequence, orient=orient3d):
        v = vertices
        self.fwd = [
            {o: epsilon(v[a], v[(a + 1) % N], v[(a + 2) % N], v[(a + o) % N], v[(a + o + 1) % N], orient)
             for o in (3, 4, 5)}
            for a in range(N)
        ]

    def rows(self, lab: Labeling) -> tuple:
        b, fwd = lab.base, self.fwd
        if lab.direction == 1:
            return tuple((fwd[(b + r) % N][3], fwd[(b + r) % N][4], fwd[(b + r) % N][5]) for r in range(N))
        # triangle labels r..r+2 run backwards over vertices b-r-2..b-r;
        # edge label r+3+c runs backwards over vertices b-r-4-c..b-r-3-c
        return tuple((fwd[(b - r - 2) % N][5], fwd[(b - r - 2) % N][4], fwd[(b - r - 2) % N][3]) for r in range(N))

    def table(self, lab: Labeling) -> PenetrationTable:
        return PenetrationTable(self.rows(lab))


def _matches(cache: EpsilonCache) -> Iterator[RSMatch]:
    for lab in _LABELINGS:
        m = _SIGNED.get(cache.rows(lab))
        if m is not None:
            yield RSMatch(lab, *m)


def iter_rs_matches(h: Heptagon | Sequence) -> Iterator[RSMatch]:
    if not isinstance(h, Heptagon):
        h = Heptagon(tuple(h))
    return _matches(EpsilonCache(h.vertices))


def classify_cycle_by_radon(cycle: Sequence[int], orient) -> RSMatch | None:
    """Radon verdict for a heptagon given as 7 vertex indices and an index-based ``orient``."""
    return next(_matches(EpsilonCache(cycle, orient)), None)


def classify_by_radon(h: Heptagon | Sequence) -> RSMatch | None:
    """First labeling (fixed scan order) whose table realizes RS1, RS2 or RS3, else None.

    A returned match certifies a figure-8 heptagon; ``None`` means not figure-8.
    """
    return next(iter_rs_matches(h), None)


def all_rs_matches(h: Heptagon | Sequence) -> list[RSMatch]:
    return list(iter_rs_matches(h))
