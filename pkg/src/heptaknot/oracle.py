r"""Knot type of small polygonal knots from an exact generic projection.

The polygon is projected along an integer direction ``d`` onto the plane
spanned by ``u = d x e`` and ``w = d x u`` (so ``u x w`` is a positive
multiple of ``d``), and viewed from the ``+d`` side: the strand with the
larger ``p . d`` is the over-strand.  Crossing signs use the right-hand rule::

      under       over
         ^       ^
          \     /
           \   /
            \ /
             /        positive crossing (+1):
            / \       cross2(over direction, under direction) > 0
           /   \
          /     \

With this convention a strand passing upward (towards the viewer) through a
counter-clockwise disk links it with +1, the same orientation rule as the
penetration sign in :mod:`heptaknot.geometry`.

Knot type is read off the Alexander matrix of the Wirtinger presentation.
For at most seven edges only the unknot (determinant 1), the trefoil (3) and
the figure-8 (5) occur, so the determinant classifies completely.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .geometry import cross, dot, require_general_position


class OracleError(Exception):
    pass


class NonGenericDirection(OracleError):
    pass


class ExhaustedCandidates(OracleError):
    pass


class NotAKnot(OracleError):
    pass


class NotTwoComponents(OracleError):
    pass


class UnexpectedDeterminant(OracleError):
    """A determinant outside {1, 3, 5} for <= 7 edges: an implementation bug."""


class KnotClass(str, enum.Enum):
    UNKNOT = "Unknot"
    TREFOIL = "Trefoil"
    FIGURE8 = "Figure8"


DETERMINANT_CLASS = {1: KnotClass.UNKNOT, 3: KnotClass.TREFOIL, 5: KnotClass.FIGURE8}

MAX_VERTICES = 12
MAX_CANDIDATES = 1000


# --- projection -------------------------------------------------------------

def _cross2(ax, ay, bx, by):
    return ax * by - ay * bx


class Projection:
    """Integer screen coordinates and depths of a point set along ``direction``."""

    def __init__(self, points: Sequence, direction: Sequence[int]):
        d = tuple(direction)
        if d == (0, 0, 0):
            raise NonGenericDirection("zero direction")
        axis = min(range(3), key=lambda i: (abs(d[i]), i))
        e = [0, 0, 0]
        e[axis] = 1
        u = cross(d, e)
        w = cross(d, u)
        self.direction = d
        self.xy = [(dot(p, u), dot(p, w)) for p in points]
        self.depth = [dot(p, d) for p in points]


def _edge_pairs(edges):
    for (i, (a, b)), (j, (c, e)) in combinations(enumerate(edges), 2):
        if len({a, b, c, e}) == 4:
            yield i, j


def _segment_crossing(pa, pb, pc, pd):
    """Interior crossing parameters (s, t) of two projected segments, or None."""
    rx, ry = pb[0] - pa[0], pb[1] - pa[1]
    qx, qy = pd[0] - pc[0], pd[1] - pc[1]
    den = _cross2(rx, ry, qx, qy)
    if den == 0:
        return None
    cx, cy = pc[0] - pa[0], pc[1] - pa[1]
    sn = _cross2(cx, cy, qx, qy)
    tn = _cross2(cx, cy, rx, ry)
    if den < 0:
        den, sn, tn = -den, -sn, -tn
    if 0 < sn < den and 0 < tn < den:
        return Fraction(sn, den), Fraction(tn, den)
    return None


def genericity_violation(points: Sequence, edges: Sequence[tuple[int, int]], direction) -> str | None:
    """Reason ``direction`` is not a regular projection of the edges, or None."""
    proj = Projection(points, direction)
    xy = proj.xy
    n = len(points)
    if len(set(xy)) < n:
        return "two vertices project to the same point"
    # no vertex projected onto the line of another edge's projection; this
    # also rules out parallel overlaps between edges
    for v in range(n):
        for a, b in edges:
            if v in (a, b):
                continue
            if _cross2(xy[b][0] - xy[a][0], xy[b][1] - xy[a][1],
                       xy[v][0] - xy[a][0], xy[v][1] - xy[a][1]) == 0:
                return f"vertex {v} projects onto the line of edge {a}-{b}"
    seen: dict = {}
    for i, j in _edge_pairs(edges):
        (a, b), (c, e) = edges[i], edges[j]
        hit = _segment_crossing(xy[a], xy[b], xy[c], xy[e])
        if hit is None:
            continue
        s, t = hit
        if proj.depth[a] + s * (proj.depth[b] - proj.depth[a]) == proj.depth[c] + t * (proj.depth[e] - proj.depth[c]):
            return f"edges {a}-{b} and {c}-{e} intersect in space"
        where = (xy[a][0] + s * (xy[b][0] - xy[a][0]), xy[a][1] + s * (xy[b][1] - xy[a][1]))
        if where in seen:
            return "three edges project through a common point"
        seen[where] = (i, j)
    return None


def _candidate_directions(seed: int):
    rng = random.Random(seed)
    for _ in range(MAX_CANDIDATES):
        d = (rng.randint(-97, 97), rng.randint(-97, 97), rng.randint(-97, 97))
        if d != (0, 0, 0):
            yield d


def cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def pick_generic_direction(points: Sequence, seed: int = 0, edges=None) -> tuple[int, int, int]:
    """First direction from the seeded integer sequence giving a regular projection.

    ``edges`` defaults to the closed polygon through ``points`` in order.
    """
    if edges is None:
        edges = cycle_edges(len(points))
    for d in _candidate_directions(seed):
        if genericity_violation(points, edges, d) is None:
            return d
    raise ExhaustedCandidates(f"no generic direction among {MAX_CANDIDATES} candidates")


# --- diagrams ---------------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass
class Diagram:
    """Arcs are numbered 0..num_arcs-1; ``arc_component[a]`` is the component of arc a."""

    arc_component: list[int]
    crossings: list[Crossing] = field(default_factory=list)

    @property
    def num_arcs(self) -> int:
        return len(self.arc_component)

    @property
    def num_components(self) -> int:
        return len(set(self.arc_component))

    def dump(self) -> str:
        lines = [f"components {self.num_components}", f"arcs {self.num_arcs}"]
        lines += [f"arc {a} component {c}" for a, c in enumerate(self.arc_component)]
        lines.append(f"crossings {len(self.crossings)}")
        lines += [
            f"crossing {i} over {x.over} under_in {x.under_in} under_out {x.under_out} sign {x.sign:+d}"
            for i, x in enumerate(self.crossings)
        ]
        return "\n".join(lines)


def _crossing_sign(xy, over, under) -> int:
    """Right-hand sign for directed projected segments ``over`` and ``under``."""
    (a, b), (c, d) = over, under
    ox, oy = xy[b][0] - xy[a][0], xy[b][1] - xy[a][1]
    ux, uy = xy[d][0] - xy[c][0], xy[d][1] - xy[c][1]
    return 1 if _cross2(ox, oy, ux, uy) > 0 else -1


def _assemble(events: list[list], signs: list[int]) -> Diagram:
    """Split each component at its undercrossings and wire up the crossings.

    ``events[k]`` lists ``(position, kind, crossing index)`` for component k,
    where position sorts in walking order and kind is "over" or "under".
    """
    arc_component: list[int] = []
    over_arc: dict[int, int] = {}
    under_arcs: dict[int, tuple[int, int]] = {}
    for k, evs in enumerate(events):
        evs.sort()
        first = len(arc_component)
        n_arcs = max(1, sum(1 for e in evs if e[1] == "under"))
        arc_component.extend([k] * n_arcs)
        # the stretch before the first undercrossing closes up the last arc
        current, nxt = first + n_arcs - 1, first
        for _, kind, idx in evs:
            if kind == "under":
                under_arcs[idx] = (current, nxt)
                current, nxt = nxt, nxt + 1
            else:
                over_arc[idx] = current
    crossings = [Crossing(over_arc[i], *under_arcs[i], sgn) for i, sgn in enumerate(signs)]
    return Diagram(arc_component, crossings)


def _diagram(proj: Projection, cycles: Sequence[Sequence[int]]) -> Diagram:
    """Diagram of closed vertex cycles (one per component) under a checked projection."""
    xy, depth = proj.xy, proj.depth
    # (component, position along its cycle, tail, head)
    edges = [(k, pos, cyc[pos], cyc[(pos + 1) % len(cyc)])
             for k, cyc in enumerate(cycles) for pos in range(len(cyc))]
    events: list[list] = [[] for _ in cycles]
    signs: list[int] = []
    for e1, e2 in combinations(edges, 2):
        k1, p1, a, b = e1
        k2, p2, c, d = e2
        if len({a, b, c, d}) < 4:
            continue
        hit = _segment_crossing(xy[a], xy[b], xy[c], xy[d])
        if hit is None:
            continue
        s, t = hit
        z1 = depth[a] + s * (depth[b] - depth[a])
        z2 = depth[c] + t * (depth[d] - depth[c])
        if z1 == z2:
            raise NonGenericDirection(f"edges {a}-{b} and {c}-{d} meet in space")
        over, under = ((k1, p1, s, (a, b)), (k2, p2, t, (c, d))) if z1 > z2 else \
            ((k2, p2, t, (c, d)), (k1, p1, s, (a, b)))
        idx = len(signs)
        signs.append(_crossing_sign(xy, over[3], under[3]))
        events[over[0]].append(((over[1], over[2]), "over", idx))
        events[under[0]].append(((under[1], under[2]), "under", idx))
    return _assemble(events, signs)


class DrawingProjection:
    """One regular projection of a straight-line drawing of K_n, shared by its cycles.

    A direction that is regular for all edges of the complete graph is regular
    for every cycle in it, so the crossings of all pairs of disjoint edges are
    computed once and each cycle's diagram is read off from them.
    """

    def __init__(self, points: Sequence, seed: int = 0):
        n = len(points)
        self.n = n
        self.edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.direction = pick_generic_direction(points, seed, self.edges)
        proj = Projection(points, self.direction)
        xy, depth = proj.xy, proj.depth
        # (over edge, under edge, param on over, param on under, sign for i<j orientations)
        self.records = []
        for (a, b), (c, d) in combinations(self.edges, 2):
            if len({a, b, c, d}) < 4:
                continue
            hit = _segment_crossing(xy[a], xy[b], xy[c], xy[d])
            if hit is None:
                continue
            s, t = hit
            z1 = depth[a] + s * (depth[b] - depth[a])
            z2 = depth[c] + t * (depth[d] - depth[c])
            if z1 > z2:
                rec = ((a, b), (c, d), s, t, _crossing_sign(xy, (a, b), (c, d)))
            else:
                rec = ((c, d), (a, b), t, s, _crossing_sign(xy, (c, d), (a, b)))
            self.records.append(rec)

    def diagram(self, cycle: Sequence[int]) -> Diagram:
        m = len(cycle)
        where = {}
        for pos in range(m):
            a, b = cycle[pos], cycle[(pos + 1) % m]
            where[(a, b) if a < b else (b, a)] = (pos, a > b)
        events: list[list] = [[]]
        signs: list[int] = []
        for over, under, s, t, sgn in self.records:
            po = where.get(over)
            pu = where.get(under)
            if po is None or pu is None:
                continue
            if po[1]:
                s, sgn = 1 - s, -sgn
            if pu[1]:
                t, sgn = 1 - t, -sgn
            idx = len(signs)
            signs.append(sgn)
            events[0].append(((po[0], s), "over", idx))
            events[0].append(((pu[0], t), "under", idx))
        return _assemble(events, signs)


def _as_points(p) -> list:
    return list(p.vertices) if hasattr(p, "vertices") else list(p)


def project_to_diagram(p, direction) -> Diagram:
    pts = _as_points(p)
    reason = genericity_violation(pts, cycle_edges(len(pts)), direction)
    if reason:
        raise NonGenericDirection(reason)
    return _diagram(Projection(pts, direction), [list(range(len(pts)))])


def link_diagram(components: Sequence[Sequence], direction=None, seed: int = 0) -> Diagram:
    """Diagram of a link given as a list of closed polygons."""
    pts, cycles, edges = [], [], []
    for comp in components:
        comp = _as_points(comp)
        start = len(pts)
        pts.extend(comp)
        cyc = list(range(start, start + len(comp)))
        cycles.append(cyc)
        edges.extend((cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    if direction is None:
        direction = pick_generic_direction(pts, seed, edges)
    else:
        reason = genericity_violation(pts, edges, direction)
        if reason:
            raise NonGenericDirection(reason)
    return _diagram(Projection(pts, direction), cycles)


# --- invariants -------------------------------------------------------------

def bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sgn, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sgn = -sgn
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sgn * a[n - 1][n - 1]


def _require_knot(d: Diagram):
    if d.num_components != 1:
        raise NotAKnot(f"diagram has {d.num_components} components")


def alexander_matrix(d: Diagram, t) -> list[list]:
    """Fox-derivative matrix of the Wirtinger presentation evaluated at ``t``."""
    m = [[0] * d.num_arcs for _ in d.crossings]
    for r, x in enumerate(d.crossings):
        m[r][x.over] += 1 - t
        if x.sign > 0:
            m[r][x.under_in] += t
            m[r][x.under_out] -= 1
        else:
            m[r][x.under_in] -= 1
            m[r][x.under_out] += t
    return m


def _minor(m, drop_row: int, drop_col: int):
    return [[v for j, v in enumerate(row) if j != drop_col] for i, row in enumerate(m) if i != drop_row]


def alexander_at(d: Diagram, t: int, drop_col: int | None = None) -> int:
    """Determinant of the Alexander matrix minor at an integer ``t`` (no normalization)."""
    _require_knot(d)
    n = len(d.crossings)
    if n == 0:
        return 1
    if drop_col is None:
        drop_col = n - 1
    return bareiss_det(_minor(alexander_matrix(d, t), n - 1, drop_col))


def normalize_poly(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Divide out t^k and fix the sign so the constant term is positive."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return (0,)
    k = next(i for i, v in enumerate(c) if v)
    c = c[k:]
    if c[0] < 0:
        c = [-v for v in c]
    return tuple(c)


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Integer coefficients of the polynomial through (xs, ys), by Newton divided differences."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # coeffs = coeffs * (t - xs[i]) + dd[i]
        new = [Fraction(0)] * n
        for p, c in enumerate(coeffs):
            if c:
                if p + 1 < n:
                    new[p + 1] += c
                new[p] -= c * xs[i]
        new[0] += dd[i]
        coeffs = new
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated determinant is not an integer polynomial")
    return [int(c) for c in coeffs]


def alexander_polynomial(d: Diagram, drop_col: int | None = None) -> tuple[int, ...]:
    """Normalized Alexander polynomial, coefficients by ascending degree."""
    _require_knot(d)
    n = len(d.crossings)
    if n == 0:
        return (1,)
    # the minor has size n-1 and entries of degree <= 1
    xs = list(range(n))
    ys = [alexander_at(d, x, drop_col) for x in xs]
    return normalize_poly(_interpolate(xs, ys))


def knot_determinant(d: Diagram) -> int:
    return abs(alexander_at(d, -1))


def format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for deg, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if deg == 0 else ("t" if deg == 1 else f"t^{deg}")
        mag = abs(c)
        body = str(mag) if (mono == "" or mag != 1) else ""
        if body and mono:
            body += "*"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body + mono))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out


def linking_number(d: Diagram) -> int:
    """Half the signed count of crossings between the two components."""
    if d.num_components != 2:
        raise NotTwoComponents(f"diagram has {d.num_components} components")
    comp = d.arc_component
    total = sum(x.sign for x in d.crossings if comp[x.over] != comp[x.under_in])
    return total // 2


# --- classification ---------------------------------------------------------

def check_polygon(p) -> list:
    pts = _as_points(p)
    if len(pts) < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if len(pts) > MAX_VERTICES:
        raise ValueError(f"polygons with more than {MAX_VERTICES} vertices are not supported")
    if len(pts) >= 4:
        require_general_position(pts)
    return pts


def classify_determinant(det: int) -> KnotClass:
    try:
        return DETERMINANT_CLASS[det]
    except KeyError:
        raise UnexpectedDeterminant(f"determinant {det} for a polygon with at most 7 edges") from None


def knot_diagram(p, seed: int = 0) -> Diagram:
    pts = check_polygon(p)
    return project_to_diagram(pts, pick_generic_direction(pts, seed))


def classify_knot(p, seed: int = 0) -> KnotClass:
    pts = check_polygon(p)
    if len(pts) > 7:
        raise ValueError("classification by determinant is complete only up to 7 edges")
    return classify_determinant(knot_determinant(knot_diagram(pts, seed)))
