"""Exact orientation predicates and the signed triangle/segment penetration sign.

Coordinates are Python ints or :class:`fractions.Fraction`; nothing here ever
rounds.  Floats and decimal strings are accepted by :func:`as_rational` and
converted exactly.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations
from typing import NamedTuple, Sequence, Union

Number = Union[int, Fraction]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateInput(GeometryError):
    """A sign predicate hit an exact zero that general position forbids."""


class CollinearTriangle(GeometryError):
    pass


class TooFewPoints(GeometryError):
    pass


class GeneralPositionError(GeometryError):
    """Raised by :func:`require_general_position`; carries the offending 4-subset."""

    def __init__(self, indices: tuple[int, int, int, int]):
        self.indices = indices
        super().__init__(f"points {list(indices)} are coplanar")


def as_rational(value) -> Fraction:
    """Convert int, Fraction, float or text ("3", "-1.25", "7/3") exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        # every finite float is a dyadic rational
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to a rational coordinate")


class Point3(NamedTuple):
    x: Number
    y: Number
    z: Number

    @classmethod
    def of(cls, x, y, z) -> "Point3":
        return cls(as_rational(x), as_rational(y), as_rational(z))

    def __sub__(self, other):  # type: ignore[override]
        return Point3(self.x - other[0], self.y - other[1], self.z - other[2])

    def __neg__(self):
        return Point3(-self.x, -self.y, -self.z)


def point(x, y, z) -> Point3:
    return Point3.of(x, y, z)


def sign(v) -> int:
    return (v > 0) - (v < 0)


def cross(u, v) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(a, b, c, d):
    """det[b-a, c-a, d-a] as an exact number."""
    bx, by, bz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    cx, cy, cz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    dx, dy, dz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    return bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx)


def orient3d(a, b, c, d) -> int:
    """Sign of det[b-a, c-a, d-a]: +1 if (b-a, c-a, d-a) is right-handed."""
    return sign(det3(a, b, c, d))


def side_of_plane(a, b, c, p) -> int:
    """Side of ``p`` relative to plane(a, b, c), normal (b-a) x (c-a)."""
    n = cross(Point3(*b) - a, Point3(*c) - a)
    if n == (0, 0, 0):
        raise CollinearTriangle(f"triangle {a}, {b}, {c} is degenerate")
    return sign(dot(n, Point3(*p) - a))


def epsilon(t1, t2, t3, j, k, orient=orient3d) -> int:
    """Signed penetration of segment j->k through the closed triangle t1 t2 t3.

    Returns 0 when they are disjoint, otherwise the sign of
    ((t2 - t1) x (t3 - t2)) . (k - j).  Any boundary contact is a
    general-position violation and raises :class:`DegenerateInput`.

    Only orientation signs are consulted, so ``orient`` may be swapped for a
    lookup over precomputed signs (with vertex indices in place of points).
    """
    sj = orient(t1, t2, t3, j)
    sk = orient(t1, t2, t3, k)
    if sj == 0 or sk == 0:
        raise DegenerateInput("segment endpoint lies in the triangle plane")
    if sj == sk:
        return 0
    s1 = orient(t1, t2, j, k)
    s2 = orient(t2, t3, j, k)
    s3 = orient(t3, t1, j, k)
    if s1 == 0 or s2 == 0 or s3 == 0:
        raise DegenerateInput("segment meets a triangle edge line")
    if not (s1 == s2 == s3):
        return 0
    # normal.(k - j) = det(t1,t2,t3,k) - det(t1,t2,t3,j); j and k are on opposite sides
    return sk


def general_position_check(points: Sequence) -> tuple[int, int, int, int] | None:
    """None if no four points are coplanar, else the lexicographically first coplanar 4-subset."""
    if len(points) < 4:
        raise TooFewPoints(f"need at least 4 points, got {len(points)}")
    for quad in combinations(range(len(points)), 4):
        if orient3d(*(points[i] for i in quad)) == 0:
            return quad
    return None


def require_general_position(points: Sequence) -> None:
    bad = general_position_check(points)
    if bad is not None:
        raise GeneralPositionError(bad)


class Chirotope:
    """Orientation signs of every ordered 4-tuple of a point set, computed once."""

    def __init__(self, points: Sequence):
        self.n = len(points)
        self._signs: dict[tuple[int, int, int, int], int] = {}
        for quad in combinations(range(self.n), 4):
            s = orient3d(*(points[i] for i in quad))
            for perm in permutations(range(4)):
                self._signs[tuple(quad[i] for i in perm)] = s * _parity(perm)

    def orient(self, a: int, b: int, c: int, d: int) -> int:
        return self._signs.get((a, b, c, d), 0)

    def is_uniform(self) -> bool:
        return all(self._signs.values())


def _parity(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def integer_frame(points: Sequence) -> list[tuple[int, int, int]]:
    """Scale all coordinates by the common denominator.

    A uniform positive scaling preserves every orientation sign, every
    penetration sign and the knot type, so the integer copy can stand in for
    the rational input in all predicates.
    """
    den = 1
    for p in points:
        for c in p:
            c = Fraction(c)
            den = den * c.denominator // math.gcd(den, c.denominator)
    out = []
    for p in points:
        out.append(tuple(int(Fraction(c) * den) for c in p))
    return out
