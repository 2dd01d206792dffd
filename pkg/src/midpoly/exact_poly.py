"""Exact rational polygons and the midpoint iteration.

Coordinates are arbitrary-precision rationals throughout, so midpoints,
areas, moments, and centroids come out without any rounding. The midpoint
map only ever divides by two, hence rational inputs stay rational under
iteration; denominators grow by a factor of two per step and are never
normalized away.

All values are immutable and all operations are pure functions, so callers
may copy them freely and parallelize over independent polygons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import AreaZeroError, WrongSizeError

# The coordinate field. Stored in lowest terms with a positive denominator,
# closed under +, -, *, and / by nonzero values.
RationalScalar = Fraction


@dataclass(frozen=True)
class PlanePoint:
    """A point x + iy of the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __add__(self, other: "PlanePoint") -> "PlanePoint":
        return PlanePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlanePoint") -> "PlanePoint":
        return PlanePoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "PlanePoint":
        return PlanePoint(-self.x, -self.y)

    def scaled(self, s: Fraction | int) -> "PlanePoint":
        return PlanePoint(self.x * s, self.y * s)

    def cross(self, other: "PlanePoint") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "PlanePoint") -> Fraction:
        return self.x * other.x + self.y * other.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


def point(x, y) -> PlanePoint:
    """Build a PlanePoint, coercing ints, strings, or Fractions.

    Floats are rejected: the exact path never converts rounded values
    back to rationals.
    """
    if isinstance(x, float) or isinstance(y, float):
        raise TypeError("exact coordinates cannot be built from floats")
    return PlanePoint(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Polygon:
    """An ordered vertex list; indices are understood modulo the length.

    Any vertex configuration is legal: no simplicity, convexity, or
    non-degeneracy condition is imposed or checked.
    """

    vertices: tuple[PlanePoint, ...]

    def __post_init__(self):
        if len(self.vertices) < 1:
            raise WrongSizeError("a polygon needs at least one vertex")

    @classmethod
    def from_coords(cls, coords: Iterable[tuple]) -> "Polygon":
        return cls(tuple(point(x, y) for x, y in coords))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, k: int) -> PlanePoint:
        return self.vertices[k]

    def __add__(self, other: "Polygon") -> "Polygon":
        if len(other) != len(self):
            raise WrongSizeError("vertex counts differ")
        return Polygon(tuple(a + b for a, b in zip(self.vertices, other.vertices)))

    def __sub__(self, other: "Polygon") -> "Polygon":
        if len(other) != len(self):
            raise WrongSizeError("vertex counts differ")
        return Polygon(tuple(a - b for a, b in zip(self.vertices, other.vertices)))

    def scaled(self, s: Fraction | int) -> "Polygon":
        return Polygon(tuple(v.scaled(s) for v in self.vertices))

    def translated(self, c: PlanePoint) -> "Polygon":
        return Polygon(tuple(v + c for v in self.vertices))

    def reversed(self) -> "Polygon":
        return Polygon(tuple(reversed(self.vertices)))


def midpoint_map(p: Polygon) -> Polygon:
    """The polygon joining the midpoints of consecutive edges.

    Vertex k of the result is the exact average of vertices k and k+1
    (indices mod m). This is a linear map on the space of m-gons.
    """
    verts = p.vertices
    m = len(verts)
    half = Fraction(1, 2)
    return Polygon(tuple((verts[k] + verts[(k + 1) % m]).scaled(half) for k in range(m)))


def iterate(p: Polygon, n: int) -> list[Polygon]:
    """Return [p, Mp, M^2 p, ..., M^n p], all exact."""
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    out = [p]
    for _ in range(n):
        out.append(midpoint_map(out[-1]))
    return out


def signed_area(p: Polygon) -> Fraction:
    """Shoelace signed area (1/2) sum_k (x_k y_{k+1} - x_{k+1} y_k).

    The sign follows orientation; zero is a legal return value. For m <= 2
    the sum is identically zero.
    """
    verts = p.vertices
    m = len(verts)
    total = Fraction(0)
    for k in range(m):
        total += verts[k].cross(verts[(k + 1) % m])
    return total / 2


def z_moment(p: Polygon) -> PlanePoint:
    """The edge-weighted moment sum_k (v_k + v_{k+1}) * cross(v_k, v_{k+1}).

    Equals six times the signed area times the centroid whenever the area
    is nonzero.
    """
    verts = p.vertices
    m = len(verts)
    zx = Fraction(0)
    zy = Fraction(0)
    for k in range(m):
        a = verts[k]
        b = verts[(k + 1) % m]
        c = a.cross(b)
        zx += (a.x + b.x) * c
        zy += (a.y + b.y) * c
    return PlanePoint(zx, zy)


def centroid(p: Polygon) -> PlanePoint:
    """The polygon centroid Z / (6 A), exact.

    For simple polygons this is the centroid of the filled region; the
    algebraic definition extends to arbitrary vertex configurations.

    Raises AreaZeroError when the signed area vanishes; batch callers
    should record the iterate as undefined rather than abort.
    """
    area = signed_area(p)
    if area == 0:
        raise AreaZeroError("zero signed area: centroid undefined")
    z = z_moment(p)
    return PlanePoint(z.x / (6 * area), z.y / (6 * area))


def vertex_centroid(p: Polygon) -> PlanePoint:
    """The arithmetic mean of the vertices. Invariant under midpoint_map."""
    verts = p.vertices
    m = len(verts)
    sx = sum(v.x for v in verts)
    sy = sum(v.y for v in verts)
    return PlanePoint(Fraction(sx, m), Fraction(sy, m))


def project_out_modes_0_3(p: Polygon) -> Polygon:
    """Remove the constant and the alternating-sign mode from a hexagon.

    Both coefficients are rational: the constant mode coefficient is the
    vertex mean and the alternating one is sum_k (-1)^k v_k / 6, since the
    alternating basis hexagon is (1, -1, 1, -1, 1, -1). The result has
    vertex mean zero and alternating sum zero; applying the projection
    twice changes nothing.
    """
    if len(p) != 6:
        raise WrongSizeError(f"projection requires a hexagon, got {len(p)} vertices")
    mean = vertex_centroid(p)
    ax = Fraction(0)
    ay = Fraction(0)
    for k, v in enumerate(p.vertices):
        sign = 1 if k % 2 == 0 else -1
        ax += sign * v.x
        ay += sign * v.y
    alt = PlanePoint(ax / 6, ay / 6)
    out = []
    for k, v in enumerate(p.vertices):
        sign = 1 if k % 2 == 0 else -1
        out.append(v - mean - alt.scaled(sign))
    return Polygon(tuple(out))
