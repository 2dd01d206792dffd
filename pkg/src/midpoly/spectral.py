"""Discrete Fourier analysis of polygons in double precision.

A polygon v in C^m decomposes over the basis polygons e(j) whose k-th
vertex is w^(jk), w = exp(2*pi*i/m). These are exactly the oriented
regular (possibly degenerate) m-gons and they are eigenvectors of the
midpoint map with eigenvalues (1 + w^j) / 2, which makes the iteration
diagonal in mode coordinates: coefficient j just picks up a factor of
the eigenvalue per step.

The transform is computed by direct O(m^2) summation; desk scale here is
m <= 64, where simplicity and accuracy beat speed. Conversion from the
exact representation is explicit and one way: nothing in this package
converts floats back to rationals.

Default tolerances, used by callers and tests: 1e-12 absolute for
round-trips and eigen-relations, 1e-9 relative (with a 1e-12 absolute
floor) for the triply-nonlinear moment and centroid quantities, which
lose roughly three digits over machine precision. Comparison helpers
accept overrides.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateDenominatorError, WrongSizeError
from .exact_poly import Polygon

ROUND_TRIP_TOL = 1e-12
MOMENT_REL_TOL = 1e-9
MOMENT_ABS_FLOOR = 1e-12

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class FloatPolygon:
    """Float mirror of a polygon: vertices as complex numbers."""

    vertices: tuple[complex, ...]

    def __post_init__(self):
        if len(self.vertices) < 1:
            raise WrongSizeError("a polygon needs at least one vertex")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, k: int) -> complex:
        return self.vertices[k]


@dataclass(frozen=True)
class ModeVector:
    """Mode coefficients xi_0 .. xi_{m-1} of an m-gon."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coefficients) < 1:
            raise WrongSizeError("a mode vector needs at least one coefficient")

    @property
    def m(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, j: int) -> complex:
        return self.coefficients[j]


def to_float_polygon(p: Polygon) -> FloatPolygon:
    """Explicit one-way conversion from the exact representation."""
    return FloatPolygon(tuple(complex(float(v.x), float(v.y)) for v in p.vertices))


def root_of_unity(m: int, j: int) -> complex:
    """exp(2*pi*i*j/m); the index is reduced mod m first."""
    if m < 1:
        raise WrongSizeError("m must be at least 1")
    return cmath.exp(2j * math.pi * (j % m) / m)


def eigenvalue(m: int, j: int) -> complex:
    """Midpoint-map eigenvalue (1 + w^j) / 2 for mode j of an m-gon."""
    return (1.0 + root_of_unity(m, j)) / 2.0


def mode_basis(m: int, j: int) -> FloatPolygon:
    """The basis m-gon whose k-th vertex is w^(jk)."""
    if m < 1:
        raise WrongSizeError("m must be at least 1")
    return FloatPolygon(tuple(root_of_unity(m, j * k) for k in range(m)))


def midpoint_map(p: FloatPolygon) -> FloatPolygon:
    """Float counterpart of the exact midpoint map."""
    verts = p.vertices
    m = len(verts)
    return FloatPolygon(tuple(0.5 * (verts[k] + verts[(k + 1) % m]) for k in range(m)))


def decompose(p: FloatPolygon) -> ModeVector:
    """Mode coefficients xi_j = (1/m) sum_k v_k w^(-jk)."""
    verts = p.vertices
    m = len(verts)
    coeffs = []
    for j in range(m):
        acc = 0j
        for k, v in enumerate(verts):
            acc += v * root_of_unity(m, -j * k)
        coeffs.append(acc / m)
    return ModeVector(tuple(coeffs))


def reconstruct(mv: ModeVector) -> FloatPolygon:
    """Inverse of decompose: vertex k is sum_j xi_j w^(jk)."""
    m = mv.m
    verts = []
    for k in range(m):
        acc = 0j
        for j, c in enumerate(mv.coefficients):
            acc += c * root_of_unity(m, j * k)
        verts.append(acc)
    return FloatPolygon(tuple(verts))


def advance_modes(mv: ModeVector, n: int) -> ModeVector:
    """Apply n midpoint steps in mode coordinates: xi_j -> lambda_j^n xi_j."""
    if n < 0:
        raise ValueError("step count must be nonnegative")
    m = mv.m
    return ModeVector(tuple(eigenvalue(m, j) ** n * c for j, c in enumerate(mv.coefficients)))


def z_from_modes(mv: ModeVector) -> complex:
    """The moment Z in mode coordinates.

    Evaluates m * sum_{p,q} xi_p * conj(xi_q) * xi_{q-p} * Im(w^p + w^q)
    with the index q - p taken mod m. Agrees with the exact shoelace
    moment of the reconstructed polygon.
    """
    m = mv.m
    xi = mv.coefficients
    im_omega = [root_of_unity(m, j).imag for j in range(m)]
    total = 0j
    for p in range(m):
        for q in range(m):
            factor = im_omega[p] + im_omega[q]
            if factor == 0.0:
                continue
            total += xi[p] * xi[q].conjugate() * xi[(q - p) % m] * factor
    return m * total


def area_from_modes(mv: ModeVector) -> float:
    """Signed area in mode coordinates: (m/2) sum_j |xi_j|^2 Im(w^j).

    Only the diagonal terms of the quadratic expansion survive the sum
    over vertices. For hexagons this reads
    (3*sqrt(3)/2) * (|xi_1|^2 - |xi_5|^2 + |xi_2|^2 - |xi_4|^2).
    """
    m = mv.m
    total = 0.0
    for j, c in enumerate(mv.coefficients):
        total += (c.real * c.real + c.imag * c.imag) * root_of_unity(m, j).imag
    return 0.5 * m * total


def closed_form_centroid(mv: ModeVector, n: int) -> complex:
    """Centroid of the n-th midpoint iterate of a hexagon, in closed form.

    Requires a hexagon mode vector with (numerically) vanishing constant
    and alternating modes. With d1 = |xi_1|^2 - |xi_5|^2 and
    d2 = |xi_2|^2 - |xi_4|^2, the centroid of the n-th iterate is

        2^(-n) * Z / (9*sqrt(3) * (d1 + 3^(-n) * d2))

    a real multiple of the moment Z for every n, so the whole orbit lies
    on one line through the origin.

    Raises DegenerateDenominatorError when the bracketed real factor is
    zero (the n-th iterate has zero area).
    """
    if mv.m != 6:
        raise WrongSizeError("closed form applies to hexagons only")
    if n < 0:
        raise ValueError("step count must be nonnegative")
    if abs(mv[0]) > 1e-12 or abs(mv[3]) > 1e-12:
        raise ValueError("modes 0 and 3 must be projected out first")
    d1 = abs(mv[1]) ** 2 - abs(mv[5]) ** 2
    d2 = abs(mv[2]) ** 2 - abs(mv[4]) ** 2
    denom = d1 + 3.0 ** (-n) * d2
    if denom == 0.0:
        raise DegenerateDenominatorError(f"iterate {n} has zero area")
    return 0.5**n * z_from_modes(mv) / (9.0 * _SQRT3 * denom)


def triple_product(m: int, p: int, q: int) -> float:
    """The eigenvalue product lambda_p * conj(lambda_q) * lambda_{q-p}.

    Always real: it equals (1/4) * Re(1 + w^p + w^q + w^(q-p)), computed
    here from that identity so the imaginary part is zero by construction.
    """
    if m < 1:
        raise WrongSizeError("m must be at least 1")
    re = (
        1.0
        + root_of_unity(m, p).real
        + root_of_unity(m, q).real
        + root_of_unity(m, q - p).real
    )
    return re / 4.0


def relative_close(a: float, b: float, rel: float = MOMENT_REL_TOL, floor: float = MOMENT_ABS_FLOOR) -> bool:
    """abs(a - b) within rel of magnitude, with an absolute floor."""
    return abs(a - b) <= max(floor, rel * max(abs(a), abs(b)))


def complex_close(a: complex, b: complex, rel: float = MOMENT_REL_TOL, floor: float = MOMENT_ABS_FLOOR) -> bool:
    return abs(a - b) <= max(floor, rel * max(abs(a), abs(b)))
