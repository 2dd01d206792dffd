"""Mechanical verification of the centroid behavior of midpoint iterates.

Hexagons are special: all centroids of the iterates except possibly the
first lie on one fixed line, exactly, and converge to the vertex centroid
along it. This module checks that claim with zero-tolerance rational
arithmetic, checks the exact moment scaling Z(Mv) = (3/8) Z(v) behind it,
checks the elementary constancy for triangles and quadrilaterals, and
demonstrates the failure of colinearity for every other vertex count via
explicit counterexample polygons. A seeded fuzzing harness runs the
hexagon checks over random integer inputs.

Failures found by the harness are data, not exceptions: summaries carry
pass/fail counts plus the first offending input, and identical seeds
produce identical summaries. Trials draw their random streams from
(seed, trial index) independently, so they could run in any order or in
parallel without changing the result.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    AreaZeroError,
    InsufficientDataError,
    UnsupportedSizeError,
    WrongSizeError,
)
from .exact_poly import (
    PlanePoint,
    Polygon,
    centroid,
    midpoint_map,
    project_out_modes_0_3,
    vertex_centroid,
    z_moment,
)
from .spectral import (
    FloatPolygon,
    ModeVector,
    advance_modes,
    area_from_modes,
    relative_close,
    root_of_unity,
    z_from_modes,
)

RATIO_REL_TOL = 1e-9
SLOPE_DISTINCT_TOL = 1e-12


class LineCheck(NamedTuple):
    colinear: bool
    first_violation: int | None


def exact_colinear(points: Sequence[PlanePoint]) -> LineCheck:
    """Decide whether all points lie on one line, by exact cross products.

    The line is anchored at the first point with direction toward the
    first distinct point; every later point must have zero cross product
    against that direction. No tolerance is involved. Sequences of at
    most two points are colinear; the witness is the index of the first
    violating point otherwise.
    """
    if len(points) < 1:
        raise ValueError("need at least one point")
    anchor = points[0]
    direction: PlanePoint | None = None
    for idx in range(1, len(points)):
        offset = points[idx] - anchor
        if direction is None:
            if not offset.is_zero():
                direction = offset
        elif offset.cross(direction) != 0:
            return LineCheck(False, idx)
    return LineCheck(True, None)


def centroid_sequence(p: Polygon, n: int) -> list[PlanePoint | None]:
    """Centroids of p, Mp, ..., M^n p; None marks a zero-area iterate."""
    out: list[PlanePoint | None] = []
    current = p
    for step in range(n + 1):
        try:
            out.append(centroid(current))
        except AreaZeroError:
            out.append(None)
        if step < n:
            current = midpoint_map(current)
    return out


@dataclass(frozen=True)
class ColinearityReport:
    """Exact verdict on the centroid line of an iterated hexagon.

    centroids[n] is the centroid of the n-th iterate or None where the
    area vanishes. The line is anchored at the first defined centroid
    with index >= 1, directed toward the next defined distinct one;
    line_direction is None when all defined centroids coincide, in which
    case the sequence counts as trivially colinear and membership means
    equality with the anchor. g0_on_line is None when the initial
    centroid is undefined.
    """

    centroids: tuple[PlanePoint | None, ...]
    line_anchor: PlanePoint
    line_direction: PlanePoint | None
    all_colinear: bool
    first_violation: int | None
    g0_on_line: bool | None
    limit_point: PlanePoint
    limit_on_line: bool

    def on_line(self, q: PlanePoint) -> bool:
        """Exact membership test against the report's line."""
        if self.line_direction is None:
            return q == self.line_anchor
        return (q - self.line_anchor).cross(self.line_direction) == 0


def _colinearity_report(
    centroids: Sequence[PlanePoint | None], limit: PlanePoint
) -> ColinearityReport:
    defined = [(n, g) for n, g in enumerate(centroids) if n >= 1 and g is not None]
    if len(defined) < 2:
        raise InsufficientDataError(
            f"only {len(defined)} defined centroids past the first iterate"
        )
    anchor = defined[0][1]
    direction = None
    for _, g in defined[1:]:
        if g != anchor:
            direction = g - anchor
            break

    all_colinear = True
    first_violation = None
    if direction is not None:
        for n, g in defined:
            if (g - anchor).cross(direction) != 0:
                all_colinear = False
                first_violation = n
                break

    def member(q: PlanePoint) -> bool:
        if direction is None:
            return q == anchor
        return (q - anchor).cross(direction) == 0

    g0 = centroids[0]
    return ColinearityReport(
        centroids=tuple(centroids),
        line_anchor=anchor,
        line_direction=direction,
        all_colinear=all_colinear,
        first_violation=first_violation,
        g0_on_line=None if g0 is None else member(g0),
        limit_point=limit,
        limit_on_line=member(limit),
    )


def verify_hexagon_theorem(p: Polygon, n: int) -> ColinearityReport:
    """Check exactly that all defined centroids G_1 .. G_n share one line.

    Also records whether the excluded initial centroid happens to lie on
    that line and whether the limit of the orbit, the vertex centroid,
    lies on it (it must). Raises InsufficientDataError when fewer than
    two centroids past the first iterate are defined.
    """
    if len(p) != 6:
        raise WrongSizeError(f"expected a hexagon, got {len(p)} vertices")
    if n < 1:
        raise ValueError("need at least one iteration")
    return _colinearity_report(centroid_sequence(p, n), vertex_centroid(p))


def verify_z_scaling(p: Polygon) -> bool:
    """Check Z(Mv) = (3/8) Z(v) exactly after projecting out modes 0 and 3."""
    if len(p) != 6:
        raise WrongSizeError(f"expected a hexagon, got {len(p)} vertices")
    reduced = project_out_modes_0_3(p)
    before = z_moment(reduced)
    after = z_moment(midpoint_map(reduced))
    return after.x * 8 == before.x * 3 and after.y * 8 == before.y * 3


def verify_small_m_invariance(p: Polygon, n: int) -> bool:
    """Exact centroid constancy for triangles and quadrilaterals.

    Triangles: every centroid G_0 .. G_n equals the vertex centroid.
    Quadrilaterals: G_1 .. G_n are all equal (the midpoint polygon of any
    quadrilateral is a parallelogram); G_0 may differ. Zero-area iterates
    in the required range raise AreaZeroError.
    """
    m = len(p)
    if m not in (3, 4):
        raise WrongSizeError(f"expected a triangle or quadrilateral, got {m} vertices")
    seq = centroid_sequence(p, n)
    start = 0 if m == 3 else 1
    required = seq[start:]
    if any(g is None for g in required):
        raise AreaZeroError(f"zero-area iterate among steps {start}..{n}")
    if m == 3:
        target = vertex_centroid(p)
        return all(g == target for g in required)
    first = required[0]
    return all(g == first for g in required)


def counterexample_modes(m: int) -> ModeVector:
    """Mode coefficients (0, i, -1, 1, 0, ..., 0) of the witness m-gon."""
    if m == 6 or m < 5:
        raise UnsupportedSizeError(f"no counterexample polygon for m={m}")
    coeffs = [0j] * m
    coeffs[1] = 1j
    coeffs[2] = -1.0 + 0j
    coeffs[3] = 1.0 + 0j
    return ModeVector(tuple(coeffs))


def build_counterexample(m: int) -> FloatPolygon:
    """The witness m-gon whose vertex k is i*w^k - w^(2k) + w^(3k).

    Defined for m = 5 and m >= 7; for every other m the centroid
    sequence is constant or colinear, so no witness exists.
    """
    if m == 6 or m < 5:
        raise UnsupportedSizeError(f"no counterexample polygon for m={m}")
    verts = tuple(
        1j * root_of_unity(m, k) - root_of_unity(m, 2 * k) + root_of_unity(m, 3 * k)
        for k in range(m)
    )
    return FloatPolygon(verts)


@dataclass(frozen=True)
class CounterexampleReport:
    """Slope record showing the centroids of the witness m-gon share no line.

    slopes[n] is Im Z / Re Z of the n-th iterate's moment, the slope of
    the line through the origin carrying that iterate's centroid. The
    slopes follow a geometric progression with ratio 2*cos(2*pi/m) - 1,
    so the lines are pairwise distinct and no two centroids are colinear
    with their limit at the origin. Float centroids are included as a
    sanity overlay; None marks a zero-area iterate.
    """

    m: int
    slopes: tuple[float, ...]
    ratios: tuple[float, ...]
    measured_ratio: float
    expected_ratio: float
    ratio_ok: bool
    lines_pairwise_distinct: bool
    centroids: tuple[complex | None, ...]

    @property
    def passed(self) -> bool:
        return self.ratio_ok and self.lines_pairwise_distinct


def verify_proposition(m: int, n: int, rel_tol: float = RATIO_REL_TOL) -> CounterexampleReport:
    """Check the witness m-gon's moment slopes against 2*cos(2*pi/m) - 1.

    Computes Z of each iterate in mode coordinates, forms the slope
    sequence s_0 .. s_n, and checks that every successive ratio matches
    the expected value within rel_tol and that all slopes are pairwise
    distinct.
    """
    if n < 3:
        raise ValueError("need at least three iterations")
    mv = counterexample_modes(m)
    expected = 2.0 * math.cos(2.0 * math.pi / m) - 1.0

    slopes = []
    overlays: list[complex | None] = []
    for step in range(n + 1):
        advanced = advance_modes(mv, step)
        z = z_from_modes(advanced)
        slopes.append(z.imag / z.real)
        area = area_from_modes(advanced)
        overlays.append(None if area == 0.0 else z / (6.0 * area))

    ratios = tuple(slopes[i + 1] / slopes[i] for i in range(n))
    ratio_ok = all(relative_close(r, expected, rel=rel_tol) for r in ratios)
    measured = sum(ratios) / len(ratios)

    distinct = True
    for i in range(len(slopes)):
        for j in range(i + 1, len(slopes)):
            gap = abs(slopes[i] - slopes[j])
            if gap <= SLOPE_DISTINCT_TOL * max(1.0, abs(slopes[i]), abs(slopes[j])):
                distinct = False
    return CounterexampleReport(
        m=m,
        slopes=tuple(slopes),
        ratios=ratios,
        measured_ratio=measured,
        expected_ratio=expected,
        ratio_ok=ratio_ok,
        lines_pairwise_distinct=distinct,
        centroids=tuple(overlays),
    )


@dataclass(frozen=True)
class FuzzConfig:
    """Deterministic campaign parameters.

    Vertices are drawn with independent integer coordinates uniform on
    [-coordinate_bound, coordinate_bound]^2; trial t uses the random
    stream seeded by (seed, t), so trials are order-independent.
    """

    seed: int = 42
    trials: int = 1000
    coordinate_bound: int = 9
    steps: int = 12

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.coordinate_bound < 1:
            raise ValueError("coordinate bound must be at least 1")
        if self.steps < 2:
            raise ValueError("steps must be at least 2")


@dataclass(frozen=True)
class FuzzFailure:
    trial: int
    vertices: tuple[tuple[int, int], ...]
    reason: str


@dataclass(frozen=True)
class FuzzSummary:
    seed: int
    trials: int
    coordinate_bound: int
    steps: int
    theorem_passes: int
    theorem_failures: int
    z_scaling_passes: int
    z_scaling_failures: int
    insufficient_data: int
    undefined_centroids: int
    g0_on_line_true: int
    g0_on_line_false: int
    first_failure: FuzzFailure | None

    @property
    def failures(self) -> int:
        return self.theorem_failures + self.z_scaling_failures


def trial_rng(seed: int, trial: int) -> random.Random:
    """Random stream for one trial, derived deterministically from (seed, trial)."""
    return random.Random((seed << 32) + trial)


def random_integer_polygon(rng: random.Random, m: int, bound: int) -> Polygon:
    """m-gon with independent integer coordinates uniform on [-bound, bound]^2."""
    return Polygon.from_coords(
        [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(m)]
    )


def fuzz_hexagons(cfg: FuzzConfig) -> FuzzSummary:
    """Run the hexagon line check and the moment scaling check over random inputs.

    Deterministic given the seed. A trial passes the line check when all
    defined centroids past the first iterate are exactly colinear and the
    vertex centroid lies on the line; trials with fewer than two defined
    centroids are counted as insufficient data, not as failures. The
    moment scaling check runs on every trial regardless.
    """
    theorem_passes = 0
    theorem_failures = 0
    z_passes = 0
    z_failures = 0
    insufficient = 0
    undefined = 0
    g0_true = 0
    g0_false = 0
    first_failure: FuzzFailure | None = None

    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        poly = random_integer_polygon(rng, 6, cfg.coordinate_bound)
        coords = tuple((int(v.x), int(v.y)) for v in poly.vertices)

        seq = centroid_sequence(poly, cfg.steps)
        undefined += sum(1 for g in seq if g is None)

        reason = None
        try:
            report = _colinearity_report(seq, vertex_centroid(poly))
        except InsufficientDataError:
            insufficient += 1
        else:
            if report.g0_on_line is True:
                g0_true += 1
            elif report.g0_on_line is False:
                g0_false += 1
            if report.all_colinear and report.limit_on_line:
                theorem_passes += 1
            else:
                theorem_failures += 1
                if not report.all_colinear:
                    reason = f"centroids not colinear, first violation at iterate {report.first_violation}"
                else:
                    reason = "vertex centroid off the centroid line"

        if verify_z_scaling(poly):
            z_passes += 1
        else:
            z_failures += 1
            if reason is None:
                reason = "moment scaling Z(Mv) != (3/8) Z(v) after projection"

        if reason is not None and first_failure is None:
            first_failure = FuzzFailure(trial=trial, vertices=coords, reason=reason)

    return FuzzSummary(
        seed=cfg.seed,
        trials=cfg.trials,
        coordinate_bound=cfg.coordinate_bound,
        steps=cfg.steps,
        theorem_passes=theorem_passes,
        theorem_failures=theorem_failures,
        z_scaling_passes=z_passes,
        z_scaling_failures=z_failures,
        insufficient_data=insufficient,
        undefined_centroids=undefined,
        g0_on_line_true=g0_true,
        g0_on_line_false=g0_false,
        first_failure=first_failure,
    )


@dataclass(frozen=True)
class MonotonicityReport:
    """Signed positions of the centroids along the line, with sign data.

    projections[i] is the parameter of centroid G_{indices[i]} along the
    line direction, measured from the vertex centroid (the orbit limit).
    sign_changes counts sign flips of that position sequence; the closed
    form implies at most one. stable_from is the least listed index from
    which consecutive projection differences keep a single sign through
    the horizon ("eventually monotonic").
    """

    indices: tuple[int, ...]
    projections: tuple[float, ...]
    stable_from: int | None
    sign_changes: int


@dataclass(frozen=True)
class ConvergenceDiagnostics:
    """Monotonicity report plus distance ratios |G_{n+1} - limit| / |G_n - limit|.

    distance_ratios[i] compares indices[i] to indices[i+1]; None marks a
    gap (non-consecutive defined iterates) or a centroid sitting exactly
    on the limit. The ratios approach 1/2 whenever the leading mode
    imbalance |xi_1|^2 - |xi_5|^2 is nonzero.
    """

    monotonicity: MonotonicityReport
    distance_ratios: tuple[float | None, ...]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def convergence_diagnostics(p: Polygon, n: int) -> ConvergenceDiagnostics:
    """Projection and distance-ratio diagnostics for a hexagon orbit.

    Signs are decided on exact rationals; only the reported values are
    floats. Requires at least three defined centroids past the first
    iterate.
    """
    report = verify_hexagon_theorem(p, n)
    limit = report.limit_point
    defined = [(k, g) for k, g in enumerate(report.centroids) if k >= 1 and g is not None]
    if len(defined) < 3:
        raise InsufficientDataError("need at least three defined centroids")

    direction = report.line_direction
    if direction is None:
        direction = PlanePoint(Fraction(1), Fraction(0))
    norm2 = direction.dot(direction)

    indices = tuple(k for k, _ in defined)
    exact_params = [(g - limit).dot(direction) / norm2 for _, g in defined]

    signs = [_sign(t) for t in exact_params]
    nonzero = [s for s in signs if s != 0]
    sign_changes = sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)

    diffs = [b - a for a, b in zip(exact_params, exact_params[1:])]
    stable_from: int | None = None
    run_sign = 0
    for pos in range(len(diffs) - 1, -1, -1):
        s = _sign(diffs[pos])
        if s == 0:
            continue
        if run_sign == 0:
            run_sign = s
        elif s != run_sign:
            stable_from = indices[pos + 1]
            break
    if stable_from is None:
        stable_from = indices[0]

    ratios: list[float | None] = []
    for (ka, ga), (kb, gb) in zip(defined, defined[1:]):
        da = ga - limit
        db = gb - limit
        if kb != ka + 1 or da.is_zero():
            ratios.append(None)
            continue
        num = math.sqrt(float(db.dot(db)))
        den = math.sqrt(float(da.dot(da)))
        ratios.append(num / den)

    mono = MonotonicityReport(
        indices=indices,
        projections=tuple(float(t) for t in exact_params),
        stable_from=stable_from,
        sign_changes=sign_changes,
    )
    return ConvergenceDiagnostics(monotonicity=mono, distance_ratios=tuple(ratios))
