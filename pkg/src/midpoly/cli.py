"""Command-line surface: polygon documents, verification runs, SVG figures.

Documents and reports are JSON with a schema field, emitted with sorted
keys and fixed indentation so identical inputs produce identical bytes.
Exact values travel as fraction strings ("3", "-5/3") to avoid silent
precision loss; the float path prints decimals with 17 significant
digits. Number formatting never depends on the locale.

Exit status contract, stable across releases:
    0  all checks pass
    1  verified violation
    2  usage or parse error
    3  insufficient data (too few defined centroids)
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import spectral
from .errors import (
    AreaZeroError,
    ExactModeError,
    InsufficientDataError,
    PolygonDocumentError,
    UnsupportedSizeError,
    WrongSizeError,
)
from .exact_poly import (
    PlanePoint,
    Polygon,
    centroid,
    iterate,
    vertex_centroid,
)
from .spectral import FloatPolygon
from .verify import (
    FuzzConfig,
    convergence_diagnostics,
    fuzz_hexagons,
    verify_hexagon_theorem,
    verify_proposition,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INSUFFICIENT = 3

_INT_RE = re.compile(r"[+-]?\d+\Z")
_FRACTION_RE = re.compile(r"[+-]?\d+/\d+\Z")
_DECIMAL_RE = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\Z")


def _classify(token: str) -> str:
    if _INT_RE.match(token):
        return "int"
    if _FRACTION_RE.match(token):
        try:
            Fraction(token)
        except ZeroDivisionError:
            raise PolygonDocumentError(f"zero denominator in {token!r}") from None
        return "fraction"
    if _DECIMAL_RE.match(token):
        return "decimal"
    raise PolygonDocumentError(f"unrecognized coordinate {token!r}")


def parse_polygon_document(text: str) -> list[tuple[str, str]]:
    """Parse a polygon document into coordinate string pairs.

    The document is a JSON object with a "vertices" list of [x, y] string
    pairs; each coordinate is an integer, an exact fraction like "22/7",
    or a decimal (float mode only). Malformed input raises
    PolygonDocumentError.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolygonDocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolygonDocumentError('document must be an object with a "vertices" list')
    raw = data["vertices"]
    if not isinstance(raw, list) or not raw:
        raise PolygonDocumentError('"vertices" must be a nonempty list')
    pairs = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 2:
            raise PolygonDocumentError(f"vertex must be an [x, y] pair, got {entry!r}")
        coords = []
        for token in entry:
            if not isinstance(token, str):
                raise PolygonDocumentError(f"coordinate must be a string, got {token!r}")
            _classify(token)
            coords.append(token)
        pairs.append((coords[0], coords[1]))
    return pairs


def serialize_polygon_document(pairs: list[tuple[str, str]]) -> str:
    """Canonical document text: fractions reduced, decimals shortest-form."""
    normed = []
    for sx, sy in pairs:
        row = []
        for token in (sx, sy):
            if _classify(token) == "decimal":
                row.append(repr(float(token)))
            else:
                row.append(str(Fraction(token)))
        normed.append(row)
    return _dumps({"schema": "polygon/1", "vertices": normed})


def to_exact_polygon(pairs: list[tuple[str, str]]) -> Polygon:
    """Exact-mode conversion: decimals are rejected, never rounded in."""
    coords = []
    for sx, sy in pairs:
        for token in (sx, sy):
            if _classify(token) == "decimal":
                raise ExactModeError(f"decimal coordinate {token!r} not allowed in exact mode")
        coords.append((Fraction(sx), Fraction(sy)))
    return Polygon.from_coords(coords)


def to_float_polygon(pairs: list[tuple[str, str]]) -> FloatPolygon:
    """Float-mode conversion; accepts integers, fractions, and decimals."""
    verts = []
    for sx, sy in pairs:
        verts.append(complex(float(Fraction(sx)), float(Fraction(sy))))
    return FloatPolygon(tuple(verts))


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _point_json(p: PlanePoint | None):
    if p is None:
        return None
    return [str(p.x), str(p.y)]


def _complex_json(z: complex | None):
    if z is None:
        return None
    return [z.real, z.imag]


# ---------------------------- subcommands ----------------------------


def cmd_iterate(pairs: list[tuple[str, str]], steps: int, mode: str) -> tuple[int, str]:
    """List every midpoint iterate of the input polygon."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if mode == "exact":
        seq = iterate(to_exact_polygon(pairs), steps)
        polys = [[[str(v.x), str(v.y)] for v in q] for q in seq]
    else:
        current = to_float_polygon(pairs)
        chain = [current]
        for _ in range(steps):
            current = spectral.midpoint_map(current)
            chain.append(current)
        polys = [[[f"{v.real:.17g}", f"{v.imag:.17g}"] for v in q] for q in chain]
    payload = {"schema": "iterates/1", "mode": mode, "steps": steps, "polygons": polys}
    return EXIT_OK, _dumps(payload)


def cmd_verify(pairs: list[tuple[str, str]], steps: int) -> tuple[int, str]:
    """Exact centroid-line check for a hexagon document."""
    poly = to_exact_polygon(pairs)
    if len(poly) != 6:
        raise WrongSizeError(f"verify requires a hexagon, got {len(poly)} vertices")
    try:
        report = verify_hexagon_theorem(poly, steps)
    except InsufficientDataError as exc:
        payload = {
            "schema": "verify/1",
            "error": "insufficient data",
            "detail": str(exc),
            "steps": steps,
        }
        return EXIT_INSUFFICIENT, _dumps(payload)

    try:
        diag = convergence_diagnostics(poly, steps)
        mono = {
            "indices": list(diag.monotonicity.indices),
            "projections": list(diag.monotonicity.projections),
            "stable_from": diag.monotonicity.stable_from,
            "sign_changes": diag.monotonicity.sign_changes,
            "distance_ratios": list(diag.distance_ratios),
        }
    except InsufficientDataError:
        mono = None

    payload = {
        "schema": "verify/1",
        "steps": steps,
        "all_colinear": report.all_colinear,
        "first_violation": report.first_violation,
        "line": {
            "anchor": _point_json(report.line_anchor),
            "direction": _point_json(report.line_direction),
        },
        "g0_on_line": report.g0_on_line,
        "limit_point": _point_json(report.limit_point),
        "limit_on_line": report.limit_on_line,
        "centroids": [_point_json(g) for g in report.centroids],
        "monotonicity": mono,
    }
    code = EXIT_OK if report.all_colinear else EXIT_VIOLATION
    return code, _dumps(payload)


def cmd_fuzz(seed: int, trials: int, bound: int, steps: int) -> tuple[int, str]:
    """Seeded random campaign over integer hexagons."""
    cfg = FuzzConfig(seed=seed, trials=trials, coordinate_bound=bound, steps=steps)
    summary = fuzz_hexagons(cfg)
    failure = None
    if summary.first_failure is not None:
        failure = {
            "trial": summary.first_failure.trial,
            "vertices": [list(v) for v in summary.first_failure.vertices],
            "reason": summary.first_failure.reason,
        }
    payload = {
        "schema": "fuzz/1",
        "seed": summary.seed,
        "trials": summary.trials,
        "coordinate_bound": summary.coordinate_bound,
        "steps": summary.steps,
        "theorem_passes": summary.theorem_passes,
        "theorem_failures": summary.theorem_failures,
        "z_scaling_passes": summary.z_scaling_passes,
        "z_scaling_failures": summary.z_scaling_failures,
        "insufficient_data": summary.insufficient_data,
        "undefined_centroids": summary.undefined_centroids,
        "g0_on_line_true": summary.g0_on_line_true,
        "g0_on_line_false": summary.g0_on_line_false,
        "first_failure": failure,
    }
    code = EXIT_OK if summary.failures == 0 else EXIT_VIOLATION
    return code, _dumps(payload)


def cmd_proposition(m: int, steps: int, tolerance: float) -> tuple[int, str]:
    """Slope check for the counterexample m-gon."""
    report = verify_proposition(m, steps, rel_tol=tolerance)
    payload = {
        "schema": "proposition/1",
        "m": report.m,
        "steps": steps,
        "slopes": list(report.slopes),
        "ratios": list(report.ratios),
        "measured_ratio": report.measured_ratio,
        "expected_ratio": report.expected_ratio,
        "ratio_ok": report.ratio_ok,
        "lines_pairwise_distinct": report.lines_pairwise_distinct,
        "passed": report.passed,
        "centroids": [_complex_json(z) for z in report.centroids],
    }
    code = EXIT_OK if report.passed else EXIT_VIOLATION
    return code, _dumps(payload)


# ------------------------------ figures ------------------------------


@dataclass(frozen=True)
class FigureSpec:
    """Declarative description of the iterated-hexagon drawing."""

    steps: int = 13
    show_line: bool = True
    show_centroids: bool = True
    fade_start: float = 1.0
    fade_end: float = 0.1
    width: int = 800
    height: int = 600

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        for value in (self.fade_start, self.fade_end):
            if not 0.0 <= value <= 1.0:
                raise ValueError("opacities must lie in [0, 1]")
        if self.width < 1 or self.height < 1:
            raise ValueError("canvas must be at least 1x1")


def _clip_infinite_line(ax, ay, dx, dy, width, height):
    """Intersect the line through (ax, ay) with direction (dx, dy) with the canvas."""
    t0, t1 = -math.inf, math.inf
    for a, d, hi in ((ax, dx, float(width)), (ay, dy, float(height))):
        if abs(d) < 1e-12:
            if a < 0.0 or a > hi:
                return None
        else:
            ta, tb = (0.0 - a) / d, (hi - a) / d
            if ta > tb:
                ta, tb = tb, ta
            t0, t1 = max(t0, ta), min(t1, tb)
    if not t0 < t1:
        return None
    return (ax + t0 * dx, ay + t0 * dy), (ax + t1 * dx, ay + t1 * dy)


def render_figure(poly: Polygon, spec: FigureSpec) -> str:
    """SVG of the iterated hexagon: fading iterates, centroid dots, one line.

    The iterates, centroids, and line are computed exactly; coordinates
    are converted to float for rendering only. Output bytes depend only
    on the input polygon and the figure spec.
    """
    if len(poly) != 6:
        raise WrongSizeError(f"figure requires a hexagon, got {len(poly)} vertices")

    chain = iterate(poly, spec.steps)
    centroids: list[PlanePoint | None] = []
    for q in chain:
        try:
            centroids.append(centroid(q))
        except AreaZeroError:
            centroids.append(None)
    limit = vertex_centroid(poly)

    world = [[(float(v.x), float(v.y)) for v in q] for q in chain]
    xs = [x for q in world for x, _ in q]
    ys = [y for q in world for _, y in q]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    if max_x - min_x < 1e-12:
        min_x -= 0.5
        max_x += 0.5
    if max_y - min_y < 1e-12:
        min_y -= 0.5
        max_y += 0.5

    margin = 0.05 * min(spec.width, spec.height)
    scale = min(
        (spec.width - 2 * margin) / (max_x - min_x),
        (spec.height - 2 * margin) / (max_y - min_y),
    )
    off_x = (spec.width - scale * (max_x - min_x)) / 2.0
    off_y = (spec.height - scale * (max_y - min_y)) / 2.0

    def to_screen(x: float, y: float) -> tuple[float, float]:
        return (off_x + (x - min_x) * scale, spec.height - off_y - (y - min_y) * scale)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{spec.width}" height="{spec.height}" '
            f'viewBox="0 0 {spec.width} {spec.height}">'
        ),
    ]

    for step, q in enumerate(world):
        frac = step / spec.steps if spec.steps else 0.0
        opacity = spec.fade_start + (spec.fade_end - spec.fade_start) * frac
        pts = " ".join("{:.3f},{:.3f}".format(*to_screen(x, y)) for x, y in q)
        parts.append(
            f'  <polygon points="{pts}" fill="none" stroke="#606060" '
            f'stroke-width="1.5" stroke-opacity="{opacity:.4f}"/>'
        )

    if spec.show_line:
        first_defined = next(
            (g for n, g in enumerate(centroids) if n >= 1 and g is not None), None
        )
        if first_defined is not None and first_defined != limit:
            ax, ay = to_screen(float(limit.x), float(limit.y))
            bx, by = to_screen(float(first_defined.x), float(first_defined.y))
            seg = _clip_infinite_line(ax, ay, bx - ax, by - ay, spec.width, spec.height)
            if seg is not None:
                (x1, y1), (x2, y2) = seg
                parts.append(
                    f'  <line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                    f'stroke="#000000" stroke-width="1.2"/>'
                )

    if spec.show_centroids:
        for g in centroids:
            if g is None:
                continue
            cx, cy = to_screen(float(g.x), float(g.y))
            parts.append(f'  <circle cx="{cx:.3f}" cy="{cy:.3f}" r="2.5" fill="#000000"/>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_figure(pairs: list[tuple[str, str]], spec: FigureSpec) -> tuple[int, str]:
    poly = to_exact_polygon(pairs)
    return EXIT_OK, render_figure(poly, spec)


# ------------------------------ dispatch ------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midpoly",
        description="Midpoint iteration on polygons: exact centroid-line verification and figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_it = sub.add_parser("iterate", help="print every midpoint iterate of a polygon")
    p_it.add_argument("input", help="polygon document (JSON file)")
    p_it.add_argument("--steps", type=int, default=12)
    p_it.add_argument("--mode", choices=("exact", "float"), default="exact")
    p_it.add_argument("--output", default=None)

    p_ve = sub.add_parser("verify", help="check the hexagon centroid line, exactly")
    p_ve.add_argument("input", help="hexagon document (JSON file)")
    p_ve.add_argument("--steps", type=int, default=12)
    p_ve.add_argument("--output", default=None)

    p_fz = sub.add_parser("fuzz", help="seeded random campaign over integer hexagons")
    p_fz.add_argument("--seed", type=int, default=42)
    p_fz.add_argument("--trials", type=int, default=1000)
    p_fz.add_argument("--bound", type=int, default=9)
    p_fz.add_argument("--steps", type=int, default=12)
    p_fz.add_argument("--output", default=None)

    p_pr = sub.add_parser("proposition", help="slope counterexample check for m-gons")
    p_pr.add_argument("m", type=int, help="vertex count (5 or at least 7)")
    p_pr.add_argument("--steps", type=int, default=10)
    p_pr.add_argument("--tolerance", type=float, default=1e-9)
    p_pr.add_argument("--output", default=None)

    p_fg = sub.add_parser("figure", help="render the iterated hexagon as an SVG")
    p_fg.add_argument("input", help="hexagon document (JSON file)")
    p_fg.add_argument("--steps", type=int, default=13)
    p_fg.add_argument("--output", required=True)
    p_fg.add_argument("--no-line", action="store_true")
    p_fg.add_argument("--no-centroids", action="store_true")
    p_fg.add_argument("--fade-start", type=float, default=1.0)
    p_fg.add_argument("--fade-end", type=float, default=0.1)
    p_fg.add_argument("--width", type=int, default=800)
    p_fg.add_argument("--height", type=int, default=600)
    return parser


def _read_document(path: str) -> list[tuple[str, str]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PolygonDocumentError(f"cannot read {path}: {exc}") from exc
    return parse_polygon_document(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "iterate":
            code, text = cmd_iterate(_read_document(args.input), args.steps, args.mode)
        elif args.command == "verify":
            code, text = cmd_verify(_read_document(args.input), args.steps)
        elif args.command == "fuzz":
            code, text = cmd_fuzz(args.seed, args.trials, args.bound, args.steps)
        elif args.command == "proposition":
            code, text = cmd_proposition(args.m, args.steps, args.tolerance)
        else:
            spec = FigureSpec(
                steps=args.steps,
                show_line=not args.no_line,
                show_centroids=not args.no_centroids,
                fade_start=args.fade_start,
                fade_end=args.fade_end,
                width=args.width,
                height=args.height,
            )
            code, text = cmd_figure(_read_document(args.input), spec)
    except (PolygonDocumentError, WrongSizeError, UnsupportedSizeError, ValueError) as exc:
        print(f"midpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientDataError as exc:
        print(f"midpoly: insufficient data: {exc}", file=sys.stderr)
        return EXIT_INSUFFICIENT

    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"midpoly: error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
