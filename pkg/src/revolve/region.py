"""Plane regions that can be revolved: normal domains, polar sectors,
polygons, and disjoint unions.

Construction probes every boundary curve at the interval endpoints plus 33
interior points (configurable); curves must evaluate there and the ordering
invariants (lower <= upper, 0 <= rho_min <= rho_max, ...) must hold at every
probe.  Boundary points count as inside: the region is closed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AxisIntersectsRegion, DomainError, InvalidRegionError
from .expr import ExprAst, eval_array, eval_expr, parse_expr
from .geometry import Axis, Point, signed_distance

__all__ = [
    "Curve",
    "curve",
    "NormalX",
    "NormalY",
    "PolarSector",
    "Polygon",
    "UnionRegion",
    "Region",
    "contains",
    "contains_mask",
    "bounding_box",
    "boundary_points",
    "axis_side_check",
]

TWO_PI = 2.0 * math.pi

# Interior probe count used by construction-time invariant checks.
DEFAULT_INTERIOR_PROBES = 33

# Absolute slack for "touching" comparisons (side checks, ordering).
_TOUCH_TOL = 1e-9

_BOX_SAMPLES = 1025
_BOX_PAD = 1e-9


@dataclass(frozen=True)
class Curve:
    """A boundary curve y = f(t) given by a parsed expression."""

    ast: ExprAst

    @property
    def variable(self) -> str:
        return self.ast.variable

    @property
    def text(self) -> str:
        return self.ast.text

    def __call__(self, t: float) -> float:
        return eval_expr(self.ast, t)

    def sample(self, ts: np.ndarray) -> np.ndarray:
        """Vectorized evaluation; out-of-domain points come back NaN."""
        return eval_array(self.ast, ts)


def curve(text: str, variable: str) -> Curve:
    return Curve(parse_expr(text, variable))


def _probe_points(lo: float, hi: float, interior: int) -> np.ndarray:
    return np.linspace(lo, hi, interior + 2)


def _probe_curve(c: Curve, lo: float, hi: float, interior: int, what: str) -> list[float]:
    values = []
    for t in _probe_points(lo, hi, interior):
        try:
            values.append(c(float(t)))
        except DomainError as exc:
            raise InvalidRegionError(
                f"{what} {c.text!r} is undefined at {c.variable}={float(t)!r}"
            ) from exc
    return values


# ---------------------------------------------------------------------------
# Region variants

@dataclass(frozen=True)
class NormalX:
    """Region between y = lower(x) and y = upper(x) for x in [x_min, x_max]."""

    x_min: float
    x_max: float
    lower: Curve
    upper: Curve
    probes: int = field(default=DEFAULT_INTERIOR_PROBES, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "x_min", float(self.x_min))
        object.__setattr__(self, "x_max", float(self.x_max))
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise InvalidRegionError("x bounds must be finite")
        if not self.x_min < self.x_max:
            raise InvalidRegionError(f"x_min {self.x_min!r} must be < x_max {self.x_max!r}")
        lo = _probe_curve(self.lower, self.x_min, self.x_max, self.probes, "lower curve")
        hi = _probe_curve(self.upper, self.x_min, self.x_max, self.probes, "upper curve")
        for t, a, b in zip(_probe_points(self.x_min, self.x_max, self.probes), lo, hi):
            if a > b + _TOUCH_TOL:
                raise InvalidRegionError(f"lower > upper at x={float(t)!r} ({a!r} > {b!r})")


@dataclass(frozen=True)
class NormalY:
    """Region between x = left(y) and x = right(y) for y in [y_min, y_max]."""

    y_min: float
    y_max: float
    left: Curve
    right: Curve
    probes: int = field(default=DEFAULT_INTERIOR_PROBES, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "y_min", float(self.y_min))
        object.__setattr__(self, "y_max", float(self.y_max))
        if not (math.isfinite(self.y_min) and math.isfinite(self.y_max)):
            raise InvalidRegionError("y bounds must be finite")
        if not self.y_min < self.y_max:
            raise InvalidRegionError(f"y_min {self.y_min!r} must be < y_max {self.y_max!r}")
        left = _probe_curve(self.left, self.y_min, self.y_max, self.probes, "left curve")
        right = _probe_curve(self.right, self.y_min, self.y_max, self.probes, "right curve")
        for t, a, b in zip(_probe_points(self.y_min, self.y_max, self.probes), left, right):
            if a > b + _TOUCH_TOL:
                raise InvalidRegionError(f"left > right at y={float(t)!r} ({a!r} > {b!r})")


@dataclass(frozen=True)
class PolarSector:
    """Region rho_min(theta) <= rho <= rho_max(theta), theta_min <= theta <= theta_max."""

    theta_min: float
    theta_max: float
    rho_min: Curve
    rho_max: Curve
    probes: int = field(default=DEFAULT_INTERIOR_PROBES, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "theta_min", float(self.theta_min))
        object.__setattr__(self, "theta_max", float(self.theta_max))
        width = self.theta_max - self.theta_min
        if not (math.isfinite(self.theta_min) and math.isfinite(self.theta_max)):
            raise InvalidRegionError("theta bounds must be finite")
        if not 0.0 < width <= TWO_PI + 1e-12:
            raise InvalidRegionError(
                f"theta_max - theta_min must be in (0, 2*pi], got {width!r}"
            )
        rmin = _probe_curve(self.rho_min, self.theta_min, self.theta_max, self.probes, "rho_min")
        rmax = _probe_curve(self.rho_max, self.theta_min, self.theta_max, self.probes, "rho_max")
        for t, a, b in zip(_probe_points(self.theta_min, self.theta_max, self.probes), rmin, rmax):
            if a < -_TOUCH_TOL:
                raise InvalidRegionError(f"rho_min < 0 at theta={float(t)!r} ({a!r})")
            if a > b + _TOUCH_TOL:
                raise InvalidRegionError(f"rho_min > rho_max at theta={float(t)!r}")


@dataclass(frozen=True)
class Polygon:
    """Simple polygon, vertices in counterclockwise order."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise InvalidRegionError("polygon needs at least 3 vertices")
        if _shoelace_area(verts) <= 0.0:
            raise InvalidRegionError("polygon must be counterclockwise (positive area)")
        if not _is_simple(verts):
            raise InvalidRegionError("polygon edges self-intersect")


@dataclass(frozen=True)
class UnionRegion:
    """Disjoint union of regions.  Interior-disjointness is a caller
    contract and is not checked."""

    parts: tuple["Region", ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidRegionError("union needs at least one part")


Region = NormalX | NormalY | PolarSector | Polygon | UnionRegion


# ---------------------------------------------------------------------------
# Polygon helpers

def _shoelace_area(verts: tuple[Point, ...]) -> float:
    acc = 0.0
    n = len(verts)
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        acc += p.x * q.y - q.x * p.y
    return 0.5 * acc


def _segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    def orient(p, q, r):
        return (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y)

    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return (o1 * o2 < 0.0) and (o3 * o4 < 0.0)


def _is_simple(verts: tuple[Point, ...]) -> bool:
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # adjacent edges share a vertex
            c, d = verts[j], verts[(j + 1) % n]
            if _segments_cross(a, b, c, d):
                return False
    return True


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    scale = max(1.0, abs(a.x), abs(a.y), abs(b.x), abs(b.y), abs(p.x), abs(p.y))
    cross = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)
    if abs(cross) > 1e-12 * scale * scale:
        return False
    dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)
    length2 = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
    return -1e-12 * scale * scale <= dot <= length2 + 1e-12 * scale * scale


def _winding_number(poly: Polygon, x: float, y: float) -> int:
    wn = 0
    verts = poly.vertices
    n = len(verts)
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        is_left = (q.x - p.x) * (y - p.y) - (x - p.x) * (q.y - p.y)
        if p.y <= y:
            if q.y > y and is_left > 0.0:
                wn += 1
        elif q.y <= y and is_left < 0.0:
            wn -= 1
    return wn


# ---------------------------------------------------------------------------
# Containment

def _normalize_theta(theta: float, theta_min: float) -> float:
    """Map into [theta_min, theta_min + 2*pi) so seam-crossing sectors work."""
    rel = math.fmod(theta - theta_min, TWO_PI)
    if rel < 0.0:
        rel += TWO_PI
    return theta_min + rel


def contains(region: Region, p: Point) -> bool:
    """True iff ``p`` lies in the closed region.  Curve evaluation failures
    count as "not contained"."""
    if isinstance(region, NormalX):
        if not region.x_min <= p.x <= region.x_max:
            return False
        try:
            return region.lower(p.x) <= p.y <= region.upper(p.x)
        except DomainError:
            return False
    if isinstance(region, NormalY):
        if not region.y_min <= p.y <= region.y_max:
            return False
        try:
            return region.left(p.y) <= p.x <= region.right(p.y)
        except DomainError:
            return False
    if isinstance(region, PolarSector):
        rho = math.hypot(p.x, p.y)
        if rho == 0.0:
            # The origin belongs to the sector iff rho_min reaches zero.
            try:
                return any(
                    region.rho_min(float(t)) <= 0.0
                    for t in _probe_points(region.theta_min, region.theta_max, region.probes)
                )
            except DomainError:
                return False
        theta = _normalize_theta(math.atan2(p.y, p.x), region.theta_min)
        if theta > region.theta_max:
            return False
        try:
            return region.rho_min(theta) <= rho <= region.rho_max(theta)
        except DomainError:
            return False
    if isinstance(region, Polygon):
        verts = region.vertices
        n = len(verts)
        for i in range(n):
            if _on_segment(p, verts[i], verts[(i + 1) % n]):
                return True
        return _winding_number(region, p.x, p.y) != 0
    if isinstance(region, UnionRegion):
        return any(contains(part, p) for part in region.parts)
    raise TypeError(f"not a region: {region!r}")


def contains_mask(region: Region, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Vectorized containment over coordinate arrays.

    Matches contains() except on measure-zero boundary sets (polygon edges,
    the sector origin), which sampling callers never resolve anyway.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if isinstance(region, NormalX):
        lo = region.lower.sample(xs)
        hi = region.upper.sample(xs)
        return (xs >= region.x_min) & (xs <= region.x_max) & (ys >= lo) & (ys <= hi)
    if isinstance(region, NormalY):
        left = region.left.sample(ys)
        right = region.right.sample(ys)
        return (ys >= region.y_min) & (ys <= region.y_max) & (xs >= left) & (xs <= right)
    if isinstance(region, PolarSector):
        rho = np.hypot(xs, ys)
        theta = np.arctan2(ys, xs)
        rel = np.mod(theta - region.theta_min, TWO_PI)
        tn = region.theta_min + rel
        rmin = region.rho_min.sample(tn)
        rmax = region.rho_max.sample(tn)
        return (tn <= region.theta_max) & (rho >= rmin) & (rho <= rmax)
    if isinstance(region, Polygon):
        wn = np.zeros(xs.shape, dtype=np.int64)
        verts = region.vertices
        n = len(verts)
        for i in range(n):
            p, q = verts[i], verts[(i + 1) % n]
            is_left = (q.x - p.x) * (ys - p.y) - (xs - p.x) * (q.y - p.y)
            wn += ((p.y <= ys) & (q.y > ys) & (is_left > 0.0)).astype(np.int64)
            wn -= ((p.y > ys) & (q.y <= ys) & (is_left < 0.0)).astype(np.int64)
        return wn != 0
    if isinstance(region, UnionRegion):
        mask = contains_mask(region.parts[0], xs, ys)
        for part in region.parts[1:]:
            mask = mask | contains_mask(part, xs, ys)
        return mask
    raise TypeError(f"not a region: {region!r}")


# ---------------------------------------------------------------------------
# Bounding boxes

def _pad_interval(lo: float, hi: float) -> tuple[float, float]:
    return (
        lo - _BOX_PAD * max(1.0, abs(lo)),
        hi + _BOX_PAD * max(1.0, abs(hi)),
    )


def bounding_box(region: Region) -> tuple[float, float, float, float]:
    """Conservative axis-aligned box (x_lo, x_hi, y_lo, y_hi).

    Curve-bounded variants probe 1025 parameter points and pad by 1e-9
    relative; polygons are exact.
    """
    if isinstance(region, NormalX):
        ts = np.linspace(region.x_min, region.x_max, _BOX_SAMPLES)
        y_lo = float(np.nanmin(region.lower.sample(ts)))
        y_hi = float(np.nanmax(region.upper.sample(ts)))
        return (*_pad_interval(region.x_min, region.x_max), *_pad_interval(y_lo, y_hi))
    if isinstance(region, NormalY):
        ts = np.linspace(region.y_min, region.y_max, _BOX_SAMPLES)
        x_lo = float(np.nanmin(region.left.sample(ts)))
        x_hi = float(np.nanmax(region.right.sample(ts)))
        return (*_pad_interval(x_lo, x_hi), *_pad_interval(region.y_min, region.y_max))
    if isinstance(region, PolarSector):
        ts = np.linspace(region.theta_min, region.theta_max, _BOX_SAMPLES)
        cos_t, sin_t = np.cos(ts), np.sin(ts)
        xs, ys = [], []
        for r in (region.rho_min.sample(ts), region.rho_max.sample(ts)):
            xs.append(r * cos_t)
            ys.append(r * sin_t)
        x_all = np.concatenate(xs)
        y_all = np.concatenate(ys)
        return (
            *_pad_interval(float(np.nanmin(x_all)), float(np.nanmax(x_all))),
            *_pad_interval(float(np.nanmin(y_all)), float(np.nanmax(y_all))),
        )
    if isinstance(region, Polygon):
        xs = [v.x for v in region.vertices]
        ys = [v.y for v in region.vertices]
        return (min(xs), max(xs), min(ys), max(ys))
    if isinstance(region, UnionRegion):
        boxes = [bounding_box(part) for part in region.parts]
        return (
            min(b[0] for b in boxes),
            max(b[1] for b in boxes),
            min(b[2] for b in boxes),
            max(b[3] for b in boxes),
        )
    raise TypeError(f"not a region: {region!r}")


# ---------------------------------------------------------------------------
# Boundary sampling and the exterior-axis check

def _lerp(a: float, b: float, t: float) -> float:
    return a + (b - a) * t


def boundary_points(region: Region, n: int = 256) -> list[Point]:
    """About ``n`` points spread over the region boundary.  Points whose
    curve evaluation fails are skipped."""
    pts: list[Point] = []
    if isinstance(region, (NormalX, NormalY)):
        k = max(2, n // 4)
        if isinstance(region, NormalX):
            lo, hi = region.x_min, region.x_max
            a_curve, b_curve = region.lower, region.upper

            def mk(t, v):
                return Point(t, v)
        else:
            lo, hi = region.y_min, region.y_max
            a_curve, b_curve = region.left, region.right

            def mk(t, v):
                return Point(v, t)

        ts = np.linspace(lo, hi, k)
        for c in (a_curve, b_curve):
            vals = c.sample(ts)
            for t, v in zip(ts, vals):
                if math.isfinite(v):
                    pts.append(mk(float(t), float(v)))
        for t_end in (lo, hi):
            try:
                va, vb = a_curve(t_end), b_curve(t_end)
            except DomainError:
                continue
            for s in np.linspace(0.0, 1.0, k):
                pts.append(mk(t_end, _lerp(va, vb, float(s))))
        return pts
    if isinstance(region, PolarSector):
        k = max(2, n // 4)
        ts = np.linspace(region.theta_min, region.theta_max, k)
        for c in (region.rho_min, region.rho_max):
            rs = c.sample(ts)
            for t, r in zip(ts, rs):
                if math.isfinite(r):
                    pts.append(Point(float(r * math.cos(t)), float(r * math.sin(t))))
        for t_end in (region.theta_min, region.theta_max):
            try:
                r0, r1 = region.rho_min(t_end), region.rho_max(t_end)
            except DomainError:
                continue
            ct, st = math.cos(t_end), math.sin(t_end)
            for s in np.linspace(0.0, 1.0, k):
                r = _lerp(r0, r1, float(s))
                pts.append(Point(r * ct, r * st))
        return pts
    if isinstance(region, Polygon):
        verts = region.vertices
        m = len(verts)
        lengths = []
        for i in range(m):
            p, q = verts[i], verts[(i + 1) % m]
            lengths.append(math.hypot(q.x - p.x, q.y - p.y))
        perimeter = sum(lengths) or 1.0
        for i in range(m):
            p, q = verts[i], verts[(i + 1) % m]
            k = max(2, round(n * lengths[i] / perimeter))
            for s in np.linspace(0.0, 1.0, k, endpoint=False):
                pts.append(Point(_lerp(p.x, q.x, float(s)), _lerp(p.y, q.y, float(s))))
        return pts
    if isinstance(region, UnionRegion):
        per_part = max(16, n // len(region.parts))
        for part in region.parts:
            pts.extend(boundary_points(part, per_part))
        return pts
    raise TypeError(f"not a region: {region!r}")


def axis_side_check(region: Region, axis: Axis, grid: int = 64, boundary: int = 256) -> int:
    """Which side of ``axis`` the region lies on: +1 or -1.

    Samples signed distance on a grid of contained points plus boundary
    probes.  Touching the axis (within 1e-9) is allowed; strictly mixed
    signs raise AxisIntersectsRegion.
    """
    x_lo, x_hi, y_lo, y_hi = bounding_box(region)
    gx, gy = np.meshgrid(np.linspace(x_lo, x_hi, grid), np.linspace(y_lo, y_hi, grid))
    gx, gy = gx.ravel(), gy.ravel()
    mask = contains_mask(region, gx, gy)
    dists = axis.a * gx[mask] + axis.b * gy[mask] + axis.c
    samples = list(dists)
    samples.extend(signed_distance(axis, p) for p in boundary_points(region, boundary))
    if not samples:
        raise InvalidRegionError("region produced no sample points")
    d_min, d_max = min(samples), max(samples)
    if d_min >= -_TOUCH_TOL:
        return 1
    if d_max <= _TOUCH_TOL:
        return -1
    raise AxisIntersectsRegion(
        f"axis meets the region: signed distances span [{d_min!r}, {d_max!r}]"
    )
