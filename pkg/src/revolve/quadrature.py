"""Adaptive quadrature: 1D Gauss-Kronrod 7/15 with global bisection, and
iterated 2D integration over regions.

The embedded pair gives each segment a local error estimate |K15 - G7|;
the segment with the worst estimate is bisected until the summed estimate
meets max(abs_tol, rel_tol * |integral|) or a segment reaches max_depth.
|K15 - G7| tracks the error of the *7-point* rule, so the reported estimate
is a deliberate overestimate of the error in the returned 15-point sum.

2D integrals are iterated (inner integral per outer node) with the inner
tolerance tightened 10x so the outer estimate dominates the reported error.
All nodes are interior, so endpoint singularities like sqrt(1-x^2) at x=1
are never sampled directly; an integrand failure within 1e-9 of an endpoint
is retried once with a 1e-12 relative inward nudge, and a failure in the
interior is a hard IntegrandError.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import (
    DomainError,
    IntegrandError,
    InvalidRegionError,
    QuadratureNoConvergence,
)
from .geometry import Point
from .region import NormalX, NormalY, Polygon, PolarSector, Region, UnionRegion

__all__ = [
    "Tolerance",
    "QuadratureResult",
    "integrate_1d",
    "integrate_region",
    "polygon_slabs",
]

# Kronrod-15 abscissae (positive half; index 7 is the center node) and
# weights, with the embedded Gauss-7 weights on the odd-index abscissae.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
)
_WGK_CENTER = 0.209482141084727828012999174891714
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
)
_WG_CENTER = 0.417959183673469387755102040816327

_MAX_SUBDIVISIONS = 20000
_EDGE_FRACTION = 1e-9
_NUDGE_FRACTION = 1e-12


@dataclass(frozen=True)
class Tolerance:
    rel: float = 1e-10
    abs: float = 1e-12
    max_depth: int = 50

    def __post_init__(self):
        if not (self.rel > 0.0 and self.abs > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")

    def tightened(self, factor: float = 0.1) -> "Tolerance":
        return Tolerance(self.rel * factor, self.abs * factor, self.max_depth)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


_ROUNDOFF = 50.0 * 2.220446049250313e-16  # 50 * double epsilon, per QUADPACK


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod 7/15 application on [a, b]: (K15, error estimate).

    The estimate is |K15 - G7| floored at the round-off level of the
    weighted sum, so an exactly-integrated panel still reports the
    unavoidable floating-point uncertainty instead of zero.
    """
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resk = _WGK_CENTER * fc
    resabs = _WGK_CENTER * abs(fc)
    resg = _WG_CENTER * fc
    for i, x in enumerate(_XGK):
        dx = half * x
        f1 = f(center - dx)
        f2 = f(center + dx)
        resk += _WGK[i] * (f1 + f2)
        resabs += _WGK[i] * (abs(f1) + abs(f2))
        if i % 2 == 1:
            resg += _WG[i // 2] * (f1 + f2)
    err = abs(half * (resk - resg))
    return half * resk, max(err, _ROUNDOFF * abs(half) * resabs)


def _domain_guard(f, lo: float, hi: float, counter: list[int]):
    """Wrap an integrand: count calls, normalize failures.

    DomainError (or a non-finite value) within 1e-9*(hi-lo) of either
    endpoint is retried once, nudged 1e-12*(hi-lo) into the interval;
    anywhere else it raises IntegrandError.
    """
    span = hi - lo
    edge = _EDGE_FRACTION * span
    nudge = _NUDGE_FRACTION * span

    def attempt(x):
        counter[0] += 1
        try:
            y = f(x)
        except (DomainError, ValueError, ZeroDivisionError, OverflowError):
            return None
        return y if math.isfinite(y) else None

    def guarded(x: float) -> float:
        y = attempt(x)
        if y is not None:
            return y
        if abs(x - lo) <= edge:
            y = attempt(x + nudge)
        elif abs(hi - x) <= edge:
            y = attempt(x - nudge)
        if y is None:
            raise IntegrandError(f"integrand undefined at {x!r} inside [{lo!r}, {hi!r}]")
        return y

    return guarded


def integrate_1d(f, lo: float, hi: float, tol: Tolerance | None = None) -> QuadratureResult:
    """Adaptive integral of ``f`` over [lo, hi] with an error estimate."""
    tol = tol or Tolerance()
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("integration bounds must be finite")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo!r}, {hi!r}]")

    counter = [0]
    wf = _domain_guard(f, lo, hi, counter)

    value, err = _gk15(wf, lo, hi)
    # heap entries: (-err, seq, a, b, value, err, depth)
    heap = [(-err, 0, lo, hi, value, err, 0)]
    seq = 1
    total_value, total_err = value, err
    splits = 0
    while True:
        budget = max(tol.abs, tol.rel * abs(total_value))
        if total_err <= budget:
            break
        _, _, a, b, v0, e0, depth = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if depth >= tol.max_depth or not a < mid < b:
            raise QuadratureNoConvergence(
                f"error estimate {total_err!r} above tolerance {budget!r} "
                f"after depth {depth} near [{a!r}, {b!r}]"
            )
        v1, e1 = _gk15(wf, a, mid)
        v2, e2 = _gk15(wf, mid, b)
        total_value += (v1 + v2) - v0
        total_err += (e1 + e2) - e0
        heapq.heappush(heap, (-e1, seq, a, mid, v1, e1, depth + 1))
        heapq.heappush(heap, (-e2, seq + 1, mid, b, v2, e2, depth + 1))
        seq += 2
        splits += 1
        if splits > _MAX_SUBDIVISIONS:
            raise QuadratureNoConvergence(
                f"exceeded {_MAX_SUBDIVISIONS} subdivisions with error {total_err!r}"
            )

    # Fixed reduction order (sorted by left endpoint) keeps results
    # bit-reproducible regardless of the pop history above.
    segments = sorted((item[2], item[4], item[5]) for item in heap)
    value = math.fsum(s[1] for s in segments)
    err = math.fsum(s[2] for s in segments)
    return QuadratureResult(value, err, counter[0])


# ---------------------------------------------------------------------------
# Iterated 2D integration

def _combine(results: list[QuadratureResult]) -> QuadratureResult:
    return QuadratureResult(
        math.fsum(r.value for r in results),
        math.fsum(r.error_estimate for r in results),
        sum(r.evaluations for r in results),
    )


def _iterated(u0, u1, lower, upper, g, tol: Tolerance) -> QuadratureResult:
    """Outer integral over u of the inner integral of g(u, v) for v between
    lower(u) and upper(u).  Degenerate sections (upper <= lower) contribute 0."""
    inner_tol = tol.tightened()
    inner_evals = [0]

    def section(u: float) -> float:
        a = lower(u)
        b = upper(u)
        if not b > a:
            return 0.0
        res = integrate_1d(lambda v: g(u, v), a, b, inner_tol)
        inner_evals[0] += res.evaluations
        return res.value

    outer = integrate_1d(section, u0, u1, tol)
    return QuadratureResult(
        outer.value, outer.error_estimate, outer.evaluations + inner_evals[0]
    )


def _edge_interp(p: Point, q: Point):
    slope = (q.y - p.y) / (q.x - p.x)
    return lambda x: p.y + slope * (x - p.x)


def polygon_slabs(poly: Polygon):
    """Cut a simple polygon at every vertex abscissa into x-slabs, each
    bounded below/above by linear edge sections.

    Returns a list of (x_lo, x_hi, lower_fn, upper_fn).
    """
    verts = poly.vertices
    n = len(verts)
    cuts = sorted({v.x for v in verts})
    slabs = []
    for xa, xb in zip(cuts, cuts[1:]):
        mid = 0.5 * (xa + xb)
        covering = []
        for i in range(n):
            p, q = verts[i], verts[(i + 1) % n]
            if p.x == q.x:
                continue
            if min(p.x, q.x) <= xa and max(p.x, q.x) >= xb:
                covering.append((_edge_interp(p, q)(mid), p, q))
        covering.sort(key=lambda item: item[0])
        if len(covering) % 2:
            raise InvalidRegionError(
                f"polygon slab [{xa!r}, {xb!r}] has an odd edge count"
            )
        for j in range(0, len(covering), 2):
            slabs.append(
                (
                    xa,
                    xb,
                    _edge_interp(covering[j][1], covering[j][2]),
                    _edge_interp(covering[j + 1][1], covering[j + 1][2]),
                )
            )
    return slabs


def integrate_region(region: Region, integrand, tol: Tolerance | None = None) -> QuadratureResult:
    """Double integral of ``integrand`` (a Point -> float function) over a
    region, by the iterated order natural to each variant: inner-y for
    NormalX (the shell arrangement), inner-x for NormalY (the disk
    arrangement), inner-rho with Jacobian rho for PolarSector, x-slab
    decomposition for Polygon, and summed parts for unions."""
    tol = tol or Tolerance()
    if isinstance(region, NormalX):
        return _iterated(
            region.x_min,
            region.x_max,
            region.lower,
            region.upper,
            lambda x, y: integrand(Point(x, y)),
            tol,
        )
    if isinstance(region, NormalY):
        return _iterated(
            region.y_min,
            region.y_max,
            region.left,
            region.right,
            lambda y, x: integrand(Point(x, y)),
            tol,
        )
    if isinstance(region, PolarSector):
        return _iterated(
            region.theta_min,
            region.theta_max,
            region.rho_min,
            region.rho_max,
            lambda th, r: integrand(Point(r * math.cos(th), r * math.sin(th))) * r,
            tol,
        )
    if isinstance(region, Polygon):
        parts = [
            _iterated(xa, xb, lo_fn, hi_fn, lambda x, y: integrand(Point(x, y)), tol)
            for xa, xb, lo_fn, hi_fn in polygon_slabs(region)
        ]
        return _combine(parts)
    if isinstance(region, UnionRegion):
        return _combine([integrate_region(part, integrand, tol) for part in region.parts])
    raise TypeError(f"not a region: {region!r}")
