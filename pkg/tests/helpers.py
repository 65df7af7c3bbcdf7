"""Shared builders for test regions, axes, and randomized cases."""

import math

import numpy as np

import revolve as rv

AXIS_OY = rv.Axis.vertical(0.0)
AXIS_OX = rv.Axis.horizontal(0.0)

# Volume of the circular-sector fixture (unit circle between the rays at
# -pi/3 and pi/4) revolved about the y axis: pi*(sqrt(2)+sqrt(3))/3.
SECTOR_VOLUME = math.pi * (math.sqrt(2) + math.sqrt(3)) / 3

TORUS_VOLUME = 4.0 * math.pi**2  # ring of minor radius 1 at distance 2
CONE_VOLUME = math.pi / 3
SPHERE_VOLUME = 4.0 * math.pi / 3
SQUARE_VOLUME = 3.0 * math.pi  # unit square [1,2]x[0,1] about the y axis


def sector_polar():
    return rv.PolarSector(
        -math.pi / 3, math.pi / 4, rv.curve("0", "theta"), rv.curve("1", "theta")
    )


def sector_disk_union():
    return rv.UnionRegion((
        rv.NormalY(-math.sqrt(3) / 2, 0.0,
                   rv.curve("-y/sqrt(3)", "y"), rv.curve("sqrt(1-y^2)", "y")),
        rv.NormalY(0.0, math.sqrt(2) / 2,
                   rv.curve("y", "y"), rv.curve("sqrt(1-y^2)", "y")),
    ))


def sector_shell_union():
    return rv.UnionRegion((
        rv.NormalX(0.0, 0.5, rv.curve("-sqrt(3)*x", "x"), rv.curve("x", "x")),
        rv.NormalX(0.5, math.sqrt(2) / 2,
                   rv.curve("-sqrt(1-x^2)", "x"), rv.curve("x", "x")),
        rv.NormalX(math.sqrt(2) / 2, 1.0,
                   rv.curve("-sqrt(1-x^2)", "x"), rv.curve("sqrt(1-x^2)", "x")),
    ))


def torus_normal_x():
    return rv.NormalX(1.0, 3.0,
                      rv.curve("-sqrt(1-(x-2)^2)", "x"),
                      rv.curve("sqrt(1-(x-2)^2)", "x"))


def torus_normal_y():
    return rv.NormalY(-1.0, 1.0,
                      rv.curve("2-sqrt(1-y^2)", "y"),
                      rv.curve("2+sqrt(1-y^2)", "y"))


def cone_normal_x():
    return rv.NormalX(0.0, 1.0, rv.curve("0", "x"), rv.curve("1-x", "x"))


def cone_triangle():
    return rv.Polygon((rv.Point(0, 0), rv.Point(1, 0), rv.Point(0, 1)))


def sphere_normal_y():
    return rv.NormalY(-1.0, 1.0, rv.curve("0", "y"), rv.curve("sqrt(1-y^2)", "y"))


def unit_square_polygon():
    return rv.Polygon((rv.Point(1, 0), rv.Point(2, 0), rv.Point(2, 1), rv.Point(1, 1)))


def square_normal_x():
    return rv.NormalX(1.0, 2.0, rv.curve("0", "x"), rv.curve("1", "x"))


def square_normal_y():
    return rv.NormalY(0.0, 1.0, rv.curve("1", "y"), rv.curve("2", "y"))


def straddling_disk_x():
    return rv.NormalX(-1.0, 1.0,
                      rv.curve("-sqrt(1-x^2)", "x"), rv.curve("sqrt(1-x^2)", "x"))


def straddling_disk_y():
    return rv.NormalY(-1.0, 1.0,
                      rv.curve("-sqrt(1-y^2)", "y"), rv.curve("sqrt(1-y^2)", "y"))


# ---------------------------------------------------------------------------
# Randomized-case builders (used by the property suites)

def poly_expr(coeffs, var):
    """Expression string for sum(coeffs[i] * var^i)."""
    terms = []
    for i, c in enumerate(coeffs):
        if i == 0:
            terms.append(f"({float(c)!r})")
        else:
            terms.append(f"({float(c)!r})*{var}^{i}")
    return "+".join(terms)


def random_normal_x(rng):
    """NormalX with cubic lower bound and lower + positive quadratic upper."""
    x0 = float(rng.uniform(-2.0, 2.0))
    x1 = x0 + float(rng.uniform(0.5, 2.0))
    lower = poly_expr(rng.uniform(-1.0, 1.0, size=4), "x")
    mid = float(rng.uniform(x0, x1))
    gap = float(rng.uniform(0.05, 1.5))
    bow = float(rng.uniform(0.0, 2.0))
    upper = f"({lower})+({gap!r})+({bow!r})*(x-({mid!r}))^2"
    return rv.NormalX(x0, x1, rv.curve(lower, "x"), rv.curve(upper, "x"))


def random_normal_y(rng):
    y0 = float(rng.uniform(-2.0, 2.0))
    y1 = y0 + float(rng.uniform(0.5, 2.0))
    left = poly_expr(rng.uniform(-1.0, 1.0, size=4), "y")
    mid = float(rng.uniform(y0, y1))
    gap = float(rng.uniform(0.05, 1.5))
    bow = float(rng.uniform(0.0, 2.0))
    right = f"({left})+({gap!r})+({bow!r})*(y-({mid!r}))^2"
    return rv.NormalY(y0, y1, rv.curve(left, "y"), rv.curve(right, "y"))


def random_convex_polygon(rng):
    """Convex CCW polygon: vertices on a circle at increasing angles."""
    k = int(rng.integers(3, 9))
    steps = rng.uniform(0.3, 1.0, size=k)
    angles = 2.0 * math.pi * np.cumsum(steps) / steps.sum()
    radius = float(rng.uniform(0.5, 2.0))
    cx, cy = (float(v) for v in rng.uniform(-2.0, 2.0, size=2))
    return rv.Polygon(tuple(
        rv.Point(cx + radius * math.cos(a), cy + radius * math.sin(a))
        for a in angles
    ))


def exterior_vertical_axis(rng, region):
    x_lo, x_hi, _, _ = rv.bounding_box(region)
    gap = float(rng.uniform(0.05, 2.0))
    if rng.uniform() < 0.5:
        return rv.Axis.vertical(x_lo - gap)
    return rv.Axis.vertical(x_hi + gap)


def exterior_oblique_axis(rng, polygon):
    """Random-direction line kept clear of the polygon by a support offset."""
    phi = float(rng.uniform(0.0, 2.0 * math.pi))
    nx, ny = math.cos(phi), math.sin(phi)
    dots = [nx * v.x + ny * v.y for v in polygon.vertices]
    gap = float(rng.uniform(0.05, 2.0))
    if rng.uniform() < 0.5:
        return rv.Axis(nx, ny, gap - min(dots))  # region on the positive side
    return rv.Axis(nx, ny, -(max(dots) + gap))  # region on the negative side


def random_motion(rng):
    return rv.RigidMotion(
        float(rng.uniform(0.0, 2.0 * math.pi)),
        (float(rng.uniform(-3.0, 3.0)), float(rng.uniform(-3.0, 3.0))),
    )


def move_polygon(m, polygon):
    return rv.Polygon(tuple(rv.apply_motion(m, v) for v in polygon.vertices))


# ---------------------------------------------------------------------------
# Parser conformance fixtures (shared with the acceptance suite).
# Every expected value is exact in double arithmetic.

PRECEDENCE_CASES = [
    ("2+3*4^2", 50.0),
    ("-2^2", -4.0),
    ("2^3^2", 512.0),
    ("2+3*4", 14.0),
    ("(2+3)*4", 20.0),
    ("2*3+4", 10.0),
    ("100/5/2", 10.0),
    ("2-3-4", -5.0),
    ("8/2^2", 2.0),
    ("-2*-3", 6.0),
    ("--2", 2.0),
    ("-(1+2)", -3.0),
    ("2^-1", 0.5),
    ("4^0.5", 2.0),
    ("10-2^3", 2.0),
    ("(1+3)^2/8", 2.0),
    ("0.5*8", 4.0),
    ("pi*0", 0.0),
    ("e^0", 1.0),
    ("abs(-4)", 4.0),
    ("sqrt(16)", 4.0),
    ("cos(0)", 1.0),
    ("sin(0)*5+7", 7.0),
    ("1/4+3/4", 1.0),
]

MALFORMED_CASES = [
    ("x+", 2),
    ("", 0),
    ("(1+2", 4),
    ("1++2", 2),
    ("2x", 1),
    ("sqrt", 4),
    ("sin()", 4),
    (")", 0),
    ("1 + * 2", 4),
    ("1/", 2),
    ("foo(2)", 0),
    ("y", 0),
    ("1..2", 2),
    ("2*π", 2),
]
