import math

import numpy as np
import pytest

import revolve as rv
from revolve.errors import AxisIntersectsRegion, InvalidRegionError

from helpers import (
    AXIS_OY,
    cone_triangle,
    sector_polar,
    straddling_disk_x,
    torus_normal_x,
    unit_square_polygon,
)


def quarter_disk():
    return rv.PolarSector(0.0, math.pi / 2, rv.curve("0", "theta"), rv.curve("1", "theta"))


class TestContains:
    def test_quarter_disk(self):
        region = quarter_disk()
        assert rv.contains(region, rv.Point(0.5, 0.5))
        assert not rv.contains(region, rv.Point(1.1, 0.0))

    def test_sector_outside_radius(self):
        # (0.9, -0.9) is at angle -pi/4 (inside) but rho ~ 1.27 (outside)
        assert not rv.contains(sector_polar(), rv.Point(0.9, -0.9))
        assert rv.contains(sector_polar(), rv.Point(0.7, -0.7))

    def test_origin_in_sector_with_zero_inner_radius(self):
        assert rv.contains(sector_polar(), rv.Point(0.0, 0.0))
        annulus = rv.PolarSector(0.0, math.pi, rv.curve("1", "theta"), rv.curve("2", "theta"))
        assert not rv.contains(annulus, rv.Point(0.0, 0.0))

    def test_sector_crossing_angle_seam(self):
        region = rv.PolarSector(3 * math.pi / 4, 5 * math.pi / 4,
                                rv.curve("0", "theta"), rv.curve("1", "theta"))
        assert rv.contains(region, rv.Point(-0.5, 0.0))
        assert rv.contains(region, rv.Point(-0.5, -0.01))  # atan2 jumps at pi
        assert not rv.contains(region, rv.Point(0.5, 0.0))

    def test_normal_x_boundaries_inside(self):
        region = rv.NormalX(0.0, 1.0, rv.curve("0", "x"), rv.curve("1-x", "x"))
        assert rv.contains(region, rv.Point(0.0, 0.0))
        assert rv.contains(region, rv.Point(0.5, 0.5))
        assert not rv.contains(region, rv.Point(0.5, 0.51))
        assert not rv.contains(region, rv.Point(-0.01, 0.0))

    def test_polygon_boundary_inside(self):
        square = unit_square_polygon()
        assert rv.contains(square, rv.Point(1.5, 0.0))  # edge midpoint
        assert rv.contains(square, rv.Point(1.0, 0.0))  # vertex
        assert rv.contains(square, rv.Point(1.5, 0.5))
        assert not rv.contains(square, rv.Point(0.999, 0.5))

    def test_concave_polygon(self):
        ell = rv.Polygon((rv.Point(0, 0), rv.Point(2, 0), rv.Point(2, 1),
                          rv.Point(1, 1), rv.Point(1, 2), rv.Point(0, 2)))
        assert rv.contains(ell, rv.Point(0.5, 1.5))
        assert rv.contains(ell, rv.Point(1.5, 0.5))
        assert not rv.contains(ell, rv.Point(1.5, 1.5))

    def test_union_is_disjunction(self):
        union = rv.UnionRegion((unit_square_polygon(), cone_triangle()))
        assert rv.contains(union, rv.Point(0.2, 0.2))
        assert rv.contains(union, rv.Point(1.5, 0.5))
        assert not rv.contains(union, rv.Point(0.9, 0.9))

    def test_mask_matches_scalar(self):
        rng = np.random.default_rng(3)
        regions = [quarter_disk(), unit_square_polygon(), torus_normal_x(),
                   rv.NormalY(-1.0, 1.0, rv.curve("y^2", "y"), rv.curve("2", "y")),
                   rv.UnionRegion((cone_triangle(), unit_square_polygon()))]
        for region in regions:
            x_lo, x_hi, y_lo, y_hi = rv.bounding_box(region)
            xs = rng.uniform(x_lo - 0.2, x_hi + 0.2, size=300)
            ys = rng.uniform(y_lo - 0.2, y_hi + 0.2, size=300)
            mask = rv.contains_mask(region, xs, ys)
            for x, y, m in zip(xs, ys, mask):
                assert m == rv.contains(region, rv.Point(float(x), float(y)))


class TestBoundingBox:
    def test_polygon_exact(self):
        box = rv.bounding_box(cone_triangle())
        assert box == (0.0, 1.0, 0.0, 1.0)

    def test_quarter_disk(self):
        x_lo, x_hi, y_lo, y_hi = rv.bounding_box(quarter_disk())
        assert -1e-6 <= x_lo <= 0.0 and 1.0 <= x_hi <= 1.0 + 1e-6
        assert -1e-6 <= y_lo <= 0.0 and 1.0 <= y_hi <= 1.0 + 1e-6

    def test_offset_circle(self):
        # the odd probe count samples the apex x = 2 exactly
        x_lo, x_hi, y_lo, y_hi = rv.bounding_box(torus_normal_x())
        assert x_lo == pytest.approx(1.0, abs=1e-6)
        assert x_hi == pytest.approx(3.0, abs=1e-6)
        assert y_lo == pytest.approx(-1.0, abs=1e-6)
        assert y_hi == pytest.approx(1.0, abs=1e-6)

    def test_contained_points_are_in_box(self):
        rng = np.random.default_rng(21)
        for region in [quarter_disk(), sector_polar(), torus_normal_x()]:
            x_lo, x_hi, y_lo, y_hi = rv.bounding_box(region)
            pts = rng.uniform(-3, 3, size=(400, 2))
            for x, y in pts:
                if rv.contains(region, rv.Point(x, y)):
                    assert x_lo <= x <= x_hi and y_lo <= y <= y_hi

    def test_union_combines(self):
        union = rv.UnionRegion((unit_square_polygon(), cone_triangle()))
        assert rv.bounding_box(union) == (0.0, 2.0, 0.0, 1.0)


class TestValidation:
    def test_needs_ordered_interval(self):
        with pytest.raises(InvalidRegionError):
            rv.NormalX(1.0, 1.0, rv.curve("0", "x"), rv.curve("1", "x"))

    def test_lower_above_upper_rejected(self):
        with pytest.raises(InvalidRegionError):
            rv.NormalX(0.0, 1.0, rv.curve("1", "x"), rv.curve("0", "x"))

    def test_degenerate_equal_curves_allowed(self):
        region = rv.NormalX(0.0, 1.0, rv.curve("x", "x"), rv.curve("x", "x"))
        assert rv.contains(region, rv.Point(0.5, 0.5))

    def test_curve_must_evaluate_on_probes(self):
        with pytest.raises(InvalidRegionError):
            rv.NormalX(-2.0, 2.0, rv.curve("0", "x"), rv.curve("sqrt(1-x^2)", "x"))

    def test_sector_width_limits(self):
        with pytest.raises(InvalidRegionError):
            rv.PolarSector(1.0, 1.0, rv.curve("0", "theta"), rv.curve("1", "theta"))
        with pytest.raises(InvalidRegionError):
            rv.PolarSector(0.0, 7.0, rv.curve("0", "theta"), rv.curve("1", "theta"))

    def test_negative_radius_rejected(self):
        with pytest.raises(InvalidRegionError):
            rv.PolarSector(0.0, 1.0, rv.curve("-1", "theta"), rv.curve("1", "theta"))

    def test_polygon_needs_ccw(self):
        with pytest.raises(InvalidRegionError):
            rv.Polygon((rv.Point(0, 0), rv.Point(0, 1), rv.Point(1, 0)))

    def test_polygon_rejects_self_intersection(self):
        with pytest.raises(InvalidRegionError):
            rv.Polygon((rv.Point(0, 0), rv.Point(1, 1), rv.Point(1, 0), rv.Point(0, 1)))

    def test_polygon_needs_three_vertices(self):
        with pytest.raises(InvalidRegionError):
            rv.Polygon((rv.Point(0, 0), rv.Point(1, 0)))

    def test_empty_union_rejected(self):
        with pytest.raises(InvalidRegionError):
            rv.UnionRegion(())

    def test_polygon_centroid_contained(self):
        rng = np.random.default_rng(17)
        from helpers import random_convex_polygon

        for _ in range(20):
            poly = random_convex_polygon(rng)
            c = rv.centroid(poly).centroid
            assert rv.contains(poly, c)


class TestAxisSideCheck:
    def test_sector_touching_axis_allowed(self):
        assert rv.axis_side_check(sector_polar(), AXIS_OY) == 1

    def test_disk_left_of_axis(self):
        disk = straddling_disk_x()  # unit disk at the origin
        assert rv.axis_side_check(disk, rv.Axis.vertical(2.0)) == -1
        assert rv.axis_side_check(disk, rv.Axis.vertical(-2.0)) == 1

    def test_axis_through_interior_rejected(self):
        with pytest.raises(AxisIntersectsRegion):
            rv.axis_side_check(straddling_disk_x(), AXIS_OY)

    def test_oblique_axis(self):
        square = unit_square_polygon()
        assert rv.axis_side_check(square, rv.Axis(1.0, 1.0, 0.5)) == 1
        assert rv.axis_side_check(square, rv.Axis(1.0, 1.0, -4.0)) == -1
        with pytest.raises(AxisIntersectsRegion):
            rv.axis_side_check(square, rv.Axis(1.0, 1.0, -2.0))

    def test_boundary_points_lie_near_boundary(self):
        region = quarter_disk()
        for p in rv.boundary_points(region, 64):
            rho = math.hypot(p.x, p.y)
            on_arc = abs(rho - 1.0) <= 1e-9
            on_edge = abs(p.x) <= 1e-9 or abs(p.y) <= 1e-9
            assert on_arc or on_edge
