import math

import pytest
from hypothesis import given, strategies as st

from grlsim.geometry import GOLDEN_ANGLE, PHI, FieldSpec, Point2D, distance

coords = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
points = st.builds(Point2D, coords, coords)


def test_distance_3_4_5():
    assert distance(Point2D(0, 0), Point2D(3, 4)) == 5.0


def test_distance_identity():
    p = Point2D(12.5, -3.25)
    assert distance(p, p) == 0.0


def test_distance_forward_constructed_roundtrip():
    # place a point 2 m from (50,50) along heading 2.39996 rad and verify
    # the distance comes back
    heading = 2.39996
    a = Point2D(50.0, 50.0)
    b = Point2D(50.0 + 2.0 * math.cos(heading), 50.0 + 2.0 * math.sin(heading))
    assert b.x == pytest.approx(48.5253, abs=1e-3)
    assert b.y == pytest.approx(51.3510, abs=1e-3)
    assert distance(a, b) == pytest.approx(2.0, abs=1e-3)


@given(points, points)
def test_distance_symmetric_nonnegative(a, b):
    d = distance(a, b)
    assert d >= 0.0
    assert d == distance(b, a)


@given(points, points, points)
def test_triangle_inequality(a, b, c):
    assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9


def test_phi_identities():
    assert PHI * PHI == pytest.approx(PHI + 1.0, rel=1e-12)
    assert 1.0 / PHI == pytest.approx(PHI - 1.0, rel=1e-12)


def test_golden_angle_identity():
    # gamma = 2*pi*(1 - 1/phi) equals 2*pi/phi^2 because phi - 1 = 1/phi
    assert GOLDEN_ANGLE == pytest.approx(2.0 * math.pi / (PHI * PHI), rel=1e-12)
    assert GOLDEN_ANGLE == pytest.approx(2.399963229728653, abs=1e-12)


@pytest.mark.parametrize("x,y", [(float("nan"), 0.0), (0.0, float("inf")), (float("-inf"), 1.0)])
def test_point_rejects_nonfinite(x, y):
    with pytest.raises(ValueError):
        Point2D(x, y)


@pytest.mark.parametrize("w,h", [(0.0, 10.0), (10.0, 0.0), (-1.0, 5.0)])
def test_field_rejects_nonpositive(w, h):
    with pytest.raises(ValueError):
        FieldSpec(w, h)


def test_field_clamp_and_contains():
    f = FieldSpec(100.0, 50.0)
    assert f.contains(Point2D(0.0, 50.0))
    assert not f.contains(Point2D(100.1, 25.0))
    p = f.clamp(-3.0, 60.0)
    assert (p.x, p.y) == (0.0, 50.0)
    assert f.center == Point2D(50.0, 25.0)
    assert f.diagonal == pytest.approx(math.hypot(100.0, 50.0))
