import numpy as np
import pytest

from polyvem.mesh import min_area_bounding_box
from polyvem.mesh.geometry import convex_hull


def oracle_min_area(points):
    """Brute force over all hull-edge orientations, independent projection code."""
    hull = convex_hull(points)
    best = np.inf
    n = len(hull)
    for i in range(n):
        d = hull[(i + 1) % n] - hull[i]
        ang = np.arctan2(d[1], d[0])
        c, s = np.cos(ang), np.sin(ang)
        rot = points @ np.array([[c, -s], [s, c]])
        ext = rot.max(axis=0) - rot.min(axis=0)
        best = min(best, ext[0] * ext[1])
    return best


def test_axis_aligned_square_is_its_own_box():
    pts = np.array([(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)])
    box = min_area_bounding_box(pts)
    assert box.area == pytest.approx(4.0, rel=1e-12)
    np.testing.assert_allclose(box.center, [1.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(np.abs(box.axes), np.eye(2), atol=1e-12)


def test_rotated_square_box_has_equal_area():
    c, s = np.cos(np.pi / 4), np.sin(np.pi / 4)
    rot = np.array([[c, -s], [s, c]])
    pts = np.array([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]) @ rot.T
    box = min_area_bounding_box(pts)
    assert box.area == pytest.approx(1.0, rel=1e-12)
    assert box.contains(pts)


@pytest.mark.parametrize("seed", range(8))
def test_random_convex_polygon_matches_oracle(seed):
    rng = np.random.default_rng(seed)
    ang = np.sort(rng.uniform(0, 2 * np.pi, 7))
    rad = rng.uniform(0.5, 1.5, 7)
    pts = np.column_stack([rad * np.cos(ang), rad * np.sin(ang)]) + rng.normal(size=2)
    box = min_area_bounding_box(pts)
    aabb = (pts[:, 0].max() - pts[:, 0].min()) * (pts[:, 1].max() - pts[:, 1].min())
    assert box.area <= aabb + 1e-12
    assert box.area == pytest.approx(oracle_min_area(pts), rel=1e-10)
    assert box.contains(pts)


def test_axes_are_orthonormal():
    rng = np.random.default_rng(42)
    pts = rng.normal(size=(10, 2))
    box = min_area_bounding_box(pts)
    np.testing.assert_allclose(box.axes @ box.axes.T, np.eye(2), atol=1e-13)
