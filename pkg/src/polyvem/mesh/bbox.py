"""Minimal-area oriented bounding boxes via rotating calipers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import convex_hull


@dataclass(frozen=True)
class BoundingBox:
    """Oriented rectangle: center, two orthonormal axes (rows), half lengths."""

    center: np.ndarray
    axes: np.ndarray
    half_lengths: np.ndarray

    @property
    def area(self):
        return 4.0 * self.half_lengths[0] * self.half_lengths[1]

    def local(self, points):
        """Map physical points to box coordinates in [-1, 1]^2."""
        rel = np.asarray(points, dtype=float) - self.center
        return (rel @ self.axes.T) / self.half_lengths

    def contains(self, points, tol=1e-10):
        loc = self.local(points)
        return bool(np.all(np.abs(loc) <= 1.0 + tol))


def min_area_bounding_box(points):
    """Minimal-area enclosing rectangle of a point set.

    The optimum has one side parallel to a convex hull edge (rotating
    calipers); ties are broken by the smaller angle of the first axis
    against +x. Axes are returned with the first axis in [0, pi) and the
    second its +90 degree rotation.
    """
    pts = np.asarray(points, dtype=float)
    hull = convex_hull(pts)
    if len(hull) == 1:
        return BoundingBox(hull[0].copy(), np.eye(2), np.ones(2))
    if len(hull) == 2:
        d = hull[1] - hull[0]
        length = np.hypot(*d)
        u = d / length
        axes = np.array([u, [-u[1], u[0]]])
        center = 0.5 * (hull[0] + hull[1])
        return BoundingBox(center, axes, np.array([length / 2.0, 1e-15]))

    best = None
    for i in range(len(hull)):
        e = hull[(i + 1) % len(hull)] - hull[i]
        norm = np.hypot(*e)
        if norm < 1e-300:
            continue
        u = e / norm
        v = np.array([-u[1], u[0]])
        pu = pts @ u
        pv = pts @ v
        w = pu.max() - pu.min()
        h = pv.max() - pv.min()
        area = w * h
        # normalise first axis into [0, pi): angle measured against +x
        cand_axes = []
        for a, ext in ((u, (w, h)), (v, (h, w))):
            aa = a if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else -a
            ang = np.arctan2(aa[1], aa[0]) % np.pi
            cand_axes.append((ang, aa, ext))
        ang, axis1, (e1, e2) = min(cand_axes, key=lambda t: t[0])
        cand = (area, ang, axis1, e1, e2, pu, pv, u, v)
        if best is None or area < best[0] * (1.0 - 1e-12) or (
            abs(area - best[0]) <= 1e-12 * best[0] and ang < best[1] - 1e-14
        ):
            best = cand

    area, ang, axis1, e1, e2, pu, pv, u, v = best
    axis2 = np.array([-axis1[1], axis1[0]])
    c_uv = np.array([0.5 * (pu.max() + pu.min()), 0.5 * (pv.max() + pv.min())])
    center = c_uv[0] * u + c_uv[1] * v
    half1 = 0.5 * max(e1, 1e-15)
    half2 = 0.5 * max(e2, 1e-15)
    return BoundingBox(center, np.array([axis1, axis2]), np.array([half1, half2]))
