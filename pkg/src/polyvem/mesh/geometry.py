"""Planar polygon primitives: areas, centroids, hulls, triangulation."""

from __future__ import annotations

import numpy as np

from ..errors import GeometryError


def signed_area(points):
    """Shoelace area of a closed polygon given as an (n, 2) vertex array."""
    x = points[:, 0]
    y = points[:, 1]
    return 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)


def centroid(points):
    """Area centroid of a simple polygon."""
    x = points[:, 0]
    y = points[:, 1]
    cross = x * np.roll(y, -1) - np.roll(x, -1) * y
    a = 0.5 * np.sum(cross)
    if abs(a) < 1e-300:
        raise GeometryError("degenerate polygon with zero area")
    cx = np.sum((x + np.roll(x, -1)) * cross) / (6.0 * a)
    cy = np.sum((y + np.roll(y, -1)) * cross) / (6.0 * a)
    return np.array([cx, cy])


def diameter(points):
    """Largest pairwise vertex distance (equals the polygon diameter)."""
    d = points[:, None, :] - points[None, :, :]
    return float(np.sqrt((d * d).sum(axis=2).max()))


def _segments_intersect(p1, p2, q1, q2):
    # Proper intersection test for open segments; shared endpoints allowed.
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        scale = max(abs(b[0] - a[0]), abs(b[1] - a[1]), abs(c[0] - a[0]), abs(c[1] - a[1]), 1e-300)
        if abs(v) < 1e-14 * scale * scale:
            return 0
        return 1 if v > 0 else -1

    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return False


def is_simple(points):
    """Check that no two non-adjacent polygon edges cross."""
    n = len(points)
    for i in range(n):
        a1, a2 = points[i], points[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            if _segments_intersect(a1, a2, points[j], points[(j + 1) % n]):
                return False
    return True


def convex_hull(points):
    """Andrew monotone chain; returns hull vertices in ccw order."""
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    pts = pts[np.lexsort((pts[:, 1], pts[:, 0]))]
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    return np.array(lower[:-1] + upper[:-1])


def ear_clip(points):
    """Triangulate a simple ccw polygon by ear clipping.

    Returns a list of index triples into ``points``.
    """
    n = len(points)
    if n < 3:
        raise GeometryError("polygon with fewer than 3 vertices")
    idx = list(range(n))
    scale = diameter(points)
    tris = []

    def cross(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    def inside(a, b, c, p):
        d1 = cross(a, b, p)
        d2 = cross(b, c, p)
        d3 = cross(c, a, p)
        eps = -1e-14 * scale * scale
        return d1 >= eps and d2 >= eps and d3 >= eps

    guard = 0
    while len(idx) > 3:
        guard += 1
        if guard > 2 * n * n:
            raise GeometryError("ear clipping failed to terminate")
        clipped = False
        m = len(idx)
        for k in range(m):
            i0, i1, i2 = idx[(k - 1) % m], idx[k], idx[(k + 1) % m]
            a, b, c = points[i0], points[i1], points[i2]
            if cross(a, b, c) <= 1e-14 * scale * scale:
                continue
            others = [j for j in idx if j not in (i0, i1, i2)]
            if any(inside(a, b, c, points[j]) for j in others):
                continue
            tris.append((i0, i1, i2))
            idx.pop(k)
            clipped = True
            break
        if not clipped:
            raise GeometryError("ear clipping found no ear (polygon not simple?)")
    tris.append((idx[0], idx[1], idx[2]))
    return tris


def star_fan(points, center):
    """Check whether fanning from ``center`` gives positively oriented triangles."""
    n = len(points)
    scale = diameter(points)
    for i in range(n):
        a = points[i] - center
        b = points[(i + 1) % n] - center
        if a[0] * b[1] - a[1] * b[0] <= 1e-12 * scale * scale:
            return False
    return True
