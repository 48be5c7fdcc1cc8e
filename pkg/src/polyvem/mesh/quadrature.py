"""Quadrature rules on triangles, polygons (via sub-triangulation) and edges."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Quadrature:
    """Points (n, 2) in physical coordinates with matching weights (n,)."""

    points: np.ndarray
    weights: np.ndarray

    def integrate(self, values):
        """Sum weighted values; ``values`` has the points on its last axis... first axis."""
        return np.tensordot(self.weights, values, axes=(0, 0))


# Symmetric triangle rules on the reference triangle (0,0)-(1,0)-(0,1),
# weights normalised to sum to the reference area 1/2.
def _sym_rule(groups):
    pts = []
    wts = []
    for w, coords in groups:
        seen = set()
        a, b, c = coords
        for perm in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            if perm in seen:
                continue
            seen.add(perm)
            pts.append((perm[0], perm[1]))
            wts.append(w)
    return np.array(pts), 0.5 * np.array(wts)


_TRIANGLE_RULES = {
    1: _sym_rule([(1.0, (1 / 3, 1 / 3, 1 / 3))]),
    2: _sym_rule([(1 / 3, (2 / 3, 1 / 6, 1 / 6))]),
    3: _sym_rule(
        [
            (-0.5625, (1 / 3, 1 / 3, 1 / 3)),
            (0.5208333333333333, (0.6, 0.2, 0.2)),
        ]
    ),
    4: _sym_rule(
        [
            (0.223381589678011, (0.108103018168070, 0.445948490915965, 0.445948490915965)),
            (0.109951743655322, (0.816847572980459, 0.091576213509771, 0.091576213509771)),
        ]
    ),
    5: _sym_rule(
        [
            (0.225, (1 / 3, 1 / 3, 1 / 3)),
            (0.132394152788506, (0.059715871789770, 0.470142064105115, 0.470142064105115)),
            (0.125939180544827, (0.797426985353087, 0.101286507323456, 0.101286507323456)),
        ]
    ),
}


def gauss_legendre(order):
    """Nodes/weights on [-1, 1] exact for polynomials of degree <= order."""
    n = max(1, (order + 2) // 2)
    return np.polynomial.legendre.leggauss(n)


def triangle_rule(order):
    """Reference-triangle rule exact for total degree <= order.

    Tabulated symmetric rules up to degree 5; beyond that a collapsed
    tensor-product Gauss rule (Duffy transform), which never fails for any
    order.
    """
    order = max(int(order), 1)
    if order in _TRIANGLE_RULES:
        return _TRIANGLE_RULES[order]
    # Duffy: (u, v) in [0,1]^2 -> (u, v(1-u)), Jacobian (1-u).
    xu, wu = gauss_legendre(order + 1)
    xv, wv = gauss_legendre(order)
    u = 0.5 * (xu + 1.0)
    v = 0.5 * (xv + 1.0)
    uu, vv = np.meshgrid(u, v, indexing="ij")
    ww = 0.25 * np.outer(wu, wv) * (1.0 - uu)
    pts = np.column_stack([uu.ravel(), (vv * (1.0 - uu)).ravel()])
    return pts, ww.ravel()


def triangles_quadrature(triangles, order):
    """Concatenated rule over a list/array of physical triangles (m, 3, 2)."""
    ref_p, ref_w = triangle_rule(order)
    pts = []
    wts = []
    for tri in triangles:
        a, b, c = tri
        jac_t = np.array([b - a, c - a])
        det = abs(jac_t[0, 0] * jac_t[1, 1] - jac_t[0, 1] * jac_t[1, 0])
        pts.append(a + ref_p @ jac_t)
        # reference weights sum to 1/2; physical area is det/2
        wts.append(ref_w * det)
    return Quadrature(np.vstack(pts), np.concatenate(wts))


def segment_quadrature(p0, p1, order):
    """Gauss-Legendre rule on the segment p0-p1, exact for degree <= order."""
    x, w = gauss_legendre(order)
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    mid = 0.5 * (p0 + p1)
    half = 0.5 * (p1 - p0)
    pts = mid[None, :] + np.outer(x, half)
    length = float(np.hypot(*(p1 - p0)))
    return Quadrature(pts, w * (length / 2.0))
