"""Mesh generators: Cartesian grids, bounded Voronoi tessellations, and the
cylinder channel used by the incompressible-flow benchmark."""

from __future__ import annotations

import numpy as np

from ..errors import GeometryError
from . import geometry
from .core import build_mesh

_RETRY_LIMIT = 5


def cartesian_grid(nx, ny, box=((0.0, 0.0), (1.0, 1.0))):
    """nx-by-ny rectangular elements on the given box."""
    (x0, y0), (x1, y1) = box
    xs = np.linspace(x0, x1, nx + 1)
    ys = np.linspace(y0, y1, ny + 1)
    xx, yy = np.meshgrid(xs, ys, indexing="ij")
    vertices = np.column_stack([xx.ravel(), yy.ravel()])

    def vid(i, j):
        return i * (ny + 1) + j

    polys = []
    for i in range(nx):
        for j in range(ny):
            polys.append([vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)])
    return build_mesh(vertices, polys)


def _clipped_voronoi_cells(seeds, box):
    """Cells of the box-clipped Voronoi diagram of ``seeds``.

    Seeds are mirrored across all four box sides, so the cells of the
    original seeds come out exactly clipped to the box and neighbouring
    cells share vertex indices.
    """
    from scipy.spatial import Voronoi

    (x0, y0), (x1, y1) = box
    n = len(seeds)
    mirrored = [seeds]
    for refl in (
        lambda p: np.column_stack([2 * x0 - p[:, 0], p[:, 1]]),
        lambda p: np.column_stack([2 * x1 - p[:, 0], p[:, 1]]),
        lambda p: np.column_stack([p[:, 0], 2 * y0 - p[:, 1]]),
        lambda p: np.column_stack([p[:, 0], 2 * y1 - p[:, 1]]),
    ):
        mirrored.append(refl(seeds))
    allpts = np.vstack(mirrored)
    vor = Voronoi(allpts)
    cells = []
    for i in range(n):
        region = vor.regions[vor.point_region[i]]
        if -1 in region or len(region) < 3:
            raise GeometryError("unbounded Voronoi cell after mirroring")
        poly = vor.vertices[region]
        if geometry.signed_area(poly) < 0:
            poly = poly[::-1]
        cells.append(poly)
    return cells


def _dedup_cells(cells, decimals=9):
    """Share vertices between cells by exact coordinate key."""
    index = {}
    vertices = []
    polys = []
    for poly in cells:
        ids = []
        for p in np.round(poly, decimals):
            key = (p[0] + 0.0, p[1] + 0.0)  # normalise -0.0
            if key not in index:
                index[key] = len(vertices)
                vertices.append(key)
            ids.append(index[key])
        # collapse consecutive duplicates produced by rounding
        dedup = [ids[k] for k in range(len(ids)) if ids[k] != ids[(k - 1) % len(ids)]]
        if len(dedup) >= 3:
            polys.append(dedup)
    return np.array(vertices), polys


def voronoi_grid(n_cells, box=((0.0, 0.0), (1.0, 1.0)), lloyd_iterations=0, rng_seed=0, seeds=None):
    """Bounded Voronoi tessellation of a rectangle.

    Deterministic for a fixed ``rng_seed``; ``lloyd_iterations`` centroidal
    relaxation sweeps are applied before the final diagram. Explicit
    ``seeds`` override the random ones.
    """
    if n_cells < 1:
        raise GeometryError("n_cells must be >= 1")
    (x0, y0), (x1, y1) = box
    if seeds is not None:
        pts = np.asarray(seeds, dtype=float)
    else:
        rng = np.random.default_rng(rng_seed)
        pts = np.column_stack(
            [rng.uniform(x0, x1, n_cells), rng.uniform(y0, y1, n_cells)]
        )
    if n_cells == 1:
        return build_mesh([(x0, y0), (x1, y0), (x1, y1), (x0, y1)], [[0, 1, 2, 3]])

    for attempt in range(_RETRY_LIMIT + 1):
        d = pts[:, None, :] - pts[None, :, :]
        dist2 = (d * d).sum(axis=2) + np.eye(len(pts))
        scale = max(x1 - x0, y1 - y0)
        if dist2.min() > (1e-9 * scale) ** 2:
            break
        if attempt == _RETRY_LIMIT:
            raise GeometryError("seed points collide after retries")
        rng = np.random.default_rng(rng_seed + attempt + 1)
        pts = pts + rng.normal(scale=1e-6 * scale, size=pts.shape)
        pts[:, 0] = pts[:, 0].clip(x0, x1)
        pts[:, 1] = pts[:, 1].clip(y0, y1)

    for _ in range(lloyd_iterations):
        cells = _clipped_voronoi_cells(pts, box)
        pts = np.array([geometry.centroid(c) for c in cells])

    cells = _clipped_voronoi_cells(pts, box)
    vertices, polys = _dedup_cells(cells)
    return build_mesh(vertices, polys)


def cylinder_channel_grid(nx=44, ny=9, center=(0.2, 0.2), radius=0.05, segments=64,
                          box=((0.0, 0.0), (2.2, 0.41))):
    """Channel with a polygonal cylinder hole carved out of a Cartesian grid.

    The circle is approximated by a ``segments``-gon; background cells are
    clipped against its exterior, cells fully inside are dropped.
    """
    import shapely.geometry as sg

    (x0, y0), (x1, y1) = box
    theta = 2.0 * np.pi * np.arange(segments) / segments
    circle = sg.Polygon(
        np.column_stack(
            [center[0] + radius * np.cos(theta), center[1] + radius * np.sin(theta)]
        )
    )
    xs = np.linspace(x0, x1, nx + 1)
    ys = np.linspace(y0, y1, ny + 1)
    cells = []
    for i in range(nx):
        for j in range(ny):
            cell = sg.box(xs[i], ys[j], xs[i + 1], ys[j + 1])
            if not cell.intersects(circle):
                cells.append(np.asarray(cell.exterior.coords)[:-1])
                continue
            diff = cell.difference(circle)
            if diff.is_empty:
                continue
            parts = list(diff.geoms) if diff.geom_type == "MultiPolygon" else [diff]
            for part in parts:
                if part.area < 1e-12:
                    continue
                poly = np.asarray(part.exterior.coords)[:-1]
                if geometry.signed_area(poly) < 0:
                    poly = poly[::-1]
                cells.append(poly)
    vertices, polys = _dedup_cells(cells)
    return build_mesh(vertices, polys)
