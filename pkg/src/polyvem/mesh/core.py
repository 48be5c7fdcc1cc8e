"""Polygonal mesh: construction, connectivity, sub-triangulation, file I/O.

A mesh is immutable after construction. Polygons are stored counterclockwise
and rotated to start at their lowest global vertex index, which fixes the
local dof ordering downstream. Every edge is stored once, oriented from its
lower to its higher vertex index; this global orientation defines edge
tangents, normals and moment dofs consistently between the two adjacent
elements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..errors import FormatError, GeometryError, TopologyError
from . import geometry
from .quadrature import Quadrature, segment_quadrature, triangles_quadrature


@dataclass(frozen=True)
class EdgeFrame:
    """Geometry of one oriented edge (lower vertex index -> higher)."""

    start: np.ndarray
    end: np.ndarray
    length: float
    midpoint: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray  # tangent rotated by -90 degrees: (t_y, -t_x)

    def param(self, points):
        """Arclength coordinate scaled to [-1, 1]."""
        rel = np.asarray(points, dtype=float) - self.midpoint
        return (rel @ self.tangent) / (0.5 * self.length)


@dataclass
class Mesh:
    vertices: np.ndarray
    polygons: list
    edges: np.ndarray
    edge_elements: np.ndarray
    edge_is_boundary: np.ndarray
    element_edges: list
    element_edge_signs: list
    areas: np.ndarray
    centroids: np.ndarray
    diameters: np.ndarray
    vertex_is_boundary: np.ndarray
    vertex_scales: np.ndarray
    tri_points: np.ndarray
    triangles: np.ndarray
    element_of_triangle: np.ndarray
    element_triangles: list
    _edge_frames: dict = field(default_factory=dict, repr=False)

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def n_elements(self):
        return len(self.polygons)

    @property
    def h_max(self):
        return float(self.diameters.max())

    def polygon_points(self, e):
        return self.vertices[self.polygons[e]]

    def edge_frame(self, s):
        fr = self._edge_frames.get(s)
        if fr is None:
            a, b = self.edges[s]
            p0 = self.vertices[a]
            p1 = self.vertices[b]
            d = p1 - p0
            length = float(np.hypot(*d))
            t = d / length
            fr = EdgeFrame(p0, p1, length, 0.5 * (p0 + p1), t, np.array([t[1], -t[0]]))
            self._edge_frames[s] = fr
        return fr

    def element_quadrature(self, e, order):
        tris = self.tri_points[self.triangles[self.element_triangles[e]]]
        return triangles_quadrature(tris, order)

    def edge_quadrature(self, s, order):
        a, b = self.edges[s]
        return segment_quadrature(self.vertices[a], self.vertices[b], order)

    def boundary_edge_indices(self):
        return np.nonzero(self.edge_is_boundary)[0]

    def to_dict(self):
        return {
            "vertices": [[float(x), float(y)] for x, y in self.vertices],
            "polygons": [[int(i) for i in poly] for poly in self.polygons],
        }

    def write(self, path):
        with open(path, "w") as f:
            json.dump(self.to_dict(), f)
            f.write("\n")


def sub_triangulate(points):
    """Triangulate one polygon for quadrature.

    Star-shaped (w.r.t. the centroid) polygons are fanned from the centroid;
    otherwise ear clipping on the polygon vertices. Returns
    ``(extra_points, triangles)`` where triangle indices < len(points) refer
    to polygon vertices and larger ones into ``extra_points``.
    """
    points = np.asarray(points, dtype=float)
    n = len(points)
    if n == 3:
        return np.zeros((0, 2)), [(0, 1, 2)]
    c = geometry.centroid(points)
    if geometry.star_fan(points, c):
        tris = [(i, (i + 1) % n, n) for i in range(n)]
        return c[None, :], tris
    return np.zeros((0, 2)), geometry.ear_clip(points)


def build_mesh(vertices, polygons):
    """Assemble a mesh from vertex coordinates and ccw vertex-index cycles.

    Accepts clockwise cycles (reversed on input). Validates simplicity,
    positive area, manifold edges and minimum edge lengths.
    """
    vertices = np.asarray(vertices, dtype=np.float64)
    if vertices.ndim != 2 or vertices.shape[1] != 2:
        raise FormatError("vertices must be an (n, 2) array")
    nv = len(vertices)

    norm_polys = []
    for p, poly in enumerate(polygons):
        idx = np.asarray(poly, dtype=int)
        if len(idx) < 3:
            raise FormatError(f"polygon {p} has fewer than 3 vertices")
        if len(np.unique(idx)) != len(idx):
            raise FormatError(f"polygon {p} repeats a vertex")
        if idx.min() < 0 or idx.max() >= nv:
            raise FormatError(f"polygon {p} references a vertex out of range")
        pts = vertices[idx]
        area = geometry.signed_area(pts)
        if area < 0:
            idx = idx[::-1]
            pts = vertices[idx]
            area = -area
        if area <= 0 or not np.isfinite(area):
            raise GeometryError(f"polygon {p} has non-positive area")
        if not geometry.is_simple(pts):
            raise GeometryError(f"polygon {p} is self-intersecting")
        # canonical rotation: start the ccw cycle at the lowest vertex index
        roll = int(np.argmin(idx))
        idx = np.roll(idx, -roll)
        norm_polys.append(idx)

    edge_map = {}
    element_edges = []
    element_edge_signs = []
    diameters = np.empty(len(norm_polys))
    areas = np.empty(len(norm_polys))
    centroids = np.empty((len(norm_polys), 2))
    for p, idx in enumerate(norm_polys):
        pts = vertices[idx]
        areas[p] = geometry.signed_area(pts)
        centroids[p] = geometry.centroid(pts)
        diameters[p] = geometry.diameter(pts)
        eids = []
        signs = []
        n = len(idx)
        for k in range(n):
            a, b = int(idx[k]), int(idx[(k + 1) % n])
            length = float(np.hypot(*(vertices[b] - vertices[a])))
            if length < 1e-12 * diameters[p]:
                raise GeometryError(f"polygon {p} has a degenerate edge {a}-{b}")
            key = (a, b) if a < b else (b, a)
            if key not in edge_map:
                edge_map[key] = [len(edge_map), []]
            eid, adj = edge_map[key]
            adj.append(p)
            if len(adj) > 2:
                raise TopologyError(f"edge {key} shared by more than two polygons")
            eids.append(eid)
            signs.append(1 if a < b else -1)
        element_edges.append(np.array(eids))
        element_edge_signs.append(np.array(signs))

    n_edges = len(edge_map)
    edges = np.empty((n_edges, 2), dtype=int)
    edge_elements = np.full((n_edges, 2), -1, dtype=int)
    for (a, b), (eid, adj) in edge_map.items():
        edges[eid] = (a, b)
        edge_elements[eid, : len(adj)] = adj
    edge_is_boundary = edge_elements[:, 1] < 0

    used = np.zeros(nv, dtype=bool)
    for idx in norm_polys:
        used[idx] = True
    if not used.all():
        raise FormatError("mesh contains vertices referenced by no polygon")

    vertex_is_boundary = np.zeros(nv, dtype=bool)
    for eid in np.nonzero(edge_is_boundary)[0]:
        vertex_is_boundary[edges[eid]] = True

    # h_v: mean diameter of the elements touching each vertex
    acc = np.zeros(nv)
    cnt = np.zeros(nv)
    for p, idx in enumerate(norm_polys):
        acc[idx] += diameters[p]
        cnt[idx] += 1
    vertex_scales = acc / np.maximum(cnt, 1)

    tri_points = [vertices]
    triangles = []
    element_of_triangle = []
    element_triangles = []
    offset = nv
    for p, idx in enumerate(norm_polys):
        pts = vertices[idx]
        extra, tris = sub_triangulate(pts)
        local_pts = np.vstack([pts, extra]) if len(extra) else pts
        tri_area = sum(abs(geometry.signed_area(local_pts[list(t)])) for t in tris)
        if abs(tri_area - areas[p]) > 1e-12 * max(areas[p], 1e-300):
            raise GeometryError(f"sub-triangulation of polygon {p} does not cover it")
        if len(extra):
            tri_points.append(extra)
        local = list(idx) + list(range(offset, offset + len(extra)))
        offset += len(extra)
        tri_ids = []
        for t in tris:
            tri_ids.append(len(triangles))
            triangles.append([local[t[0]], local[t[1]], local[t[2]]])
            element_of_triangle.append(p)
        element_triangles.append(np.array(tri_ids))

    return Mesh(
        vertices=vertices,
        polygons=norm_polys,
        edges=edges,
        edge_elements=edge_elements,
        edge_is_boundary=edge_is_boundary,
        element_edges=element_edges,
        element_edge_signs=element_edge_signs,
        areas=areas,
        centroids=centroids,
        diameters=diameters,
        vertex_is_boundary=vertex_is_boundary,
        vertex_scales=vertex_scales,
        tri_points=np.vstack(tri_points),
        triangles=np.array(triangles, dtype=int),
        element_of_triangle=np.array(element_of_triangle, dtype=int),
        element_triangles=element_triangles,
    )


def mesh_from_dict(grid):
    """Build a mesh from the grid dictionary format (vertices + polygons).

    ``simplices`` is accepted as an alias for ``polygons`` restricted to
    3-cycles.
    """
    if not isinstance(grid, dict):
        raise FormatError("grid description must be a mapping")
    if "vertices" not in grid:
        raise FormatError("grid description lacks 'vertices'")
    if "polygons" in grid:
        polys = grid["polygons"]
    elif "simplices" in grid:
        polys = grid["simplices"]
        if any(len(p) != 3 for p in polys):
            raise FormatError("'simplices' entries must be 3-cycles")
    else:
        raise FormatError("grid description lacks 'polygons' (or 'simplices')")
    extra = set(grid) - {"vertices", "polygons", "simplices"}
    if extra:
        raise FormatError(f"unknown grid keys: {sorted(extra)}")
    try:
        vertices = np.asarray(grid["vertices"], dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"unparsable vertex coordinates: {exc}") from None
    return build_mesh(vertices, polys)


def read_mesh(path):
    with open(path) as f:
        try:
            grid = json.load(f)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not a valid mesh file: {exc}") from None
    return mesh_from_dict(grid)


def euler_characteristic(mesh):
    """V - E + F counting internal faces only (1 for a simply connected domain)."""
    return mesh.n_vertices - mesh.n_edges + mesh.n_elements
