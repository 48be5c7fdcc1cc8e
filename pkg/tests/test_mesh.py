import json

import numpy as np
import pytest

from polyvem.errors import FormatError, GeometryError, TopologyError
from polyvem.mesh import (
    build_mesh,
    cartesian_grid,
    euler_characteristic,
    mesh_from_dict,
    read_mesh,
    sub_triangulate,
    voronoi_grid,
)

UNIT_SQUARE = ([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)], [[0, 1, 2, 3]])


def test_unit_square_single_cell():
    mesh = build_mesh(*UNIT_SQUARE)
    assert mesh.n_elements == 1
    assert mesh.n_edges == 4
    assert mesh.edge_is_boundary.all()
    assert mesh.areas[0] == pytest.approx(1.0)
    assert mesh.centroids[0] == pytest.approx([0.5, 0.5])


def test_two_triangles_share_edge():
    verts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    mesh = build_mesh(verts, [[0, 1, 2], [0, 2, 3]])
    assert mesh.n_elements == 2
    assert mesh.n_edges == 5
    assert int((~mesh.edge_is_boundary).sum()) == 1
    interior = np.nonzero(~mesh.edge_is_boundary)[0][0]
    assert sorted(mesh.edges[interior]) == [0, 2]
    assert sorted(mesh.edge_elements[interior]) == [0, 1]


def test_voronoi_euler_relation():
    mesh = voronoi_grid(100, rng_seed=3)
    assert euler_characteristic(mesh) == 1
    assert mesh.areas.sum() == pytest.approx(1.0, rel=1e-10)


def test_clockwise_polygon_is_normalised():
    verts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    mesh = build_mesh(verts, [[3, 2, 1, 0]])
    assert mesh.areas[0] > 0
    # cycle starts at the lowest vertex index
    assert mesh.polygons[0][0] == 0


def test_self_intersecting_polygon_rejected():
    verts = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
    with pytest.raises(GeometryError):
        build_mesh(verts, [[0, 1, 2, 3]])


def test_dangling_vertex_index_rejected():
    verts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]
    with pytest.raises(FormatError):
        build_mesh(verts, [[0, 1, 7]])


def test_nonmanifold_edge_rejected():
    verts = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (0.5, -1.0), (1.5, 0.5)]
    with pytest.raises(TopologyError):
        build_mesh(verts, [[0, 1, 2], [0, 3, 1], [0, 1, 4]])


def test_short_edge_rejected():
    verts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1e-15), (0.0, 1.0)]
    with pytest.raises(GeometryError):
        build_mesh(verts, [[0, 1, 2, 3]])


@pytest.mark.parametrize(
    "nx,ny,n_elem,n_edge", [(1, 1, 1, 4), (2, 2, 4, 12), (8, 8, 64, 144)]
)
def test_cartesian_counts(nx, ny, n_elem, n_edge):
    mesh = cartesian_grid(nx, ny)
    assert mesh.n_elements == n_elem
    assert mesh.n_edges == n_edge
    assert mesh.areas.sum() == pytest.approx(1.0, abs=1e-12)


def test_sub_triangulate_triangle_is_itself():
    extra, tris = sub_triangulate(np.array([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]))
    assert len(extra) == 0
    assert tris == [(0, 1, 2)]


def test_sub_triangulate_square_fans_from_centroid():
    extra, tris = sub_triangulate(np.array(UNIT_SQUARE[0]))
    assert len(extra) == 1
    assert extra[0] == pytest.approx([0.5, 0.5])
    assert len(tris) == 4


def test_sub_triangulate_l_shape_matches_shoelace():
    # nonconvex hexagon, not star-shaped w.r.t. its centroid's fan on all edges
    pts = np.array([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)], dtype=float)
    extra, tris = sub_triangulate(pts)
    allpts = np.vstack([pts, extra]) if len(extra) else pts
    area = sum(
        abs(
            0.5
            * np.cross(allpts[b] - allpts[a], allpts[c] - allpts[a])
        )
        for a, b, c in tris
    )
    assert area == pytest.approx(3.0, rel=1e-12)


def test_triangle_to_polygon_map():
    mesh = voronoi_grid(30, rng_seed=1)
    for e in range(mesh.n_elements):
        for t in mesh.element_triangles[e]:
            assert mesh.element_of_triangle[t] == e
    assert len(mesh.element_of_triangle) == len(mesh.triangles)


def test_mesh_file_roundtrip(tmp_path):
    mesh = voronoi_grid(12, rng_seed=5)
    path = tmp_path / "mesh.json"
    mesh.write(path)
    again = read_mesh(path)
    assert again.n_elements == mesh.n_elements
    assert again.n_edges == mesh.n_edges
    np.testing.assert_allclose(again.vertices, mesh.vertices)
    # writer emits the same format losslessly
    mesh2_path = tmp_path / "mesh2.json"
    again.write(mesh2_path)
    assert json.loads(path.read_text()) == json.loads(mesh2_path.read_text())


def test_simplices_alias():
    grid = {
        "vertices": [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
        "simplices": [[0, 1, 2], [0, 2, 3]],
    }
    mesh = mesh_from_dict(grid)
    assert mesh.n_elements == 2
    grid["simplices"] = [[0, 1, 2, 3]]
    with pytest.raises(FormatError):
        mesh_from_dict(grid)


def test_unknown_grid_keys_rejected():
    with pytest.raises(FormatError):
        mesh_from_dict({"vertices": [[0, 0]], "polygons": [], "colour": 1})


def test_vertex_scales_are_adjacent_diameter_means():
    mesh = cartesian_grid(2, 1, box=((0.0, 0.0), (2.0, 1.0)))
    d = np.sqrt(2.0)
    np.testing.assert_allclose(mesh.vertex_scales, d)
