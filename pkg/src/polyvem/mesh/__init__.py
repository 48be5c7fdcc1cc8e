from .bbox import BoundingBox, min_area_bounding_box
from .core import (
    EdgeFrame,
    Mesh,
    build_mesh,
    euler_characteristic,
    mesh_from_dict,
    read_mesh,
    sub_triangulate,
)
from .generators import cartesian_grid, cylinder_channel_grid, voronoi_grid
from .quadrature import (
    Quadrature,
    gauss_legendre,
    segment_quadrature,
    triangle_rule,
    triangles_quadrature,
)

__all__ = [
    "BoundingBox",
    "EdgeFrame",
    "Mesh",
    "Quadrature",
    "build_mesh",
    "cartesian_grid",
    "cylinder_channel_grid",
    "euler_characteristic",
    "gauss_legendre",
    "mesh_from_dict",
    "min_area_bounding_box",
    "read_mesh",
    "segment_quadrature",
    "sub_triangulate",
    "triangle_rule",
    "triangles_quadrature",
    "voronoi_grid",
]
