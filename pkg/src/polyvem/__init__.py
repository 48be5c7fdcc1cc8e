"""Virtual element spaces on polygonal meshes.

Projections for general VEM spaces are built from constrained least squares
problems per element; second- and fourth-order (possibly nonlinear) problems
are assembled and solved on top of them.
"""

__version__ = "0.1.0"
