"""Exact combinatorics of the convex hull of parking functions.

Closed formulas for the vertices, edges, f-vector, volume and lattice points
of P_n, each paired with an independent brute-force check.
"""

from .core import (
    EdgeGraph,
    FacetSystem,
    Vertex,
    edge_graph,
    enumerate_parking_functions,
    facet_system,
    is_parking_function,
    membership,
    vertex_count,
    vertices,
)
from .errors import (
    ContractError,
    DegenerateDimensionError,
    DomainError,
    IntegrityError,
    ResourceBoundError,
)
from .faces import (
    FaceDescriptor,
    IncidenceMatrix,
    OrderedPartition,
    edge_count,
    enumerate_faces,
    f_vector,
    face_lattice_oracle,
    face_vertices,
)
from .kernels import BACKEND
from .lattice import (
    SliceSpec,
    dragon_condition,
    dragon_condition_matching,
    lattice_count,
    postnikov_slice_count,
    slice_count_bruteforce,
    slice_spec,
    slice_vertex_type,
    y_coordinates,
)
from .numerics import (
    RationalSeries,
    binomial,
    factorial,
    raising_factorial,
    stirling2,
)
from .volume import ehrhart_count, egf_identity_check, volume, volume_oracle

__version__ = "0.1.0"
