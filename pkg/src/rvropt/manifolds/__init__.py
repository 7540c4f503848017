"""Matrix-manifold geometry for Grassmann(r, d) and SPD(d)."""

from .ops import (
    add,
    distance,
    egrad_to_rgrad,
    inner,
    inverse_retract,
    norm,
    points_equal,
    project_tangent,
    random_point,
    random_tangent,
    retract,
    scale,
    set_validation,
    transport,
    transport_between,
    zero_tangent,
)
from .types import (
    ManifoldDescriptor,
    ManifoldKind,
    ManifoldPoint,
    RetractionMode,
    TangentVector,
    TransportKind,
    grassmann,
    spd,
)

__all__ = [
    "ManifoldDescriptor",
    "ManifoldKind",
    "ManifoldPoint",
    "RetractionMode",
    "TangentVector",
    "TransportKind",
    "add",
    "distance",
    "egrad_to_rgrad",
    "grassmann",
    "inner",
    "inverse_retract",
    "norm",
    "points_equal",
    "project_tangent",
    "random_point",
    "random_tangent",
    "retract",
    "scale",
    "set_validation",
    "spd",
    "transport",
    "transport_between",
    "zero_tangent",
]
