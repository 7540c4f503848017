"""Core value types for matrix-manifold geometry.

Points and tangent vectors are immutable value objects carrying their
descriptor; all geometric operations live in :mod:`rvropt.manifolds.ops`.
Grassmann points are stored as one orthonormal representative of the
subspace; equality of points is subspace equality, never matrix equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from ..errors import ShapeError

# Tolerances baked into the type invariants.
ORTHONORMALITY_TOL = 1e-10
HORIZONTAL_TOL = 1e-10
SYMMETRY_TOL = 1e-12


class ManifoldKind(enum.Enum):
    GRASSMANN = "grassmann"
    SPD = "spd"


class TransportKind(enum.Enum):
    """Vector transport flavor.

    PARALLEL is the metric-preserving transport along the geodesic and is
    isometric by construction; PROJECTION transports by projecting onto the
    target tangent space and is not required to preserve norms.
    """

    PARALLEL = "parallel"
    PROJECTION = "projection"


class RetractionMode(enum.Enum):
    FIRST_ORDER = "first-order"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class ManifoldDescriptor:
    """Which manifold, and its dimensions.

    Grassmann(r, d) holds r-dimensional subspaces of R^d represented by
    d x r orthonormal matrices; SPD(d) holds d x d symmetric positive
    definite matrices under the affine-invariant metric.
    """

    kind: ManifoldKind
    d: int
    r: int = 0

    def __post_init__(self):
        if self.kind is ManifoldKind.GRASSMANN:
            if not (1 <= self.r <= self.d):
                raise ShapeError(f"Grassmann requires 1 <= r <= d, got r={self.r}, d={self.d}")
        else:
            if self.d < 1:
                raise ShapeError(f"SPD requires d >= 1, got d={self.d}")

    @property
    def point_shape(self) -> tuple[int, int]:
        if self.kind is ManifoldKind.GRASSMANN:
            return (self.d, self.r)
        return (self.d, self.d)


def grassmann(r: int, d: int) -> ManifoldDescriptor:
    return ManifoldDescriptor(ManifoldKind.GRASSMANN, d=d, r=r)


def spd(d: int) -> ManifoldDescriptor:
    return ManifoldDescriptor(ManifoldKind.SPD, d=d)


@dataclass(frozen=True)
class ManifoldPoint:
    """A point on the manifold: a Grassmann representative U or an SPD matrix X."""

    descriptor: ManifoldDescriptor
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.data.shape != self.descriptor.point_shape:
            raise ShapeError(
                f"point data shape {self.data.shape} != expected {self.descriptor.point_shape}"
            )

    def check(self) -> None:
        """Raise if the type invariants are violated."""
        a = self.data
        if not np.all(np.isfinite(a)):
            raise ShapeError("point has non-finite entries")
        if self.descriptor.kind is ManifoldKind.GRASSMANN:
            gram = a.T @ a
            err = np.linalg.norm(gram - np.eye(self.descriptor.r))
            if err > ORTHONORMALITY_TOL:
                raise ShapeError(f"Grassmann representative not orthonormal: |U^T U - I| = {err:g}")
        else:
            if np.linalg.norm(a - a.T) > SYMMETRY_TOL:
                raise ShapeError("SPD point not symmetric")
            w = np.linalg.eigvalsh(a)
            if w[0] <= 0:
                raise ShapeError(f"SPD point not positive definite: min eigenvalue {w[0]:g}")


@dataclass(frozen=True)
class TangentVector:
    """A tangent vector at ``base``: horizontal (U^T xi = 0) for Grassmann, symmetric for SPD."""

    base: ManifoldPoint
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.data.shape != self.base.data.shape:
            raise ShapeError(
                f"tangent data shape {self.data.shape} != base shape {self.base.data.shape}"
            )

    @property
    def descriptor(self) -> ManifoldDescriptor:
        return self.base.descriptor

    def check(self) -> None:
        """Raise if the tangent-space invariants are violated."""
        if not np.all(np.isfinite(self.data)):
            raise ShapeError("tangent vector has non-finite entries")
        if self.descriptor.kind is ManifoldKind.GRASSMANN:
            err = np.linalg.norm(self.base.data.T @ self.data)
            if err > HORIZONTAL_TOL:
                raise ShapeError(f"tangent not horizontal: |U^T xi| = {err:g}")
        else:
            if np.linalg.norm(self.data - self.data.T) > SYMMETRY_TOL:
                raise ShapeError("SPD tangent not symmetric")


def same_point(x: ManifoldPoint, y: ManifoldPoint) -> bool:
    """Representative-level identity used for base-point preconditions."""
    return x.descriptor == y.descriptor and np.array_equal(x.data, y.data)
