"""Typed geometry operations dispatched on the manifold descriptor.

Every function takes and returns the value types from
:mod:`rvropt.manifolds.types`; raw-array kernels live in the per-manifold
modules.  All operations are pure functions of their inputs.  Set
``VALIDATE = True`` (or call :func:`set_validation`) to re-check type
invariants on every output, which the test-suite does.
"""

from __future__ import annotations

import numpy as np

from ..errors import BasePointMismatch, NumericalError, ShapeError
from . import grassmann as gr
from . import spd as sp
from .types import (
    ManifoldDescriptor,
    ManifoldKind,
    ManifoldPoint,
    RetractionMode,
    TangentVector,
    TransportKind,
    same_point,
)

VALIDATE = False


def set_validation(enabled: bool) -> None:
    global VALIDATE
    VALIDATE = bool(enabled)


def _checked_point(desc: ManifoldDescriptor, data: np.ndarray) -> ManifoldPoint:
    if not np.all(np.isfinite(data)):
        raise NumericalError("retraction produced non-finite entries")
    p = ManifoldPoint(desc, data)
    if VALIDATE:
        p.check()
    return p


def _checked_tangent(base: ManifoldPoint, data: np.ndarray) -> TangentVector:
    t = TangentVector(base, data)
    if VALIDATE:
        t.check()
    return t


def _require_base(x: ManifoldPoint, *vectors: TangentVector) -> None:
    for v in vectors:
        if not same_point(v.base, x):
            raise BasePointMismatch("tangent vector not rooted at the given point")


def inner(x: ManifoldPoint, u: TangentVector, v: TangentVector) -> float:
    """Riemannian inner product at x: trace(u^T v) on Grassmann, AIRM on SPD."""
    _require_base(x, u, v)
    if x.descriptor.kind is ManifoldKind.GRASSMANN:
        return gr.inner(u.data, v.data)
    return sp.inner(x.data, u.data, v.data)


def norm(x: ManifoldPoint, u: TangentVector) -> float:
    return float(np.sqrt(max(inner(x, u, u), 0.0)))


def project_tangent(x: ManifoldPoint, a: np.ndarray) -> TangentVector:
    """Project an ambient matrix onto the tangent space at x; idempotent."""
    if a.shape != x.data.shape:
        raise ShapeError(f"ambient shape {a.shape} != point shape {x.data.shape}")
    if x.descriptor.kind is ManifoldKind.GRASSMANN:
        return _checked_tangent(x, gr.project(x.data, a))
    return _checked_tangent(x, sp.project(a))


def zero_tangent(x: ManifoldPoint) -> TangentVector:
    return TangentVector(x, np.zeros_like(x.data))


def retract(
    x: ManifoldPoint, xi: TangentVector, mode: RetractionMode = RetractionMode.EXPONENTIAL
) -> ManifoldPoint:
    """Move from x along xi; R_x(0) = x exactly."""
    _require_base(x, xi)
    if not np.any(xi.data):
        return x
    kind = x.descriptor.kind
    if kind is ManifoldKind.GRASSMANN:
        data = (
            gr.retract_qr(x.data, xi.data)
            if mode is RetractionMode.FIRST_ORDER
            else gr.retract_exp(x.data, xi.data)
        )
    else:
        data = (
            sp.retract_first_order(x.data, xi.data)
            if mode is RetractionMode.FIRST_ORDER
            else sp.retract_exp(x.data, xi.data)
        )
    return _checked_point(x.descriptor, data)


def inverse_retract(
    x: ManifoldPoint, y: ManifoldPoint, mode: RetractionMode = RetractionMode.EXPONENTIAL
) -> TangentVector:
    """Tangent direction xi with retract(x, xi, mode) reproducing y.

    On Grassmann the reproduction is up to the orthogonal equivalence class
    of the representative.  Raises OutOfInjectivityRadius outside the mode's
    injectivity region.
    """
    if x.descriptor != y.descriptor:
        raise BasePointMismatch("points live on different manifolds")
    kind = x.descriptor.kind
    if kind is ManifoldKind.GRASSMANN:
        data = (
            gr.inverse_retract_qr(x.data, y.data)
            if mode is RetractionMode.FIRST_ORDER
            else gr.inverse_retract_exp(x.data, y.data)
        )
    else:
        data = (
            sp.inverse_retract_first_order(x.data, y.data)
            if mode is RetractionMode.FIRST_ORDER
            else sp.inverse_retract_exp(x.data, y.data)
        )
    return _checked_tangent(x, data)


def _procrustes(a: np.ndarray) -> np.ndarray:
    p, _, qt = np.linalg.svd(a)
    return p @ qt


def transport(
    x: ManifoldPoint,
    xi: TangentVector,
    v: TangentVector,
    kind: TransportKind = TransportKind.PARALLEL,
    mode: RetractionMode = RetractionMode.EXPONENTIAL,
) -> TangentVector:
    """Carry v from x along the curve with direction xi.

    PARALLEL transports along the geodesic defined by xi (isometric);
    PROJECTION projects v onto the tangent space at retract(x, xi, mode).
    Transport with xi = 0 returns v unchanged.
    """
    _require_base(x, xi, v)
    if not np.any(xi.data):
        return v
    mkind = x.descriptor.kind
    if kind is TransportKind.PARALLEL:
        if mkind is ManifoldKind.GRASSMANN:
            y = retract(x, xi, RetractionMode.EXPONENTIAL)
            return _checked_tangent(y, gr.parallel_transport(x.data, xi.data, v.data))
        y = retract(x, xi, RetractionMode.EXPONENTIAL)
        return _checked_tangent(y, sp.parallel_transport(x.data, y.data, v.data))
    y = retract(x, xi, mode)
    return project_tangent(y, v.data)


def transport_between(
    x: ManifoldPoint,
    y: ManifoldPoint,
    v: TangentVector,
    kind: TransportKind = TransportKind.PARALLEL,
) -> TangentVector:
    """Carry v from x to the given point y.

    For PARALLEL on Grassmann the transported vector is re-aligned to y's
    stored representative, so downstream arithmetic can mix it with
    gradients computed at exactly that representative.
    """
    _require_base(x, v)
    if x.descriptor != y.descriptor:
        raise BasePointMismatch("points live on different manifolds")
    if same_point(x, y):
        return TangentVector(y, v.data.copy())
    if kind is TransportKind.PROJECTION:
        return project_tangent(y, v.data)
    if x.descriptor.kind is ManifoldKind.GRASSMANN:
        xi = gr.inverse_retract_exp(x.data, y.data)
        moved = gr.parallel_transport(x.data, xi, v.data)
        endpoint = gr.retract_exp(x.data, xi)
        rot = _procrustes(endpoint.T @ y.data)
        return _checked_tangent(y, moved @ rot)
    return _checked_tangent(y, sp.parallel_transport(x.data, y.data, v.data))


def distance(x: ManifoldPoint, y: ManifoldPoint) -> float:
    """Riemannian distance; Grassmann uses principal angles, SPD the AIRM."""
    if x.descriptor != y.descriptor:
        raise BasePointMismatch("points live on different manifolds")
    if x.descriptor.kind is ManifoldKind.GRASSMANN:
        return gr.distance(x.data, y.data)
    return sp.distance(x.data, y.data)


def egrad_to_rgrad(x: ManifoldPoint, g: np.ndarray) -> TangentVector:
    """Convert a Euclidean gradient into the Riemannian gradient at x."""
    if g.shape != x.data.shape:
        raise ShapeError(f"gradient shape {g.shape} != point shape {x.data.shape}")
    if x.descriptor.kind is ManifoldKind.GRASSMANN:
        return _checked_tangent(x, gr.project(x.data, g))
    return _checked_tangent(x, sp.egrad_to_rgrad(x.data, g))


def random_point(desc: ManifoldDescriptor, rng: np.random.Generator) -> ManifoldPoint:
    """Random point: Q factor of a normal draw (Grassmann), A A^T + 1e-6 I (SPD)."""
    if desc.kind is ManifoldKind.GRASSMANN:
        from .linalg import qr_positive

        q, _ = qr_positive(rng.standard_normal((desc.d, desc.r)))
        return _checked_point(desc, q)
    a = rng.standard_normal((desc.d, desc.d))
    return _checked_point(desc, a @ a.T + 1e-6 * np.eye(desc.d))


def random_tangent(x: ManifoldPoint, rng: np.random.Generator) -> TangentVector:
    """Unit-norm tangent vector: projected normal draw, normalized in the metric."""
    draw = rng.standard_normal(x.data.shape)
    t = project_tangent(x, draw)
    n = norm(x, t)
    return _checked_tangent(x, t.data / n)


def points_equal(x: ManifoldPoint, y: ManifoldPoint, tol: float = 1e-10) -> bool:
    """Geometric equality: subspace distance on Grassmann, Frobenius on SPD."""
    if x.descriptor != y.descriptor:
        return False
    if x.descriptor.kind is ManifoldKind.GRASSMANN:
        return gr.subspace_gap(x.data, y.data) <= tol
    return float(np.linalg.norm(x.data - y.data)) <= tol


def scale(v: TangentVector, alpha: float) -> TangentVector:
    return TangentVector(v.base, alpha * v.data)


def add(u: TangentVector, v: TangentVector) -> TangentVector:
    if not same_point(u.base, v.base):
        raise BasePointMismatch("tangent vectors rooted at different points")
    return TangentVector(u.base, u.data + v.data)
