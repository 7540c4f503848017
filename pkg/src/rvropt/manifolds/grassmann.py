"""Grassmann(r, d) kernels on raw d x r arrays.

A subspace is represented by one orthonormal matrix U.  Tangent vectors are
the horizontal representatives, U^T xi = 0.  The exponential map, its
inverse, geodesic parallel transport and the subspace distance all share the
same principal-angle machinery.
"""

from __future__ import annotations

import numpy as np

from ..errors import OutOfInjectivityRadius
from .linalg import qr_positive

# Stay strictly inside the injectivity region: largest principal angle
# must be below pi/2 - ANGLE_MARGIN.
ANGLE_MARGIN = 1e-8


def project(u: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Orthogonal projection of an ambient matrix onto the horizontal space at U."""
    return a - u @ (u.T @ a)


def inner(a: np.ndarray, b: np.ndarray) -> float:
    """Canonical metric: trace(a^T b)."""
    return float(np.sum(a * b))


def retract_qr(u: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """First-order QR retraction, Q factor with positive-diagonal R."""
    q, _ = qr_positive(u + xi)
    return q


def retract_exp(u: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Geodesic endpoint via thin SVD of the direction.

    With xi = W diag(s) V^T, the endpoint is U V cos(s) V^T + W sin(s) V^T.
    A final positive-diagonal QR polish removes rounding drift without
    changing the subspace.
    """
    if not np.any(xi):
        return u.copy()
    w, s, vt = np.linalg.svd(xi, full_matrices=False)
    y = (u @ vt.T) * np.cos(s) @ vt + (w * np.sin(s)) @ vt
    q, _ = qr_positive(y)
    return q


def _principal_angle_guard(m: np.ndarray) -> None:
    """Raise if the largest principal angle encoded in m = U^T Y is >= pi/2 - margin."""
    sigma = np.linalg.svd(m, compute_uv=False)
    smin = float(sigma[-1])
    theta_max = float(np.arccos(np.clip(smin, -1.0, 1.0)))
    if theta_max >= np.pi / 2 - ANGLE_MARGIN:
        raise OutOfInjectivityRadius(
            f"largest principal angle {theta_max:.6f} too close to pi/2"
        )


def inverse_retract_exp(u: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Inverse exponential map (log): xi with Exp_U(xi) spanning Y."""
    m = u.T @ y
    _principal_angle_guard(m)
    # (I - U U^T) Y M^{-1} = W tan(theta) V^T, and log = W theta V^T.
    l = np.linalg.solve(m.T, (y - u @ m).T).T
    w, t, vt = np.linalg.svd(l, full_matrices=False)
    return (w * np.arctan(t)) @ vt


def inverse_retract_qr(u: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Inverse of the QR retraction up to the O(r) class: xi = Y (U^T Y)^{-1} - U."""
    m = u.T @ y
    _principal_angle_guard(m)
    return np.linalg.solve(m.T, y.T).T - u


def parallel_transport(u: np.ndarray, xi: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Parallel transport of v along the geodesic with direction xi.

    Closed form from the thin SVD xi = W diag(s) V^T:
        v  +  (-U V sin(s) + W (cos(s) - 1)) W^T v.
    Components with s = 0 contribute nothing, so degenerate SVD vectors are
    harmless.  Returns a horizontal matrix at the geodesic endpoint.
    """
    if not np.any(xi):
        return v.copy()
    w, s, vt = np.linalg.svd(xi, full_matrices=False)
    wtv = w.T @ v
    uv = u @ vt.T
    return v + (-uv * np.sin(s) + w * (np.cos(s) - 1.0)) @ wtv


def distance(u: np.ndarray, y: np.ndarray) -> float:
    """l2 norm of the principal angles between the two subspaces."""
    sigma = np.linalg.svd(u.T @ y, compute_uv=False)
    theta = np.arccos(np.clip(sigma, -1.0, 1.0))
    return float(np.linalg.norm(theta))


def subspace_gap(u: np.ndarray, y: np.ndarray) -> float:
    """Frobenius norm of the projector difference, a cheap equality metric."""
    return float(np.linalg.norm(u @ u.T - y @ y.T))
