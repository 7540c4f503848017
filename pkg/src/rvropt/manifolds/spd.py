"""SPD(d) kernels under the affine-invariant metric.

Tangent vectors are symmetric matrices.  All matrix functions run through
symmetric eigendecompositions (see :mod:`rvropt.manifolds.linalg`).
"""

from __future__ import annotations

import numpy as np

from ..errors import NumericalError, OutOfInjectivityRadius
from .linalg import spd_logm, spd_sqrt_pair, spd_sqrtm, sym, sym_expm


def project(a: np.ndarray) -> np.ndarray:
    """Symmetrization, the orthogonal projection onto the tangent space."""
    return sym(a)


def inner(x: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Affine-invariant metric: trace(X^{-1} u X^{-1} v)."""
    ixu = np.linalg.solve(x, u)
    ixv = np.linalg.solve(x, v)
    return float(np.sum(ixu * ixv.T))


def retract_exp(x: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Exponential map: X^{1/2} expm(X^{-1/2} xi X^{-1/2}) X^{1/2}."""
    xh, xih = spd_sqrt_pair(x)
    return sym(xh @ sym_expm(xih @ xi @ xih) @ xh)


def retract_first_order(x: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Second-order truncation X + xi + (1/2) xi X^{-1} xi.

    Equals (X + (X+xi) X^{-1} (X+xi)) / 2, so the result stays positive
    definite for every symmetric step.
    """
    return sym(x + xi + 0.5 * (xi @ np.linalg.solve(x, xi)))


def inverse_retract_exp(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Log map: X^{1/2} logm(X^{-1/2} Y X^{-1/2}) X^{1/2}."""
    xh, xih = spd_sqrt_pair(x)
    return sym(xh @ spd_logm(xih @ y @ xih) @ xh)


def inverse_retract_first_order(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Exact inverse of the second-order truncated retraction.

    With S = X^{-1/2} Y X^{-1/2} the retraction equation reads
    (A + I)^2 = 2S - I for A = X^{-1/2} xi X^{-1/2}, solvable whenever
    2S - I is positive definite.
    """
    xh, xih = spd_sqrt_pair(x)
    s2 = 2.0 * sym(xih @ y @ xih) - np.eye(x.shape[0])
    if np.linalg.eigvalsh(s2)[0] <= 0:
        raise OutOfInjectivityRadius("target outside the first-order retraction's range")
    a = spd_sqrtm(s2) - np.eye(x.shape[0])
    return sym(xh @ a @ xh)


def parallel_transport(x: np.ndarray, y: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Transport along the geodesic from X to Y: E v E^T with E = (Y X^{-1})^{1/2}."""
    xh, xih = spd_sqrt_pair(x)
    e = xh @ spd_sqrtm(sym(xih @ y @ xih)) @ xih
    return sym(e @ v @ e.T)


def distance(x: np.ndarray, y: np.ndarray) -> float:
    """Affine-invariant distance ||logm(X^{-1/2} Y X^{-1/2})||_F."""
    _, xih = spd_sqrt_pair(x)
    return float(np.linalg.norm(spd_logm(sym(xih @ y @ xih))))


def egrad_to_rgrad(x: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Metric conversion X sym(g) X for the affine-invariant metric."""
    return sym(x @ sym(g) @ x)


def check_spd(x: np.ndarray) -> None:
    if np.linalg.eigvalsh(sym(x))[0] <= 0:
        raise NumericalError("matrix is not positive definite")
