"""Symmetric-matrix function kernels and QR with a fixed sign convention.

All SPD matrix functions (sqrt, inverse sqrt, log, exp) go through one
symmetric eigendecomposition with eigenvalue clamping at 1e-14 of the
largest eigenvalue, which keeps outputs exactly symmetric.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..errors import NumericalError

EIG_CLAMP_REL = 1e-14


def sym(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.T)


def eigh_clamped(a: np.ndarray, clamp: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix, eigenvalues floored for PD kernels."""
    w, q = np.linalg.eigh(sym(a))
    if clamp:
        floor = EIG_CLAMP_REL * max(float(w[-1]), 0.0)
        if floor <= 0.0:
            raise NumericalError("matrix is not positive definite up to clamping")
        w = np.maximum(w, floor)
    return w, q


def _apply(fun: Callable[[np.ndarray], np.ndarray], a: np.ndarray, clamp: bool) -> np.ndarray:
    w, q = eigh_clamped(a, clamp=clamp)
    return sym((q * fun(w)) @ q.T)


def spd_sqrtm(a: np.ndarray) -> np.ndarray:
    return _apply(np.sqrt, a, clamp=True)


def spd_invsqrtm(a: np.ndarray) -> np.ndarray:
    return _apply(lambda w: 1.0 / np.sqrt(w), a, clamp=True)


def spd_logm(a: np.ndarray) -> np.ndarray:
    return _apply(np.log, a, clamp=True)


def sym_expm(a: np.ndarray) -> np.ndarray:
    return _apply(np.exp, a, clamp=False)


def spd_sqrt_pair(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(A^{1/2}, A^{-1/2}) from one eigendecomposition."""
    w, q = eigh_clamped(a, clamp=True)
    s = np.sqrt(w)
    return sym((q * s) @ q.T), sym((q / s) @ q.T)


def qr_positive(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Thin QR with the diagonal of R forced positive, making Q unique.

    The sign convention turns the Q factor into a pure function of the
    input, which is what makes QR-retraction trajectories reproducible.
    """
    q, r = np.linalg.qr(a)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs, r * signs[:, None]
