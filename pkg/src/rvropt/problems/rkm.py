"""Riemannian Karcher mean of SPD matrices under the affine-invariant metric.

Component cost is the squared AIRM distance to one sample, so the component
gradient is -2 Log_C(X_i) and the full gradient is -(2/n) of the mean log.
All per-sample matrix logs are computed with one stacked eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NumericalError, ShapeError
from ..manifolds import ManifoldPoint, TangentVector, spd
from ..manifolds.linalg import EIG_CLAMP_REL, spd_sqrt_pair, sym
from .base import StochasticProblem


@dataclass(frozen=True)
class SpdDataset:
    """n sample matrices, each d x d symmetric positive definite."""

    matrices: np.ndarray

    def __post_init__(self):
        m = self.matrices
        if m.ndim != 3 or m.shape[1] != m.shape[2]:
            raise ShapeError("matrices must be a stacked (n, d, d) array")
        if np.linalg.norm(m - np.transpose(m, (0, 2, 1))) > 1e-10:
            raise ShapeError("sample matrices must be symmetric")
        if np.linalg.eigvalsh(m).min() <= 0:
            raise ShapeError("sample matrices must be positive definite")

    @property
    def n(self) -> int:
        return self.matrices.shape[0]

    @property
    def d(self) -> int:
        return self.matrices.shape[1]


def stacked_spd_logm(mats: np.ndarray) -> np.ndarray:
    """Principal log of a stack of SPD matrices via batched eigendecomposition."""
    w, q = np.linalg.eigh(mats)
    top = w[:, -1]
    if np.any(top <= 0):
        raise NumericalError("matrix stack is not positive definite")
    w = np.maximum(w, EIG_CLAMP_REL * top[:, None])
    logw = np.log(w)
    return np.einsum("nij,nj,nkj->nik", q, logw, q)


class RkmProblem(StochasticProblem):
    """Karcher-mean objective f(C) = (1/n) sum d^2(C, X_i)."""

    def __init__(self, data: SpdDataset):
        self.data = data
        self.manifold = spd(data.d)
        self.n = data.n

    def _whitened_logs(self, x: ManifoldPoint, indices: np.ndarray):
        """logm(C^{-1/2} X_i C^{-1/2}) for i in the batch, plus C^{1/2}."""
        ch, cih = spd_sqrt_pair(x.data)
        mats = np.einsum("ab,nbc,cd->nad", cih, self.data.matrices[indices], cih)
        mats = 0.5 * (mats + np.transpose(mats, (0, 2, 1)))
        return stacked_spd_logm(mats), ch

    def cost_batch(self, x: ManifoldPoint, indices: np.ndarray) -> float:
        logs, _ = self._whitened_logs(x, indices)
        return float(np.sum(logs * logs)) / len(indices)

    def rgrad_batch(self, x: ManifoldPoint, indices: np.ndarray) -> TangentVector:
        logs, ch = self._whitened_logs(x, indices)
        mean_log = logs.mean(axis=0)
        return TangentVector(x, sym(-2.0 * (ch @ mean_log @ ch)))

    def cost_and_rgrad_batch(self, x, indices):
        logs, ch = self._whitened_logs(x, indices)
        cost = float(np.sum(logs * logs)) / len(indices)
        grad = TangentVector(x, sym(-2.0 * (ch @ logs.mean(axis=0) @ ch)))
        return cost, grad


def rkm_problem(data: SpdDataset) -> RkmProblem:
    return RkmProblem(data)
