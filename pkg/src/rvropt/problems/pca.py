"""PCA as minimization of negative explained variance over Grassmann(r, d)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ShapeError
from ..manifolds import ManifoldPoint, TangentVector, egrad_to_rgrad, grassmann
from .base import StochasticProblem


@dataclass(frozen=True)
class PcaDataset:
    """n samples in R^d and the target subspace rank r."""

    samples: np.ndarray
    r: int

    def __post_init__(self):
        if self.samples.ndim != 2:
            raise ShapeError("samples must be an n x d matrix")
        if not np.all(np.isfinite(self.samples)):
            raise ShapeError("samples contain non-finite entries")
        if not 1 <= self.r <= self.samples.shape[1]:
            raise ShapeError(f"need 1 <= r <= d, got r={self.r}, d={self.samples.shape[1]}")

    @property
    def n(self) -> int:
        return self.samples.shape[0]

    @property
    def d(self) -> int:
        return self.samples.shape[1]


class PcaProblem(StochasticProblem):
    """Component cost f_i(U) = -x_i^T U U^T x_i."""

    def __init__(self, data: PcaDataset):
        self.data = data
        self.manifold = grassmann(data.r, data.d)
        self.n = data.n

    def _check(self, x: ManifoldPoint):
        if x.descriptor != self.manifold:
            raise ShapeError("point does not match the problem manifold")

    def cost_batch(self, x: ManifoldPoint, indices: np.ndarray) -> float:
        self._check(x)
        proj = self.data.samples[indices] @ x.data
        return -float(np.sum(proj * proj)) / len(indices)

    def rgrad_batch(self, x: ManifoldPoint, indices: np.ndarray) -> TangentVector:
        return self.cost_and_rgrad_batch(x, indices)[1]

    def cost_and_rgrad_batch(self, x, indices):
        self._check(x)
        xs = self.data.samples[indices]
        proj = xs @ x.data
        cost = -float(np.sum(proj * proj)) / len(indices)
        egrad = (-2.0 / len(indices)) * (xs.T @ proj)
        return cost, egrad_to_rgrad(x, egrad)


def pca_problem(data: PcaDataset) -> PcaProblem:
    return PcaProblem(data)
