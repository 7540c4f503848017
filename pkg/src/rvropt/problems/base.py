"""Finite-sum stochastic problems over one manifold.

A problem is an average of n component costs.  Batch evaluations take an
index array that may contain repeats (with-replacement mini-batches) and
always return the mean over the given indices, so the full-index case is
the overall objective.
"""

from __future__ import annotations

import abc

import numpy as np

from ..manifolds import ManifoldDescriptor, ManifoldPoint, TangentVector, inner, norm


class StochasticProblem(abc.ABC):
    """n component costs with per-component Riemannian gradients."""

    manifold: ManifoldDescriptor
    n: int

    @abc.abstractmethod
    def cost_batch(self, x: ManifoldPoint, indices: np.ndarray) -> float:
        """Mean component cost over ``indices`` (repeats allowed)."""

    @abc.abstractmethod
    def rgrad_batch(self, x: ManifoldPoint, indices: np.ndarray) -> TangentVector:
        """Mean component Riemannian gradient over ``indices``."""

    def cost_and_rgrad_batch(
        self, x: ManifoldPoint, indices: np.ndarray
    ) -> tuple[float, TangentVector]:
        """Fused evaluation; subclasses override when sharing work pays off."""
        return self.cost_batch(x, indices), self.rgrad_batch(x, indices)

    # Full-objective conveniences (indices = [n]).

    def all_indices(self) -> np.ndarray:
        return np.arange(self.n)

    def cost_full(self, x: ManifoldPoint) -> float:
        return self.cost_batch(x, self.all_indices())

    def rgrad_full(self, x: ManifoldPoint) -> TangentVector:
        return self.rgrad_batch(x, self.all_indices())

    def cost_and_rgrad_full(self, x: ManifoldPoint) -> tuple[float, TangentVector]:
        return self.cost_and_rgrad_batch(x, self.all_indices())

    def grad_norm(self, x: ManifoldPoint) -> float:
        return norm(x, self.rgrad_full(x))


def gradient_variance(problem: StochasticProblem, x: ManifoldPoint) -> float:
    """Empirical per-component gradient variance (1/n) sum ||g_i - g||^2 at x.

    One singleton gradient per component; used as the sigma^2 estimate when
    the adaptive batch schedule is driven by (alpha_1, sigma^2) instead of a
    single tuned constant.
    """
    g_full = problem.rgrad_full(x)
    acc = 0.0
    for i in range(problem.n):
        gi = problem.rgrad_batch(x, np.array([i]))
        diff = TangentVector(x, gi.data - g_full.data)
        acc += inner(x, diff, diff)
    return acc / problem.n
