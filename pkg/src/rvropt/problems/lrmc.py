"""Low-rank matrix completion on Grassmann(r, d).

The d x n matrix is recovered column by column: given the subspace basis U,
each column's coefficient vector is the least-squares fit on that column's
observed rows.  The component cost is the squared residual on the observed
rows, and its gradient treats the coefficients by the envelope property
(the partial gradient evaluated at the optimal fit, which is exact).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import qr, solve_triangular

from ..errors import ConfigError, LeastSquaresSingular, ShapeError
from ..manifolds import ManifoldPoint, TangentVector, grassmann, project_tangent
from .base import StochasticProblem

_RANK_TOL = 1e-12


@dataclass(frozen=True)
class LrmcDataset:
    """Observed entries of a d x n matrix, stored per column in CSR style.

    ``indptr`` has length n + 1; column i's observed rows and values are
    ``rows[indptr[i]:indptr[i+1]]`` / ``vals[...]``.  The test split uses the
    same layout and is disjoint from the training entries.
    """

    d: int
    n: int
    r: int
    indptr: np.ndarray
    rows: np.ndarray
    vals: np.ndarray
    test_indptr: np.ndarray
    test_rows: np.ndarray
    test_vals: np.ndarray
    true_basis: np.ndarray | None = field(default=None, repr=False)
    true_svals: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.indptr) != self.n + 1 or len(self.test_indptr) != self.n + 1:
            raise ShapeError("indptr length must be n + 1")
        counts = np.diff(self.indptr)
        if counts.min(initial=0) < self.r:
            raise ConfigError(
                "every column needs at least r observed entries for least squares"
            )

    def column(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = self.indptr[i], self.indptr[i + 1]
        return self.rows[lo:hi], self.vals[lo:hi]

    def test_column(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = self.test_indptr[i], self.test_indptr[i + 1]
        return self.test_rows[lo:hi], self.test_vals[lo:hi]

    @property
    def n_test(self) -> int:
        return len(self.test_vals)


def solve_coefficients(u_obs: np.ndarray, vals: np.ndarray) -> np.ndarray:
    """Least-squares fit of one column via column-pivoted QR.

    Raises LeastSquaresSingular on a rank-deficient observed block instead
    of regularizing, which signals an under-sampled column.
    """
    q, rmat, piv = qr(u_obs, mode="economic", pivoting=True)
    diag = np.abs(np.diag(rmat))
    if diag[0] == 0.0 or diag[-1] <= _RANK_TOL * diag[0]:
        raise LeastSquaresSingular(
            f"observed block rank deficient ({len(vals)} rows, rank < {u_obs.shape[1]})"
        )
    z = solve_triangular(rmat, q.T @ vals)
    v = np.empty_like(z)
    v[piv] = z
    return v


class LrmcProblem(StochasticProblem):
    """Component cost f_i(U) = || a_i - U v_i(U) ||^2 on the observed rows."""

    def __init__(self, data: LrmcDataset):
        self.data = data
        self.manifold = grassmann(data.r, data.d)
        self.n = data.n

    def _column_terms(self, u: np.ndarray, i: int) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
        rows, vals = self.data.column(i)
        v = solve_coefficients(u[rows], vals)
        resid = vals - u[rows] @ v
        return float(resid @ resid), resid, v, rows

    def cost_batch(self, x: ManifoldPoint, indices: np.ndarray) -> float:
        u = x.data
        total = 0.0
        for i in indices:
            total += self._column_terms(u, int(i))[0]
        return total / len(indices)

    def rgrad_batch(self, x: ManifoldPoint, indices: np.ndarray) -> TangentVector:
        return self.cost_and_rgrad_batch(x, indices)[1]

    def cost_and_rgrad_batch(self, x, indices):
        u = x.data
        egrad = np.zeros_like(u)
        total = 0.0
        for i in indices:
            c, resid, v, rows = self._column_terms(u, int(i))
            total += c
            egrad[rows] -= 2.0 * np.outer(resid, v)
        scale = 1.0 / len(indices)
        return total * scale, project_tangent(x, egrad * scale)


def lrmc_problem(data: LrmcDataset) -> LrmcProblem:
    return LrmcProblem(data)


def test_mse(data: LrmcDataset, x: ManifoldPoint) -> float:
    """Mean squared error on held-out entries.

    Coefficients are fit on training entries only, then evaluated on the
    test entries; invariant under right-rotation of the basis.
    """
    if data.n_test == 0:
        raise ConfigError("dataset has no held-out test entries")
    if x.descriptor != grassmann(data.r, data.d):
        raise ShapeError("point does not match the dataset dimensions")
    u = x.data
    total = 0.0
    for i in range(data.n):
        t_rows, t_vals = data.test_column(i)
        if len(t_rows) == 0:
            continue
        rows, vals = data.column(i)
        v = solve_coefficients(u[rows], vals)
        err = t_vals - u[t_rows] @ v
        total += float(err @ err)
    return total / data.n_test
