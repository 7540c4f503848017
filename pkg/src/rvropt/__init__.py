"""Riemannian variance-reduced stochastic optimization.

Subpackages:

- :mod:`rvropt.manifolds` -- Grassmann and SPD geometry.
- :mod:`rvropt.problems` -- PCA, low-rank matrix completion and Karcher-mean
  objectives as finite-sum stochastic problems, plus synthetic generators.
- :mod:`rvropt.optim` -- the stochastic solvers (R-SVRG, R-SRG, R-SPIDER and
  their adaptive-batch variants), first-order baselines and restart wrappers.
- :mod:`rvropt.harness` -- experiment runner, oracles, gradient checker and
  the ``rvropt`` command-line interface.
"""

__version__ = "0.1.0"
