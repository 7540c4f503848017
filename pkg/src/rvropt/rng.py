"""Deterministic random-number streams.

One root seed is split into independent streams keyed by purpose and
counters, so that e.g. changing the size of an epoch's reference batch can
never perturb the mini-batch draws of any iteration.  Each stream is an
independent ``numpy.random.Generator`` derived from
``SeedSequence([domain, seed, *counters])``.

Domain tags (fixed, part of the on-disk reproducibility contract):

====  =========================================
tag   purpose
====  =========================================
0     dataset generation
1     initial iterate
2     per-epoch reference batch sampling
3     per-iteration mini-batch sampling
4     output-iterate selection (reservoir)
5     restart wrapper, per mega-epoch
9     miscellaneous / user streams
====  =========================================
"""

from __future__ import annotations

import numpy as np

_DATASET = 0
_INIT = 1
_REFERENCE = 2
_MINIBATCH = 3
_OUTPUT = 4
_RESTART = 5
_MISC = 9


def stream(seed: int, *key: int) -> np.random.Generator:
    """Return the generator for ``(seed, *key)``; equal keys give equal streams."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, key)]))


class RngStreams:
    """Counter-addressed streams below one root seed."""

    def __init__(self, seed: int):
        self.seed = int(seed)

    def dataset(self) -> np.random.Generator:
        return stream(self.seed, _DATASET)

    def init_point(self) -> np.random.Generator:
        return stream(self.seed, _INIT)

    def reference(self, epoch: int) -> np.random.Generator:
        return stream(self.seed, _REFERENCE, epoch)

    def minibatch(self, epoch: int, step: int) -> np.random.Generator:
        return stream(self.seed, _MINIBATCH, epoch, step)

    def output(self) -> np.random.Generator:
        return stream(self.seed, _OUTPUT)

    def restart_seed(self, mega_epoch: int) -> int:
        """Child root seed for the solver run inside mega-epoch ``mega_epoch``."""
        return int(stream(self.seed, _RESTART, mega_epoch).integers(0, 2**63 - 1))

    def misc(self, *key: int) -> np.random.Generator:
        return stream(self.seed, _MISC, *key)
