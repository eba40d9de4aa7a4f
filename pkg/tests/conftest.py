"""Shared helpers: planted decompositions used as recovery oracles."""
from __future__ import annotations

import numpy as np

from waringvec import rand
from waringvec.decomposition import WaringDecomposition
from waringvec.polycore import PolyVector


def planted(degrees, num_vars: int, k: int, seed: int):
    """A random rank-k vector together with the decomposition that built it."""
    rng = rand.rng_for(seed, 1000)
    ells = rand.crandn(rng, k, num_vars)
    lams = rand.crandn(rng, k, len(degrees))
    f = PolyVector.from_summands(ells, lams, tuple(degrees))
    dec = WaringDecomposition(tuple(degrees), ells, lams).canonical()
    return f, dec
