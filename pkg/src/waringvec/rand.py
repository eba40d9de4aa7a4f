"""Deterministic random streams.

Every stochastic choice in the package draws from a generator created by
`rng_for(seed, *key)`, where the key encodes the purpose and any loop or
path indices.  Re-running with the same seed therefore reproduces runs
bit for bit, independent of execution order.
"""
from __future__ import annotations

import numpy as np

# purpose codes for stream keys
STARTPOINT = 1
LOOP_PARAMS = 2
PATH_GAMMA = 3
DEFECT = 4
BASE_LOCUS = 5
UNITARY = 6
TARGET = 7
TABLE_ROW = 8


def rng_for(seed: int, *key: int) -> np.random.Generator:
    """A generator seeded by (seed, key) with independent streams per key."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)


def crandn(rng: np.random.Generator, *shape: int) -> np.ndarray:
    """Standard complex Gaussian: real and imaginary parts N(0, 1/2)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_unitary(rng: np.random.Generator, m: int) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    Q, R = np.linalg.qr(crandn(rng, m, m))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))
