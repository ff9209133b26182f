import time

import numpy as np

from acbm.algebra import StructureConstants, change_basis
from acbm.classify import BASIC_CLASSES, canonical_algebra

# wall-clock anchor for the total-suite time budget, read by test_zz_total_time
T0 = time.time()


def random_constants(rng, lo=-5.0, hi=5.0):
    """Arbitrary (generally non-Lie) structure constants."""
    return StructureConstants.from_flat(rng.uniform(lo, hi, size=9))


def integer_constants(rng, span=5):
    """Small-integer constants; linear identities on them are float-exact."""
    return StructureConstants.from_flat(rng.integers(-span, span + 1, size=9).astype(float))


def valid_constants(rng):
    """A random Jacobi-valid algebra: a conjugated canonical representative."""
    s = BASIC_CLASSES[int(rng.integers(0, len(BASIC_CLASSES)))]
    C = canonical_algebra(s, float(rng.uniform(-3, 3)), float(rng.uniform(-3, 3)))
    while True:
        P = rng.uniform(-1.0, 1.0, size=(3, 3))
        if abs(np.linalg.det(P)) >= 0.3:
            return change_basis(C, P)
