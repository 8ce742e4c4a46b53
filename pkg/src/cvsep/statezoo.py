"""Deterministic and seeded covariance-matrix generators for tests and audits."""

from __future__ import annotations

import math

import numpy as np

from .covariance import apply_symp, is_physical, standard_matrix
from .errors import InvalidSpec


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def vacuum() -> np.ndarray:
    return 0.5 * np.eye(4)


def thermal(n1: float, n2: float) -> np.ndarray:
    """Uncorrelated thermal state diag(n1, n1, n2, n2); needs n1, n2 >= 1/2."""
    if not (n1 >= 0.5 and n2 >= 0.5):
        raise InvalidSpec(f"thermal occupations ({n1}, {n2}) must be >= 1/2")
    return np.diag([n1, n1, n2, n2]).astype(float)


def two_mode_squeezed(r: float) -> np.ndarray:
    """Two-mode squeezed vacuum: standard form with a = b = cosh(2r)/2 and
    c1 = -c2 = sinh(2r)/2; entangled for every r > 0."""
    if not (math.isfinite(r) and r >= 0.0):
        raise InvalidSpec(f"squeezing r = {r} must be nonnegative")
    a = 0.5 * math.cosh(2.0 * r)
    c = 0.5 * math.sinh(2.0 * r)
    return standard_matrix(a, a, c, -c)


def random_symp2(seed) -> np.ndarray:
    """Random 2x2 symplectic: rotation * diag(x, 1/x) * rotation with
    log x uniform in [-1, 1], so conditioning stays bounded."""
    rng = _as_rng(seed)
    t1, t2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    x = math.exp(rng.uniform(-1.0, 1.0))

    def rot(t):
        c, s = math.cos(t), math.sin(t)
        return np.array([[c, s], [-s, c]])

    return rot(t2) @ np.diag([x, 1.0 / x]) @ rot(t1)


def random_physical(seed) -> np.ndarray:
    """Random thermal core conjugated by a random local symplectic pair.

    Physical by construction (Williamson-style), but uncorrelated between the
    modes since local transforms cannot create cross-mode terms; see
    random_correlated_physical for states with nonzero correlations.
    """
    rng = _as_rng(seed)
    n1, n2 = rng.uniform(0.5, 3.0, size=2)
    return apply_symp(thermal(n1, n2), random_symp2(rng), random_symp2(rng))


def random_separable(seed) -> np.ndarray:
    """Random P-representable state: a random PSD ensemble matrix plus I/2.

    The small ridge keeps the coherent excess invertible at bounded
    conditioning, so weight-matrix round trips stay near machine precision.
    """
    rng = _as_rng(seed)
    g = 0.5 * rng.standard_normal((4, 4))
    return g @ g.T + 0.05 * np.eye(4) + 0.5 * np.eye(4)


def random_correlated_physical(seed) -> np.ndarray:
    """Rejection-sampled physical standard form with nonzero correlations,
    optionally conjugated by a random local pair. Yields a mix of separable
    and entangled states."""
    rng = _as_rng(seed)
    while True:
        a, b = rng.uniform(0.5, 2.5, size=2)
        c1 = rng.uniform(0.0, math.sqrt(a * b))
        c2 = rng.uniform(-c1, c1)
        v = standard_matrix(a, b, c1, c2)
        if is_physical(v)[0]:
            break
    if rng.uniform() < 0.5:
        v = apply_symp(v, random_symp2(rng), random_symp2(rng))
    return v
