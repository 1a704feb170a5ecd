"""Shared fixtures and independent oracles.

The oracles deliberately avoid the library's fast paths: projections by
linear scan, closure by matrix Warshall, planar products from embedded
coordinates.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from posetgeo import Chain, Poset, lattice_1p1
from posetgeo.projection import Projector


def scan_forward(poset: Poset, x: int, chain: Chain) -> int | None:
    """Least upper bound of x on the chain by exhaustive scan."""
    above = [p for p in chain.elements if poset.leq(x, p)]
    if not above:
        return None
    return min(above, key=chain.value)


def scan_backward(poset: Poset, x: int, chain: Chain) -> int | None:
    below = [p for p in chain.elements if poset.leq(p, x)]
    if not below:
        return None
    return max(below, key=chain.value)


def warshall_closure(n: int, edges: list[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure as a boolean matrix."""
    m = np.eye(n, dtype=bool)
    for a, b in edges:
        m[a, b] = True
    for k in range(n):
        m |= np.outer(m[:, k], m[k, :])
    return m


def planar_dot(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def planar_cross(
    u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]
) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


@pytest.fixture(scope="session")
def lattice():
    return lattice_1p1(4, 20)


@pytest.fixture(scope="session")
def lattice_projector(lattice):
    return Projector(lattice.poset)
