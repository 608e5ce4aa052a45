"""Shared builders for the test suite."""

import random
from itertools import product

import pytest

from invar import AffineSubspace, Fan3


def p3_fan() -> Fan3:
    return Fan3(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)],
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
    )


def cube_fan() -> Fan3:
    rays = [s for s in product((-1, 1), repeat=3)]
    idx = {r: i for i, r in enumerate(rays)}
    cones = []
    for axis in range(3):
        for val in (-1, 1):
            cones.append([idx[r] for r in rays if r[axis] == val])
    return Fan3(rays, cones)


def octant_fan() -> Fan3:
    rays = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    cones = [
        [0 if sx > 0 else 1, 2 if sy > 0 else 3, 4 if sz > 0 else 5]
        for sx, sy, sz in product((1, -1), repeat=3)
    ]
    return Fan3(rays, cones)


def coordinate_hyperplane(n: int, axis: int) -> AffineSubspace:
    row = [1 if j == axis else 0 for j in range(n)] + [0]
    return AffineSubspace.from_rows(n, [row])


def random_hyperplane(rng: random.Random, n: int, central: bool = True) -> AffineSubspace:
    while True:
        coeffs = [rng.randint(-3, 3) for _ in range(n)]
        if any(coeffs):
            break
    const = 0 if central else rng.randint(-2, 2)
    return AffineSubspace.from_rows(n, [coeffs + [const]])


def random_subspace(rng: random.Random, n: int, central: bool = True) -> AffineSubspace:
    """A random proper affine subspace with independent equation rows."""
    codim = rng.randint(1, n)
    while True:
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(codim)]
        from invar import QMatrix

        if QMatrix(rows).rank() == codim:
            break
    if central:
        full = [row + [0] for row in rows]
    else:
        point = [rng.randint(-2, 2) for _ in range(n)]
        full = [row + [-sum(a * b for a, b in zip(row, point))] for row in rows]
    return AffineSubspace.from_rows(n, full)


@pytest.fixture
def rng():
    return random.Random(20240811)
