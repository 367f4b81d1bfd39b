"""Shared generators for randomized certification trials.

Random polylines place vertices on a dyadic coordinate grid and random
partitions pick dyadic parameters, so chords, variations, and lengths all
stay inside exact rational arithmetic and certified violations are real
violations, never rounding artifacts.  Direction pools are built once per
session: angle directions cache their trig enclosures per instance, so
reusing pool members keeps the big trial loops fast.
"""

import random
from fractions import Fraction

import pytest

from pathvar import Direction, Partition, Polyline
from pathvar.numerics.dyadic import Dyadic


def dyadic_coord(rng: random.Random, level: int = 6, span: int = 2) -> Fraction:
    return Fraction(rng.randint(-(span << level), span << level), 1 << level)


def random_polyline(
    rng: random.Random, max_vertices: int = 8, level: int = 6, span: int = 2
) -> Polyline:
    m = rng.randint(2, max_vertices)
    return Polyline(
        tuple(
            (dyadic_coord(rng, level, span), dyadic_coord(rng, level, span))
            for _ in range(m)
        )
    )


def random_partition(rng: random.Random, max_interior: int = 6, level: int = 7) -> Partition:
    count = rng.randint(0, max_interior)
    interior = sorted({rng.randint(1, (1 << level) - 1) for _ in range(count)})
    params = [Dyadic(0)] + [Dyadic(j, -level) for j in interior] + [Dyadic(1)]
    return Partition(params)


def refine_partition(rng: random.Random, base: Partition, extra: int = 3, level: int = 9) -> Partition:
    new = {(p.m, p.e) for p in base}
    params = list(base)
    for _ in range(extra):
        j = rng.randint(1, (1 << level) - 1)
        d = Dyadic(j, -level)
        if (d.m, d.e) not in new:
            new.add((d.m, d.e))
            params.append(d)
    return Partition(sorted(params))


def _build_angle_pool(size: int) -> list[Direction]:
    return [Direction.from_theta_pi(Fraction(j, size)) for j in range(size)]


_ANGLE_POOL = None
_RAY_POOL = None


def angle_pool() -> list[Direction]:
    global _ANGLE_POOL
    if _ANGLE_POOL is None:
        _ANGLE_POOL = _build_angle_pool(64)
    return _ANGLE_POOL


def ray_pool() -> list[Direction]:
    global _RAY_POOL
    if _RAY_POOL is None:
        _RAY_POOL = [
            Direction.from_vector(*v)
            for v in [(1, 0), (0, 1), (1, 1), (1, -1), (3, 4), (4, -3), (5, 12), (2, 1), (7, -24)]
        ]
    return _RAY_POOL


@pytest.fixture
def rng():
    return random.Random(0x5EED)
