"""
Shared helper functions for the toric_mori test suite.

Unlike fixtures in conftest.py, these are regular functions that can be
imported: fixture fan builders, fixture file paths, and the random complete
smooth fan generator used by the structural property tests.
"""
from itertools import combinations
from pathlib import Path

import numpy as np

from toric_mori.fan import Fan, FanMorphism, point_morphism
from toric_mori.lattice import IntMatrix

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


# ============================================================================
# Fixture fans
# ============================================================================

def p2_fan() -> Fan:
    return Fan.build(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])


def f1_fan() -> Fan:
    """P^2 blown up at a point; r3 = r0 + r1 is the exceptional ray."""
    return Fan.build(2, [(1, 0), (0, 1), (-1, -1), (1, 1)], [(0, 3), (1, 3), (1, 2), (0, 2)])


def p1_fan() -> Fan:
    return Fan.build(1, [(1,), (-1,)], [(0,), (1,)])


def p1xp1_fan() -> Fan:
    return Fan.build(2, [(1, 0), (-1, 0), (0, 1), (0, -1)], [(0, 2), (0, 3), (1, 2), (1, 3)])


def p121_fan() -> Fan:
    return Fan.build(2, [(1, 0), (0, 1), (-1, -2)], [(0, 1), (1, 2), (0, 2)])


def a2_fan() -> Fan:
    return Fan.build(2, [(1, 0), (0, 1)], [(0, 1)])


def blowup_a2_fan() -> Fan:
    return Fan.build(2, [(1, 0), (0, 1), (1, 1)], [(0, 2), (1, 2)])


def small_source_fan(u4) -> Fan:
    """Two 3-cones sharing the wall {0,1}; u4 sits opposite e3."""
    return Fan.build(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), tuple(u4)], [(0, 1, 2), (0, 1, 3)])


def small_target_fan(u4) -> Fan:
    return Fan.build(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), tuple(u4)], [(0, 1, 2, 3)])


ATIYAH_U4 = (1, 1, -1)
WEIGHTED_U4 = (2, 1, -1)


# ============================================================================
# Fixture morphisms
# ============================================================================

def identity_over(source: Fan, target: Fan) -> FanMorphism:
    return FanMorphism(IntMatrix.identity(source.rank), source, target)


def p2_to_point() -> FanMorphism:
    return point_morphism(p2_fan())


def f1_to_point() -> FanMorphism:
    return point_morphism(f1_fan())


def p121_to_point() -> FanMorphism:
    return point_morphism(p121_fan())


def p1xp1_to_p1() -> FanMorphism:
    return FanMorphism(IntMatrix.from_rows([[1, 0]]), p1xp1_fan(), p1_fan())


def blowup_to_a2() -> FanMorphism:
    return identity_over(blowup_a2_fan(), a2_fan())


def atiyah_flop() -> FanMorphism:
    return identity_over(small_source_fan(ATIYAH_U4), small_target_fan(ATIYAH_U4))


def weighted_flip() -> FanMorphism:
    return identity_over(small_source_fan(WEIGHTED_U4), small_target_fan(WEIGHTED_U4))


def all_fixture_morphisms():
    return {
        "p2_to_point": p2_to_point(),
        "f1_to_point": f1_to_point(),
        "p1xp1_to_p1": p1xp1_to_p1(),
        "p121_to_point": p121_to_point(),
        "blowup_to_a2": blowup_to_a2(),
        "atiyah_flop": atiyah_flop(),
        "weighted_flip": weighted_flip(),
    }


# ============================================================================
# Random complete smooth fans
# ============================================================================

def _seeds(rank: int):
    if rank == 2:
        return [p2_fan(), p1xp1_fan()]
    p3 = Fan.build(
        3,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)],
        [c for c in combinations(range(4), 3)],
    )
    cube = Fan.build(
        3,
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
        [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)],
    )
    return [p3, cube]


def star_subdivide(fan: Fan, face) -> Fan:
    """Blow up the orbit closure of ``face``: add the sum of its rays."""
    new_ray = fan.sum_of_rays(face)
    new_index = len(fan.rays)
    cones = []
    for cone in fan.max_cones:
        if set(face) <= set(cone):
            for u in face:
                cones.append([v for v in cone if v != u] + [new_index])
        else:
            cones.append(list(cone))
    return Fan.build(fan.rank, list(fan.rays) + [new_ray], cones)


def random_smooth_fan(rng: np.random.Generator, min_rank: int, max_rank: int, max_subdivisions: int) -> Fan:
    """Iterated star subdivisions of a random seed along faces of dimension >= 2."""
    rank = int(rng.integers(min_rank, max_rank + 1))
    seeds = _seeds(rank)
    fan = seeds[int(rng.integers(len(seeds)))]
    for _ in range(int(rng.integers(0, max_subdivisions + 1))):
        faces = sorted({
            face
            for cone in fan.max_cones
            for k in range(2, rank + 1)
            for face in combinations(cone, k)
        })
        fan = star_subdivide(fan, faces[int(rng.integers(len(faces)))])
    return fan


def random_smooth_fans(config):
    settings = config.random_fans
    rng = np.random.default_rng(settings.seed)
    return [
        random_smooth_fan(rng, settings.min_rank, settings.max_rank, settings.max_subdivisions)
        for _ in range(settings.count)
    ]
