"""
Combinatorial predicates on fans.

Validation, walls, completeness, smoothness and primitive collections.
Results for a given fan are cached; fans are immutable.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from toric_mori.errors import MathematicalError
from toric_mori.fan.data_models import Cone, Fan, ValidationReport, Wall, format_cone
from toric_mori.lattice import (
    drop_redundant, find_nonnegative_solution, is_independent, is_primitive, is_strongly_convex, multiplicity,
    primitive_part,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_PRIMITIVE_COLLECTION_RAYS = 20


class FanError(MathematicalError):
    """Raised when a fan does not satisfy an operation's structural precondition."""
    pass


def require_simplicial(fan: Fan, operation: str):
    if not fan.simplicial:
        raise FanError(
            f"{operation} requires a simplicial fan; general cones "
            f"{', '.join(format_cone(c) for c in fan.general_cones)} present"
        )


def _require_pure(fan: Fan):
    require_simplicial(fan, "walls")
    if not fan.max_cones or any(len(c) != fan.rank for c in fan.max_cones):
        raise FanError("walls require pure full-dimensional fan")


def _escapes_common_face(fan: Fan, cone: Cone, other: Cone, common: Cone) -> Optional[int]:
    """A ray of ``cone`` outside ``common`` used by some point of the intersection.

    Looks for lambda, mu >= 0 with sum lambda a = sum mu b and lambda_a = 1.
    """
    a_vectors = fan.vectors(cone)
    b_vectors = fan.vectors(other)
    for position, ray in enumerate(cone):
        if ray in common:
            continue
        columns = []
        for j, a in enumerate(a_vectors):
            columns.append(list(a) + [int(j == position)])
        for b in b_vectors:
            columns.append([-x for x in b] + [0])
        target = [0] * fan.rank + [1]
        if find_nonnegative_solution(columns, target) is not None:
            return ray
    return None


def validate_fan(fan: Fan) -> ValidationReport:
    """Collect every violation of the fan axioms.

    Checks ray length, primitivity, distinctness, cone indices, strong
    convexity, redundant generators of general cones, and that any two cones
    meet in a common face.
    """
    report = ValidationReport()
    n = fan.rank

    if n < 0:
        report.add(f"rank must be >= 0 (got: {n})")
        return report

    for i, ray in enumerate(fan.rays):
        if len(ray) != n:
            report.add(f"ray r{i} has length {len(ray)}, expected {n}")
    if not report.ok:
        return report

    seen: Dict[Tuple[int, ...], int] = {}
    for i, ray in enumerate(fan.rays):
        if not is_primitive(ray):
            report.add(f"ray r{i} = {list(ray)} is not primitive")
        if not any(ray):
            continue
        key = primitive_part(ray)
        if key in seen:
            report.add(f"proportional rays r{seen[key]} and r{i}")
        else:
            seen[key] = i

    cones = fan.all_cones
    for cone in cones:
        if any(i < 0 or i >= len(fan.rays) for i in cone):
            report.add(f"cone {format_cone(cone)} references a missing ray")
    if not report.ok:
        return report
    for cone in fan.max_cones:
        if not is_independent(fan.vectors(cone)):
            report.add(f"cone {format_cone(cone)} is listed as simplicial but its rays are dependent")

    used = set(i for cone in cones for i in cone)
    for i in range(len(fan.rays)):
        if i not in used:
            report.add(f"ray r{i} lies in no cone")

    for cone in cones:
        vectors = fan.vectors(cone)
        if not is_strongly_convex(vectors):
            report.add(f"cone {format_cone(cone)} is not strongly convex")
        elif fan.is_general(cone) and len(drop_redundant(vectors)) != len(vectors):
            report.add(f"cone {format_cone(cone)} has redundant generators")

    for c1, c2 in combinations(cones, 2):
        if set(c1) <= set(c2) or set(c2) <= set(c1):
            report.add(f"cone {format_cone(c1)} and cone {format_cone(c2)} are nested")
    if not report.ok:
        return report

    for c1, c2 in combinations(cones, 2):
        common = tuple(sorted(set(c1) & set(c2)))
        if fan.face_of(c1, common) != common or fan.face_of(c2, common) != common:
            report.add(
                f"cones {format_cone(c1)} and {format_cone(c2)} share rays {format_cone(common)} "
                f"that do not span a common face"
            )
            continue
        ray = _escapes_common_face(fan, c1, c2, common)
        if ray is None:
            ray = _escapes_common_face(fan, c2, c1, common)
        if ray is not None:
            report.add(
                f"cones {format_cone(c1)} and {format_cone(c2)} overlap beyond "
                f"their common face {format_cone(common)}"
            )

    if report.violations:
        logger.debug(f"fan validation found {len(report.violations)} violations")
    return report


@lru_cache(maxsize=1024)
def enumerate_walls(fan: Fan) -> Tuple[Wall, ...]:
    """All facets of maximal cones, sorted by face, with adjacency lists."""
    _require_pure(fan)
    if fan.rank == 0:
        return ()
    adjacency: Dict[Cone, List[Cone]] = {}
    for cone in fan.max_cones:
        for face in combinations(cone, fan.rank - 1):
            adjacency.setdefault(face, []).append(cone)
    walls = []
    for face in sorted(adjacency):
        adjacent = tuple(sorted(adjacency[face]))
        if len(adjacent) > 2:
            raise FanError(f"wall {format_cone(face)} bounds {len(adjacent)} maximal cones")
        walls.append(Wall(face=face, adjacent=adjacent))
    return tuple(walls)


def interior_walls(fan: Fan) -> List[Wall]:
    return [w for w in enumerate_walls(fan) if w.interior]


def find_wall(fan: Fan, face) -> Wall:
    face = tuple(sorted(face))
    for wall in enumerate_walls(fan):
        if wall.face == face:
            return wall
    raise FanError(f"{format_cone(face)} is not a wall of the fan")


@lru_cache(maxsize=1024)
def is_complete(fan: Fan) -> bool:
    """Every wall interior and the maximal cones connected through walls."""
    require_simplicial(fan, "completeness")
    if fan.rank == 0:
        return fan.max_cones == ((),)
    if not fan.max_cones or any(len(c) != fan.rank for c in fan.max_cones):
        return False
    walls = enumerate_walls(fan)
    if any(not w.interior for w in walls):
        return False

    neighbours: Dict[Cone, List[Cone]] = {c: [] for c in fan.max_cones}
    for wall in walls:
        c1, c2 = wall.adjacent
        neighbours[c1].append(c2)
        neighbours[c2].append(c1)
    start = fan.max_cones[0]
    reached = {start}
    stack = [start]
    while stack:
        for other in neighbours[stack.pop()]:
            if other not in reached:
                reached.add(other)
                stack.append(other)
    return len(reached) == len(fan.max_cones)


def is_smooth(fan: Fan) -> bool:
    """Every maximal cone has multiplicity 1; fans with general cones are not smooth."""
    if not fan.simplicial:
        return False
    return all(multiplicity(fan.vectors(c)) == 1 for c in fan.max_cones)


def picard_number(fan: Fan) -> int:
    """|G(Δ)| - n for a complete simplicial fan."""
    if not is_complete(fan):
        raise FanError("picard number requires a complete fan")
    return len(fan.rays) - fan.rank


@lru_cache(maxsize=1024)
def primitive_collections(
    fan: Fan,
    max_rays: int = DEFAULT_MAX_PRIMITIVE_COLLECTION_RAYS,
) -> Tuple[Cone, ...]:
    """Minimal subsets of rays that span no cone, by size then lexicographically."""
    require_simplicial(fan, "primitive collections")
    if len(fan.rays) > max_rays:
        logger.warning(
            f"primitive collection search over {len(fan.rays)} rays exceeds the "
            f"configured limit of {max_rays}; enumeration may be slow"
        )

    faces = set()
    for cone in fan.max_cones:
        for k in range(len(cone) + 1):
            faces.update(combinations(cone, k))

    collections = []
    layer = sorted(f for f in faces if len(f) == 0)
    size = 1
    while layer:
        candidates = set()
        for face in layer:
            start = face[-1] + 1 if face else 0
            for ray in range(start, len(fan.rays)):
                candidates.add(face + (ray,))
        next_layer = []
        for candidate in sorted(candidates):
            if candidate in faces:
                next_layer.append(candidate)
            elif all(sub in faces for sub in combinations(candidate, size - 1)):
                collections.append(candidate)
        layer = next_layer
        size += 1
    return tuple(collections)
