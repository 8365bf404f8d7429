"""
Fan morphisms: compatibility, contracted walls, and properness in the two
decidable special cases.
"""
import logging
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from toric_mori.errors import MathematicalError
from toric_mori.fan.data_models import Cone, Fan, FanMorphism, ValidationReport, Wall, format_cone
from toric_mori.fan.predicates import enumerate_walls, interior_walls, is_complete, require_simplicial
from toric_mori.lattice import (
    IntMatrix, cone_solve, face_generators, in_cone, in_relative_interior, rational_rank,
)

logger = logging.getLogger(__name__)


class MorphismIncompatibleError(MathematicalError):
    """Raised when f_N does not map the source fan into the target fan."""
    pass


def _check_shape(m: FanMorphism):
    if m.matrix.rows != m.target.rank or m.matrix.cols != m.source.rank:
        raise MorphismIncompatibleError(
            f"matrix is {m.matrix.rows}x{m.matrix.cols}, expected "
            f"{m.target.rank}x{m.source.rank}"
        )


def _contains(target: Fan, cone: Cone, vectors: Sequence[Sequence[int]]) -> bool:
    generators = target.vectors(cone)
    if target.is_general(cone):
        return all(in_cone(generators, v) for v in vectors)
    return all(cone_solve(generators, v) is not None for v in vectors)


def target_cone_containing(m: FanMorphism, source_cone: Sequence[int]) -> Optional[Cone]:
    """First target cone containing the image of a source cone."""
    images = [m.image(m.source.rays[i]) for i in source_cone]
    for cone in m.target.all_cones:
        if _contains(m.target, cone, images):
            return cone
    return None


def check_morphism(m: FanMorphism) -> ValidationReport:
    """Every source cone maps into a target cone, and f_N is onto over Q.

    Raises:
        MorphismIncompatibleError: If the matrix shape does not fit the lattices
    """
    _check_shape(m)
    report = ValidationReport()
    for cone in m.source.all_cones:
        if target_cone_containing(m, cone) is None:
            report.add(f"cone {format_cone(cone)} image not contained in any target cone")
    if rational_rank(m.matrix.to_rows()) != m.target.rank:
        report.add("lattice map is not surjective over Q")
    return report


def minimal_target_cone(m: FanMorphism, source_cone: Sequence[int]) -> Cone:
    """Smallest target cone containing the image of a source cone.

    Raises:
        MorphismIncompatibleError: If no target cone contains the image
    """
    container = target_cone_containing(m, source_cone)
    if container is None:
        raise MorphismIncompatibleError(
            f"morphism incompatible: image of {format_cone(tuple(source_cone))} "
            f"lies in no target cone"
        )
    point = m.image(m.source.sum_of_rays(source_cone))
    generators = m.target.vectors(container)
    if m.target.is_general(container):
        local = face_generators(generators, point)
    else:
        coefficients = cone_solve(generators, point)
        local = [j for j, c in enumerate(coefficients) if c > 0]
    return tuple(container[j] for j in local)


@lru_cache(maxsize=1024)
def contracted_walls(m: FanMorphism) -> Tuple[Wall, ...]:
    """Interior walls whose orbit closure is mapped to a point.

    A wall is contracted iff the smallest target cone containing its image
    has dimension equal to the target rank.
    """
    require_simplicial(m.source, "contracted walls")
    _check_shape(m)
    contracted = []
    for wall in interior_walls(m.source):
        image_cone = minimal_target_cone(m, wall.face)
        if m.target.dimension(image_cone) == m.target.rank:
            contracted.append(wall)
    logger.debug(f"{len(contracted)} of {len(enumerate_walls(m.source))} walls contracted")
    return tuple(contracted)


def verify_proper(m: FanMorphism) -> Optional[bool]:
    """Decide properness where support equality is combinatorial.

    Returns:
        True or False for a rank-0 target or an identity lattice map,
        None otherwise
    """
    source, target = m.source, m.target
    if target.rank == 0:
        return is_complete(source)
    if not m.matrix.is_identity():
        return None

    require_simplicial(source, "properness check")
    if any(len(c) != source.rank for c in source.max_cones):
        return None
    walls = enumerate_walls(source)
    for cone in target.all_cones:
        if target.dimension(cone) < target.rank:
            return False
        inside = [c for c in source.max_cones if _contains(target, cone, source.vectors(c))]
        if not inside:
            return False
        for wall in walls:
            sides = [c for c in wall.adjacent if c in inside]
            if len(sides) != 1:
                continue
            # A facet of the covered region must lie on the boundary of the target cone.
            if in_relative_interior(target.vectors(cone), source.sum_of_rays(wall.face)):
                logger.debug(f"wall {format_cone(wall.face)} exposes a gap in target cone {format_cone(cone)}")
                return False
    return True


def identity_morphism(fan: Fan) -> FanMorphism:
    return FanMorphism(IntMatrix.identity(fan.rank), fan, fan)


def point_morphism(fan: Fan) -> FanMorphism:
    """The structure morphism to the rank-0 point fan."""
    return FanMorphism(IntMatrix(0, fan.rank, ()), fan, Fan(0, (), ((),)))
