"""
The relative Mori cone NE(X/Y): contracted classes, extremal rays and
extremal primitive relations.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from toric_mori.fan.data_models import FanMorphism, Wall, format_cone
from toric_mori.fan.morphism import contracted_walls
from toric_mori.fan.predicates import is_complete, primitive_collections
from toric_mori.lattice import find_nonnegative_solution, in_cone, rational_rank
from toric_mori.mori.data_models import (
    CurveClass, ExtremalPrimitiveRelation, ExtremalRay, MoriConeAnalysis, RejectedClass,
    WallRelation,
)
from toric_mori.mori.relations import MoriError, curve_class, wall_relation

logger = logging.getLogger(__name__)


class NonCanonicalRelationError(MoriError):
    """Raised when the walls of one extremal ray give different relations."""
    pass


class ExtremalStructureError(MoriError):
    """Raised when w' + sigma_i is not a cone of the fan."""
    pass


def relative_mori_cone(m: FanMorphism) -> List[Tuple[Wall, CurveClass]]:
    """Classes of all contracted walls; their nonnegative span is NE(X/Y)."""
    return [(wall, curve_class(m.source, wall)) for wall in contracted_walls(m)]


@lru_cache(maxsize=1024)
def mori_cone_analysis(m: FanMorphism) -> MoriConeAnalysis:
    """Split contracted classes into extremal rays and rejected combinations.

    A class is extremal iff it is not a nonnegative combination of the other
    distinct classes. Every rejected class gets a witness combination of the
    extremal ones.
    """
    classes = relative_mori_cone(m)
    grouped: Dict[Tuple[int, ...], List[Tuple[Wall, CurveClass]]] = {}
    for wall, cls in classes:
        grouped.setdefault(cls.primitive_key(), []).append((wall, cls))
    keys = list(grouped)

    extremal_keys = []
    for key in keys:
        others = [k for k in keys if k != key]
        if not in_cone(others, key):
            extremal_keys.append(key)

    extremal = tuple(
        ExtremalRay(
            index=i,
            curve_class=grouped[key][0][1],
            walls=tuple(wall for wall, _ in grouped[key]),
        )
        for i, key in enumerate(extremal_keys)
    )

    rejected = []
    for key in keys:
        if key in extremal_keys:
            continue
        witness = find_nonnegative_solution(extremal_keys, key)
        if witness is None:
            raise MoriError(
                f"contracted class {list(key)} is not generated by the extremal classes; "
                f"the relative Mori cone is not strongly convex"
            )
        rejected.append(RejectedClass(
            curve_class=grouped[key][0][1],
            walls=tuple(wall for wall, _ in grouped[key]),
            witness=tuple(witness),
        ))

    logger.info(f"{len(classes)} contracted walls, {len(keys)} classes, {len(extremal)} extremal rays")
    return MoriConeAnalysis(tuple(classes), extremal, tuple(rejected))


def extremal_rays(m: FanMorphism) -> Tuple[ExtremalRay, ...]:
    """Extremal rays ordered by their first supporting wall."""
    return mori_cone_analysis(m).extremal


def get_extremal_ray(m: FanMorphism, index: int) -> ExtremalRay:
    rays = extremal_rays(m)
    if not 0 <= index < len(rays):
        raise IndexError(f"ray index {index} out of range (have {len(rays)} extremal rays)")
    return rays[index]


def relative_picard_number(m: FanMorphism) -> int:
    """Dimension of the span of the contracted classes."""
    return rational_rank([cls.primitive_key() for _, cls in relative_mori_cone(m)])


def relation_from_wall(m: FanMorphism, wall: Wall) -> ExtremalPrimitiveRelation:
    return epr_from_relation(wall_relation(m.source, wall))


def epr_from_relation(relation: WallRelation) -> ExtremalPrimitiveRelation:
    """Positive part as the x side, negative part as the y side."""
    positive = [(v, c) for v, c in relation.coefficients if c > 0]
    negative = [(v, -c) for v, c in relation.coefficients if c < 0]
    return ExtremalPrimitiveRelation(
        xs=tuple(v for v, _ in positive),
        a=tuple(c for _, c in positive),
        ys=tuple(v for v, _ in negative),
        b=tuple(c for _, c in negative),
    )


def extremal_primitive_relation(
    m: FanMorphism,
    ray: Union[ExtremalRay, int],
) -> ExtremalPrimitiveRelation:
    """The relation a.x = b.y attached to an extremal ray.

    Raises:
        NonCanonicalRelationError: If supporting walls disagree
        ExtremalStructureError: If some w' + sigma_i is not a cone, or xs is
            not a primitive collection of a complete fan
    """
    if isinstance(ray, int):
        ray = get_extremal_ray(m, ray)
    relations = [relation_from_wall(m, wall) for wall in ray.walls]
    epr = relations[0]
    for wall, other in zip(ray.walls[1:], relations[1:]):
        if other != epr:
            raise NonCanonicalRelationError(
                f"non-canonical extremal relation: wall {format_cone(ray.walls[0].face)} gives "
                f"'{epr.text}', wall {format_cone(wall.face)} gives '{other.text}'"
            )

    fan = m.source
    for sigma in epr.sigma_i:
        cone = tuple(sorted(set(epr.w_prime) | set(sigma)))
        if not fan.is_face(cone):
            raise ExtremalStructureError(
                f"extremal structure violated: w' + sigma_i = {format_cone(cone)} is not a cone"
            )
    if is_complete(fan) and epr.xs not in primitive_collections(fan):
        raise ExtremalStructureError(
            f"extremal structure violated: {format_cone(epr.xs)} is not a primitive collection"
        )
    logger.debug(f"extremal ray {ray.index}: {epr.text}")
    return epr


def witness_total(m: FanMorphism, rejected: RejectedClass) -> Tuple[Fraction, ...]:
    """Recombine a rejected class from its witness coefficients."""
    rays = extremal_rays(m)
    size = len(m.source.rays)
    total = [Fraction(0)] * size
    for coefficient, ray in zip(rejected.witness, rays):
        for i, c in enumerate(ray.key):
            total[i] += coefficient * c
    return tuple(total)
