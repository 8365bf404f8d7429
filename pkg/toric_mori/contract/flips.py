"""
Flips of small extremal contractions.

Each cone w' + sigma' + tau of the source is replaced by the cones
w+ + cone(ys - y_j) + tau, which star-subdivides w~ + tau along w+.
"""
import logging

from toric_mori.contract.contractions import (
    ContractionError, birational_contraction, classify,
)
from toric_mori.contract.data_models import ContractionKind, ContractionResult, Trichotomy
from toric_mori.fan.data_models import Fan, FanMorphism, format_cone
from toric_mori.fan.predicates import enumerate_walls, validate_fan
from toric_mori.lattice import is_independent
from toric_mori.mori.data_models import ExtremalPrimitiveRelation
from toric_mori.mori.mori_cone import epr_from_relation
from toric_mori.mori.relations import wall_relation

logger = logging.getLogger(__name__)


class FlipError(ContractionError):
    """Raised when the flipped fan is not simplicial or its relation does not match."""
    pass


def trichotomy(epr: ExtremalPrimitiveRelation) -> Trichotomy:
    if epr.degree > 0:
        return Trichotomy.FLIP
    if epr.degree == 0:
        return Trichotomy.FLOP
    return Trichotomy.ANTI_FLIP


def flipped_fan(fan: Fan, epr: ExtremalPrimitiveRelation) -> Fan:
    """The fan of X+ over the same lattice and ray list."""
    w_prime = set(epr.w_prime)
    cones = set()
    for cone in fan.max_cones:
        if not w_prime <= set(cone):
            cones.add(cone)
            continue
        tau = set(cone) - w_prime - set(epr.xs)
        for y in epr.ys:
            new_cone = tuple(sorted(set(epr.xs) | (w_prime - {y}) | tau))
            if not is_independent(fan.vectors(new_cone)):
                raise FlipError(f"flipped cone {format_cone(new_cone)} is not simplicial")
            cones.add(new_cone)
    return Fan.build(fan.rank, fan.rays, cones)


def reversed_relation(flipped: Fan, epr: ExtremalPrimitiveRelation) -> ExtremalPrimitiveRelation:
    """Recompute the relation at a wall of the flipped fan containing w+."""
    xs, ys = set(epr.xs), set(epr.ys)
    for wall in enumerate_walls(flipped):
        if not wall.interior or not xs <= set(wall.face):
            continue
        off_wall = {wall.off_wall_ray(c) for c in wall.adjacent}
        if off_wall <= ys:
            return epr_from_relation(wall_relation(flipped, wall))
    raise FlipError(f"flipped fan has no wall through {format_cone(epr.w_plus)} between y rays")


def flip(m: FanMorphism, epr: ExtremalPrimitiveRelation) -> ContractionResult:
    """Flip, flop or anti-flip along a small extremal ray.

    Raises:
        ContractionError: If the ray is not small
        FlipError: If the flipped fan is invalid or its relation is not the
            reversed one
    """
    if classify(epr) != ContractionKind.SMALL:
        raise ContractionError(f"not a small contraction: '{epr.text}' has m={epr.m}")

    result = birational_contraction(m, epr)
    flipped = flipped_fan(m.source, epr)
    report = validate_fan(flipped)
    if not report.ok:
        raise FlipError("flipped fan is invalid: " + "; ".join(report.violations))

    recomputed = reversed_relation(flipped, epr)
    if recomputed != epr.reversed():
        raise FlipError(
            f"relation of the flipped fan is '{recomputed.text}', expected '{epr.reversed().text}'"
        )

    result.flip_fan = flipped
    result.trichotomy = trichotomy(epr)
    result.reversed_epr = recomputed
    logger.info(f"{result.trichotomy.value} along '{epr.text}' produced {len(flipped.max_cones)} cones")
    return result
