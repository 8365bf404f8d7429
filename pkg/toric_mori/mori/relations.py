"""
Wall relations, curve classes and intersection numbers.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from toric_mori.errors import MathematicalError
from toric_mori.fan.data_models import Fan, Wall, format_cone
from toric_mori.fan.predicates import require_simplicial
from toric_mori.lattice import IntMatrix, integer_kernel, multiplicity, pairing, smith_invariants
from toric_mori.mori.data_models import CurveClass, ExtremalPrimitiveRelation, Normalization, WallRelation
from toric_mori.positivity.divisors import TorusDivisor, local_cartier_datum, NotQCartierError
from toric_mori.utils import sign

logger = logging.getLogger(__name__)


class MoriError(MathematicalError):
    """Raised for curve-class and extremal-ray failures."""
    pass


@lru_cache(maxsize=4096)
def wall_relation(fan: Fan, wall: Wall) -> WallRelation:
    """Unique primitive relation among the rays of the two cones at ``wall``.

    Raises:
        MoriError: If the wall is a boundary wall
    """
    require_simplicial(fan, "wall relations")
    if not wall.interior:
        raise MoriError(f"no relation at boundary wall {format_cone(wall.face)}")

    rays = tuple(sorted(set(wall.adjacent[0]) | set(wall.adjacent[1])))
    kernel = integer_kernel(IntMatrix.from_columns(fan.vectors(rays), rows=fan.rank))
    if len(kernel) != 1:
        raise MoriError(f"wall {format_cone(wall.face)} has a {len(kernel)}-dimensional relation space")
    relation = kernel[0]
    off_wall = rays.index(wall.off_wall_ray(wall.adjacent[0]))
    if relation[off_wall] < 0:
        relation = tuple(-c for c in relation)

    coefficients = tuple(zip(rays, relation))
    return WallRelation(
        wall=wall,
        coefficients=coefficients,
        negative_part=tuple(v for v, c in coefficients if c < 0),
        zero_part=tuple(v for v, c in coefficients if c == 0),
        positive_part=tuple(v for v, c in coefficients if c > 0),
    )


def curve_class(fan: Fan, wall: Wall) -> CurveClass:
    """Wall relation extended by zeros to every ray.

    Flagged INTERSECTION when both adjacent cones are smooth, in which case the
    entries are the intersection numbers (D_v . V(w)).
    """
    relation = wall_relation(fan, wall)
    coefficients = [Fraction(0)] * len(fan.rays)
    for v, c in relation.coefficients:
        coefficients[v] = Fraction(c)
    smooth = all(multiplicity(fan.vectors(c)) == 1 for c in wall.adjacent)
    normalization = Normalization.INTERSECTION if smooth else Normalization.PRIMITIVE
    return CurveClass(tuple(coefficients), normalization)


def intersection_number(fan: Fan, divisor: TorusDivisor, wall: Wall) -> Fraction:
    """(D . V(w)) for a Q-Cartier divisor and an interior wall.

    <m_1 - m_2, u_2> * mult(w) / mult(sigma_2), where u_2 is the off-wall ray
    of sigma_2. The line on P^2 has degree +1.
    """
    require_simplicial(fan, "intersection numbers")
    if not wall.interior:
        raise MoriError(f"no relation at boundary wall {format_cone(wall.face)}")
    sigma_1, sigma_2 = wall.adjacent
    m_1 = local_cartier_datum(fan, divisor, sigma_1)
    m_2 = local_cartier_datum(fan, divisor, sigma_2)
    if m_1 is None or m_2 is None:
        raise NotQCartierError(f"divisor is not Q-Cartier near wall {format_cone(wall.face)}")
    functional = [x - y for x, y in zip(m_1, m_2)]
    u_2 = fan.rays[wall.off_wall_ray(sigma_2)]
    ratio = Fraction(multiplicity(fan.vectors(wall.face)), multiplicity(fan.vectors(sigma_2)))
    return pairing(functional, u_2) * ratio


def intersection_sign(epr: ExtremalPrimitiveRelation, v: int) -> int:
    """+1 if v is among the x_i, -1 if among the y_j, 0 otherwise."""
    return sign(epr.coefficient(v))


def recognize_wps(fan: Fan) -> Optional[Tuple[int, ...]]:
    """Weights (a_1..a_{n+1}) when the fan is that of a weighted projective space."""
    require_simplicial(fan, "weighted projective space recognition")
    if fan.rank == 0 or len(fan.rays) != fan.rank + 1:
        return None
    invariants = smith_invariants(IntMatrix.from_columns(fan.rays, rows=fan.rank))
    if len(invariants) != fan.rank or any(d != 1 for d in invariants):
        return None
    kernel = integer_kernel(IntMatrix.from_columns(fan.rays, rows=fan.rank))
    if len(kernel) != 1:
        return None
    weights = kernel[0]
    if weights[0] < 0:
        weights = tuple(-w for w in weights)
    if any(w <= 0 for w in weights):
        return None
    return tuple(weights)
