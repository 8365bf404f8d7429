"""
Fano and birational contractions of an extremal ray as fan surgeries.
"""
import logging
from typing import Dict, List, Tuple

from toric_mori.errors import MathematicalError
from toric_mori.fan.data_models import Cone, Fan, FanMorphism, format_cone
from toric_mori.fan.predicates import validate_fan
from toric_mori.lattice import (
    IntMatrix, LatticeVector, drop_redundant, in_cone, integer_kernel, primitive_part,
    quotient_map, rational_rank, smith_invariants, solve_rational,
)
from toric_mori.contract.data_models import (
    ContractionKind, ContractionResult, ExceptionalData, GeneralFiber,
)
from toric_mori.mori.data_models import ExtremalPrimitiveRelation

logger = logging.getLogger(__name__)


class ContractionError(MathematicalError):
    """Raised when a contraction is requested for the wrong kind of ray or fails."""
    pass


class QuotientNotFanError(ContractionError):
    """Raised when the images of the cones under N -> N' do not form a fan."""
    pass


def classify(epr: ExtremalPrimitiveRelation) -> ContractionKind:
    if epr.m == 0:
        return ContractionKind.FANO
    if epr.m == 1:
        return ContractionKind.DIVISORIAL
    return ContractionKind.SMALL


def general_fiber(fan: Fan, epr: ExtremalPrimitiveRelation) -> GeneralFiber:
    """Coordinates of the x_i in the fiber lattice span(xs) cap N.

    The fiber is a weighted projective space P(a_1..a_l) when the x_i
    generate the fiber lattice.
    """
    xs = fan.vectors(epr.xs)
    q, _ = quotient_map(xs, fan.rank)
    basis = integer_kernel(q)
    rows = [[b[i] for b in basis] for i in range(fan.rank)]
    coordinates = []
    for x in xs:
        solution = solve_rational(rows, x, len(basis))
        if solution is None or any(c.denominator != 1 for c in solution):
            raise ContractionError(f"ray {list(x)} has no integral coordinates in the fiber lattice")
        coordinates.append(tuple(int(c) for c in solution))

    for k in range(len(basis)):
        if sum(a * c[k] for a, c in zip(epr.a, coordinates)) != 0:
            raise ContractionError(f"fiber weights {epr.a} do not annihilate the fiber rays")

    wps = None
    if basis:
        invariants = smith_invariants(IntMatrix.from_rows(coordinates, cols=len(basis)))
        if len(invariants) == len(basis) and all(d == 1 for d in invariants):
            wps = tuple(epr.a)
    return GeneralFiber(
        weights=tuple(epr.a),
        fiber_rank=len(basis),
        coordinates=tuple(coordinates),
        wps_weights=wps,
    )


def fano_contraction(m: FanMorphism, epr: ExtremalPrimitiveRelation) -> ContractionResult:
    """Send every cone of the source through N -> N/(span of xs, saturated).

    Raises:
        ContractionError: If the ray is not of Fano type
        QuotientNotFanError: If the images do not form a valid fan
    """
    if classify(epr) != ContractionKind.FANO:
        raise ContractionError(f"not a Fano contraction: '{epr.text}' has m={epr.m}")
    fan = m.source
    q, new_rank = quotient_map(fan.vectors(epr.xs), fan.rank)

    rays: List[LatticeVector] = []
    ray_of: Dict[int, int] = {}
    for v, ray in enumerate(fan.rays):
        image = q.apply(ray)
        if not any(image):
            continue
        image = primitive_part(image)
        if image not in rays:
            rays.append(image)
        ray_of[v] = rays.index(image)

    images = set()
    for cone in fan.all_cones:
        indices = sorted(set(ray_of[v] for v in cone if v in ray_of))
        kept = drop_redundant([rays[i] for i in indices])
        images.add(tuple(indices[k] for k in kept))
    maximal = [c for c in images if not any(set(c) < set(other) for other in images)]
    target = Fan.build(new_rank, rays, maximal)

    report = validate_fan(target)
    if not report.ok:
        raise QuotientNotFanError("quotient is not a fan: " + "; ".join(report.violations))

    fiber = general_fiber(fan, epr)
    logger.info(f"Fano contraction onto rank {new_rank} with {len(target.all_cones)} maximal cones")
    return ContractionResult(
        kind=ContractionKind.FANO,
        epr=epr,
        target_fan=target,
        quotient=q,
        quotient_rank=new_rank,
        fiber=fiber,
    )


def _surgery_decomposition(fan: Fan, epr: ExtremalPrimitiveRelation, cone: Cone) -> Tuple[int, ...]:
    """tau: the rays of a cone containing w' outside w' and xs."""
    return tuple(v for v in cone if v not in epr.ys and v not in epr.xs)


def birational_contraction(m: FanMorphism, epr: ExtremalPrimitiveRelation) -> ContractionResult:
    """Replace every maximal cone containing w' by w~ + tau.

    For m = 1 the ray y_1 lies in cone(xs) and disappears; the remaining rays
    keep their order.

    Raises:
        ContractionError: For Fano rays or when the result is not a fan
    """
    kind = classify(epr)
    if kind == ContractionKind.FANO:
        raise ContractionError(f"not a birational contraction: '{epr.text}' has m=0")
    fan = m.source
    n = fan.rank
    w_prime = set(epr.w_prime)

    if kind == ContractionKind.DIVISORIAL and not in_cone(fan.vectors(epr.xs), fan.rays[epr.ys[0]]):
        raise ContractionError(f"ray r{epr.ys[0]} is not in the cone spanned by {format_cone(epr.xs)}")

    cones = set()
    for cone in fan.max_cones:
        if not w_prime <= set(cone):
            cones.add(cone)
            continue
        tau = _surgery_decomposition(fan, epr, cone)
        generators = tuple(sorted(set(epr.w_tilde) | set(tau)))
        kept = drop_redundant(fan.vectors(generators))
        cones.add(tuple(generators[k] for k in kept))

    used = sorted(set(v for cone in cones for v in cone))
    if kind == ContractionKind.SMALL and len(used) != len(fan.rays):
        raise ContractionError("small contraction lost a ray")
    reindex = {v: i for i, v in enumerate(used)}
    target = Fan.build(n, [fan.rays[v] for v in used], [[reindex[v] for v in c] for c in cones])

    report = validate_fan(target)
    if not report.ok:
        raise ContractionError("contracted fan is invalid: " + "; ".join(report.violations))

    codim_a = rational_rank(fan.vectors(epr.w_prime))
    dim_b = n - rational_rank(fan.vectors(epr.w_tilde))
    if codim_a != epr.m or dim_b != n - epr.l - epr.m + 1:
        raise ContractionError(
            f"exceptional dimensions codim A={codim_a}, dim B={dim_b} contradict "
            f"m={epr.m}, l={epr.l}"
        )
    logger.info(f"{kind.value} contraction: {len(fan.max_cones)} -> {len(target.all_cones)} maximal cones")
    return ContractionResult(
        kind=kind,
        epr=epr,
        target_fan=target,
        exceptional=ExceptionalData(
            a_cone=epr.w_prime,
            b_cone=epr.w_tilde,
            codim_a=codim_a,
            dim_b=dim_b,
        ),
    )
