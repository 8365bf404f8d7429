"""
Structural checks on extremal primitive relations.

Both checks return a ValidationReport; a violation means the computed
relation contradicts the known structure of extremal rays.
"""
import logging
from itertools import combinations
from typing import Set

from toric_mori.fan.data_models import Cone, Fan, ValidationReport, format_cone
from toric_mori.fan.predicates import is_complete, primitive_collections
from toric_mori.mori.data_models import ExtremalPrimitiveRelation

logger = logging.getLogger(__name__)


def verify_primitive_closure(fan: Fan, epr: ExtremalPrimitiveRelation) -> ValidationReport:
    """For each primitive collection Q != xs meeting xs, (Q - xs) + ys contains one."""
    report = ValidationReport()
    if not is_complete(fan):
        report.add("primitive closure check requires a complete fan")
        return report

    collections = primitive_collections(fan)
    xs = set(epr.xs)
    for q in collections:
        if q == epr.xs or not (set(q) & xs):
            continue
        candidate = (set(q) - xs) | set(epr.ys)
        if not any(set(p) <= candidate for p in collections):
            report.add(
                f"primitive collection {format_cone(q)}: {format_cone(tuple(sorted(candidate)))} "
                f"contains no primitive collection"
            )
    return report


def _cones_containing(fan: Fan, subset: Cone) -> Set[Cone]:
    faces = set()
    for cone in fan.max_cones:
        if not set(subset) <= set(cone):
            continue
        rest = [v for v in cone if v not in subset]
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                faces.add(tuple(sorted(set(subset) | set(extra))))
    return faces


def verify_extremal_structure(fan: Fan, epr: ExtremalPrimitiveRelation) -> ValidationReport:
    """Every cone sigma = w' + sigma' + tau gives cones w' + sigma_i + tau."""
    report = ValidationReport()
    w_prime = set(epr.w_prime)
    xs = set(epr.xs)
    for sigma in sorted(_cones_containing(fan, epr.w_prime)):
        tau = set(sigma) - w_prime - xs
        if tau & (w_prime | xs):
            report.add(f"internal error: cone {format_cone(sigma)} does not decompose")
            continue
        for sigma_i in epr.sigma_i:
            required = tuple(sorted(w_prime | set(sigma_i) | tau))
            if not fan.is_face(required):
                report.add(
                    f"cone {format_cone(sigma)}: w' + sigma_i + tau = {format_cone(required)} "
                    f"is not a cone"
                )
    if not report.ok:
        logger.warning(f"extremal structure check failed for '{epr.text}'")
    return report
