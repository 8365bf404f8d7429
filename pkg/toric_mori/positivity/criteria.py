"""
Relative positivity of torus-invariant divisors and the twist criteria.

Freeness of an integral Cartier divisor relative to f is decided through
nefness, which is equivalent for toric morphisms.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple, Union

from toric_mori.fan.data_models import FanMorphism, Wall
from toric_mori.fan.morphism import contracted_walls
from toric_mori.fan.predicates import is_smooth, require_simplicial
from toric_mori.mori.data_models import ExtremalRay
from toric_mori.mori.mori_cone import extremal_primitive_relation, extremal_rays
from toric_mori.mori.relations import intersection_number
from toric_mori.positivity.divisors import PositivityError, TorusDivisor, cartier_data
from toric_mori.utils import format_rational

logger = logging.getLogger(__name__)


class NotSmoothError(PositivityError):
    """Raised when a smooth-only computation meets a singular fan."""
    pass


class NormalizationError(PositivityError):
    """Raised when a smooth fan yields an extremal relation with some a_i != 1."""
    pass


class CriterionMismatchError(PositivityError):
    """Raised when a twist criterion disagrees with the direct intersection check."""
    pass


class NotAmpleError(PositivityError):
    """Raised when a twist criterion is applied to a divisor that is not f-ample."""
    pass


class Positivity(Enum):
    AMPLE = "ample"
    NEF_NOT_AMPLE = "nef_not_ample"
    NOT_NEF = "not_nef"


class TwistVerdict(Enum):
    FREE = "free"
    NOT_FREE = "not_free"
    AMPLE = "ample"
    NOT_AMPLE = "not_ample"


@dataclass
class PositivityResult:
    """Intersection numbers on contracted walls and the resulting verdict."""
    verdict: Positivity
    values: List[Tuple[Wall, Fraction]]
    witness: Optional[Wall] = None
    free: Optional[bool] = None

    @property
    def nef(self) -> bool:
        return self.verdict != Positivity.NOT_NEF

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "values": [
                {"wall": list(w.face), "value": format_rational(v)} for w, v in self.values
            ],
            "witness_wall": None if self.witness is None else list(self.witness.face),
            "free": self.free,
        }


def relative_positivity(m: FanMorphism, divisor: TorusDivisor) -> PositivityResult:
    """Ample iff positive on every contracted wall, nef iff nonnegative.

    The witness is the first wall with a negative value (not nef) or a zero
    value (nef, not ample). ``free`` is set only for integral Cartier divisors.
    """
    require_simplicial(m.source, "relative positivity")
    values = [(wall, intersection_number(m.source, divisor, wall)) for wall in contracted_walls(m)]

    negative = next((w for w, v in values if v < 0), None)
    zero = next((w for w, v in values if v == 0), None)
    if negative is not None:
        verdict, witness = Positivity.NOT_NEF, negative
    elif zero is not None:
        verdict, witness = Positivity.NEF_NOT_AMPLE, zero
    else:
        verdict, witness = Positivity.AMPLE, None

    free = None
    if divisor.integral and cartier_data(m.source, divisor).cartier:
        free = verdict != Positivity.NOT_NEF
    return PositivityResult(verdict=verdict, values=values, witness=witness, free=free)


def _require_smooth(m: FanMorphism):
    if not is_smooth(m.source):
        raise NotSmoothError("C_R pairing requires smooth X")


def line_class_pairing(m: FanMorphism, ray: Union[ExtremalRay, int], divisor: TorusDivisor) -> Fraction:
    """(D . C_R) with D_v . C_R = a_i on x_i, -b_j on y_j, 0 elsewhere.

    Raises:
        NotSmoothError: If the source fan is not smooth
        NormalizationError: If some a_i differs from 1
    """
    _require_smooth(m)
    epr = extremal_primitive_relation(m, ray)
    if any(a != 1 for a in epr.a):
        raise NormalizationError(f"Batyrev normalization violated: '{epr.text}' has a_i != 1")
    return sum((divisor.coefficient(v) * epr.coefficient(v) for v in range(len(divisor.coeffs))), Fraction(0))


def _require_integral(divisor: TorusDivisor):
    if not divisor.integral:
        raise PositivityError("twist criteria require an integral divisor")


def _require_ample(m: FanMorphism, divisor: TorusDivisor):
    if relative_positivity(m, divisor).verdict != Positivity.AMPLE:
        raise NotAmpleError("criterion requires f-ample L")


@dataclass
class TwistBoundReport:
    """Outcome of checking (L . C_R) >= t and the resulting twist bound."""
    t: int
    pairings: List[Fraction]
    hypothesis_holds: bool
    violating_ray: Optional[int] = None
    min_twist_value: Optional[Fraction] = None
    certified: bool = False
    free_twists: Optional[List[int]] = None

    def to_dict(self) -> Dict:
        return {
            "t": self.t,
            "pairings": [format_rational(p) for p in self.pairings],
            "hypothesis_holds": self.hypothesis_holds,
            "violating_ray": self.violating_ray,
            "min_twist_value": None if self.min_twist_value is None else format_rational(self.min_twist_value),
            "certified": self.certified,
            "free_twists": self.free_twists,
        }


def twist_free_bound(m: FanMorphism, divisor: TorusDivisor, t: int) -> TwistBoundReport:
    """If (L . C_R) >= t on every extremal ray, then (L(-D) . C_R) >= t - 1.

    The conclusion is measured over every prime divisor and extremal ray. For
    t = 1 and f-ample L the twists L(-D_v) found f-free are listed.
    """
    if t < 1:
        raise ValueError(f"twist bound must be a positive integer (got: {t})")
    _require_smooth(m)
    _require_integral(divisor)
    rays = extremal_rays(m)
    pairings = [line_class_pairing(m, ray, divisor) for ray in rays]

    violating = next((i for i, p in enumerate(pairings) if p < t), None)
    if violating is not None:
        return TwistBoundReport(t=t, pairings=pairings, hypothesis_holds=False, violating_ray=violating)

    num_rays = len(m.source.rays)
    minimum = None
    for v in range(num_rays):
        twisted = divisor - TorusDivisor.prime(num_rays, v)
        for ray in rays:
            value = line_class_pairing(m, ray, twisted)
            if minimum is None or value < minimum:
                minimum = value
    certified = minimum is None or minimum >= t - 1
    if not certified:
        logger.warning(f"twist bound failed: minimum {minimum} < {t - 1}")

    free_twists = None
    if t == 1 and relative_positivity(m, divisor).verdict == Positivity.AMPLE:
        free_twists = [
            v for v in range(num_rays)
            if relative_positivity(m, divisor - TorusDivisor.prime(num_rays, v)).free
        ]
    return TwistBoundReport(
        t=t, pairings=pairings, hypothesis_holds=True, min_twist_value=minimum,
        certified=certified, free_twists=free_twists,
    )


@dataclass
class TwistCriterionResult:
    """Criterion verdict over extremal rays, with the direct check it was compared to."""
    verdict: TwistVerdict
    witness_ray: Optional[int]
    direct: PositivityResult

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "witness_ray": self.witness_ray,
            "direct": self.direct.to_dict(),
            "agrees": True,
        }


def _criterion_witness(m: FanMorphism, divisor: TorusDivisor, required) -> Optional[int]:
    for ray in extremal_rays(m):
        epr = extremal_primitive_relation(m, ray)
        if set(required) <= set(epr.xs) and line_class_pairing(m, ray, divisor) == 1:
            return ray.index
    return None


def mustata_two_divisor(m: FanMorphism, divisor: TorusDivisor, v1: int, v2: int) -> TwistCriterionResult:
    """L(-D_1-D_2) is not f-free iff some extremal ray has {v1, v2} in xs and L . C_R = 1.

    Raises:
        NotAmpleError: If L is not f-ample
        CriterionMismatchError: If the criterion and the direct check disagree
    """
    if v1 == v2:
        raise PositivityError(f"twist needs two distinct rays (got r{v1} twice)")
    _require_smooth(m)
    _require_integral(divisor)
    _require_ample(m, divisor)

    witness = _criterion_witness(m, divisor, (v1, v2))
    verdict = TwistVerdict.NOT_FREE if witness is not None else TwistVerdict.FREE

    num_rays = len(m.source.rays)
    twisted = divisor - TorusDivisor.prime(num_rays, v1) - TorusDivisor.prime(num_rays, v2)
    direct = relative_positivity(m, twisted)
    direct_verdict = TwistVerdict.FREE if direct.nef else TwistVerdict.NOT_FREE
    if direct_verdict != verdict:
        raise CriterionMismatchError(
            f"criterion says {verdict.value} but direct check says {direct_verdict.value} "
            f"for twist by r{v1}, r{v2}"
        )
    return TwistCriterionResult(verdict=verdict, witness_ray=witness, direct=direct)


def mustata_one_divisor(m: FanMorphism, divisor: TorusDivisor, v: int) -> TwistCriterionResult:
    """L(-D) is not f-ample iff some extremal ray has v in xs and L . C_R = 1."""
    _require_smooth(m)
    _require_integral(divisor)
    _require_ample(m, divisor)

    witness = _criterion_witness(m, divisor, (v,))
    verdict = TwistVerdict.NOT_AMPLE if witness is not None else TwistVerdict.AMPLE

    twisted = divisor - TorusDivisor.prime(len(m.source.rays), v)
    direct = relative_positivity(m, twisted)
    direct_verdict = TwistVerdict.AMPLE if direct.verdict == Positivity.AMPLE else TwistVerdict.NOT_AMPLE
    if direct_verdict != verdict:
        raise CriterionMismatchError(
            f"criterion says {verdict.value} but direct check says {direct_verdict.value} "
            f"for twist by r{v}"
        )
    return TwistCriterionResult(verdict=verdict, witness_ray=witness, direct=direct)


def find_relatively_ample_divisor(m: FanMorphism, bound: int, max_rays: int) -> Optional[TorusDivisor]:
    """-K first, then integral divisors with coefficients in [-bound, bound].

    The grid is searched only when the source has at most ``max_rays`` rays.
    """
    num_rays = len(m.source.rays)
    anticanonical = TorusDivisor.anticanonical(num_rays)
    if relative_positivity(m, anticanonical).verdict == Positivity.AMPLE:
        return anticanonical
    if num_rays > max_rays:
        logger.warning(f"ample divisor search skipped: {num_rays} rays exceed limit {max_rays}")
        return None
    for coeffs in product(range(-bound, bound + 1), repeat=num_rays):
        candidate = TorusDivisor(tuple(Fraction(c) for c in coeffs))
        if relative_positivity(m, candidate).verdict == Positivity.AMPLE:
            logger.debug(f"relatively ample divisor found: {candidate.to_dict()}")
            return candidate
    return None
