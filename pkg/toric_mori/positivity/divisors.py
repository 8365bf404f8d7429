"""
Torus-invariant divisors and their Cartier data.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from toric_mori.errors import MathematicalError
from toric_mori.fan.data_models import Cone, Fan, FanMorphism, format_cone
from toric_mori.fan.morphism import minimal_target_cone
from toric_mori.lattice import pairing, solve_rational
from toric_mori.utils import format_rational

logger = logging.getLogger(__name__)


class PositivityError(MathematicalError):
    """Base class for divisor positivity failures."""
    pass


class NotQCartierError(PositivityError):
    """Raised when no rational Cartier data exists on some maximal cone."""
    pass


@dataclass(frozen=True)
class TorusDivisor:
    """D = sum d_v D_v with one rational coefficient per ray."""
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_mapping(cls, num_rays: int, mapping: Mapping[int, Fraction]) -> 'TorusDivisor':
        coeffs = [Fraction(0)] * num_rays
        for index, value in mapping.items():
            if not 0 <= index < num_rays:
                raise ValueError(f"divisor coefficient for missing ray r{index}")
            coeffs[index] = Fraction(value)
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, num_rays: int) -> 'TorusDivisor':
        return cls(tuple(Fraction(0) for _ in range(num_rays)))

    @classmethod
    def prime(cls, num_rays: int, v: int) -> 'TorusDivisor':
        return cls.from_mapping(num_rays, {v: 1})

    @classmethod
    def anticanonical(cls, num_rays: int) -> 'TorusDivisor':
        return cls(tuple(Fraction(1) for _ in range(num_rays)))

    @property
    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, v: int) -> Fraction:
        return self.coeffs[v]

    def __add__(self, other: 'TorusDivisor') -> 'TorusDivisor':
        return TorusDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'TorusDivisor') -> 'TorusDivisor':
        return TorusDivisor(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'TorusDivisor':
        return TorusDivisor(tuple(-a for a in self.coeffs))

    def scaled(self, factor) -> 'TorusDivisor':
        return TorusDivisor(tuple(a * Fraction(factor) for a in self.coeffs))

    def to_dict(self) -> Dict:
        return {"coeffs": {str(i): format_rational(c) for i, c in enumerate(self.coeffs) if c != 0}}


@dataclass(frozen=True)
class CartierData:
    """Per maximal cone, m_sigma in M (x) Q with <m_sigma, v> = -d_v on the cone's rays."""
    local: Tuple[Tuple[Cone, Tuple[Fraction, ...]], ...]

    def on(self, cone: Cone) -> Tuple[Fraction, ...]:
        for c, m in self.local:
            if c == cone:
                return m
        raise KeyError(f"no Cartier data on cone {format_cone(cone)}")

    @property
    def cartier(self) -> bool:
        """D is Cartier iff every m_sigma is integral."""
        return all(x.denominator == 1 for _, m in self.local for x in m)


def local_cartier_datum(fan: Fan, divisor: TorusDivisor, cone: Cone) -> Optional[Tuple[Fraction, ...]]:
    rows = fan.vectors(cone)
    rhs = [-divisor.coefficient(v) for v in cone]
    solution = solve_rational(rows, rhs, fan.rank)
    return None if solution is None else tuple(solution)


def cartier_data(fan: Fan, divisor: TorusDivisor) -> CartierData:
    """Solve <m_sigma, v> = -d_v on every maximal cone.

    Raises:
        NotQCartierError: If a general cone admits no solution
    """
    if len(divisor.coeffs) != len(fan.rays):
        raise ValueError(f"divisor has {len(divisor.coeffs)} coefficients for {len(fan.rays)} rays")
    local = []
    for cone in fan.all_cones:
        m = local_cartier_datum(fan, divisor, cone)
        if m is None:
            raise NotQCartierError(f"divisor is not Q-Cartier on cone {format_cone(cone)}")
        local.append((cone, m))
    return CartierData(tuple(local))


def principal_divisor(fan: Fan, u: Sequence[int]) -> TorusDivisor:
    """div(chi^u) = sum <u, v> D_v."""
    return TorusDivisor(tuple(pairing(u, v) for v in fan.rays))


def pullback_divisor(m: FanMorphism, divisor: TorusDivisor) -> TorusDivisor:
    """f^*D for a Q-Cartier divisor D on the target.

    The coefficient on a source ray v is -<m_tau, f_N(v)> with tau the
    smallest target cone containing f_N(v).
    """
    data = cartier_data(m.target, divisor)
    coeffs = []
    for v, ray in enumerate(m.source.rays):
        tau = minimal_target_cone(m, (v,))
        container = next(c for c in m.target.all_cones if set(tau) <= set(c))
        coeffs.append(-pairing(data.on(container), m.image(ray)))
    return TorusDivisor(tuple(coeffs))
