from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Tuple

from toric_mori.fan.data_models import Cone, Wall
from toric_mori.utils import format_rational, format_relation

# ============= Data Structures =============


class Normalization(Enum):
    """How a curve class is scaled."""
    INTERSECTION = "intersection"   # entries are (D_v . V(w))
    PRIMITIVE = "primitive"         # primitive integer wall relation


@dataclass(frozen=True)
class WallRelation:
    """Primitive relation among the n+1 rays of the two cones at an interior wall.

    The off-wall rays carry positive coefficients.
    """
    wall: Wall
    coefficients: Tuple[Tuple[int, int], ...]   # (ray index, coefficient), by ray
    negative_part: Tuple[int, ...]
    zero_part: Tuple[int, ...]
    positive_part: Tuple[int, ...]

    def coefficient(self, v: int) -> int:
        return dict(self.coefficients).get(v, 0)

    def to_dict(self) -> Dict:
        return {
            "wall": list(self.wall.face),
            "coefficients": {str(v): c for v, c in self.coefficients},
            "negative_part": list(self.negative_part),
            "zero_part": list(self.zero_part),
            "positive_part": list(self.positive_part),
        }


@dataclass(frozen=True)
class CurveClass:
    """Numerical class (c_x) of an invariant curve, one entry per ray."""
    coefficients: Tuple[Fraction, ...]
    normalization: Normalization

    def primitive_key(self) -> Tuple[int, ...]:
        """Integer representative with gcd 1, equal for positively proportional classes."""
        denominator = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in self.coefficients), 1)
        ints = [int(c * denominator) for c in self.coefficients]
        g = reduce(gcd, (abs(x) for x in ints), 0) or 1
        return tuple(x // g for x in ints)

    def to_dict(self) -> Dict:
        return {
            "coefficients": [format_rational(c) for c in self.coefficients],
            "normalization": self.normalization.value,
        }


@dataclass(frozen=True)
class ExtremalRay:
    """An extremal ray of the relative Mori cone with every wall realizing it."""
    index: int
    curve_class: CurveClass
    walls: Tuple[Wall, ...]

    @property
    def key(self) -> Tuple[int, ...]:
        return self.curve_class.primitive_key()

    def to_dict(self) -> Dict:
        return {
            "index": self.index,
            "class": list(self.key),
            "walls": [list(w.face) for w in self.walls],
        }


@dataclass(frozen=True)
class RejectedClass:
    """A contracted class that is a nonnegative combination of extremal classes."""
    curve_class: CurveClass
    walls: Tuple[Wall, ...]
    witness: Tuple[Fraction, ...]   # one coefficient per extremal ray

    def to_dict(self) -> Dict:
        return {
            "class": list(self.curve_class.primitive_key()),
            "walls": [list(w.face) for w in self.walls],
            "witness": [format_rational(c) for c in self.witness],
        }


@dataclass(frozen=True)
class MoriConeAnalysis:
    """Contracted wall classes split into extremal and rejected ones."""
    classes: Tuple[Tuple[Wall, CurveClass], ...]
    extremal: Tuple[ExtremalRay, ...]
    rejected: Tuple[RejectedClass, ...]


@dataclass(frozen=True)
class ExtremalPrimitiveRelation:
    """a_1 x_1 + ... + a_l x_l = b_1 y_1 + ... + b_m y_m with its cones.

    xs and ys are sorted by ray index; ``a`` and ``b`` follow that order.
    """
    xs: Tuple[int, ...]
    a: Tuple[int, ...]
    ys: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.xs)

    @property
    def m(self) -> int:
        return len(self.ys)

    @property
    def w_prime(self) -> Cone:
        return self.ys

    @property
    def w_tilde(self) -> Cone:
        return tuple(sorted(self.xs + self.ys))

    @property
    def w_plus(self) -> Cone:
        return self.xs

    @property
    def sigma_i(self) -> Tuple[Cone, ...]:
        return tuple(tuple(x for x in self.xs if x != xi) for xi in self.xs)

    @property
    def degree(self) -> int:
        """sum a_i - sum b_j, the sign of -K on the ray."""
        return sum(self.a) - sum(self.b)

    def coefficient(self, v: int) -> int:
        """a_i on x_i, -b_j on y_j, 0 elsewhere."""
        if v in self.xs:
            return self.a[self.xs.index(v)]
        if v in self.ys:
            return -self.b[self.ys.index(v)]
        return 0

    def reversed(self) -> 'ExtremalPrimitiveRelation':
        return ExtremalPrimitiveRelation(self.ys, self.b, self.xs, self.a)

    @property
    def text(self) -> str:
        return format_relation(self.xs, self.a, self.ys, self.b)

    def to_dict(self) -> Dict:
        return {
            "xs": list(self.xs),
            "a": list(self.a),
            "ys": list(self.ys),
            "b": list(self.b),
            "relation": self.text,
            "degree": self.degree,
        }
