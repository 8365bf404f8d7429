from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from toric_mori.fan.data_models import Cone, Fan, FanMorphism
from toric_mori.lattice import IntMatrix
from toric_mori.mori.data_models import ExtremalPrimitiveRelation

# ============= Data Structures =============


class ContractionKind(Enum):
    """Type of the contraction of an extremal ray, by the size m of the y side."""
    FANO = "Fano"                 # m = 0
    DIVISORIAL = "Divisorial"     # m = 1
    SMALL = "Small"               # m >= 2


class Trichotomy(Enum):
    """Sign of sum a_i - sum b_j for a small ray."""
    FLIP = "flip"
    FLOP = "flop"
    ANTI_FLIP = "anti-flip"


class StepOutcome(Enum):
    MORI_FIBER_SPACE = "mori_fiber_space"
    CONTINUE = "continue"
    HALT = "halt"


@dataclass(frozen=True)
class GeneralFiber:
    """Lattice data of the general fiber of a Fano contraction."""
    weights: Tuple[int, ...]
    fiber_rank: int
    coordinates: Tuple[Tuple[int, ...], ...]   # images of the x_i in a basis of the fiber lattice
    wps_weights: Optional[Tuple[int, ...]]

    def describe(self) -> str:
        if self.wps_weights is not None:
            return f"fiber P({','.join(str(a) for a in self.wps_weights)})"
        return f"fiber of rank {self.fiber_rank} with weights ({','.join(str(a) for a in self.weights)})"

    def to_dict(self) -> Dict:
        return {
            "weights": list(self.weights),
            "fiber_rank": self.fiber_rank,
            "coordinates": [list(c) for c in self.coordinates],
            "wps_weights": None if self.wps_weights is None else list(self.wps_weights),
        }


@dataclass(frozen=True)
class ExceptionalData:
    """A = V(w') and B = V(w~) for a birational contraction."""
    a_cone: Cone
    b_cone: Cone
    codim_a: int
    dim_b: int

    def describe(self) -> str:
        return f"codim A={self.codim_a}, dim B={self.dim_b}"

    def to_dict(self) -> Dict:
        return {
            "A": list(self.a_cone),
            "B": list(self.b_cone),
            "codim_A": self.codim_a,
            "dim_B": self.dim_b,
        }


@dataclass
class ContractionResult:
    """Outcome of contracting one extremal ray."""
    kind: ContractionKind
    epr: ExtremalPrimitiveRelation
    target_fan: Fan
    quotient: Optional[IntMatrix] = None
    quotient_rank: Optional[int] = None
    exceptional: Optional[ExceptionalData] = None
    fiber: Optional[GeneralFiber] = None
    flip_fan: Optional[Fan] = None
    trichotomy: Optional[Trichotomy] = None
    reversed_epr: Optional[ExtremalPrimitiveRelation] = None

    def describe(self) -> List[str]:
        lines = [f"kind: {self.kind.value}", f"relation: {self.epr.text}"]
        if self.kind == ContractionKind.FANO:
            lines.append("A = X, B = W")
        if self.exceptional is not None:
            lines.append(self.exceptional.describe())
        if self.fiber is not None:
            lines.append(self.fiber.describe())
        if self.trichotomy is not None:
            lines.append(f"trichotomy: {self.trichotomy.value}")
        if self.reversed_epr is not None:
            lines.append(f"reversed relation: {self.reversed_epr.text}")
        return lines

    def to_dict(self) -> Dict:
        data = {
            "kind": self.kind.value,
            "relation": self.epr.to_dict(),
            "target_fan": self.target_fan.to_dict(),
        }
        if self.quotient is not None:
            data["quotient_matrix"] = [list(r) for r in self.quotient.to_rows()]
            data["quotient_rank"] = self.quotient_rank
        if self.exceptional is not None:
            data["exceptional"] = self.exceptional.to_dict()
        if self.fiber is not None:
            data["fiber"] = self.fiber.to_dict()
        if self.flip_fan is not None:
            data["flip_fan"] = self.flip_fan.to_dict()
        if self.trichotomy is not None:
            data["trichotomy"] = self.trichotomy.value
        if self.reversed_epr is not None:
            data["reversed_relation"] = self.reversed_epr.to_dict()
        return data


@dataclass
class MMPStep:
    """One step of a run of the minimal model program."""
    step: int
    ray: int
    outcome: StepOutcome
    result: Optional[ContractionResult]
    morphism: Optional[FanMorphism]
    reason: str = ""

    def to_dict(self) -> Dict:
        data = {
            "step": self.step,
            "ray": self.ray,
            "outcome": self.outcome.value,
            "reason": self.reason,
        }
        if self.result is not None:
            data["kind"] = self.result.kind.value
            data["relation"] = self.result.epr.text
        if self.morphism is not None:
            data["source_fan"] = self.morphism.source.to_dict()
        return data
