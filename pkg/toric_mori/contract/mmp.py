"""
Minimal model program driver.

mmp_step contracts one chosen extremal ray; MMPRunner plays a list of ray
choices and records every step.
"""
import logging
from pathlib import Path
from typing import List, Optional, Sequence

from toric_mori.config.loader import EngineConfig
from toric_mori.contract.contractions import (
    birational_contraction, classify, fano_contraction,
)
from toric_mori.contract.data_models import ContractionKind, MMPStep, StepOutcome
from toric_mori.contract.flips import flip, trichotomy
from toric_mori.fan.data_models import FanMorphism
from toric_mori.io.writer import write_fan
from toric_mori.mori.mori_cone import extremal_primitive_relation, extremal_rays, get_extremal_ray

logger = logging.getLogger(__name__)


def mmp_step(m: FanMorphism, ray: int, step: int = 1) -> MMPStep:
    """Contract extremal ray ``ray`` of m."""
    epr = extremal_primitive_relation(m, get_extremal_ray(m, ray))
    kind = classify(epr)

    if kind == ContractionKind.FANO:
        result = fano_contraction(m, epr)
        return MMPStep(
            step=step, ray=ray, outcome=StepOutcome.MORI_FIBER_SPACE, result=result, morphism=None,
            reason=(
                "Mori fiber space over point" if result.quotient_rank == 0
                else f"Mori fiber space over rank-{result.quotient_rank} base"
            ),
        )

    if kind == ContractionKind.DIVISORIAL:
        result = birational_contraction(m, epr)
        return MMPStep(
            step=step, ray=ray, outcome=StepOutcome.CONTINUE, result=result,
            morphism=FanMorphism(m.matrix, result.target_fan, m.target),
            reason="divisorial contraction",
        )

    kind_of_flip = trichotomy(epr)
    if epr.degree > 0:
        result = flip(m, epr)
        return MMPStep(
            step=step, ray=ray, outcome=StepOutcome.CONTINUE, result=result,
            morphism=FanMorphism(m.matrix, result.flip_fan, m.target),
            reason="flip",
        )
    return MMPStep(
        step=step, ray=ray, outcome=StepOutcome.HALT, result=None, morphism=None,
        reason=f"non-flip small ray ({kind_of_flip.value})",
    )


class MMPRunner:
    """Runs the MMP along caller-supplied ray choices."""

    def __init__(self, config: EngineConfig):
        self.config = config
        self.steps: List[MMPStep] = []

    def run(self, m: FanMorphism, choices: Sequence[int], out_dir: Optional[Path] = None) -> List[MMPStep]:
        """Play the choices until a Mori fiber space, a halt, or no choices remain.

        Raises:
            IndexError: If a choice does not index an extremal ray
        """
        self.steps = []
        current = m
        for step, ray in enumerate(choices, start=1):
            available = len(extremal_rays(current))
            if not 0 <= ray < available:
                raise IndexError(f"step {step}: ray {ray} out of range (have {available} extremal rays)")
            outcome = mmp_step(current, ray, step)
            self.steps.append(outcome)
            logger.info(f"step {step}: ray {ray} -> {outcome.outcome.value} ({outcome.reason})")

            if out_dir is not None and self.config.output.write_intermediate_fans and outcome.result is not None:
                fan = outcome.morphism.source if outcome.morphism is not None else outcome.result.target_fan
                write_fan(fan, Path(out_dir) / f"step-{step}.json", indent=self.config.output.json_indent)

            if outcome.outcome != StepOutcome.CONTINUE:
                break
            current = outcome.morphism
        return self.steps
