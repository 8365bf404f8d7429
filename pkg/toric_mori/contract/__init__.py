from .data_models import (
    ContractionKind, Trichotomy, StepOutcome, GeneralFiber, ExceptionalData, ContractionResult, MMPStep,
)
from .contractions import (
    ContractionError, QuotientNotFanError, classify, general_fiber, fano_contraction,
    birational_contraction,
)
from .flips import FlipError, trichotomy, flipped_fan, reversed_relation, flip
from .mmp import mmp_step, MMPRunner

__all__ = [
    'ContractionKind', 'Trichotomy', 'StepOutcome', 'GeneralFiber', 'ExceptionalData',
    'ContractionResult', 'MMPStep',
    'ContractionError', 'QuotientNotFanError', 'classify', 'general_fiber', 'fano_contraction',
    'birational_contraction',
    'FlipError', 'trichotomy', 'flipped_fan', 'reversed_relation', 'flip',
    'mmp_step', 'MMPRunner',
]
