from .data_models import Cone, Fan, FanMorphism, ValidationReport, Wall, format_cone, make_cone
from .predicates import (
    FanError, validate_fan, enumerate_walls, interior_walls, find_wall, is_complete, is_smooth,
    picard_number, primitive_collections, require_simplicial,
)
from .morphism import (
    MorphismIncompatibleError, check_morphism, contracted_walls, minimal_target_cone,
    verify_proper, identity_morphism, point_morphism,
)

__all__ = [
    'Cone', 'Fan', 'FanMorphism', 'ValidationReport', 'Wall', 'format_cone', 'make_cone',
    'FanError', 'validate_fan', 'enumerate_walls', 'interior_walls', 'find_wall', 'is_complete',
    'is_smooth', 'picard_number', 'primitive_collections', 'require_simplicial',
    'MorphismIncompatibleError', 'check_morphism', 'contracted_walls', 'minimal_target_cone',
    'verify_proper', 'identity_morphism', 'point_morphism',
]
